#include "nlf/nlf.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>
#include <new>
#include <string>

#include "nlf/analysis.hpp"
#include "nlf/config.hpp"
#include "nlf/error.hpp"
#include "nlf/solver.hpp"
#include "nlf/threshold.hpp"

struct nlf_config {
    nlf::SimConfig config;
};

struct nlf_result {
    nlf::SimResult result;
};

struct nlf_study {
    nlf::RefinementStudy study;
};

namespace {

thread_local std::string g_last_error;
thread_local nlf_divergence g_last_divergence{std::numeric_limits<double>::quiet_NaN(), 0, 0};
thread_local bool g_has_divergence = false;

nlf_status fail(nlf_status status, const std::string& message) {
    try {
        g_last_error = message;
    } catch (...) {
    }
    return status;
}

// Translates the exception in flight into a status code.
nlf_status translate() {
    try {
        throw;
    } catch (const nlf::SimulationDiverged& e) {
        g_last_divergence = {e.time(), e.step(), e.node()};
        g_has_divergence = true;
        return fail(NLF_ERR_DIVERGED, e.what());
    } catch (const nlf::ParseError& e) {
        return fail(NLF_ERR_PARSE, e.what());
    } catch (const nlf::ConfigError& e) {
        return fail(NLF_ERR_CONFIG, e.what());
    } catch (const nlf::AnalysisError& e) {
        return fail(NLF_ERR_ANALYSIS, e.what());
    } catch (const nlf::UsageError& e) {
        return fail(NLF_ERR_USAGE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(NLF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(NLF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(NLF_ERR_INTERNAL, "unknown error");
    }
}

#define NLF_REQUIRE(cond, what) \
    if (!(cond)) return fail(NLF_ERR_USAGE, what)

template <class F>
nlf_status guarded(F&& body) {
    try {
        body();
        return NLF_OK;
    } catch (...) {
        return translate();
    }
}

size_t copy_out(const std::string& text, char* buffer, size_t capacity) {
    if (buffer && capacity > text.size()) std::memcpy(buffer, text.c_str(), text.size() + 1);
    return text.size() + 1;
}

nlf_grid_info grid_info(const nlf::GridSpec& g) {
    return {g.x_min(), g.x_max(), g.dx(), g.size(),
            g.periodic() ? NLF_BOUNDARY_PERIODIC : NLF_BOUNDARY_CONSTANT_EXTENSION};
}

nlf::ThresholdKind to_cpp(nlf_threshold_kind k) {
    switch (k) {
        case NLF_THRESHOLD_CONST_AB: return nlf::ThresholdKind::ConstAB;
        case NLF_THRESHOLD_LIN_AB: return nlf::ThresholdKind::LinAB;
        case NLF_THRESHOLD_CONST_A: return nlf::ThresholdKind::ConstA;
    }
    throw nlf::UsageError("unknown threshold kind");
}

nlf_threshold_kind to_c(nlf::ThresholdKind k) {
    switch (k) {
        case nlf::ThresholdKind::ConstAB: return NLF_THRESHOLD_CONST_AB;
        case nlf::ThresholdKind::LinAB: return NLF_THRESHOLD_LIN_AB;
        case nlf::ThresholdKind::ConstA: return NLF_THRESHOLD_CONST_A;
    }
    return NLF_THRESHOLD_CONST_AB;
}

nlf::Field field_from(const double* values, size_t n, double x_min, double dx) {
    const auto g = nlf::make_grid(x_min, x_min + static_cast<double>(n - 1) * dx, dx);
    return nlf::Field(g, std::vector<double>(values, values + n));
}

}  // namespace

extern "C" {

const char* nlf_version(void) { return "0.3.0"; }

const char* nlf_last_error(void) { return g_last_error.c_str(); }

const char* nlf_status_name(nlf_status status) {
    switch (status) {
        case NLF_OK: return "ok";
        case NLF_ERR_PARSE: return "parse_error";
        case NLF_ERR_CONFIG: return "config_error";
        case NLF_ERR_DIVERGED: return "diverged";
        case NLF_ERR_ANALYSIS: return "analysis_error";
        case NLF_ERR_USAGE: return "usage_error";
        case NLF_ERR_IO: return "io_error";
        case NLF_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

nlf_status nlf_config_parse(const char* json_text, nlf_config** out) {
    NLF_REQUIRE(json_text && out, "nlf_config_parse: null argument");
    *out = nullptr;
    return guarded([&] { *out = new nlf_config{nlf::parse_config(json_text)}; });
}

nlf_status nlf_config_load(const char* path, nlf_config** out) {
    NLF_REQUIRE(path && out, "nlf_config_load: null argument");
    *out = nullptr;
    if (!std::filesystem::exists(path)) return fail(NLF_ERR_IO, std::string("config file not found: ") + path);
    return guarded([&] { *out = new nlf_config{nlf::load_config(path)}; });
}

nlf_status nlf_config_clone(const nlf_config* config, nlf_config** out) {
    NLF_REQUIRE(config && out, "nlf_config_clone: null argument");
    return guarded([&] { *out = new nlf_config{config->config}; });
}

void nlf_config_free(nlf_config* config) { delete config; }

size_t nlf_config_to_json(const nlf_config* config, char* buffer, size_t capacity) {
    if (!config) return 0;
    try {
        return copy_out(nlf::to_json(config->config), buffer, capacity);
    } catch (...) {
        translate();
        return 0;
    }
}

size_t nlf_config_label(const nlf_config* config, char* buffer, size_t capacity) {
    if (!config) return 0;
    try {
        return copy_out(config->config.model.label(), buffer, capacity);
    } catch (...) {
        translate();
        return 0;
    }
}

nlf_status nlf_config_grid(const nlf_config* config, nlf_grid_info* out) {
    NLF_REQUIRE(config && out, "nlf_config_grid: null argument");
    *out = grid_info(config->config.grid);
    return NLF_OK;
}

nlf_status nlf_config_set_dx(nlf_config* config, double dx) {
    NLF_REQUIRE(config, "nlf_config_set_dx: null config");
    return guarded([&] {
        auto next = config->config.with_dx(dx);
        next.validate();
        config->config = std::move(next);
    });
}

nlf_status nlf_config_set_schedule(nlf_config* config, double t_end, const double* snapshot_times, size_t count) {
    NLF_REQUIRE(config, "nlf_config_set_schedule: null config");
    NLF_REQUIRE(snapshot_times || count == 0, "nlf_config_set_schedule: null snapshot array");
    return guarded([&] {
        auto next = config->config;
        next.t_end = t_end;
        next.snapshot_times.assign(snapshot_times, snapshot_times + count);
        next.validate();
        config->config = std::move(next);
    });
}

int nlf_config_same_setup(const nlf_config* a, const nlf_config* b) {
    if (!a || !b) return 0;
    return a->config.grid == b->config.grid && a->config.scenario == b->config.scenario;
}

nlf_status nlf_simulate(const nlf_config* config, nlf_result** out) {
    NLF_REQUIRE(config && out, "nlf_simulate: null argument");
    *out = nullptr;
    g_has_divergence = false;
    return guarded([&] { *out = new nlf_result{nlf::run(config->config)}; });
}

nlf_status nlf_last_divergence(nlf_divergence* out) {
    NLF_REQUIRE(out, "nlf_last_divergence: null argument");
    if (!g_has_divergence) return fail(NLF_ERR_USAGE, "no divergence recorded on this thread");
    *out = g_last_divergence;
    return NLF_OK;
}

void nlf_result_free(nlf_result* result) { delete result; }

nlf_status nlf_result_grid(const nlf_result* result, nlf_grid_info* out) {
    NLF_REQUIRE(result && out, "nlf_result_grid: null argument");
    *out = grid_info(result->result.snapshots.front().field.grid());
    return NLF_OK;
}

nlf_status nlf_result_stats(const nlf_result* result, nlf_run_stats* out) {
    NLF_REQUIRE(result && out, "nlf_result_stats: null argument");
    *out = {result->result.steps_taken, result->result.dt_min, result->result.dt_max};
    return NLF_OK;
}

size_t nlf_result_snapshot_count(const nlf_result* result) { return result ? result->result.snapshots.size() : 0; }

nlf_status nlf_result_snapshot(const nlf_result* result, size_t index, nlf_snapshot_info* info,
                               const double** values) {
    NLF_REQUIRE(result, "nlf_result_snapshot: null result");
    NLF_REQUIRE(index < result->result.snapshots.size(), "nlf_result_snapshot: index out of range");
    const auto& s = result->result.snapshots[index];
    if (info) *info = {s.t, s.mass, s.u_min, s.u_max, s.max_grad, s.field.size()};
    if (values) *values = s.field.values().data();
    return NLF_OK;
}

size_t nlf_result_diagnostic_count(const nlf_result* result) {
    return result ? result->result.diagnostics.size() : 0;
}

nlf_status nlf_result_diagnostic(const nlf_result* result, size_t index, nlf_diagnostic* out) {
    NLF_REQUIRE(result && out, "nlf_result_diagnostic: null argument");
    NLF_REQUIRE(index < result->result.diagnostics.size(), "nlf_result_diagnostic: index out of range");
    const auto& d = result->result.diagnostics[index];
    *out = {d.step, d.t, d.mass, d.u_min, d.u_max, d.max_grad};
    return NLF_OK;
}

nlf_status nlf_threshold_kind_parse(const char* name, nlf_threshold_kind* out) {
    NLF_REQUIRE(name && out, "nlf_threshold_kind_parse: null argument");
    return guarded([&] { *out = to_c(nlf::threshold_kind_from_string(name)); });
}

const char* nlf_threshold_kind_name(nlf_threshold_kind kind) {
    switch (kind) {
        case NLF_THRESHOLD_CONST_AB: return "const_ab";
        case NLF_THRESHOLD_LIN_AB: return "lin_ab";
        case NLF_THRESHOLD_CONST_A: return "const_a";
    }
    return "unknown";
}

const char* nlf_verdict_name(nlf_verdict verdict) {
    return verdict == NLF_VERDICT_BLOWUP_GUARANTEED ? "BlowupGuaranteed" : "Inconclusive";
}

nlf_status nlf_threshold_const_ab(double gamma_a, double gamma_b, double inf_d0, double* out) {
    NLF_REQUIRE(out, "nlf_threshold_const_ab: null output");
    return guarded([&] { *out = nlf::threshold_const_ab(gamma_a, gamma_b, inf_d0); });
}

nlf_status nlf_threshold_lin_ab(double gamma_a, double gamma_b, double* out) {
    NLF_REQUIRE(out, "nlf_threshold_lin_ab: null output");
    return guarded([&] { *out = nlf::threshold_lin_ab(gamma_a, gamma_b); });
}

nlf_status nlf_threshold_const_a(double gamma_a, double inf_d0, double* out) {
    NLF_REQUIRE(out, "nlf_threshold_const_a: null output");
    return guarded([&] { *out = nlf::threshold_const_a(gamma_a, inf_d0); });
}

nlf_status nlf_threshold_assess(const nlf_config* config, nlf_threshold_kind kind, nlf_threshold_report* out) {
    NLF_REQUIRE(config && out, "nlf_threshold_assess: null argument");
    return guarded([&] {
        const auto r = nlf::assess(config->config, to_cpp(kind));
        *out = {to_c(r.kind),
                r.gamma_a,
                r.gamma_b.value_or(std::numeric_limits<double>::quiet_NaN()),
                r.sup_d0,
                r.inf_d0,
                r.rhs,
                r.verdict == nlf::Verdict::BlowupGuaranteed ? NLF_VERDICT_BLOWUP_GUARANTEED
                                                            : NLF_VERDICT_INCONCLUSIVE,
                r.hypotheses_met ? 1 : 0,
                r.closed_form_derivative ? 1 : 0};
    });
}

nlf_status nlf_front_position(const double* values, size_t n, double x_min, double dx, double level,
                              nlf_front_side side, double* out) {
    NLF_REQUIRE(values && out, "nlf_front_position: null argument");
    NLF_REQUIRE(n >= 3, "nlf_front_position: need at least 3 values");
    return guarded([&] {
        *out = nlf::front_position(field_from(values, n, x_min, dx), level,
                                   side == NLF_FRONT_LEADING ? nlf::FrontSide::Leading : nlf::FrontSide::Trailing);
    });
}

nlf_status nlf_max_gradient(const double* values, size_t n, double dx, double* out) {
    NLF_REQUIRE(values && out, "nlf_max_gradient: null argument");
    NLF_REQUIRE(n >= 3, "nlf_max_gradient: need at least 3 values");
    return guarded([&] { *out = nlf::max_gradient(field_from(values, n, 0.0, dx)); });
}

double nlf_riccati_blowup_time(double d0) { return nlf::riccati_blowup_time(d0); }

nlf_status nlf_study_run(const nlf_config* config, const double* dx_list, size_t count, double t_probe,
                         unsigned threads, nlf_study** out) {
    NLF_REQUIRE(config && dx_list && out, "nlf_study_run: null argument");
    *out = nullptr;
    return guarded([&] {
        std::vector<double> dx(dx_list, dx_list + count);
        for (double d : dx) config->config.with_dx(d).validate();
        *out = new nlf_study{nlf::shock_refinement_study(config->config, dx, t_probe, threads)};
    });
}

void nlf_study_free(nlf_study* study) { delete study; }

size_t nlf_study_row_count(const nlf_study* study) { return study ? study->study.rows.size() : 0; }

nlf_status nlf_study_get_row(const nlf_study* study, size_t index, nlf_study_row* out) {
    NLF_REQUIRE(study && out, "nlf_study_get_row: null argument");
    NLF_REQUIRE(index < study->study.rows.size(), "nlf_study_get_row: index out of range");
    const auto& r = study->study.rows[index];
    *out = {r.dx, r.l1_error.value_or(std::numeric_limits<double>::quiet_NaN()), r.max_grad,
            r.error ? NLF_ERR_DIVERGED : NLF_OK};
    return NLF_OK;
}

nlf_shock_class nlf_study_class(const nlf_study* study) {
    if (!study) return NLF_SHOCK_INDETERMINATE;
    switch (study->study.classification) {
        case nlf::ShockClass::ShockSuspected: return NLF_SHOCK_SUSPECTED;
        case nlf::ShockClass::Smooth: return NLF_SHOCK_SMOOTH;
        case nlf::ShockClass::Indeterminate: return NLF_SHOCK_INDETERMINATE;
    }
    return NLF_SHOCK_INDETERMINATE;
}

const char* nlf_shock_class_name(nlf_shock_class c) {
    switch (c) {
        case NLF_SHOCK_SUSPECTED: return "shock_suspected";
        case NLF_SHOCK_SMOOTH: return "smooth";
        case NLF_SHOCK_INDETERMINATE: return "indeterminate";
    }
    return "unknown";
}

}  // extern "C"
