// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nlf/nlf.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInput = 2;
constexpr int kExitDiverged = 3;

struct ConfigDeleter {
    void operator()(nlf_config* c) const { nlf_config_free(c); }
};
struct ResultDeleter {
    void operator()(nlf_result* r) const { nlf_result_free(r); }
};
struct StudyDeleter {
    void operator()(nlf_study* s) const { nlf_study_free(s); }
};
using ConfigPtr = std::unique_ptr<nlf_config, ConfigDeleter>;
using ResultPtr = std::unique_ptr<nlf_result, ResultDeleter>;
using StudyPtr = std::unique_ptr<nlf_study, StudyDeleter>;

// Carries an exit status out of a subcommand.
struct Exit {
    int code;
};

[[noreturn]] void die(int code, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    throw Exit{code};
}

int exit_code(nlf_status s) {
    switch (s) {
        case NLF_OK: return kExitOk;
        case NLF_ERR_DIVERGED: return kExitDiverged;
        case NLF_ERR_INTERNAL: return kExitIo;
        default: return kExitInput;
    }
}

void check(nlf_status s) {
    if (s != NLF_OK) die(exit_code(s), nlf_last_error());
}

std::string fmt(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

ConfigPtr load(const std::string& path) {
    nlf_config* raw = nullptr;
    const nlf_status s = nlf_config_load(path.c_str(), &raw);
    if (s == NLF_ERR_IO) die(kExitInput, nlf_last_error());
    check(s);
    return ConfigPtr(raw);
}

template <class Fn>
std::string read_string(Fn fn) {
    std::string out(fn(nullptr, 0), '\0');
    fn(out.data(), out.size());
    out.pop_back();
    return out;
}

std::string config_json(const nlf_config* c) {
    return read_string([c](char* b, size_t n) { return nlf_config_to_json(c, b, n); });
}

std::string config_label(const nlf_config* c) {
    return read_string([c](char* b, size_t n) { return nlf_config_label(c, b, n); });
}

ResultPtr simulate(const nlf_config* c) {
    nlf_result* raw = nullptr;
    const nlf_status s = nlf_simulate(c, &raw);
    if (s == NLF_ERR_DIVERGED) {
        nlf_divergence d{};
        nlf_last_divergence(&d);
        std::ostringstream os;
        os << "simulation diverged at t=" << fmt(d.t) << " step " << d.step << " node " << d.node;
        die(kExitDiverged, os.str());
    }
    check(s);
    return ResultPtr(raw);
}

unsigned worker_threads() {
    if (const char* env = std::getenv("NLF_THREADS")) {
        unsigned v = 0;
        const auto r = std::from_chars(env, env + std::strlen(env), v);
        if (r.ec == std::errc{}) return v;
        die(kExitInput, std::string("NLF_THREADS must be a non-negative integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) die(kExitIo, "cannot write " + path.string());
}

// Parses "0.02", "1/50" and similar.
std::optional<double> parse_number(std::string_view s) {
    const auto slash = s.find('/');
    const auto one = [](std::string_view t) -> std::optional<double> {
        double v = 0.0;
        const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
        if (r.ec != std::errc{} || r.ptr != t.data() + t.size()) return std::nullopt;
        return v;
    };
    if (slash == std::string_view::npos) return one(s);
    const auto num = one(s.substr(0, slash));
    const auto den = one(s.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
}

double background(const nlf_result* r) {
    nlf_snapshot_info info{};
    const double* values = nullptr;
    check(nlf_result_snapshot(r, 0, &info, &values));
    return values[info.n - 1];
}

// ---- simulate -------------------------------------------------------------

int cmd_simulate(const std::string& config_path, const std::string& out_dir, bool gnuplot) {
    const auto t0 = std::chrono::steady_clock::now();
    const ConfigPtr config = load(config_path);
    const ResultPtr result = simulate(config.get());
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    nlf_grid_info grid{};
    check(nlf_result_grid(result.get(), &grid));

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) die(kExitIo, "cannot create output directory " + out_dir + ": " + ec.message());

    std::vector<std::string> written;
    std::vector<std::string> snapshot_files;
    const size_t count = nlf_result_snapshot_count(result.get());
    for (size_t k = 0; k < count; ++k) {
        nlf_snapshot_info info{};
        const double* values = nullptr;
        check(nlf_result_snapshot(result.get(), k, &info, &values));
        const std::string name = "t_" + fmt(info.t) + ".csv";
        std::string csv = "x,u\n";
        for (size_t i = 0; i < info.n; ++i) {
            csv += fmt(grid.x_min + static_cast<double>(i) * grid.dx);
            csv += ',';
            csv += fmt(values[i]);
            csv += '\n';
        }
        write_file(fs::path(out_dir) / name, csv);
        written.push_back(name);
        snapshot_files.push_back(name);
    }

    std::string diag = "t,mass,u_min,u_max,max_grad\n";
    for (size_t k = 0; k < nlf_result_diagnostic_count(result.get()); ++k) {
        nlf_diagnostic d{};
        check(nlf_result_diagnostic(result.get(), k, &d));
        diag += fmt(d.t) + ',' + fmt(d.mass) + ',' + fmt(d.u_min) + ',' + fmt(d.u_max) + ',' + fmt(d.max_grad) + '\n';
    }
    write_file(fs::path(out_dir) / "diagnostics.csv", diag);
    written.push_back("diagnostics.csv");

    if (gnuplot) {
        std::ostringstream gp;
        gp << "set datafile separator ','\nset key autotitle columnhead\nset xlabel 'x'\nset ylabel 'u'\nplot ";
        for (size_t k = 0; k < snapshot_files.size(); ++k) {
            gp << (k ? ", \\\n     " : "") << "'" << snapshot_files[k] << "' using 1:2 with lines title '"
               << snapshot_files[k].substr(0, snapshot_files[k].size() - 4) << "'";
        }
        gp << "\n";
        write_file(fs::path(out_dir) / "plot.gp", gp.str());
        written.push_back("plot.gp");
    }

    nlf_run_stats stats{};
    check(nlf_result_stats(result.get(), &stats));
    nlohmann::json manifest;
    manifest["config"] = nlohmann::json::parse(config_json(config.get()));
    manifest["tool_version"] = nlf_version();
    manifest["wall_time"] = wall;
    manifest["steps_taken"] = stats.steps_taken;
    manifest["output_files"] = written;
    write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");

    std::cout << "wrote " << written.size() + 1 << " files to " << out_dir << " (" << stats.steps_taken
              << " steps)\n";
    return kExitOk;
}

// ---- compare --------------------------------------------------------------

int cmd_compare(const std::vector<std::string>& config_paths, double t_probe, const std::string& out_path,
                std::optional<double> level_override) {
    if (config_paths.size() < 2) die(kExitInput, "compare needs at least two --config files");
    std::vector<ConfigPtr> configs;
    for (const auto& p : config_paths) {
        configs.push_back(load(p));
        check(nlf_config_set_schedule(configs.back().get(), t_probe, &t_probe, 1));
    }
    for (size_t k = 1; k < configs.size(); ++k) {
        if (!nlf_config_same_setup(configs[0].get(), configs[k].get())) {
            die(kExitInput, "config " + config_paths[k] + " does not share grid and scenario with " + config_paths[0]);
        }
    }

    std::vector<ResultPtr> results(configs.size());
    std::vector<nlf_status> status(configs.size(), NLF_OK);
    std::vector<std::string> messages(configs.size());
    const unsigned threads = worker_threads();
    const auto work = [&](size_t k) {
        nlf_result* raw = nullptr;
        status[k] = nlf_simulate(configs[k].get(), &raw);
        if (status[k] != NLF_OK) messages[k] = nlf_last_error();
        results[k].reset(raw);
    };
    if (threads <= 1) {
        for (size_t k = 0; k < configs.size(); ++k) work(k);
    } else {
        for (size_t begin = 0; begin < configs.size(); begin += threads) {
            std::vector<std::thread> pool;
            for (size_t k = begin; k < std::min(configs.size(), begin + threads); ++k) pool.emplace_back(work, k);
            for (auto& t : pool) t.join();
        }
    }
    for (size_t k = 0; k < configs.size(); ++k) {
        if (status[k] != NLF_OK) die(exit_code(status[k]), config_paths[k] + ": " + messages[k]);
    }

    std::vector<std::string> labels;
    std::map<std::string, int> seen;
    for (const auto& c : configs) {
        std::string label = config_label(c.get());
        if (const int n = seen[label]++; n > 0) label += "_" + std::to_string(n + 1);
        labels.push_back(label);
    }

    nlf_grid_info grid{};
    check(nlf_result_grid(results[0].get(), &grid));
    std::vector<const double*> columns;
    for (const auto& r : results) {
        const double* values = nullptr;
        check(nlf_result_snapshot(r.get(), nlf_result_snapshot_count(r.get()) - 1, nullptr, &values));
        columns.push_back(values);
    }

    std::string csv = "x";
    for (const auto& l : labels) csv += ",u_" + l;
    csv += '\n';
    for (size_t i = 0; i < grid.n; ++i) {
        csv += fmt(grid.x_min + static_cast<double>(i) * grid.dx);
        for (const double* col : columns) csv += ',' + fmt(col[i]);
        csv += '\n';
    }

    const double level = level_override.value_or(background(results[0].get()) + 0.1);
    std::ostringstream summary;
    summary << "t=" << fmt(t_probe) << "\nlevel=" << fmt(level) << "\n";
    for (size_t k = 0; k < results.size(); ++k) {
        double front = std::numeric_limits<double>::quiet_NaN();
        if (nlf_front_position(columns[k], grid.n, grid.x_min, grid.dx, level, NLF_FRONT_LEADING, &front) != NLF_OK) {
            front = std::numeric_limits<double>::quiet_NaN();
        }
        double grad = 0.0;
        check(nlf_max_gradient(columns[k], grid.n, grid.dx, &grad));
        summary << "front_" << labels[k] << "=" << (std::isnan(front) ? std::string("none") : fmt(front)) << "\n";
        summary << "max_grad_" << labels[k] << "=" << fmt(grad) << "\n";
    }

    const fs::path out(out_path);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_file(out, csv);
    fs::path summary_path = out;
    summary_path.replace_extension(".summary.txt");
    write_file(summary_path, summary.str());
    std::cout << summary.str();
    return kExitOk;
}

// ---- threshold ------------------------------------------------------------

int cmd_threshold(const std::string& config_path, const std::string& kind_name) {
    nlf_threshold_kind kind{};
    check(nlf_threshold_kind_parse(kind_name.c_str(), &kind));
    const ConfigPtr config = load(config_path);
    nlf_threshold_report r{};
    check(nlf_threshold_assess(config.get(), kind, &r));
    std::cout << "kind=" << nlf_threshold_kind_name(r.kind) << "\n"
              << "gamma_a=" << fmt(r.gamma_a) << "\n"
              << "gamma_b=" << (std::isnan(r.gamma_b) ? std::string("none") : fmt(r.gamma_b)) << "\n"
              << "sup_d0=" << fmt(r.sup_d0) << "\n"
              << "inf_d0=" << fmt(r.inf_d0) << "\n"
              << "rhs=" << fmt(r.rhs) << "\n"
              << "verdict=" << nlf_verdict_name(r.verdict) << "\n"
              << "hypotheses_met=" << (r.hypotheses_met ? "true" : "false") << "\n"
              << "derivative=" << (r.closed_form_derivative ? "closed_form" : "finite_difference") << "\n";
    if (!r.hypotheses_met) {
        std::cerr << "warning: initial data is discontinuous; the blow-up conditions assume continuous data in [0, 1]\n";
    }
    return kExitOk;
}

// ---- convergence ----------------------------------------------------------

int cmd_convergence(const std::string& config_path, const std::string& dx_csv, double t_probe,
                    const std::string& out_path) {
    const ConfigPtr config = load(config_path);
    std::vector<double> dx;
    std::stringstream ss(dx_csv);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto v = parse_number(item);
        if (!v || !(*v > 0.0)) die(kExitInput, "bad dx value '" + item + "'");
        const ConfigPtr probe = [&] {
            nlf_config* raw = nullptr;
            check(nlf_config_clone(config.get(), &raw));
            return ConfigPtr(raw);
        }();
        if (nlf_config_set_dx(probe.get(), *v) != NLF_OK) {
            die(kExitInput, "dx=" + item + " rejected: " + nlf_last_error());
        }
        dx.push_back(*v);
    }
    if (dx.empty()) die(kExitInput, "--dx needs at least one value");

    nlf_study* raw = nullptr;
    check(nlf_study_run(config.get(), dx.data(), dx.size(), t_probe, worker_threads(), &raw));
    const StudyPtr study(raw);
    const std::string cls = nlf_shock_class_name(nlf_study_class(study.get()));

    std::string csv = "dx,l1_error,max_grad,class\n";
    for (size_t k = 0; k < nlf_study_row_count(study.get()); ++k) {
        nlf_study_row row{};
        check(nlf_study_get_row(study.get(), k, &row));
        csv += fmt(row.dx) + ',' + (std::isnan(row.l1_error) ? std::string() : fmt(row.l1_error)) + ',' +
               (row.status == NLF_OK ? fmt(row.max_grad) : std::string()) + ',' + cls + '\n';
        if (row.status != NLF_OK) std::cerr << "warning: run at dx=" << fmt(row.dx) << " failed\n";
    }
    const fs::path out(out_path);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_file(out, csv);
    std::cout << csv << "class=" << cls << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonlocal traffic-flow simulator and shock-formation certifier"};
    app.set_version_flag("--version", std::string(nlf_version()));
    app.require_subcommand(1);

    std::string config_path;
    std::string out;
    bool gnuplot = false;
    auto* sim = app.add_subcommand("simulate", "Run one configuration and write snapshot CSVs");
    sim->add_option("--config", config_path, "JSON run description")->required();
    sim->add_option("--out", out, "Output directory")->required();
    sim->add_flag("--gnuplot", gnuplot, "Also write a gnuplot script");

    std::vector<std::string> compare_configs;
    double t_probe = 0.0;
    std::optional<double> level;
    auto* cmp = app.add_subcommand("compare", "Run several models on one setup and compare at a time");
    cmp->add_option("--config", compare_configs, "JSON run description (repeat)")->required();
    cmp->add_option("--t", t_probe, "Probe time")->required();
    cmp->add_option("--out", out, "Wide CSV output path")->required();
    cmp->add_option("--level", level, "Absolute front level (default: 0.1 above the downstream background)");

    std::string kind;
    auto* thr = app.add_subcommand("threshold", "Evaluate the closed-form blow-up condition");
    thr->add_option("--config", config_path, "JSON run description")->required();
    thr->add_option("--kind", kind, "const_ab, lin_ab or const_a")->required();

    std::string dx_list;
    auto* conv = app.add_subcommand("convergence", "Grid refinement and shock classification study");
    conv->add_option("--config", config_path, "JSON run description")->required();
    conv->add_option("--dx", dx_list, "Comma-separated dx values, coarse to fine (1/50 style allowed)")->required();
    conv->add_option("--t", t_probe, "Probe time")->required();
    conv->add_option("--out", out, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*sim) return cmd_simulate(config_path, out, gnuplot);
        if (*cmp) return cmd_compare(compare_configs, t_probe, out, level);
        if (*thr) return cmd_threshold(config_path, kind);
        if (*conv) return cmd_convergence(config_path, dx_list, t_probe, out);
    } catch (const Exit& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitInput;
}
