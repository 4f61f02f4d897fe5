#include "nlf/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "nlf/error.hpp"

namespace nlf {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

class Section {
public:
    Section(const json& doc, std::string name) : name_(std::move(name)) {
        if (!doc.is_object()) throw ConfigError("config field '" + name_ + "' must be an object");
        obj_ = &doc;
    }

    void allow_only(std::initializer_list<std::string_view> keys) const {
        for (const auto& [key, _] : obj_->items()) {
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
                throw ConfigError("unknown config field '" + name_ + "." + key + "'");
            }
        }
    }

    bool has(const char* key) const { return obj_->contains(key) && !(*obj_)[key].is_null(); }

    double number(const char* key) const {
        if (!has(key)) throw ConfigError("missing config field '" + path(key) + "'");
        const json& v = (*obj_)[key];
        if (!v.is_number()) throw ConfigError("config field '" + path(key) + "' must be a number");
        return v.get<double>();
    }

    double number_or(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }

    std::string text(const char* key) const {
        if (!has(key)) throw ConfigError("missing config field '" + path(key) + "'");
        const json& v = (*obj_)[key];
        if (!v.is_string()) throw ConfigError("config field '" + path(key) + "' must be a string");
        return v.get<std::string>();
    }

    std::string text_or(const char* key, std::string fallback) const { return has(key) ? text(key) : fallback; }

    const json& raw(const char* key) const { return (*obj_)[key]; }
    std::string path(const char* key) const { return name_ + "." + key; }

private:
    const json* obj_ = nullptr;
    std::string name_;
};

const json& require_section(const json& doc, const char* name) {
    if (!doc.contains(name)) throw ConfigError(std::string("missing config section '") + name + "'");
    return doc[name];
}

ProfileTerm parse_term(const json& j, std::size_t index) {
    const Section t(j, "scenario.terms[" + std::to_string(index) + "]");
    const std::string type = t.text("type");
    if (type == "constant") {
        t.allow_only({"type", "c"});
        return term::Constant{t.number("c")};
    }
    if (type == "gaussian") {
        t.allow_only({"type", "a", "c"});
        return term::Gaussian{t.number("a"), t.number("c")};
    }
    if (type == "quartic_bump") {
        t.allow_only({"type", "a", "c", "k"});
        return term::QuarticBump{t.number("a"), t.number("c"), t.number("k")};
    }
    if (type == "box") {
        t.allow_only({"type", "h", "x_lo", "x_hi"});
        return term::Box{t.number("h"), t.number("x_lo"), t.number("x_hi")};
    }
    throw ConfigError("unknown term type '" + type + "' in " + t.path("type"));
}

ScenarioSpec parse_scenario(const json& doc) {
    const Section s(doc, "scenario");
    s.allow_only({"kind", "u_left", "u_right", "x0", "terms"});
    const ScenarioKind kind = scenario_kind_from_string(s.text("kind"));
    switch (kind) {
        case ScenarioKind::Riemann:
            return ScenarioSpec::riemann(s.number("u_left"), s.number("u_right"), s.number("x0"));
        case ScenarioKind::Profile: {
            if (!s.has("terms") || !s.raw("terms").is_array()) {
                throw ConfigError("config field 'scenario.terms' must be an array");
            }
            std::vector<ProfileTerm> terms;
            std::size_t k = 0;
            for (const auto& t : s.raw("terms")) terms.push_back(parse_term(t, k++));
            return ScenarioSpec::profile(std::move(terms));
        }
        default:
            return ScenarioSpec::preset(kind);
    }
}

KernelShape traffic_shape(const std::string& name, bool ahead, const std::string& field) {
    if (name == "constant") return ahead ? KernelShape::AheadConstant : KernelShape::BehindConstant;
    if (name == "linear") return ahead ? KernelShape::AheadLinear : KernelShape::BehindLinear;
    throw ConfigError("config field '" + field + "' must be 'constant' or 'linear', got '" + name + "'");
}

FluxModel parse_model(const json& doc, ScenarioKind scenario) {
    const Section m(doc, "model");
    m.allow_only({"variant", "gamma_a", "gamma_b", "kernel_a_shape", "kernel_b_shape", "c0", "h0", "a"});
    const std::string variant = m.text("variant");
    const auto [ga_default, gb_default] = default_reaches(scenario);
    if (variant == "lwr") return FluxModel::lwr();
    if (variant == "look_a" || variant == "look_ab") {
        const std::string shape_a = m.text_or("kernel_a_shape", "constant");
        const KernelSpec ahead{traffic_shape(shape_a, true, m.path("kernel_a_shape")),
                               m.number_or("gamma_a", ga_default)};
        if (variant == "look_a") return FluxModel::look_a(ahead);
        const KernelSpec behind{traffic_shape(m.text_or("kernel_b_shape", shape_a), false, m.path("kernel_b_shape")),
                                m.number_or("gamma_b", gb_default)};
        return FluxModel::look_ab(ahead, behind);
    }
    if (variant == "whitham") return FluxModel::whitham(m.number("c0"), m.number("h0"));
    if (variant == "suspension") return FluxModel::suspension(m.number("a"));
    throw ConfigError("unknown model variant '" + variant +
                      "' in model.variant (expected lwr, look_a, look_ab, whitham, suspension)");
}

json term_to_json(const ProfileTerm& t) {
    return std::visit(overloaded{
                          [](const term::Constant& c) { return json{{"type", "constant"}, {"c", c.c}}; },
                          [](const term::Gaussian& g) { return json{{"type", "gaussian"}, {"a", g.a}, {"c", g.c}}; },
                          [](const term::QuarticBump& q) {
                              return json{{"type", "quartic_bump"}, {"a", q.a}, {"c", q.c}, {"k", q.k}};
                          },
                          [](const term::Box& b) {
                              return json{{"type", "box"}, {"h", b.h}, {"x_lo", b.x_lo}, {"x_hi", b.x_hi}};
                          },
                      },
                      t);
}

std::string_view shape_name(KernelShape s) {
    return (s == KernelShape::AheadLinear || s == KernelShape::BehindLinear) ? "linear" : "constant";
}

}  // namespace

SimConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed config JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "grid" && key != "model" && key != "scenario" && key != "run") {
            throw ConfigError("unknown config section '" + key + "'");
        }
    }

    const ScenarioSpec scenario = parse_scenario(require_section(doc, "scenario"));

    static const json kEmpty = json::object();
    const Section g(doc.contains("grid") ? doc["grid"] : kEmpty, "grid");
    g.allow_only({"x_min", "x_max", "dx", "boundary"});
    const auto [lo, hi] = default_domain(scenario.kind());
    const GridSpec grid = make_grid(g.number_or("x_min", lo), g.number_or("x_max", hi), g.number_or("dx", 0.01),
                                    boundary_from_string(g.text_or("boundary", "constant_extension")));

    const FluxModel model = parse_model(require_section(doc, "model"), scenario.kind());

    const Section r(require_section(doc, "run"), "run");
    r.allow_only({"cfl", "t_end", "snapshots", "diag_every"});
    SimConfig config{grid, model, scenario, 0.5, 0.0, {}, 1};
    config.cfl = r.number_or("cfl", 0.5);
    config.t_end = r.number("t_end");
    if (r.has("snapshots")) {
        const json& snaps = r.raw("snapshots");
        if (!snaps.is_array()) throw ConfigError("config field 'run.snapshots' must be an array of numbers");
        for (const auto& s : snaps) {
            if (!s.is_number()) throw ConfigError("config field 'run.snapshots' must be an array of numbers");
            config.snapshot_times.push_back(s.get<double>());
        }
    }
    if (r.has("diag_every")) {
        const json& d = r.raw("diag_every");
        if (!d.is_number_integer() || d.get<long long>() < 1) {
            throw ConfigError("config field 'run.diag_every' must be an integer >= 1");
        }
        config.diag_every = d.get<std::size_t>();
    }
    config.validate();
    return config;
}

SimConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string to_json(const SimConfig& c, int indent) {
    json doc;
    doc["grid"] = {{"x_min", c.grid.x_min()},
                   {"x_max", c.grid.x_max()},
                   {"dx", c.grid.dx()},
                   {"boundary", std::string(to_string(c.grid.boundary()))}};

    json m;
    m["variant"] = std::string(to_string(c.model.kind()));
    std::visit(overloaded{
                   [](const model::Lwr&) {},
                   [&](const model::LookA& a) {
                       m["gamma_a"] = a.ahead.reach;
                       m["kernel_a_shape"] = std::string(shape_name(a.ahead.shape));
                   },
                   [&](const model::LookAB& ab) {
                       m["gamma_a"] = ab.ahead.reach;
                       m["gamma_b"] = ab.behind.reach;
                       m["kernel_a_shape"] = std::string(shape_name(ab.ahead.shape));
                       m["kernel_b_shape"] = std::string(shape_name(ab.behind.shape));
                   },
                   [&](const model::Whitham& w) {
                       m["c0"] = w.c0;
                       m["h0"] = w.h0;
                   },
                   [&](const model::Suspension& s) { m["a"] = s.a; },
               },
               c.model.variant());
    doc["model"] = m;

    json s;
    s["kind"] = std::string(to_string(c.scenario.kind()));
    if (c.scenario.kind() == ScenarioKind::Riemann) {
        const auto& r = c.scenario.riemann_data();
        s["u_left"] = r.u_left;
        s["u_right"] = r.u_right;
        s["x0"] = r.x0;
    } else if (c.scenario.kind() == ScenarioKind::Profile) {
        s["terms"] = json::array();
        for (const auto& t : c.scenario.terms()) s["terms"].push_back(term_to_json(t));
    }
    doc["scenario"] = s;

    doc["run"] = {{"cfl", c.cfl}, {"t_end", c.t_end}, {"snapshots", c.snapshot_times}, {"diag_every", c.diag_every}};
    return doc.dump(indent);
}

}  // namespace nlf
