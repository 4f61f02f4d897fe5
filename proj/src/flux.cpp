#include "nlf/flux.hpp"

#include <cmath>
#include <sstream>

#include "flux_detail.hpp"
#include "nlf/error.hpp"

namespace nlf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << what << " must be positive, got " << v;
        throw ConfigError(os.str());
    }
}

std::string_view shape_suffix(const KernelSpec& k) {
    switch (k.shape) {
        case KernelShape::AheadConstant:
        case KernelShape::BehindConstant: return "constant";
        case KernelShape::AheadLinear:
        case KernelShape::BehindLinear: return "linear";
        default: return "other";
    }
}

}  // namespace

std::string_view to_string(ModelKind k) {
    switch (k) {
        case ModelKind::Lwr: return "lwr";
        case ModelKind::LookA: return "look_a";
        case ModelKind::LookAB: return "look_ab";
        case ModelKind::Whitham: return "whitham";
        case ModelKind::Suspension: return "suspension";
    }
    return "?";
}

FluxModel FluxModel::lwr() { return FluxModel(model::Lwr{}); }

FluxModel FluxModel::look_a(KernelSpec ahead) {
    if (!is_ahead(ahead.shape)) throw ConfigError("Look-A needs an ahead-shaped kernel");
    require_positive(ahead.reach, "gamma_a");
    return FluxModel(model::LookA{ahead});
}

FluxModel FluxModel::look_ab(KernelSpec ahead, KernelSpec behind) {
    if (!is_ahead(ahead.shape)) throw ConfigError("Look-AB needs an ahead-shaped first kernel");
    if (!is_behind(behind.shape)) throw ConfigError("Look-AB needs a behind-shaped second kernel");
    require_positive(ahead.reach, "gamma_a");
    require_positive(behind.reach, "gamma_b");
    if (ahead.reach < behind.reach) {
        std::ostringstream os;
        os << "Look-AB requires gamma_a >= gamma_b, got gamma_a=" << ahead.reach
           << ", gamma_b=" << behind.reach;
        throw ConfigError(os.str());
    }
    return FluxModel(model::LookAB{ahead, behind});
}

FluxModel FluxModel::whitham(double c0, double h0) {
    if (!(c0 >= 0.0) || !std::isfinite(c0)) throw ConfigError("Whitham c0 must be finite and >= 0");
    require_positive(h0, "Whitham h0");
    return FluxModel(model::Whitham{c0, h0});
}

FluxModel FluxModel::suspension(double a) {
    require_positive(a, "suspension kernel scale a");
    return FluxModel(model::Suspension{a});
}

std::optional<KernelSpec> FluxModel::kernel() const {
    return std::visit(overloaded{
                          [](const model::Lwr&) -> std::optional<KernelSpec> { return std::nullopt; },
                          [](const model::LookA& m) -> std::optional<KernelSpec> { return m.ahead; },
                          [](const model::LookAB& m) -> std::optional<KernelSpec> { return m.ahead; },
                          [](const model::Whitham&) -> std::optional<KernelSpec> { return whitham_kernel(); },
                          [](const model::Suspension& m) -> std::optional<KernelSpec> {
                              return KernelSpec{KernelShape::SuspensionBump, m.a};
                          },
                      },
                      variant_);
}

std::optional<KernelSpec> FluxModel::behind_kernel() const {
    if (const auto* m = std::get_if<model::LookAB>(&variant_)) return m->behind;
    return std::nullopt;
}

bool FluxModel::is_traffic() const noexcept {
    const auto k = kind();
    return k == ModelKind::Lwr || k == ModelKind::LookA || k == ModelKind::LookAB;
}

std::string FluxModel::label() const {
    std::string out(to_string(kind()));
    if (const auto* m = std::get_if<model::LookA>(&variant_)) {
        out += "_";
        out += shape_suffix(m->ahead);
    } else if (const auto* m = std::get_if<model::LookAB>(&variant_)) {
        out += "_";
        out += shape_suffix(m->ahead);
        if (shape_suffix(m->ahead) != shape_suffix(m->behind)) {
            out += "_";
            out += shape_suffix(m->behind);
        }
    }
    return out;
}

double eval_flux(const FluxModel& model, double u, double u_bar, double u_tilde) noexcept {
    return std::visit([&](const auto& m) { return detail::flux(m, u, u_bar, u_tilde); }, model.variant());
}

double local_wave_speed(const FluxModel& model, double u, double u_bar, double u_tilde) noexcept {
    return std::visit([&](const auto& m) { return detail::speed(m, u, u_bar, u_tilde); }, model.variant());
}

}  // namespace nlf
