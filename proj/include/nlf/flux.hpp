#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "nlf/kernel.hpp"

namespace nlf {

namespace model {
struct Lwr {
    friend bool operator==(const Lwr&, const Lwr&) = default;
};
struct LookA {
    KernelSpec ahead;
    friend bool operator==(const LookA&, const LookA&) = default;
};
struct LookAB {
    KernelSpec ahead;
    KernelSpec behind;
    friend bool operator==(const LookAB&, const LookAB&) = default;
};
struct Whitham {
    double c0;
    double h0;
    friend bool operator==(const Whitham&, const Whitham&) = default;
};
struct Suspension {
    double a;
    friend bool operator==(const Suspension&, const Suspension&) = default;
};
}  // namespace model

enum class ModelKind { Lwr, LookA, LookAB, Whitham, Suspension };

std::string_view to_string(ModelKind k);

/// Flux F(u, ū, ũ) of the nonlocal conservation law u_t + F_x = 0.
class FluxModel {
public:
    using Variant = std::variant<model::Lwr, model::LookA, model::LookAB, model::Whitham,
                                 model::Suspension>;

    static FluxModel lwr();
    static FluxModel look_a(KernelSpec ahead);
    /// Requires an ahead-shaped and a behind-shaped kernel with γ_a ≥ γ_b > 0.
    static FluxModel look_ab(KernelSpec ahead, KernelSpec behind);
    static FluxModel whitham(double c0, double h0);
    static FluxModel suspension(double a);

    ModelKind kind() const noexcept { return static_cast<ModelKind>(variant_.index()); }
    const Variant& variant() const noexcept { return variant_; }

    /// Kernel producing ū, if the model has one.
    std::optional<KernelSpec> kernel() const;
    /// Kernel producing ũ (Look-AB only).
    std::optional<KernelSpec> behind_kernel() const;

    /// LWR, Look-A and Look-AB: densities normalised to [0, 1].
    bool is_traffic() const noexcept;

    /// Short label such as "lwr", "look_a_constant", "look_ab_linear".
    std::string label() const;

    friend bool operator==(const FluxModel&, const FluxModel&) = default;

private:
    explicit FluxModel(Variant v) : variant_(std::move(v)) {}
    Variant variant_;
};

double eval_flux(const FluxModel& model, double u, double u_bar, double u_tilde) noexcept;

/// |∂F/∂u| with ū and ũ held fixed.
double local_wave_speed(const FluxModel& model, double u, double u_bar, double u_tilde) noexcept;

}  // namespace nlf
