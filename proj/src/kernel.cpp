#include "nlf/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "nlf/error.hpp"

namespace nlf {

namespace {

constexpr double kWhithamTailMass = 1e-12;

std::ptrdiff_t node_count(double length, double dx, std::string_view what) {
    if (!commensurate(length, dx)) {
        std::ostringstream os;
        os.precision(12);
        os << what << " " << length << " is not an integer multiple of dx=" << dx;
        throw ConfigError(os.str());
    }
    const auto m = static_cast<std::ptrdiff_t>(std::llround(length / dx));
    if (m < 1) {
        std::ostringstream os;
        os << what << " " << length << " is shorter than one cell (dx=" << dx << ")";
        throw ConfigError(os.str());
    }
    return m;
}

// Trapezoidal weights for ∫ k(s) u(x + s) ds over s ∈ [0, m·dx]. The density
// is evaluated at the fraction q = j/m of the reach so the far end is exact.
template <class Density>
std::vector<double> trapezoid(std::ptrdiff_t m, double dx, Density k) {
    std::vector<double> w(static_cast<std::size_t>(m) + 1);
    for (std::ptrdiff_t j = 0; j <= m; ++j) {
        const double end = (j == 0 || j == m) ? 0.5 : 1.0;
        w[static_cast<std::size_t>(j)] = end * dx * k(static_cast<double>(j) / static_cast<double>(m));
    }
    return w;
}

}  // namespace

std::string_view to_string(KernelShape s) {
    switch (s) {
        case KernelShape::AheadConstant: return "ahead_constant";
        case KernelShape::AheadLinear: return "ahead_linear";
        case KernelShape::BehindConstant: return "behind_constant";
        case KernelShape::BehindLinear: return "behind_linear";
        case KernelShape::WhithamExponential: return "whitham_exponential";
        case KernelShape::SuspensionBump: return "suspension_bump";
    }
    return "?";
}

bool is_ahead(KernelShape s) noexcept {
    return s == KernelShape::AheadConstant || s == KernelShape::AheadLinear;
}

bool is_behind(KernelShape s) noexcept {
    return s == KernelShape::BehindConstant || s == KernelShape::BehindLinear;
}

double whitham_truncation_radius() {
    // tail mass beyond R is exp(-πR/2)
    return -2.0 / std::numbers::pi * std::log(kWhithamTailMass);
}

KernelSpec whitham_kernel() { return {KernelShape::WhithamExponential, whitham_truncation_radius()}; }

DiscreteKernel::DiscreteKernel(double dx, std::ptrdiff_t offset_lo, std::vector<double> weights)
    : dx_(dx), offset_lo_(offset_lo), weights_(std::move(weights)) {
    if (!(dx_ > 0.0)) throw UsageError("discrete kernel needs dx > 0");
    if (weights_.empty()) throw UsageError("discrete kernel needs at least one weight");
    for (double w : weights_) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw UsageError("discrete kernel weights must be finite and >= 0");
    }
}

DiscreteKernel discretize(const KernelSpec& spec, double dx) {
    if (!(spec.reach > 0.0) || !std::isfinite(spec.reach)) {
        throw ConfigError("kernel reach must be positive, got " + std::to_string(spec.reach));
    }
    if (!(dx > 0.0)) throw ConfigError("kernel discretization needs dx > 0");

    const double g = spec.reach;
    switch (spec.shape) {
        case KernelShape::AheadConstant: {
            const auto m = node_count(g, dx, "kernel reach");
            return {dx, 0, trapezoid(m, dx, [g](double) { return 1.0 / g; })};
        }
        case KernelShape::AheadLinear: {
            const auto m = node_count(g, dx, "kernel reach");
            // (2/γ)(1 + (x-y)/γ) at y = x + qγ
            return {dx, 0, trapezoid(m, dx, [g](double q) { return 2.0 / g * (1.0 - q); })};
        }
        case KernelShape::BehindConstant: {
            const auto m = node_count(g, dx, "kernel reach");
            return {dx, -m, trapezoid(m, dx, [g](double) { return 1.0 / g; })};
        }
        case KernelShape::BehindLinear: {
            const auto m = node_count(g, dx, "kernel reach");
            // (2/γ)(1 - (x-y)/γ) at y = x - qγ, stored from offset -m upwards
            auto w = trapezoid(m, dx, [g](double q) { return 2.0 / g * (1.0 - q); });
            std::reverse(w.begin(), w.end());
            return {dx, -m, std::move(w)};
        }
        case KernelShape::WhithamExponential: {
            const auto m = static_cast<std::ptrdiff_t>(std::ceil(whitham_truncation_radius() / dx));
            const auto k = [](double r) {
                return std::numbers::pi / 4.0 * std::exp(-std::numbers::pi * std::abs(r) / 2.0);
            };
            std::vector<double> w(static_cast<std::size_t>(2 * m + 1));
            double sum = 0.0;
            for (std::ptrdiff_t j = -m; j <= m; ++j) {
                const double end = (j == -m || j == m) ? 0.5 : 1.0;
                const double v = end * dx * k(static_cast<double>(j) * dx);
                w[static_cast<std::size_t>(j + m)] = v;
                sum += v;
            }
            const double truncated_mass = 1.0 - std::exp(-std::numbers::pi * static_cast<double>(m) * dx / 2.0);
            for (double& v : w) v *= truncated_mass / sum;
            return {dx, -m, std::move(w)};
        }
        case KernelShape::SuspensionBump: {
            // K_a(r) = K(r/a)/a, K(r) = 2/(3(r²/4 - 1)) on |r| < 2. The formula is
            // negative with non-integrable end singularities, so the node
            // samples strictly inside the support are normalised by their sum.
            const auto m = node_count(2.0 * g, dx, "suspension kernel support 2a");
            if (m < 2) throw ConfigError("suspension kernel support 2a must span at least two cells");
            std::vector<double> w(static_cast<std::size_t>(2 * m + 1), 0.0);
            double sum = 0.0;
            for (std::ptrdiff_t j = -m + 1; j <= m - 1; ++j) {
                const double r = static_cast<double>(j) * dx / g;
                const double v = 2.0 / (3.0 * (r * r / 4.0 - 1.0)) / g;
                w[static_cast<std::size_t>(j + m)] = v;
                sum += v;
            }
            for (double& v : w) v /= sum;
            return {dx, -m, std::move(w)};
        }
    }
    throw ConfigError("unknown kernel shape");
}

void convolve_into(const Field& field, const DiscreteKernel& kernel, std::span<double> out) {
    const GridSpec& grid = field.grid();
    if (std::abs(kernel.dx() - grid.dx()) > 1e-12 * grid.dx()) {
        std::ostringstream os;
        os << "kernel discretized for dx=" << kernel.dx() << " applied to a field with dx=" << grid.dx();
        throw UsageError(os.str());
    }
    if (out.size() != field.size()) throw UsageError("convolution output has the wrong size");

    const auto n = static_cast<std::ptrdiff_t>(field.size());
    const auto values = field.values();
    const auto w = kernel.weights();
    const std::ptrdiff_t lo = kernel.offset_lo();
    const std::ptrdiff_t hi = kernel.offset_hi();
    const auto taps = static_cast<std::ptrdiff_t>(w.size());

    for (std::ptrdiff_t i = 0; i < n; ++i) {
        double acc = 0.0;
        if (i + lo >= 0 && i + hi < n) {
            const double* u = values.data() + (i + lo);
            for (std::ptrdiff_t j = 0; j < taps; ++j) acc += w[static_cast<std::size_t>(j)] * u[j];
        } else {
            for (std::ptrdiff_t j = 0; j < taps; ++j) {
                acc += w[static_cast<std::size_t>(j)] * field.sample_at(i + lo + j);
            }
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
}

Field convolve(const Field& field, const DiscreteKernel& kernel) {
    std::vector<double> out(field.size());
    convolve_into(field, kernel, out);
    return Field(field.grid(), std::move(out));
}

}  // namespace nlf
