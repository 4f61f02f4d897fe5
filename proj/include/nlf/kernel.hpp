#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "nlf/grid.hpp"

namespace nlf {

enum class KernelShape {
    AheadConstant,
    AheadLinear,
    BehindConstant,
    BehindLinear,
    WhithamExponential,
    SuspensionBump,
};

std::string_view to_string(KernelShape s);

bool is_ahead(KernelShape s) noexcept;
bool is_behind(KernelShape s) noexcept;

/// An interaction potential with unit strength.
///
/// `reach` is the look-ahead/look-behind distance for the traffic shapes and
/// the scale `a` of the suspension kernel (support |r| < 2a). The Whitham
/// kernel has a fixed shape; its reach is the truncation radius.
struct KernelSpec {
    KernelShape shape;
    double reach;

    friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

KernelSpec whitham_kernel();

/// Radius beyond which the Whitham kernel's tail mass drops under 1e-12.
double whitham_truncation_radius();

/// Trapezoidal weights of a kernel on a uniform grid. Node i of the
/// convolution reads offsets [offset_lo, offset_lo + weights.size() - 1].
class DiscreteKernel {
public:
    DiscreteKernel(double dx, std::ptrdiff_t offset_lo, std::vector<double> weights);

    double dx() const noexcept { return dx_; }
    std::ptrdiff_t offset_lo() const noexcept { return offset_lo_; }
    std::ptrdiff_t offset_hi() const noexcept {
        return offset_lo_ + static_cast<std::ptrdiff_t>(weights_.size()) - 1;
    }
    std::span<const double> weights() const noexcept { return weights_; }

private:
    double dx_;
    std::ptrdiff_t offset_lo_;
    std::vector<double> weights_;
};

/// Throws ConfigError when the kernel support does not land on nodes.
DiscreteKernel discretize(const KernelSpec& spec, double dx);

/// ū_i = Σ_j w_j u_{i+j}, ghost values per the grid's boundary policy.
/// Summation runs left to right over the stencil.
Field convolve(const Field& field, const DiscreteKernel& kernel);

/// Same as convolve, writing into a caller-owned buffer of size field.size().
void convolve_into(const Field& field, const DiscreteKernel& kernel, std::span<double> out);

}  // namespace nlf
