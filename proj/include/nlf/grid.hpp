#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace nlf {

enum class Boundary { Periodic, ConstantExtension };

std::string_view to_string(Boundary b);
Boundary boundary_from_string(std::string_view name);

/// Uniform node-centred 1-D grid. Node i sits at x_min + i*dx.
///
/// On a periodic grid the first and last nodes are the same physical point,
/// so the period is n-1 cells.
class GridSpec {
public:
    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    double dx() const noexcept { return dx_; }
    std::size_t size() const noexcept { return n_; }
    Boundary boundary() const noexcept { return boundary_; }
    bool periodic() const noexcept { return boundary_ == Boundary::Periodic; }

    double node(std::size_t i) const noexcept { return x_min_ + static_cast<double>(i) * dx_; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    friend GridSpec make_grid(double, double, double, Boundary);
    GridSpec(double x_min, double x_max, double dx, std::size_t n, Boundary b)
        : x_min_(x_min), x_max_(x_max), dx_(dx), n_(n), boundary_(b) {}

    double x_min_;
    double x_max_;
    double dx_;
    std::size_t n_;
    Boundary boundary_;
};

/// Throws ConfigError unless x_min < x_max, dx > 0, (x_max-x_min)/dx is within
/// 1e-9 of an integer and the resulting grid has at least 3 nodes.
GridSpec make_grid(double x_min, double x_max, double dx,
                   Boundary boundary = Boundary::ConstantExtension);

/// True when `length` is an integer multiple of `dx` (ratio within 1e-9).
bool commensurate(double length, double dx);

/// Density samples on a grid. Immutable once built; every value is finite.
class Field {
public:
    Field(GridSpec grid, std::vector<double> values);

    const GridSpec& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    /// Ghost-aware lookup. Periodic grids wrap with period n-1, constant
    /// extension clamps to the nearest edge node.
    double sample_at(std::ptrdiff_t i) const noexcept;

private:
    GridSpec grid_;
    std::vector<double> values_;
};

/// Maps a possibly out-of-range index to the node it aliases under the
/// grid's boundary policy.
std::size_t resolve_index(const GridSpec& grid, std::ptrdiff_t i) noexcept;

}  // namespace nlf
