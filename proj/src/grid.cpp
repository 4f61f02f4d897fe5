#include "nlf/grid.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "nlf/error.hpp"

namespace nlf {

SimulationDiverged::SimulationDiverged(double t, std::size_t step, std::size_t node)
    : Error([&] {
          std::ostringstream os;
          os.precision(12);
          os << "simulation diverged: non-finite density at node " << node << ", t=" << t
             << ", step " << step;
          return os.str();
      }()),
      t_(t),
      step_(step),
      node_(node) {}

std::string_view to_string(Boundary b) {
    switch (b) {
        case Boundary::Periodic: return "periodic";
        case Boundary::ConstantExtension: return "constant_extension";
    }
    return "?";
}

Boundary boundary_from_string(std::string_view name) {
    if (name == "periodic") return Boundary::Periodic;
    if (name == "constant_extension") return Boundary::ConstantExtension;
    throw ConfigError("unknown boundary policy '" + std::string(name) +
                      "' (expected periodic or constant_extension)");
}

bool commensurate(double length, double dx) {
    if (!(dx > 0.0) || !std::isfinite(length)) return false;
    const double ratio = length / dx;
    return std::abs(ratio - std::round(ratio)) <= 1e-9 * std::max(1.0, std::abs(ratio));
}

GridSpec make_grid(double x_min, double x_max, double dx, Boundary boundary) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
        std::ostringstream os;
        os << "grid requires finite x_min < x_max, got x_min=" << x_min << ", x_max=" << x_max;
        throw ConfigError(os.str());
    }
    if (!(dx > 0.0) || !std::isfinite(dx)) {
        std::ostringstream os;
        os << "grid requires dx > 0, got dx=" << dx;
        throw ConfigError(os.str());
    }
    if (!commensurate(x_max - x_min, dx)) {
        std::ostringstream os;
        os.precision(12);
        os << "domain not commensurate with dx: length " << (x_max - x_min) << " is not a multiple of dx="
           << dx;
        throw ConfigError(os.str());
    }
    const auto n = static_cast<std::size_t>(std::llround((x_max - x_min) / dx)) + 1;
    if (n < 3) {
        throw ConfigError("grid needs at least 3 nodes, got " + std::to_string(n));
    }
    return GridSpec(x_min, x_max, dx, n, boundary);
}

std::size_t resolve_index(const GridSpec& grid, std::ptrdiff_t i) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
    if (i >= 0 && i < n) return static_cast<std::size_t>(i);
    if (grid.periodic()) {
        const std::ptrdiff_t period = n - 1;
        std::ptrdiff_t r = i % period;
        if (r < 0) r += period;
        return static_cast<std::size_t>(r);
    }
    return i < 0 ? 0 : static_cast<std::size_t>(n - 1);
}

Field::Field(GridSpec grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw UsageError("field has " + std::to_string(values_.size()) + " values for a grid of " +
                         std::to_string(grid_.size()) + " nodes");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            std::ostringstream os;
            os << "field value at node " << i << " (x=" << grid_.node(i) << ") is not finite";
            throw UsageError(os.str());
        }
    }
}

double Field::sample_at(std::ptrdiff_t i) const noexcept { return values_[resolve_index(grid_, i)]; }

}  // namespace nlf
