#pragma once

#include <cmath>

#include "nlf/flux.hpp"

// Per-variant flux and speed formulas, shared by the scalar entry points and
// the vectorised loops in the solver.
namespace nlf::detail {

inline double flux(const model::Lwr&, double u, double, double) { return u * (1.0 - u); }
inline double flux(const model::LookA&, double u, double ub, double) { return u * (1.0 - u) * std::exp(-ub); }
inline double flux(const model::LookAB&, double u, double ub, double ut) {
    return u * (1.0 - u) * std::exp(-ub + ut);
}
inline double flux(const model::Whitham& m, double u, double ub, double) {
    return 3.0 * m.c0 / (4.0 * m.h0) * u * u + ub;
}
inline double flux(const model::Suspension&, double u, double ub, double) { return u + ub * u; }

inline double speed(const model::Lwr&, double u, double, double) { return std::abs(1.0 - 2.0 * u); }
inline double speed(const model::LookA&, double u, double ub, double) {
    return std::abs(1.0 - 2.0 * u) * std::exp(-ub);
}
inline double speed(const model::LookAB&, double u, double ub, double ut) {
    return std::abs(1.0 - 2.0 * u) * std::exp(-ub + ut);
}
inline double speed(const model::Whitham& m, double u, double, double) {
    return 3.0 * m.c0 / (2.0 * m.h0) * std::abs(u);
}
inline double speed(const model::Suspension&, double, double ub, double) { return std::abs(1.0 + ub); }

}  // namespace nlf::detail
