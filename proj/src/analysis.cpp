#include "nlf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>

#include "nlf/error.hpp"

namespace nlf {

namespace {

// Trapezoid weight of node i (in units of dx); periodic grids count one period.
double node_weight(const GridSpec& g, std::size_t i) {
    const std::size_t n = g.size();
    if (g.periodic()) return i + 1 < n ? 1.0 : 0.0;
    return (i == 0 || i + 1 == n) ? 0.5 : 1.0;
}

}  // namespace

double total_mass(const Field& field) {
    const auto& g = field.grid();
    double sum = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) sum += node_weight(g, i) * field[i];
    return sum * g.dx();
}

double max_gradient(const Field& field) {
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < field.size(); ++i) best = std::max(best, std::abs(field[i + 1] - field[i]));
    return best / field.grid().dx();
}

double lwr_riemann_exact(const RiemannState& s, double x, double t) {
    const double ul = s.u_left;
    const double ur = s.u_right;
    if (ul == ur) return ul;
    if (!(t > 0.0)) return x < s.x0 ? ul : ur;
    const double xi = (x - s.x0) / t;
    if (ul < ur) {
        const double speed = 1.0 - ul - ur;
        return xi < speed ? ul : ur;
    }
    // f'(u) = 1 - 2u is decreasing, so u_left > u_right opens a fan
    const double head = 1.0 - 2.0 * ur;
    const double tail = 1.0 - 2.0 * ul;
    if (xi <= tail) return ul;
    if (xi >= head) return ur;
    return 0.5 * (1.0 - xi);
}

double l1_error(const Field& field, const Reference& reference) {
    const auto& g = field.grid();
    double sum = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
        sum += node_weight(g, i) * std::abs(field[i] - reference(g.node(i)));
    }
    return sum * g.dx();
}

std::optional<Reference> exact_reference(const SimConfig& config, double t) {
    if (config.model.kind() != ModelKind::Lwr || config.grid.periodic()) return std::nullopt;
    const auto& sc = config.scenario;
    if (sc.kind() == ScenarioKind::Riemann) {
        const auto& r = sc.riemann_data();
        const RiemannState state{r.u_left, r.u_right, r.x0};
        return Reference([state, t](double x) { return lwr_riemann_exact(state, x, t); });
    }
    if (sc.terms().size() != 1) return std::nullopt;
    const auto* box = std::get_if<term::Box>(&sc.terms().front());
    if (!box || !(box->h > 0.0) || !(box->x_hi > box->x_lo)) return std::nullopt;

    // Shock out of x_lo (speed 1-h) meets the fan tail out of x_hi (speed 1-2h)
    // at t = (x_hi - x_lo)/h; before that the two Riemann problems are independent.
    const double h = box->h;
    if (t >= (box->x_hi - box->x_lo) / h) return std::nullopt;
    const RiemannState left{0.0, h, box->x_lo};
    const RiemannState right{h, 0.0, box->x_hi};
    const double split = 0.5 * ((box->x_lo + (1.0 - h) * t) + (box->x_hi + (1.0 - 2.0 * h) * t));
    return Reference([=](double x) {
        return x < split ? lwr_riemann_exact(left, x, t) : lwr_riemann_exact(right, x, t);
    });
}

double riccati_blowup_time(double d0) {
    if (d0 > 0.0) return 1.0 / d0;
    return std::numeric_limits<double>::infinity();
}

double front_position(const Field& field, double level, FrontSide side) {
    const auto& g = field.grid();
    const std::size_t n = field.size();
    const auto crossing = [&](std::size_t i) {
        const double a = field[i];
        const double b = field[i + 1];
        return (a >= level) != (b >= level);
    };
    const auto locate = [&](std::size_t i) {
        const double a = field[i];
        const double b = field[i + 1];
        return g.node(i) + (level - a) / (b - a) * g.dx();
    };
    if (side == FrontSide::Leading) {
        for (std::size_t i = n - 1; i-- > 0;) {
            if (crossing(i)) return locate(i);
        }
    } else {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (crossing(i)) return locate(i);
        }
    }
    std::ostringstream os;
    os << "field never crosses level " << level;
    throw AnalysisError(os.str());
}

std::string_view to_string(ShockClass c) {
    switch (c) {
        case ShockClass::ShockSuspected: return "shock_suspected";
        case ShockClass::Smooth: return "smooth";
        case ShockClass::Indeterminate: return "indeterminate";
    }
    return "?";
}

ShockClass classify(const std::vector<ConvergenceRow>& rows) {
    if (rows.size() < 2) return ShockClass::Indeterminate;
    bool all_shock = true;
    bool all_smooth = true;
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
        const auto& coarse = rows[k];
        const auto& fine = rows[k + 1];
        if (coarse.error || fine.error) return ShockClass::Indeterminate;
        if (coarse.max_grad == 0.0 && fine.max_grad == 0.0) {
            all_shock = false;
            continue;
        }
        if (coarse.max_grad == 0.0) return ShockClass::Indeterminate;
        // growth per halving of dx
        const double halvings = std::log2(coarse.dx / fine.dx);
        if (!(halvings > 0.0)) return ShockClass::Indeterminate;
        const double growth = std::pow(fine.max_grad / coarse.max_grad, 1.0 / halvings);
        all_shock = all_shock && growth >= 1.8;
        all_smooth = all_smooth && growth <= 1.2;
    }
    if (all_shock) return ShockClass::ShockSuspected;
    if (all_smooth) return ShockClass::Smooth;
    return ShockClass::Indeterminate;
}

namespace {

ConvergenceRow study_row(const SimConfig& base, double dx, double t_probe) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    try {
        SimConfig c = base.with_dx(dx);
        c.t_end = t_probe;
        c.snapshot_times = {t_probe};
        c.diag_every = std::numeric_limits<std::size_t>::max();
        const auto result = run(c);
        const Field& field = result.snapshots.back().field;
        ConvergenceRow row{dx, std::nullopt, max_gradient(field), std::nullopt};
        if (auto ref = exact_reference(c, t_probe)) row.l1_error = l1_error(field, *ref);
        return row;
    } catch (const std::exception& e) {
        return ConvergenceRow{dx, std::nullopt, nan, std::string(e.what())};
    }
}

}  // namespace

RefinementStudy shock_refinement_study(const SimConfig& config, const std::vector<double>& dx_list,
                                       double t_probe, unsigned threads) {
    if (dx_list.empty()) throw ConfigError("refinement study needs at least one dx");
    if (!std::is_sorted(dx_list.begin(), dx_list.end(), std::greater<>())) {
        throw ConfigError("refinement study dx list must be sorted descending");
    }
    if (!(t_probe >= 0.0) || !std::isfinite(t_probe)) throw ConfigError("t_probe must be finite and >= 0");

    std::vector<ConvergenceRow> rows(dx_list.size());
    if (threads <= 1) {
        for (std::size_t k = 0; k < dx_list.size(); ++k) rows[k] = study_row(config, dx_list[k], t_probe);
    } else {
        for (std::size_t begin = 0; begin < dx_list.size(); begin += threads) {
            const std::size_t end = std::min(dx_list.size(), begin + threads);
            std::vector<std::future<ConvergenceRow>> pending;
            for (std::size_t k = begin; k < end; ++k) {
                pending.push_back(std::async(std::launch::async, study_row, std::cref(config), dx_list[k], t_probe));
            }
            for (std::size_t k = begin; k < end; ++k) rows[k] = pending[k - begin].get();
        }
    }
    const ShockClass cls = classify(rows);
    return {std::move(rows), cls};
}

}  // namespace nlf
