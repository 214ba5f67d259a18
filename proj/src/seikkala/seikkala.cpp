#include "fuzzcalc/seikkala.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

namespace {

LevelPair combine(double ca, const LevelPair& a, double cb, const LevelPair& b, double cc, const LevelPair& c,
                  double scale) {
    return {(ca * a.y1 + cb * b.y1 + cc * c.y1) / scale, (ca * a.y2 + cb * b.y2 + cc * c.y2) / scale};
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha " + std::to_string(alpha) + " outside [0,1]");
    }
}

}  // namespace

LevelPair partial_alpha(const LevelFunctionField& f, double t, double alpha, double h) {
    check_alpha(alpha);
    if (!(h > 0.0)) {
        throw DomainError("finite-difference step must be positive");
    }
    auto at = [&](double a) { return f.value(t, a); };
    const LevelPair zero{};
    if (alpha - h >= 0.0 && alpha + h <= 1.0) {
        return combine(-1.0, at(alpha - h), 1.0, at(alpha + h), 0.0, zero, 2.0 * h);
    }
    if (alpha + 2.0 * h <= 1.0) {
        return combine(-3.0, at(alpha), 4.0, at(alpha + h), -1.0, at(alpha + 2.0 * h), 2.0 * h);
    }
    if (alpha - 2.0 * h >= 0.0) {
        return combine(3.0, at(alpha), -4.0, at(alpha - h), 1.0, at(alpha - 2.0 * h), 2.0 * h);
    }
    if (alpha + h <= 1.0) {
        return combine(-1.0, at(alpha), 1.0, at(alpha + h), 0.0, zero, h);
    }
    if (alpha - h >= 0.0) {
        return combine(1.0, at(alpha), -1.0, at(alpha - h), 0.0, zero, h);
    }
    throw DomainError("finite-difference step " + std::to_string(h) + " too large for alpha in [0,1]");
}

std::optional<LevelPair> analytic_partial_alpha(const LevelFunctionField& f, double t, double alpha) {
    const auto j = f.jet(t, alpha);
    if (!j) {
        return std::nullopt;
    }
    return LevelPair{j->y1.slope, j->y2.slope};
}

LevelPair time_derivative(const LevelFunctionField& f, double t, double alpha) {
    t = f.checked_time(t);
    check_alpha(alpha);
    if (const auto j = f.jet(t, alpha)) {
        return {j->y1_prime.value, j->y2_prime.value};
    }
    const double h = *f.time_spacing();
    const double T = f.horizon();
    auto at = [&](double s) { return f.value(std::clamp(s, 0.0, T), alpha); };
    const LevelPair zero{};
    const double slack = 1e-9 * h;
    if (t - h >= -slack && t + h <= T + slack) {
        return combine(-1.0, at(t - h), 1.0, at(t + h), 0.0, zero, 2.0 * h);
    }
    if (t + 2.0 * h <= T + slack) {
        return combine(-3.0, at(t), 4.0, at(t + h), -1.0, at(t + 2.0 * h), 2.0 * h);
    }
    if (t - 2.0 * h >= -slack) {
        return combine(3.0, at(t), -4.0, at(t - h), 1.0, at(t - 2.0 * h), 2.0 * h);
    }
    // a single time step: the secant is all there is
    return combine(-1.0, at(0.0), 1.0, at(T), 0.0, zero, T);
}

ValidityReport check_level_validity(const LevelFunctionField& f, double t, const AlphaGrid& grid, double tol) {
    std::vector<double> lower(grid.size());
    std::vector<double> upper(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const LevelPair v = f.value(t, grid[i]);
        lower[i] = v.y1;
        upper[i] = v.y2;
    }
    return validate_envelopes(lower, upper, tol);
}

std::string_view condition_name(SeikkalaCondition c) noexcept {
    switch (c) {
        case SeikkalaCondition::ValueLower: return "dα-y1";
        case SeikkalaCondition::ValueUpper: return "dα-y2";
        case SeikkalaCondition::ValueOrder: return "order";
        case SeikkalaCondition::DerivativeLower: return "dα-y1'";
        case SeikkalaCondition::DerivativeUpper: return "dα-y2'";
        case SeikkalaCondition::DerivativeOrder: return "order'";
    }
    return "?";
}

std::size_t SeikkalaReport::witness_count(SeikkalaCondition c) const noexcept {
    std::size_t n = 0;
    for (const auto& w : witnesses) {
        n += w.condition == c ? 1 : 0;
    }
    return n;
}

std::optional<Witness> SeikkalaReport::worst(SeikkalaCondition c) const {
    std::optional<Witness> best;
    for (const auto& w : witnesses) {
        if (w.condition == c && (!best || std::abs(w.magnitude) > std::abs(best->magnitude))) {
            best = w;
        }
    }
    return best;
}

namespace {

// Appends witnesses for one envelope pair (values or derivatives) at fixed t.
void check_envelopes(std::span<const LevelPair> levels, const AlphaGrid& grid, double t, double tol,
                     SeikkalaCondition lower_cond, SeikkalaCondition upper_cond, SeikkalaCondition order_cond,
                     SeikkalaReport& report) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i > 0) {
            const double da = grid[i] - grid[i - 1];
            const double d_lower = levels[i].y1 - levels[i - 1].y1;
            const double d_upper = levels[i].y2 - levels[i - 1].y2;
            if (d_lower < -tol) {
                report.witnesses.push_back({t, grid[i - 1], grid[i], lower_cond, d_lower / da});
            } else if (d_lower <= tol) {
                ++report.flat_segments[static_cast<std::size_t>(lower_cond)];
            }
            if (d_upper > tol) {
                report.witnesses.push_back({t, grid[i - 1], grid[i], upper_cond, d_upper / da});
            } else if (d_upper >= -tol) {
                ++report.flat_segments[static_cast<std::size_t>(upper_cond)];
            }
        }
        const double gap = levels[i].y2 - levels[i].y1;
        if (gap < -tol) {
            report.witnesses.push_back({t, grid[i], grid[i], order_cond, gap});
        }
    }
}

bool any_of(const SeikkalaReport& r, std::initializer_list<SeikkalaCondition> conds) {
    for (auto c : conds) {
        if (r.witness_count(c) > 0) {
            return true;
        }
    }
    return false;
}

}  // namespace

SeikkalaReport seikkala_verdict(const LevelFunctionField& f, std::span<const double> tgrid, const AlphaGrid& grid,
                                double tol) {
    if (tgrid.empty()) {
        throw DomainError("seikkala_verdict needs at least one time point");
    }
    SeikkalaReport report;
    std::vector<LevelPair> values(grid.size());
    std::vector<LevelPair> derivs(grid.size());
    for (const double t : tgrid) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            values[i] = f.value(t, grid[i]);
            derivs[i] = time_derivative(f, t, grid[i]);
        }
        check_envelopes(values, grid, t, tol, SeikkalaCondition::ValueLower, SeikkalaCondition::ValueUpper,
                        SeikkalaCondition::ValueOrder, report);
        check_envelopes(derivs, grid, t, tol, SeikkalaCondition::DerivativeLower,
                        SeikkalaCondition::DerivativeUpper, SeikkalaCondition::DerivativeOrder, report);
    }
    report.value_valid = !any_of(
        report, {SeikkalaCondition::ValueLower, SeikkalaCondition::ValueUpper, SeikkalaCondition::ValueOrder});
    report.derivative_valid = !any_of(report, {SeikkalaCondition::DerivativeLower,
                                               SeikkalaCondition::DerivativeUpper,
                                               SeikkalaCondition::DerivativeOrder});
    report.differentiable = report.value_valid && report.derivative_valid;
    return report;
}

}  // namespace fuzzcalc
