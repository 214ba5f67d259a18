#include <algorithm>
#include <cmath>

#include "fuzzcalc/fivp.hpp"

namespace fuzzcalc {

ResidualReport residual_check(const LevelFunctionField& f, const FivpModel& m, std::span<const double> tgrid,
                              const AlphaGrid& grid, ResidualScope scope) {
    ResidualReport report;
    for (const double t : tgrid) {
        for (const double alpha : grid.levels()) {
            const LevelPair y = f.value(t, alpha);
            if (scope == ResidualScope::NonNegative && (y.y1 < 0.0 || y.y2 < 0.0)) {
                continue;
            }
            const LevelPair dy = time_derivative(f, t, alpha);
            const LevelInterval rhs = m.k().cut_at(alpha) * LevelInterval{y.y1, y.y2};
            const double r1 = std::abs(dy.y1 - rhs.lo);
            const double r2 = std::abs(dy.y2 - rhs.hi);
            if (report.points == 0 || r1 > report.max_abs_residual_1) {
                report.max_abs_residual_1 = r1;
                report.t_at_max_1 = t;
                report.alpha_at_max_1 = alpha;
            }
            if (report.points == 0 || r2 > report.max_abs_residual_2) {
                report.max_abs_residual_2 = r2;
                report.t_at_max_2 = t;
                report.alpha_at_max_2 = alpha;
            }
            ++report.points;
        }
    }
    return report;
}

Deviation max_deviation(const LevelFunctionField& candidate, const LevelFunctionField& reference,
                        std::span<const double> tgrid, const AlphaGrid& grid, bool positive_only) {
    Deviation d;
    auto accumulate = [&d](double got, double want) {
        const double err = std::abs(got - want);
        d.max_abs = std::max(d.max_abs, err);
        if (want != 0.0) {
            d.max_rel = std::max(d.max_rel, err / std::abs(want));
        }
    };
    for (const double t : tgrid) {
        for (const double alpha : grid.levels()) {
            const LevelPair want = reference.value(t, alpha);
            if (positive_only && !(want.y1 > 0.0 && want.y2 > 0.0)) {
                continue;
            }
            const LevelPair got = candidate.value(t, alpha);
            accumulate(got.y1, want.y1);
            accumulate(got.y2, want.y2);
            ++d.points;
        }
    }
    return d;
}

}  // namespace fuzzcalc
