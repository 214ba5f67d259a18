#include <cmath>
#include <string>

#include "fuzzcalc/error.hpp"
#include "fuzzcalc/fivp.hpp"

namespace fuzzcalc {

namespace {

// Right-hand side of the parametric system: the hull of the four products.
LevelPair rhs(const LevelInterval& k, const LevelPair& y) {
    const LevelInterval r = k * LevelInterval{y.y1, y.y2};
    return {r.lo, r.hi};
}

LevelPair axpy(const LevelPair& y, double h, const LevelPair& d) {
    return {y.y1 + h * d.y1, y.y2 + h * d.y2};
}

// Kahan-compensated sum += increment.
void accumulate(double& sum, double& carry, double increment) {
    const double corrected = increment - carry;
    const double next = sum + corrected;
    carry = (next - sum) - corrected;
    sum = next;
}

}  // namespace

ParametricSolution integrate_parametric(const FivpModel& m) {
    const AlphaGrid& grid = m.grid();
    const std::size_t levels = grid.size();
    const std::size_t steps = m.steps();
    const double h = m.horizon() / static_cast<double>(steps);

    std::vector<LevelPair> samples((steps + 1) * levels);
    std::vector<std::optional<double>> positivity_lost(levels);

    // Levels do not interact; each is an independent 2-D system.
    for (std::size_t i = 0; i < levels; ++i) {
        const LevelInterval k = m.k().cut(i);
        LevelPair y{m.c().lower()[i], m.c().upper()[i]};
        LevelPair carry{0.0, 0.0};
        samples[i] = y;
        if (y.y1 < 0.0 || y.y2 < 0.0) {
            positivity_lost[i] = 0.0;
        }
        for (std::size_t j = 0; j < steps; ++j) {
            const LevelPair k1 = rhs(k, y);
            const LevelPair k2 = rhs(k, axpy(y, 0.5 * h, k1));
            const LevelPair k3 = rhs(k, axpy(y, 0.5 * h, k2));
            const LevelPair k4 = rhs(k, axpy(y, h, k3));
            accumulate(y.y1, carry.y1, h / 6.0 * (k1.y1 + 2.0 * k2.y1 + 2.0 * k3.y1 + k4.y1));
            accumulate(y.y2, carry.y2, h / 6.0 * (k1.y2 + 2.0 * k2.y2 + 2.0 * k3.y2 + k4.y2));
            if (!std::isfinite(y.y1) || !std::isfinite(y.y2)) {
                const double last = m.node_time(j);
                throw DivergenceError("parametric system diverged at alpha = " + std::to_string(grid[i]) +
                                          " after t = " + std::to_string(last),
                                      last);
            }
            samples[(j + 1) * levels + i] = y;
            if (!positivity_lost[i] && (y.y1 < 0.0 || y.y2 < 0.0)) {
                positivity_lost[i] = m.node_time(j + 1);
            }
        }
    }
    return {LevelFunctionField::sampled(m.horizon(), steps, grid, std::move(samples)), std::move(positivity_lost)};
}

}  // namespace fuzzcalc
