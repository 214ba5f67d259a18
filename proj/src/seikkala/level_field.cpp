#include "fuzzcalc/level_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

LevelFunctionField LevelFunctionField::closed_form(double horizon, JetFn jet) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw DomainError("time horizon must be positive and finite");
    }
    if (!jet) {
        throw StructuralError("closed-form field needs an evaluator");
    }
    return LevelFunctionField(horizon, std::move(jet));
}

LevelFunctionField LevelFunctionField::sampled(double horizon, std::size_t steps, AlphaGrid grid,
                                               std::vector<LevelPair> samples) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw DomainError("time horizon must be positive and finite");
    }
    if (steps == 0) {
        throw StructuralError("sampled field needs at least one time step");
    }
    if (samples.size() != (steps + 1) * grid.size()) {
        throw StructuralError("sample count " + std::to_string(samples.size()) + " does not match " +
                              std::to_string(steps + 1) + " time nodes x " + std::to_string(grid.size()) +
                              " alpha levels");
    }
    auto data = std::make_shared<const Sampled>(Sampled{steps, std::move(grid), std::move(samples)});
    return LevelFunctionField(horizon, std::move(data));
}

FieldKind LevelFunctionField::kind() const noexcept {
    return std::holds_alternative<JetFn>(repr_) ? FieldKind::ClosedForm : FieldKind::Sampled;
}

std::optional<double> LevelFunctionField::time_spacing() const noexcept {
    if (const auto* s = std::get_if<std::shared_ptr<const Sampled>>(&repr_)) {
        return horizon_ / static_cast<double>((*s)->steps);
    }
    return std::nullopt;
}

double LevelFunctionField::checked_time(double t) const {
    const double slack = 1e-12 * std::max(1.0, horizon_);
    if (!(t >= -slack && t <= horizon_ + slack)) {
        throw DomainError("t = " + std::to_string(t) + " outside [0, " + std::to_string(horizon_) + "]");
    }
    return std::clamp(t, 0.0, horizon_);
}

LevelPair LevelFunctionField::Sampled::at_node(std::size_t step, double alpha) const {
    const std::size_t i = grid.segment(alpha);
    const LevelPair* row = samples.data() + step * grid.size();
    const double a0 = grid[i];
    const double a1 = grid[i + 1];
    if (alpha == a0) {
        return row[i];
    }
    if (alpha == a1) {
        return row[i + 1];
    }
    const double w = (alpha - a0) / (a1 - a0);
    return {row[i].y1 + w * (row[i + 1].y1 - row[i].y1), row[i].y2 + w * (row[i + 1].y2 - row[i].y2)};
}

LevelPair LevelFunctionField::value(double t, double alpha) const {
    t = checked_time(t);
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha " + std::to_string(alpha) + " outside [0,1]");
    }
    if (const auto* fn = std::get_if<JetFn>(&repr_)) {
        const LevelJet j = (*fn)(t, alpha);
        return {j.y1.value, j.y2.value};
    }

    const Sampled& s = *std::get<std::shared_ptr<const Sampled>>(repr_);
    const double h = horizon_ / static_cast<double>(s.steps);
    const double u = t / h;
    const double nearest = std::round(u);
    if (std::abs(u - nearest) <= 1e-9) {
        return s.at_node(static_cast<std::size_t>(nearest), alpha);
    }
    if (s.steps < 3) {
        const auto j = std::min(static_cast<std::size_t>(u), s.steps - 1);
        const double w = u - static_cast<double>(j);
        const LevelPair a = s.at_node(j, alpha);
        const LevelPair b = s.at_node(j + 1, alpha);
        return {a.y1 + w * (b.y1 - a.y1), a.y2 + w * (b.y2 - a.y2)};
    }
    // Cubic Lagrange through nodes j0..j0+3 bracketing u.
    const auto cell = std::min(static_cast<std::size_t>(u), s.steps - 1);
    const std::size_t j0 = std::min(cell > 0 ? cell - 1 : 0, s.steps - 3);
    LevelPair out{};
    for (std::size_t a = 0; a < 4; ++a) {
        double weight = 1.0;
        for (std::size_t b = 0; b < 4; ++b) {
            if (a != b) {
                weight *= (u - static_cast<double>(j0 + b)) / (static_cast<double>(a) - static_cast<double>(b));
            }
        }
        const LevelPair node = s.at_node(j0 + a, alpha);
        out.y1 += weight * node.y1;
        out.y2 += weight * node.y2;
    }
    return out;
}

std::optional<LevelJet> LevelFunctionField::jet(double t, double alpha) const {
    const auto* fn = std::get_if<JetFn>(&repr_);
    if (fn == nullptr) {
        return std::nullopt;
    }
    t = checked_time(t);
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha " + std::to_string(alpha) + " outside [0,1]");
    }
    return (*fn)(t, alpha);
}

}  // namespace fuzzcalc
