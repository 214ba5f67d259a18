#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "fuzzcalc/dual.hpp"
#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

// Lower/upper level functions (y1, y2) at one (t, alpha).
struct LevelPair {
    double y1 = 0.0;
    double y2 = 0.0;
};

// Level functions and their time derivatives at one (t, alpha), each carried
// as a dual number whose slope is the derivative with respect to alpha.
struct LevelJet {
    Dual y1;
    Dual y2;
    Dual y1_prime;
    Dual y2_prime;
};

enum class FieldKind { ClosedForm, Sampled };

// A fuzzy-valued function of time on [0, T], described by its alpha-level
// functions y1(t, alpha) <= y2(t, alpha).
//
// Closed-form fields evaluate an analytic jet and therefore know their time
// derivatives and alpha partials exactly. Sampled fields hold values on a
// uniform time grid times an alpha grid; they interpolate with a four-node
// Lagrange cubic in t and linearly in alpha, and have no analytic derivatives.
class LevelFunctionField {
public:
    using JetFn = std::function<LevelJet(double t, double alpha)>;

    static LevelFunctionField closed_form(double horizon, JetFn jet);

    // samples is row-major: samples[step * grid.size() + level], with time
    // nodes t_j = horizon * j / steps for j = 0..steps.
    static LevelFunctionField sampled(double horizon, std::size_t steps, AlphaGrid grid,
                                      std::vector<LevelPair> samples);

    FieldKind kind() const noexcept;
    double horizon() const noexcept { return horizon_; }

    // Throws DomainError for t outside [0, T] or alpha outside [0, 1].
    LevelPair value(double t, double alpha) const;

    // Analytic jet; empty for sampled fields.
    std::optional<LevelJet> jet(double t, double alpha) const;

    // Time node spacing of a sampled field, empty for closed forms.
    std::optional<double> time_spacing() const noexcept;

    // Clamps t into [0, T] when it lies within rounding distance of the
    // domain; throws DomainError otherwise.
    double checked_time(double t) const;

private:
    struct Sampled {
        std::size_t steps;
        AlphaGrid grid;
        std::vector<LevelPair> samples;

        LevelPair at_node(std::size_t step, double alpha) const;
    };

    LevelFunctionField(double horizon, std::variant<JetFn, std::shared_ptr<const Sampled>> repr)
        : horizon_(horizon), repr_(std::move(repr)) {}

    double horizon_;
    std::variant<JetFn, std::shared_ptr<const Sampled>> repr_;
};

}  // namespace fuzzcalc
