#pragma once

// Seikkala differentiability of fuzzy-valued functions of time.
//
// y is differentiable at t when [y1'(t, alpha), y2'(t, alpha)] are the level
// sets of a fuzzy number. The checks here are the sufficient conditions:
// y1' non-decreasing in alpha, y2' non-increasing in alpha, y1' <= y2',
// together with the same envelope conditions on the values themselves.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzcalc/fuzzy_number.hpp"
#include "fuzzcalc/level_field.hpp"

namespace fuzzcalc {

// (d y1/d alpha, d y2/d alpha) by finite differences of step h: central in
// the interior, second-order one-sided where alpha -/+ h leaves [0, 1].
LevelPair partial_alpha(const LevelFunctionField& f, double t, double alpha, double h);

// Exact alpha partials from a closed-form jet; empty for sampled fields.
std::optional<LevelPair> analytic_partial_alpha(const LevelFunctionField& f, double t, double alpha);

// (y1', y2') in t. Analytic for closed forms; for sampled fields a central
// difference on the time nodes, one-sided second order at t = 0 and t = T.
LevelPair time_derivative(const LevelFunctionField& f, double t, double alpha);

// Samples the level functions over the alpha grid at fixed t and checks that
// they are the level sets of a fuzzy number.
ValidityReport check_level_validity(const LevelFunctionField& f, double t, const AlphaGrid& grid,
                                    double tol = kDefaultTolerance);

enum class SeikkalaCondition {
    ValueLower,       // y1 non-decreasing in alpha
    ValueUpper,       // y2 non-increasing in alpha
    ValueOrder,       // y1 <= y2
    DerivativeLower,  // y1' non-decreasing in alpha
    DerivativeUpper,  // y2' non-increasing in alpha
    DerivativeOrder,  // y1' <= y2'
};

inline constexpr std::array<SeikkalaCondition, 6> kAllSeikkalaConditions = {
    SeikkalaCondition::ValueLower,      SeikkalaCondition::ValueUpper,      SeikkalaCondition::ValueOrder,
    SeikkalaCondition::DerivativeLower, SeikkalaCondition::DerivativeUpper, SeikkalaCondition::DerivativeOrder,
};

// "dα-y1", "dα-y2", "order", "dα-y1'", "dα-y2'", "order'"
std::string_view condition_name(SeikkalaCondition c) noexcept;

// A failed check. Monotonicity witnesses span two adjacent levels and carry
// the difference quotient across them; order witnesses sit on one level
// (alpha_lo == alpha_hi) and carry y2 - y1 (resp. y2' - y1'), which is
// negative.
struct Witness {
    double t = 0.0;
    double alpha_lo = 0.0;
    double alpha_hi = 0.0;
    SeikkalaCondition condition = SeikkalaCondition::ValueLower;
    double magnitude = 0.0;
};

struct SeikkalaReport {
    bool value_valid = true;
    bool derivative_valid = true;
    bool differentiable = true;
    std::vector<Witness> witnesses;
    // Adjacent-level pairs whose monotone envelope is flat within tol, per
    // condition index; such pairs pass the non-strict check but not a
    // strict one.
    std::array<std::size_t, 6> flat_segments{};

    std::size_t witness_count(SeikkalaCondition c) const noexcept;
    // Witness with the largest |magnitude| for the condition.
    std::optional<Witness> worst(SeikkalaCondition c) const;
};

// Every failing (t, alpha) is reported. Witnesses are ordered by t; within
// one t the value checks precede the derivative checks, each in alpha order.
// Throws DomainError if tgrid is empty.
SeikkalaReport seikkala_verdict(const LevelFunctionField& f, std::span<const double> tgrid, const AlphaGrid& grid,
                                double tol = kDefaultTolerance);

}  // namespace fuzzcalc
