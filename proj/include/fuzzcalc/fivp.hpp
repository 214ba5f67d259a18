#pragma once

// The fuzzy initial-value problem dy/dt = k * y, y(0) = c, with fuzzy k and c.
//
// On each alpha level the problem becomes the crisp system
//
//   y1' = min{k1 y1, k1 y2, k2 y1, k2 y2}
//   y2' = max{k1 y1, k1 y2, k2 y1, k2 y2}
//   y1(0) = c1(alpha), y2(0) = c2(alpha)
//
// which is solved in closed form when k has a single sign and numerically
// (RK4) in every case.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzcalc/fuzzy_number.hpp"
#include "fuzzcalc/level_field.hpp"
#include "fuzzcalc/seikkala.hpp"

namespace fuzzcalc {

inline constexpr double kDefaultHorizon = 2.0;
inline constexpr double kDefaultTimeStep = 1e-3;
// Minimum |k2| for the decay closed form, keeping q = sqrt(k1/k2) regular.
inline constexpr double kDecayGuard = 1e-12;

class FivpModel {
public:
    // Throws GridMismatchError if k and c use different alpha grids,
    // DomainError unless 0 < time_step <= horizon, StructuralError if k or c
    // is not a valid fuzzy number.
    FivpModel(FuzzyNumber k, FuzzyNumber c, double horizon = kDefaultHorizon, double time_step = kDefaultTimeStep);

    const FuzzyNumber& k() const noexcept { return k_; }
    const FuzzyNumber& c() const noexcept { return c_; }
    const AlphaGrid& grid() const noexcept { return k_.grid(); }
    double horizon() const noexcept { return horizon_; }
    double time_step() const noexcept { return time_step_; }

    // Integration uses ceil(T / time_step) equal steps, so the effective step
    // is T / steps() <= time_step and the last node lands exactly on T.
    std::size_t steps() const noexcept { return steps_; }
    double node_time(std::size_t j) const noexcept {
        return horizon_ * static_cast<double>(j) / static_cast<double>(steps_);
    }

private:
    FuzzyNumber k_;
    FuzzyNumber c_;
    double horizon_;
    double time_step_;
    std::size_t steps_;
};

enum class CaseTag { Growth, Decay, Mixed };

std::string_view case_name(CaseTag tag) noexcept;

// Growth if k1 >= 0 at every level, Decay if k2 <= -eps at every level,
// Mixed otherwise.
CaseTag classify_case(const FuzzyNumber& k, double eps = kDecayGuard);

// PaperVerbatim coefficients:
//   A11 = (c1 + q c2)/2, A12 = (c1 - q c2)/2, A21 = (c1/q + c2)/2, A22 = (c1/q - c2)/2.
// Rederived uses coefficients obtained by substituting the exponential
// ansatz into y1' = k1 y2, y2' = k2 y1 and matching y(0) = c:
//   A11 = (c1 + (k1/p) c2)/2, A12 = (c1 - (k1/p) c2)/2, A21 = (p/k1) A11, A22 = (p/k1) A12.
// Both share the form
//   y1 = A11 e^{pt} + A12 e^{-pt},  y2 = A21 e^{pt} - A22 e^{-pt}.
enum class DecayVariant { PaperVerbatim, Rederived };

std::string_view variant_name(DecayVariant v) noexcept;  // "paper" / "rederived"

struct DecayCoefficients {
    double p = 0.0;  // sqrt(k1 k2)
    double q = 0.0;  // sqrt(k1 / k2)
    double a11 = 0.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 0.0;
};

// Coefficients at one alpha (envelopes interpolated between grid levels).
// Throws SingularError when |k2(alpha)| < eps, CaseError when k1 or k2 is
// not <= -eps, PreconditionError when c1(alpha) < 0.
DecayCoefficients decay_coefficients(const FuzzyNumber& k, const FuzzyNumber& c, double alpha, DecayVariant variant,
                                     double eps = kDecayGuard);

// y1 = c1 e^{k1 t}, y2 = c2 e^{k2 t}. CaseError unless Growth,
// PreconditionError if c1 < 0 at some level.
LevelFunctionField solve_growth_closed(const FivpModel& m);

// CaseError unless Decay, PreconditionError if c1 < 0 at some level.
LevelFunctionField solve_decay_closed(const FivpModel& m, DecayVariant variant);

struct ParametricSolution {
    LevelFunctionField field;
    // Per alpha level, the first time node at which y1 or y2 is negative.
    std::vector<std::optional<double>> positivity_lost;
};

// Classic RK4 on each alpha level, re-evaluating the min/max right-hand side
// at every stage. Throws DivergenceError on a non-finite state.
ParametricSolution integrate_parametric(const FivpModel& m);

enum class ResidualScope {
    All,
    NonNegative,  // only (t, alpha) with y1, y2 >= 0
};

struct ResidualReport {
    double max_abs_residual_1 = 0.0;  // |y1' - min{...}|
    double max_abs_residual_2 = 0.0;  // |y2' - max{...}|
    double t_at_max_1 = 0.0;
    double alpha_at_max_1 = 0.0;
    double t_at_max_2 = 0.0;
    double alpha_at_max_2 = 0.0;
    std::size_t points = 0;
};

// Defect of f against the parametric min/max system of m on tgrid x grid.
ResidualReport residual_check(const LevelFunctionField& f, const FivpModel& m, std::span<const double> tgrid,
                              const AlphaGrid& grid, ResidualScope scope = ResidualScope::All);

struct Deviation {
    double max_abs = 0.0;
    double max_rel = 0.0;  // relative to |reference|, over points where the reference is nonzero
    std::size_t points = 0;
};

// Pointwise deviation of candidate from reference over tgrid x grid. With
// positive_only, points where the reference has y1 <= 0 or y2 <= 0 are
// skipped.
Deviation max_deviation(const LevelFunctionField& candidate, const LevelFunctionField& reference,
                        std::span<const double> tgrid, const AlphaGrid& grid, bool positive_only);

// Integration nodes thinned to at most max_points + 1 evenly strided times,
// always including 0 and T.
std::vector<double> report_times(const FivpModel& m, std::size_t max_points = 200);

struct SolutionAnalysis {
    std::string name;  // "growth", "paper", "rederived" or "oracle"
    LevelFunctionField field;
    std::optional<ResidualReport> residual;              // closed forms only
    std::optional<ResidualReport> residual_nonnegative;  // closed forms only
    // Closed forms are judged on the report times preceding the first loss
    // of positivity; the oracle on all report times.
    std::vector<double> verdict_times;
    SeikkalaReport verdict;
    std::vector<std::optional<double>> positivity_lost;
    std::optional<Deviation> oracle_deviation;  // closed forms, positive region
};

struct AnalysisIssue {
    std::string label;
    std::string message;
    bool numeric = false;  // divergence, singular q or non-finite values
};

struct AnalysisReport {
    CaseTag case_tag = CaseTag::Mixed;
    std::vector<double> times;
    std::vector<SolutionAnalysis> closed_forms;
    std::optional<SolutionAnalysis> oracle;
    std::vector<AnalysisIssue> issues;

    const SolutionAnalysis* find(std::string_view name) const;
};

struct AnalysisOptions {
    double tolerance = kDefaultTolerance;
    std::size_t max_report_times = 200;
};

// Classifies the model, builds every applicable closed form (both decay
// variants for Decay), integrates the parametric system, and checks each
// field's residual, Seikkala verdict and agreement with the integrator.
// Sub-operation failures are recorded as issues rather than thrown.
AnalysisReport analyze(const FivpModel& m, const AnalysisOptions& options = {});

}  // namespace fuzzcalc
