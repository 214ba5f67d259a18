#include <cmath>
#include <string>

#include "fuzzcalc/error.hpp"
#include "fuzzcalc/fivp.hpp"

namespace fuzzcalc {

namespace {

void require_valid(const FuzzyNumber& f, const char* name) {
    const ValidityReport r = validate_fuzzy(f);
    if (!r.valid) {
        const Violation& v = r.violations.front();
        throw StructuralError(std::string(name) + " is not a fuzzy number: condition (" +
                              std::string(condition_id(v.condition)) + ") fails at level " +
                              std::to_string(v.level));
    }
}

}  // namespace

FivpModel::FivpModel(FuzzyNumber k, FuzzyNumber c, double horizon, double time_step)
    : k_(std::move(k)), c_(std::move(c)), horizon_(horizon), time_step_(time_step), steps_(0) {
    if (!(k_.grid() == c_.grid())) {
        throw GridMismatchError("k and c must share an alpha grid");
    }
    if (!(horizon_ > 0.0) || !std::isfinite(horizon_)) {
        throw DomainError("T must be positive and finite");
    }
    if (!(time_step_ > 0.0) || !(time_step_ <= horizon_)) {
        throw DomainError("t_step must satisfy 0 < t_step <= T");
    }
    require_valid(k_, "k");
    require_valid(c_, "c");
    // Absorb rounding in T / t_step so that T = 2, t_step = 1e-3 gives 2000 steps.
    const double ratio = horizon_ / time_step_;
    const double nearest = std::round(ratio);
    steps_ = static_cast<std::size_t>(std::abs(ratio - nearest) <= 1e-9 * nearest ? nearest : std::ceil(ratio));
}

std::string_view case_name(CaseTag tag) noexcept {
    switch (tag) {
        case CaseTag::Growth: return "growth";
        case CaseTag::Decay: return "decay";
        case CaseTag::Mixed: return "mixed";
    }
    return "?";
}

std::string_view variant_name(DecayVariant v) noexcept {
    return v == DecayVariant::PaperVerbatim ? "paper" : "rederived";
}

CaseTag classify_case(const FuzzyNumber& k, double eps) {
    bool growth = true;
    bool decay = true;
    for (std::size_t i = 0; i < k.size(); ++i) {
        growth = growth && k.lower()[i] >= 0.0;
        decay = decay && k.upper()[i] <= -eps;
    }
    if (growth) {
        return CaseTag::Growth;
    }
    return decay ? CaseTag::Decay : CaseTag::Mixed;
}

}  // namespace fuzzcalc
