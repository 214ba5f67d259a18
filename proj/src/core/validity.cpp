#include <cmath>
#include <string>

#include "fuzzcalc/error.hpp"
#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

std::string_view condition_id(EnvelopeCondition c) noexcept {
    switch (c) {
        case EnvelopeCondition::LowerNonDecreasing: return "i";
        case EnvelopeCondition::UpperNonIncreasing: return "ii";
        case EnvelopeCondition::Ordered: return "iv";
    }
    return "?";
}

ValidityReport validate_envelopes(std::span<const double> lower, std::span<const double> upper, double tol) {
    if (lower.size() != upper.size()) {
        throw StructuralError("lower and upper envelopes differ in length");
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!std::isfinite(lower[i]) || !std::isfinite(upper[i])) {
            throw StructuralError("non-finite envelope value at level " + std::to_string(i));
        }
    }
    ValidityReport report;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (i > 0) {
            const double drop = lower[i - 1] - lower[i];
            if (drop > tol) {
                report.violations.push_back({EnvelopeCondition::LowerNonDecreasing, i, drop});
            }
            const double rise = upper[i] - upper[i - 1];
            if (rise > tol) {
                report.violations.push_back({EnvelopeCondition::UpperNonIncreasing, i, rise});
            }
        }
        const double cross = lower[i] - upper[i];
        if (cross > tol) {
            report.violations.push_back({EnvelopeCondition::Ordered, i, cross});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

ValidityReport validate_fuzzy(const FuzzyNumber& f, double tol) {
    return validate_envelopes(f.lower(), f.upper(), tol);
}

}  // namespace fuzzcalc
