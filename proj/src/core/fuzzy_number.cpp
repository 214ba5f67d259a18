#include "fuzzcalc/fuzzy_number.hpp"

#include <string>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

FuzzyNumber::FuzzyNumber(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper)
    : grid_(std::move(grid)), lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != grid_.size() || upper_.size() != grid_.size()) {
        throw StructuralError("envelope lengths (" + std::to_string(lower_.size()) + ", " +
                              std::to_string(upper_.size()) + ") do not match alpha grid size " +
                              std::to_string(grid_.size()));
    }
}

FuzzyNumber FuzzyNumber::crisp(double value, AlphaGrid grid) {
    const auto n = grid.size();
    return FuzzyNumber(std::move(grid), std::vector<double>(n, value), std::vector<double>(n, value));
}

LevelInterval FuzzyNumber::cut_at(double alpha) const {
    const std::size_t i = grid_.segment(alpha);
    const double a0 = grid_[i];
    const double a1 = grid_[i + 1];
    if (alpha == a0) {
        return cut(i);
    }
    if (alpha == a1) {
        return cut(i + 1);
    }
    const double w = (alpha - a0) / (a1 - a0);
    return {lower_[i] + w * (lower_[i + 1] - lower_[i]), upper_[i] + w * (upper_[i + 1] - upper_[i])};
}

EnvelopeSlopes FuzzyNumber::slopes_at(double alpha) const {
    const std::size_t i = grid_.segment(alpha);
    const double da = grid_[i + 1] - grid_[i];
    return {(lower_[i + 1] - lower_[i]) / da, (upper_[i + 1] - upper_[i]) / da};
}

bool FuzzyNumber::is_crisp() const noexcept {
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (lower_[i] != lower_.front() || upper_[i] != lower_.front()) {
            return false;
        }
    }
    return true;
}

}  // namespace fuzzcalc
