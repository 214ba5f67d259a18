#include "fuzzcalc/fuzzy_number.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

AlphaGrid AlphaGrid::uniform(std::size_t intervals) {
    if (intervals == 0) {
        throw StructuralError("alpha grid needs at least one interval");
    }
    std::vector<double> levels(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        levels[i] = static_cast<double>(i) / static_cast<double>(intervals);
    }
    return AlphaGrid(std::move(levels));
}

AlphaGrid::AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 2) {
        throw StructuralError("alpha grid needs at least the levels 0 and 1");
    }
    if (levels_.front() != 0.0 || levels_.back() != 1.0) {
        throw StructuralError("alpha grid must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < levels_.size(); ++i) {
        if (!(levels_[i] > levels_[i - 1])) {
            throw StructuralError("alpha grid must be strictly increasing (index " + std::to_string(i) + ")");
        }
    }
}

double AlphaGrid::min_spacing() const noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < levels_.size(); ++i) {
        best = std::min(best, levels_[i] - levels_[i - 1]);
    }
    return best;
}

std::size_t AlphaGrid::segment(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha " + std::to_string(alpha) + " outside [0,1]");
    }
    auto it = std::upper_bound(levels_.begin(), levels_.end(), alpha);
    auto idx = static_cast<std::size_t>(it - levels_.begin());
    if (idx == 0) {
        return 0;
    }
    return std::min(idx - 1, levels_.size() - 2);
}

}  // namespace fuzzcalc
