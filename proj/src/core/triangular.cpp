#include <cmath>
#include <string>

#include "fuzzcalc/error.hpp"
#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

double triangular_membership(const TriangularParams& p, double r) {
    if (r < p.left || r > p.right) {
        return 0.0;
    }
    if (r == p.peak) {
        return 1.0;
    }
    if (r < p.peak) {
        return (r - p.left) / (p.peak - p.left);
    }
    return (p.right - r) / (p.right - p.peak);
}

LevelInterval triangular_alpha_cut(const TriangularParams& p, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha " + std::to_string(alpha) + " outside [0,1]");
    }
    return {std::lerp(p.left, p.peak, alpha), std::lerp(p.right, p.peak, alpha)};
}

FuzzyNumber from_triangular(const TriangularParams& p, const AlphaGrid& grid) {
    if (!p.valid()) {
        throw StructuralError("triangular order a^L <= a <= a^U violated");
    }
    std::vector<double> lower(grid.size());
    std::vector<double> upper(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const LevelInterval cut = triangular_alpha_cut(p, grid[i]);
        lower[i] = cut.lo;
        upper[i] = cut.hi;
    }
    return FuzzyNumber(grid, std::move(lower), std::move(upper));
}

}  // namespace fuzzcalc
