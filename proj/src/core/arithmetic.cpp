#include <algorithm>

#include "fuzzcalc/error.hpp"
#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

LevelInterval operator+(const LevelInterval& a, const LevelInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

LevelInterval operator*(const LevelInterval& a, const LevelInterval& b) {
    const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return {*mn, *mx};
}

LevelInterval operator*(double lambda, const LevelInterval& a) {
    if (lambda >= 0.0) {
        return {lambda * a.lo, lambda * a.hi};
    }
    return {lambda * a.hi, lambda * a.lo};
}

namespace {

void require_same_grid(const FuzzyNumber& a, const FuzzyNumber& b) {
    if (!(a.grid() == b.grid())) {
        throw GridMismatchError("operands are discretized on different alpha grids");
    }
}

template <typename LevelOp>
FuzzyNumber levelwise(const AlphaGrid& grid, std::size_t n, LevelOp op) {
    std::vector<double> lower(n);
    std::vector<double> upper(n);
    for (std::size_t i = 0; i < n; ++i) {
        const LevelInterval r = op(i);
        lower[i] = r.lo;
        upper[i] = r.hi;
    }
    return FuzzyNumber(grid, std::move(lower), std::move(upper));
}

}  // namespace

FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b) {
    require_same_grid(a, b);
    return levelwise(a.grid(), a.size(), [&](std::size_t i) { return a.cut(i) + b.cut(i); });
}

FuzzyNumber multiply(const FuzzyNumber& a, const FuzzyNumber& b) {
    require_same_grid(a, b);
    return levelwise(a.grid(), a.size(), [&](std::size_t i) { return a.cut(i) * b.cut(i); });
}

FuzzyNumber scalar_mul(double lambda, const FuzzyNumber& a) {
    return levelwise(a.grid(), a.size(), [&](std::size_t i) { return lambda * a.cut(i); });
}

LevelInterval extension_brute_force_multiply(const LevelInterval& a, const LevelInterval& b, std::size_t samples) {
    if (samples < 2) {
        throw DomainError("brute-force extension needs at least 2 samples per axis");
    }
    auto sample = [samples](const LevelInterval& x, std::size_t j) {
        if (j == 0) {
            return x.lo;
        }
        if (j + 1 == samples) {
            return x.hi;
        }
        const double v = x.lo + (x.hi - x.lo) * static_cast<double>(j) / static_cast<double>(samples - 1);
        return std::clamp(v, x.lo, x.hi);
    };
    LevelInterval out{a.lo * b.lo, a.lo * b.lo};
    for (std::size_t i = 0; i < samples; ++i) {
        const double r = sample(a, i);
        for (std::size_t j = 0; j < samples; ++j) {
            const double v = r * sample(b, j);
            out.lo = std::min(out.lo, v);
            out.hi = std::max(out.hi, v);
        }
    }
    return out;
}

FuzzyNumber extension_brute_force_multiply(const FuzzyNumber& a, const FuzzyNumber& b, std::size_t samples) {
    require_same_grid(a, b);
    return levelwise(a.grid(), a.size(),
                     [&](std::size_t i) { return extension_brute_force_multiply(a.cut(i), b.cut(i), samples); });
}

}  // namespace fuzzcalc
