#pragma once

// Fuzzy numbers represented by their alpha-level envelopes on a shared,
// finite alpha grid, with extension-principle arithmetic on the level sets.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace fuzzcalc {

inline constexpr std::size_t kDefaultAlphaIntervals = 100;
inline constexpr double kDefaultTolerance = 1e-9;

// Strictly increasing alpha levels, first 0 and last 1.
class AlphaGrid {
public:
    // levels i/n for i = 0..n
    static AlphaGrid uniform(std::size_t intervals = kDefaultAlphaIntervals);

    // Throws StructuralError unless the levels start at 0, end at 1 and
    // strictly increase.
    explicit AlphaGrid(std::vector<double> levels);

    std::span<const double> levels() const noexcept { return levels_; }
    std::size_t size() const noexcept { return levels_.size(); }
    std::size_t intervals() const noexcept { return levels_.size() - 1; }
    double operator[](std::size_t i) const { return levels_[i]; }

    // Smallest distance between adjacent levels.
    double min_spacing() const noexcept;

    // Index i of the segment [levels[i], levels[i+1]] holding alpha; the last
    // segment is returned for alpha == 1. Throws DomainError outside [0,1].
    std::size_t segment(double alpha) const;

    friend bool operator==(const AlphaGrid&, const AlphaGrid&) = default;

private:
    std::vector<double> levels_;
};

// Closed interval [lo, hi]; a level set of a fuzzy number when lo <= hi.
struct LevelInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool valid() const noexcept { return lo <= hi; }
    double width() const noexcept { return hi - lo; }
    bool contains(const LevelInterval& inner, double tol = 0.0) const noexcept {
        return inner.lo >= lo - tol && inner.hi <= hi + tol;
    }

    friend bool operator==(const LevelInterval&, const LevelInterval&) = default;
};

LevelInterval operator+(const LevelInterval& a, const LevelInterval& b);
LevelInterval operator*(const LevelInterval& a, const LevelInterval& b);
LevelInterval operator*(double lambda, const LevelInterval& a);

// Derivatives of the lower/upper envelopes with respect to alpha.
struct EnvelopeSlopes {
    double lower = 0.0;
    double upper = 0.0;
};

// A fuzzy number a given by a_alpha = [lower(alpha), upper(alpha)] sampled at
// each grid level. Construction only checks shape; validate_fuzzy checks the
// envelope conditions.
class FuzzyNumber {
public:
    FuzzyNumber(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper);

    static FuzzyNumber crisp(double value, AlphaGrid grid = AlphaGrid::uniform());

    const AlphaGrid& grid() const noexcept { return grid_; }
    std::span<const double> lower() const noexcept { return lower_; }
    std::span<const double> upper() const noexcept { return upper_; }
    std::size_t size() const noexcept { return lower_.size(); }

    LevelInterval cut(std::size_t level) const { return {lower_.at(level), upper_.at(level)}; }

    // Level set at an arbitrary alpha, interpolating the envelopes linearly
    // between grid levels.
    LevelInterval cut_at(double alpha) const;

    // Slopes of the interpolated envelopes at alpha. At a grid level the
    // segment to the right is used, except at alpha == 1.
    EnvelopeSlopes slopes_at(double alpha) const;

    // Zero-width at every level with a single value.
    bool is_crisp() const noexcept;

    friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

private:
    AlphaGrid grid_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

// (a^L, a, a^U) with a^L <= a <= a^U.
struct TriangularParams {
    double left = 0.0;
    double peak = 0.0;
    double right = 0.0;

    bool valid() const noexcept { return left <= peak && peak <= right; }

    friend bool operator==(const TriangularParams&, const TriangularParams&) = default;
};

// Membership grade of r; degenerate flanks collapse onto the peak.
double triangular_membership(const TriangularParams& p, double r);

// [(1-alpha) a^L + alpha a, (1-alpha) a^U + alpha a]; DomainError outside [0,1].
LevelInterval triangular_alpha_cut(const TriangularParams& p, double alpha);

// Throws StructuralError if p violates a^L <= a <= a^U.
FuzzyNumber from_triangular(const TriangularParams& p, const AlphaGrid& grid = AlphaGrid::uniform());

// Envelope conditions checked by validate_fuzzy.
enum class EnvelopeCondition {
    LowerNonDecreasing,  // (i)
    UpperNonIncreasing,  // (ii)
    Ordered,             // (iv)
};

std::string_view condition_id(EnvelopeCondition c) noexcept;

struct Violation {
    EnvelopeCondition condition;
    std::size_t level;  // alpha index at which the condition fails
    double magnitude;   // amount by which it fails, > 0

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidityReport {
    bool valid = true;
    std::vector<Violation> violations;
};

// Checks the envelope characterization of a fuzzy number on the sampled
// levels: lower non-decreasing, upper non-increasing, lower <= upper, each
// within tol. One-sided continuity holds trivially for finite samples.
ValidityReport validate_fuzzy(const FuzzyNumber& f, double tol = kDefaultTolerance);

// Same checks on raw envelopes; StructuralError on mismatched lengths.
ValidityReport validate_envelopes(std::span<const double> lower, std::span<const double> upper, double tol);

FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b);
FuzzyNumber multiply(const FuzzyNumber& a, const FuzzyNumber& b);
FuzzyNumber scalar_mul(double lambda, const FuzzyNumber& a);

// Independent oracle for multiply: per level, min/max of r*s over a uniform
// samples x samples lattice of r in a_alpha and s in b_alpha.
LevelInterval extension_brute_force_multiply(const LevelInterval& a, const LevelInterval& b, std::size_t samples);
FuzzyNumber extension_brute_force_multiply(const FuzzyNumber& a, const FuzzyNumber& b, std::size_t samples);

}  // namespace fuzzcalc
