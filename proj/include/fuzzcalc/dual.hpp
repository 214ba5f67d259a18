#pragma once

#include <cmath>

namespace fuzzcalc {

// Forward-mode dual number carrying a value and its derivative with respect
// to a single parameter (alpha, throughout this library).
struct Dual {
    double value = 0.0;
    double slope = 0.0;

    constexpr Dual() = default;
    constexpr Dual(double v) : value(v) {}  // NOLINT: implicit lift of constants
    constexpr Dual(double v, double s) : value(v), slope(s) {}
};

constexpr Dual operator-(Dual a) { return {-a.value, -a.slope}; }
constexpr Dual operator+(Dual a, Dual b) { return {a.value + b.value, a.slope + b.slope}; }
constexpr Dual operator-(Dual a, Dual b) { return {a.value - b.value, a.slope - b.slope}; }
constexpr Dual operator*(Dual a, Dual b) {
    return {a.value * b.value, a.slope * b.value + a.value * b.slope};
}
constexpr Dual operator/(Dual a, Dual b) {
    return {a.value / b.value, (a.slope * b.value - a.value * b.slope) / (b.value * b.value)};
}

inline Dual exp(Dual a) {
    const double e = std::exp(a.value);
    return {e, e * a.slope};
}

inline Dual sqrt(Dual a) {
    const double r = std::sqrt(a.value);
    return {r, a.slope / (2.0 * r)};
}

}  // namespace fuzzcalc
