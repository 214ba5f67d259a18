#include <cmath>
#include <string>

#include "fuzzcalc/dual.hpp"
#include "fuzzcalc/error.hpp"
#include "fuzzcalc/fivp.hpp"

namespace fuzzcalc {

namespace {

// Envelope value and alpha-slope at alpha as dual numbers.
struct DualCut {
    Dual lo;
    Dual hi;
};

DualCut dual_cut(const FuzzyNumber& f, double alpha) {
    const LevelInterval v = f.cut_at(alpha);
    const EnvelopeSlopes s = f.slopes_at(alpha);
    return {{v.lo, s.lower}, {v.hi, s.upper}};
}

template <typename S>
struct Coefficients {
    S p, q, a11, a12, a21, a22;
};

template <typename S>
Coefficients<S> coefficients(S k1, S k2, S c1, S c2, DecayVariant variant) {
    using std::sqrt;
    const S p = sqrt(k1 * k2);
    const S q = sqrt(k1 / k2);
    if (variant == DecayVariant::PaperVerbatim) {
        return {p, q, 0.5 * (c1 + q * c2), 0.5 * (c1 - q * c2), 0.5 * (c1 / q + c2), 0.5 * (c1 / q - c2)};
    }
    const S ratio = k1 / p;  // = -q for k1, k2 < 0
    const S a11 = 0.5 * (c1 + ratio * c2);
    const S a12 = 0.5 * (c1 - ratio * c2);
    return {p, q, a11, a12, a11 / ratio, a12 / ratio};
}

void require_nonnegative_c(const FuzzyNumber& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.lower()[i] < 0.0) {
            throw PreconditionError("closed forms need c1(alpha) >= 0; c1 = " + std::to_string(c.lower()[i]) +
                                    " at alpha = " + std::to_string(c.grid()[i]));
        }
    }
}

void check_decay_inputs(double k1, double k2, double c1, double alpha, double eps) {
    if (std::abs(k2) < eps) {
        throw SingularError("q = sqrt(k1/k2) is singular: |k2| < " + std::to_string(eps) +
                            " at alpha = " + std::to_string(alpha));
    }
    if (!(k1 <= -eps && k2 <= -eps)) {
        throw CaseError("decay coefficients need k1, k2 < 0 at alpha = " + std::to_string(alpha));
    }
    if (c1 < 0.0) {
        throw PreconditionError("decay coefficients need c1 >= 0 at alpha = " + std::to_string(alpha));
    }
}

}  // namespace

DecayCoefficients decay_coefficients(const FuzzyNumber& k, const FuzzyNumber& c, double alpha, DecayVariant variant,
                                     double eps) {
    const LevelInterval kc = k.cut_at(alpha);
    const LevelInterval cc = c.cut_at(alpha);
    check_decay_inputs(kc.lo, kc.hi, cc.lo, alpha, eps);
    const auto co = coefficients<double>(kc.lo, kc.hi, cc.lo, cc.hi, variant);
    return {co.p, co.q, co.a11, co.a12, co.a21, co.a22};
}

LevelFunctionField solve_growth_closed(const FivpModel& m) {
    if (classify_case(m.k()) != CaseTag::Growth) {
        throw CaseError("growth closed form needs k1(alpha) >= 0 at every level");
    }
    require_nonnegative_c(m.c());
    return LevelFunctionField::closed_form(m.horizon(), [k = m.k(), c = m.c()](double t, double alpha) {
        const DualCut kd = dual_cut(k, alpha);
        const DualCut cd = dual_cut(c, alpha);
        const Dual e1 = exp(kd.lo * t);
        const Dual e2 = exp(kd.hi * t);
        return LevelJet{cd.lo * e1, cd.hi * e2, cd.lo * kd.lo * e1, cd.hi * kd.hi * e2};
    });
}

LevelFunctionField solve_decay_closed(const FivpModel& m, DecayVariant variant) {
    if (classify_case(m.k()) != CaseTag::Decay) {
        throw CaseError("decay closed form needs k2(alpha) <= -eps at every level");
    }
    require_nonnegative_c(m.c());
    for (std::size_t i = 0; i < m.grid().size(); ++i) {
        const auto co = decay_coefficients(m.k(), m.c(), m.grid()[i], variant);
        if (!std::isfinite(co.a11) || !std::isfinite(co.a12) || !std::isfinite(co.a21) || !std::isfinite(co.a22)) {
            throw SingularError("non-finite decay coefficients at alpha = " + std::to_string(m.grid()[i]));
        }
    }
    return LevelFunctionField::closed_form(
        m.horizon(), [k = m.k(), c = m.c(), variant](double t, double alpha) {
            const DualCut kd = dual_cut(k, alpha);
            const DualCut cd = dual_cut(c, alpha);
            const auto co = coefficients<Dual>(kd.lo, kd.hi, cd.lo, cd.hi, variant);
            const Dual ep = exp(co.p * t);
            const Dual em = exp(-co.p * t);
            return LevelJet{
                co.a11 * ep + co.a12 * em,
                co.a21 * ep - co.a22 * em,
                co.p * co.a11 * ep - co.p * co.a12 * em,
                co.p * co.a21 * ep + co.p * co.a22 * em,
            };
        });
}

}  // namespace fuzzcalc
