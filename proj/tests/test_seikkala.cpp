#include <gtest/gtest.h>

#include <cmath>

#include "fuzzcalc/error.hpp"
#include "fuzzcalc/fivp.hpp"
#include "fuzzcalc/seikkala.hpp"

namespace fuzzcalc {
namespace {

const AlphaGrid kGrid = AlphaGrid::uniform(100);

FivpModel growth_model(const AlphaGrid& g = kGrid) {
    return FivpModel(from_triangular({0.5, 1.0, 1.5}, g), from_triangular({2.0, 4.0, 6.0}, g));
}

FivpModel decay_model(const AlphaGrid& g = kGrid) {
    return FivpModel(FuzzyNumber::crisp(-1.0, g), from_triangular({2.0, 4.0, 6.0}, g));
}

LevelFunctionField constant_field(double v) {
    return LevelFunctionField::closed_form(2.0, [v](double, double) {
        return LevelJet{Dual{v}, Dual{v}, Dual{0.0}, Dual{0.0}};
    });
}

// y = 3 e^{-t/2}, crisp at every level.
LevelFunctionField crisp_exponential() {
    return LevelFunctionField::closed_form(2.0, [](double t, double) {
        const double y = 3.0 * std::exp(-0.5 * t);
        return LevelJet{Dual{y}, Dual{y}, Dual{-0.5 * y}, Dual{-0.5 * y}};
    });
}

// Hand-differentiated d/dalpha of c1(alpha) exp(k1(alpha) t) for the growth
// model, with c1 = 2 + 2 alpha and k1 = 0.5 + 0.5 alpha.
double growth_dy1_dalpha(double t, double alpha) {
    const double c1 = 2.0 + 2.0 * alpha;
    const double k1 = 0.5 + 0.5 * alpha;
    return 2.0 * std::exp(k1 * t) + c1 * 0.5 * t * std::exp(k1 * t);
}

TEST(PartialAlpha, VerbatimDecayFieldAtT1) {
    const auto f = solve_decay_closed(decay_model(), DecayVariant::PaperVerbatim);
    const double expected = 2.0 * std::exp(-1.0);
    for (const double alpha : {0.0, 0.3, 0.5, 1.0}) {
        const LevelPair d = partial_alpha(f, 1.0, alpha, 0.01);
        EXPECT_NEAR(d.y1, expected, 1e-9) << alpha;
        EXPECT_NEAR(d.y2, -expected, 1e-9) << alpha;
    }
}

TEST(PartialAlpha, ConstantFieldIsZero) {
    const LevelPair d = partial_alpha(constant_field(7.0), 0.5, 0.5, 0.01);
    EXPECT_EQ(d.y1, 0.0);
    EXPECT_EQ(d.y2, 0.0);
}

TEST(PartialAlpha, GrowthFieldAtAlphaZero) {
    const auto f = solve_growth_closed(growth_model());
    const double expected = 3.0 * std::exp(0.5);
    EXPECT_NEAR(expected, 4.946163812100384, 1e-14);
    EXPECT_NEAR(analytic_partial_alpha(f, 1.0, 0.0)->y1, expected, 1e-12);
    EXPECT_NEAR(partial_alpha(f, 1.0, 0.0, 1e-3).y1, expected, 1e-5);
}

TEST(PartialAlpha, AnalyticMatchesHandDerivative) {
    const auto f = solve_growth_closed(growth_model());
    for (const double t : {0.0, 0.7, 2.0}) {
        for (const double alpha : {0.0, 0.25, 0.61, 1.0}) {
            EXPECT_NEAR(analytic_partial_alpha(f, t, alpha)->y1, growth_dy1_dalpha(t, alpha), 1e-12);
        }
    }
}

TEST(PartialAlpha, CentralDifferenceConvergesQuadratically) {
    const auto f = solve_growth_closed(growth_model());
    const double exact = growth_dy1_dalpha(2.0, 0.5);
    double prev = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double h = 0.04 / std::pow(2.0, i);
        const double err = std::abs(partial_alpha(f, 2.0, 0.5, h).y1 - exact);
        if (i > 0) {
            const double rate = std::log2(prev / err);
            EXPECT_GT(rate, 1.9) << "h = " << h;
            EXPECT_LT(rate, 2.1) << "h = " << h;
        }
        prev = err;
    }
}

TEST(PartialAlpha, Errors) {
    const auto f = constant_field(1.0);
    EXPECT_THROW(partial_alpha(f, 0.5, 1.2, 0.01), DomainError);
    EXPECT_THROW(partial_alpha(f, 0.5, 0.5, 0.0), DomainError);
    EXPECT_THROW(partial_alpha(f, 0.5, 0.5, 2.0), DomainError);
    EXPECT_THROW(partial_alpha(f, 3.0, 0.5, 0.01), DomainError);
}

TEST(TimeDerivative, ClosedFormExamples) {
    const auto g = solve_growth_closed(growth_model());
    EXPECT_NEAR(time_derivative(g, 0.0, 1.0).y1, 4.0, 1e-15);

    const LevelPair zero = time_derivative(constant_field(2.0), 1.0, 0.3);
    EXPECT_EQ(zero.y1, 0.0);
    EXPECT_EQ(zero.y2, 0.0);

    const auto p = solve_decay_closed(decay_model(), DecayVariant::PaperVerbatim);
    EXPECT_NEAR(time_derivative(p, 0.0, 0.0).y1, 6.0, 1e-14);
    EXPECT_THROW(time_derivative(p, 2.5, 0.0), DomainError);
    EXPECT_THROW(time_derivative(p, -0.1, 0.0), DomainError);
}

TEST(TimeDerivative, SampledFieldUsesFiniteDifferences) {
    // y1 = e^{t}, y2 = 2 e^{t} sampled on 200 steps over [0, 1].
    const AlphaGrid g = AlphaGrid::uniform(1);
    const std::size_t steps = 200;
    std::vector<LevelPair> samples;
    for (std::size_t j = 0; j <= steps; ++j) {
        const double t = static_cast<double>(j) / steps;
        for (std::size_t i = 0; i < g.size(); ++i) {
            samples.push_back({std::exp(t), 2.0 * std::exp(t)});
        }
    }
    const auto f = LevelFunctionField::sampled(1.0, steps, g, std::move(samples));
    EXPECT_EQ(f.kind(), FieldKind::Sampled);
    EXPECT_FALSE(f.jet(0.5, 0.5).has_value());
    for (const double t : {0.0, 0.5, 0.505, 1.0}) {
        EXPECT_NEAR(time_derivative(f, t, 0.0).y1, std::exp(t), 2e-4) << t;
        EXPECT_NEAR(time_derivative(f, t, 1.0).y2, 2.0 * std::exp(t), 4e-4) << t;
    }
    // off-node values come from the cubic interpolant
    EXPECT_NEAR(f.value(0.5025, 0.5).y1, std::exp(0.5025), 1e-10);
    EXPECT_NEAR(f.value(0.0012, 0.0).y1, std::exp(0.0012), 1e-10);
    EXPECT_NEAR(f.value(0.9991, 0.0).y1, std::exp(0.9991), 1e-10);
}

TEST(SampledField, RejectsMismatchedSamples) {
    EXPECT_THROW(LevelFunctionField::sampled(1.0, 2, AlphaGrid::uniform(1), std::vector<LevelPair>(5)),
                 StructuralError);
    EXPECT_THROW(LevelFunctionField::sampled(0.0, 2, AlphaGrid::uniform(1), std::vector<LevelPair>(6)),
                 DomainError);
}

TEST(LevelValidity, Examples) {
    const auto g = solve_growth_closed(growth_model());
    EXPECT_TRUE(check_level_validity(g, 0.0, kGrid).valid);

    const auto p = solve_decay_closed(decay_model(), DecayVariant::PaperVerbatim);
    for (const double t : {0.1, 0.5, 1.0, 2.0}) {
        EXPECT_TRUE(check_level_validity(p, t, kGrid).valid) << t;
    }
    EXPECT_TRUE(check_level_validity(constant_field(3.0), 1.0, kGrid).valid);
    EXPECT_THROW(check_level_validity(p, 5.0, kGrid), DomainError);
}

TEST(LevelValidity, DetectsCrossedLevels) {
    const auto crossed = LevelFunctionField::closed_form(1.0, [](double t, double) {
        return LevelJet{Dual{t}, Dual{0.5}, Dual{1.0}, Dual{0.0}};
    });
    EXPECT_TRUE(check_level_validity(crossed, 0.25, kGrid).valid);
    const ValidityReport r = check_level_validity(crossed, 1.0, kGrid);
    EXPECT_FALSE(r.valid);
    EXPECT_EQ(r.violations.front().condition, EnvelopeCondition::Ordered);
}

TEST(Verdict, GrowthIsDifferentiable) {
    const FivpModel m = growth_model();
    const auto f = solve_growth_closed(m);
    const SeikkalaReport r = seikkala_verdict(f, report_times(m), kGrid);
    EXPECT_TRUE(r.value_valid);
    EXPECT_TRUE(r.derivative_valid);
    EXPECT_TRUE(r.differentiable);
    EXPECT_TRUE(r.witnesses.empty());
}

TEST(Verdict, VerbatimDecayFailsOnDerivativeLower) {
    const auto f = solve_decay_closed(decay_model(), DecayVariant::PaperVerbatim);
    const std::vector<double> times = {0.25, 0.5, 1.0, 2.0};
    const SeikkalaReport r = seikkala_verdict(f, times, kGrid);
    EXPECT_TRUE(r.value_valid);
    EXPECT_FALSE(r.derivative_valid);
    EXPECT_FALSE(r.differentiable);
    ASSERT_EQ(r.witness_count(SeikkalaCondition::DerivativeLower), times.size() * kGrid.intervals());
    for (const auto& w : r.witnesses) {
        if (w.condition == SeikkalaCondition::DerivativeLower) {
            EXPECT_NEAR(w.magnitude, -2.0 * std::exp(-w.t), 1e-9);
            EXPECT_NEAR(w.alpha_hi - w.alpha_lo, 0.01, 1e-15);
        }
    }
    EXPECT_EQ(condition_name(SeikkalaCondition::DerivativeLower), "dα-y1'");
}

TEST(Verdict, WitnessesOrderedByTime) {
    const auto f = solve_decay_closed(decay_model(), DecayVariant::PaperVerbatim);
    const std::vector<double> times = {0.5, 1.0, 1.5};
    const SeikkalaReport r = seikkala_verdict(f, times, kGrid);
    for (std::size_t i = 1; i < r.witnesses.size(); ++i) {
        ASSERT_LE(r.witnesses[i - 1].t, r.witnesses[i].t);
    }
}

TEST(Verdict, CrispExponentialIsDifferentiable) {
    const std::vector<double> times = {0.0, 0.5, 1.0, 2.0};
    const SeikkalaReport r = seikkala_verdict(crisp_exponential(), times, kGrid);
    EXPECT_TRUE(r.differentiable);
    // every adjacent pair is flat: non-strict monotonicity only
    EXPECT_EQ(r.flat_segments[static_cast<std::size_t>(SeikkalaCondition::DerivativeLower)],
              times.size() * kGrid.intervals());
}

TEST(Verdict, InvariantUnderGridRefinement) {
    const std::vector<double> times = {0.0, 0.5, 1.0, 1.5, 2.0};
    for (const auto n : {50u, 200u}) {
        const AlphaGrid g = AlphaGrid::uniform(n);
        EXPECT_TRUE(seikkala_verdict(solve_growth_closed(growth_model(g)), times, g).differentiable);
        const auto paper = solve_decay_closed(decay_model(g), DecayVariant::PaperVerbatim);
        const SeikkalaReport r = seikkala_verdict(paper, times, g);
        EXPECT_FALSE(r.differentiable);
        EXPECT_NEAR(r.worst(SeikkalaCondition::DerivativeLower)->magnitude, -2.0, 1e-9);
    }
}

TEST(Verdict, DifferentiableImpliesOrderedDerivatives) {
    const FivpModel m = growth_model();
    const auto f = solve_growth_closed(m);
    const auto times = report_times(m, 20);
    ASSERT_TRUE(seikkala_verdict(f, times, kGrid).differentiable);
    for (const double t : times) {
        for (const double alpha : kGrid.levels()) {
            const LevelPair d = time_derivative(f, t, alpha);
            EXPECT_LE(d.y1, d.y2 + kDefaultTolerance);
        }
    }
}

TEST(Verdict, EmptyTimeGrid) {
    EXPECT_THROW(seikkala_verdict(constant_field(1.0), std::vector<double>{}, kGrid), DomainError);
}

}  // namespace
}  // namespace fuzzcalc
