// One PASS/FAIL line per acceptance criterion; exit status is nonzero when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzcalc/cli.hpp"
#include "fuzzcalc/fivp.hpp"
#include "fuzzcalc/seikkala.hpp"

using namespace fuzzcalc;

namespace {

const std::vector<double> kTimes = {0.5, 1.0, 2.0};

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
    std::printf("AC%d %s: %s (%s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
    if (!o.pass) {
        ++failures;
    }
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::vector<double> all_nodes(const FivpModel& m) {
    std::vector<double> t(m.steps() + 1);
    for (std::size_t j = 0; j <= m.steps(); ++j) {
        t[j] = m.node_time(j);
    }
    return t;
}

FivpModel decay_example(double step = kDefaultTimeStep) {
    const AlphaGrid g = AlphaGrid::uniform();
    return FivpModel(FuzzyNumber::crisp(-1.0, g), from_triangular({2.0, 4.0, 6.0}, g), kDefaultHorizon, step);
}

FivpModel growth_example(double step = kDefaultTimeStep) {
    const AlphaGrid g = AlphaGrid::uniform();
    return FivpModel(from_triangular({0.5, 1.0, 1.5}, g), from_triangular({2.0, 4.0, 6.0}, g), kDefaultHorizon,
                     step);
}

// Alpha partials of the verbatim decay form against +-2e^{-t}.
Outcome partials() {
    const auto start = std::chrono::steady_clock::now();
    const FivpModel m = decay_example();
    const auto f = solve_decay_closed(m, DecayVariant::PaperVerbatim);
    double worst_analytic = 0.0;
    double worst_fd = 0.0;
    for (const double t : kTimes) {
        const double e = 2.0 * std::exp(-t);
        for (const double alpha : m.grid().levels()) {
            const LevelPair a = *analytic_partial_alpha(f, t, alpha);
            const LevelPair d = partial_alpha(f, t, alpha, 0.01);
            worst_analytic = std::max({worst_analytic, std::abs(a.y1 - e), std::abs(a.y2 + e)});
            worst_fd = std::max({worst_fd, std::abs(d.y1 - e), std::abs(d.y2 + e)});
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst_analytic <= 1e-9 && worst_fd <= 1e-6 && seconds < 1.0,
            "analytic err " + sci(worst_analytic) + ", fd err " + sci(worst_fd) + ", " + sci(seconds) + " s"};
}

Outcome verdicts() {
    std::ostringstream sink;
    const int code = cli::cmd_reproduce_paper(sink);

    const FivpModel d = decay_example();
    const SeikkalaReport dv =
        seikkala_verdict(solve_decay_closed(d, DecayVariant::PaperVerbatim), kTimes, d.grid(), kDefaultTolerance);
    double worst = 0.0;
    std::size_t matched = 0;
    for (const auto& w : dv.witnesses) {
        if (w.condition == SeikkalaCondition::DerivativeLower) {
            worst = std::max(worst, std::abs(w.magnitude + 2.0 * std::exp(-w.t)));
            ++matched;
        }
    }
    const FivpModel g = growth_example();
    const SeikkalaReport gv =
        seikkala_verdict(solve_growth_closed(g), report_times(g), g.grid(), kDefaultTolerance);
    const bool pass = code == 0 && !dv.differentiable && matched > 0 && worst <= 1e-9 && gv.differentiable;
    return {pass, "reproduce exit " + std::to_string(code) + ", " + std::to_string(matched) +
                      " dalpha-y1' witnesses, magnitude err " + sci(worst) + ", growth differentiable " +
                      (gv.differentiable ? "yes" : "no")};
}

Outcome growth_oracle() {
    const FivpModel m = growth_example();
    const FivpModel half = growth_example(kDefaultTimeStep / 2.0);
    const auto closed = solve_growth_closed(m);
    const auto nodes = all_nodes(m);
    const Deviation d = max_deviation(integrate_parametric(m).field, closed, nodes, m.grid(), false);
    const Deviation dh = max_deviation(integrate_parametric(half).field, closed, nodes, m.grid(), false);
    const double order = std::log2(d.max_abs / dh.max_abs);
    return {d.max_rel < 1e-6 && order >= 3.5,
            "max rel err " + sci(d.max_rel) + ", observed order " + sci(order) + " from t_step 1e-3 to 5e-4"};
}

Outcome decay_oracle() {
    const FivpModel m = decay_example();
    const Deviation d = max_deviation(integrate_parametric(m).field, solve_decay_closed(m, DecayVariant::Rederived),
                                      all_nodes(m), m.grid(), true);
    const std::vector<double> origin = {0.0};
    const ResidualReport r =
        residual_check(solve_decay_closed(m, DecayVariant::PaperVerbatim), m, origin, m.grid());
    const double residual = std::max(r.max_abs_residual_1, r.max_abs_residual_2);
    const bool at_alpha0 = r.max_abs_residual_1 >= r.max_abs_residual_2 ? r.alpha_at_max_1 == 0.0
                                                                        : r.alpha_at_max_2 == 0.0;
    return {d.points > 0 && d.max_rel < 1e-6 && at_alpha0 && std::abs(residual - 12.0) <= 1e-9,
            "rederived vs RK4 max rel " + sci(d.max_rel) + " over " + std::to_string(d.points) +
                " positive points, verbatim-form max residual " + sci(residual) + (at_alpha0 ? " at alpha 0" : "")};
}

TriangularParams random_triangular(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    double v[3] = {u(rng), u(rng), u(rng)};
    std::sort(std::begin(v), std::end(v));
    return {v[0], v[1], v[2]};
}

LevelInterval signed_interval(std::mt19937_64& rng, int kind) {
    std::uniform_real_distribution<double> mag(0.01, 5.0);
    switch (kind % 3) {
        case 0: return {-mag(rng), mag(rng)};
        case 1: {
            const double a = -mag(rng), b = -mag(rng);
            return {std::min(a, b), std::max(a, b)};
        }
        default: {
            const double a = mag(rng), b = mag(rng);
            return {std::min(a, b), std::max(a, b)};
        }
    }
}

Outcome arithmetic() {
    std::mt19937_64 rng(20261016);
    const AlphaGrid g = AlphaGrid::uniform();
    std::size_t nesting_failures = 0;
    for (int n = 0; n < 1000; ++n) {
        const FuzzyNumber f = from_triangular(random_triangular(rng), g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                nesting_failures += f.cut(i).contains(f.cut(j), kDefaultTolerance) ? 0 : 1;
            }
        }
    }
    std::size_t oracle_mismatches = 0;
    for (int n = 0; n < 200; ++n) {
        // Every pair has at least one zero-straddling interval.
        const LevelInterval a = signed_interval(rng, 0);
        const LevelInterval b = signed_interval(rng, n);
        if (!(a * b == extension_brute_force_multiply(a, b, 101))) {
            ++oracle_mismatches;
        }
    }
    std::size_t closure_failures = 0;
    std::uniform_real_distribution<double> lambda(-5.0, 5.0);
    for (int n = 0; n < 200; ++n) {
        const FuzzyNumber a = from_triangular(random_triangular(rng), g);
        const FuzzyNumber b = from_triangular(random_triangular(rng), g);
        for (const FuzzyNumber& r : {add(a, b), multiply(a, b), scalar_mul(lambda(rng), a),
                                     extension_brute_force_multiply(a, b, 11)}) {
            closure_failures += validate_fuzzy(r).valid ? 0 : 1;
        }
    }
    return {nesting_failures == 0 && oracle_mismatches == 0 && closure_failures == 0,
            std::to_string(nesting_failures) + " nesting failures, " + std::to_string(oracle_mismatches) +
                " oracle mismatches, " + std::to_string(closure_failures) + " closure failures"};
}

Outcome crisp_embedding() {
    const AlphaGrid g = AlphaGrid::uniform();
    const AnalysisReport r = analyze(FivpModel(FuzzyNumber::crisp(-1.0, g), FuzzyNumber::crisp(4.0, g)));
    const SolutionAnalysis* re = r.find("rederived");
    if (re == nullptr || !r.oracle) {
        return {false, "rederived closed form or oracle missing"};
    }
    double worst = 0.0;
    for (const SolutionAnalysis* s : {re, &*r.oracle}) {
        for (const double t : kTimes) {
            const double want = 4.0 * std::exp(-t);
            for (const double alpha : g.levels()) {
                const LevelPair y = s->field.value(t, alpha);
                worst = std::max({worst, std::abs(y.y1 - want), std::abs(y.y2 - want)});
            }
        }
    }
    const bool differentiable = re->verdict.differentiable && r.oracle->verdict.differentiable;
    std::string detail = "rederived and oracle max err " + sci(worst) + ", differentiable " +
                         (differentiable ? "yes" : "no");
    if (const SolutionAnalysis* paper = r.find("paper")) {
        detail += "; verbatim form gives y(1) = " + sci(paper->field.value(1.0, 0.5).y1);
    }
    return {worst <= 1e-9 && differentiable, detail};
}

}  // namespace

int main() {
    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"decay alpha partials", partials},
        {"worked-example verdicts", verdicts},
        {"growth oracle equivalence", growth_oracle},
        {"decay oracle equivalence", decay_oracle},
        {"arithmetic properties", arithmetic},
        {"crisp embedding", crisp_embedding},
    };
    int id = 0;
    for (const auto& [title, check] : criteria) {
        ++id;
        try {
            report(id, title, check());
        } catch (const std::exception& e) {
            report(id, title, {false, std::string("threw: ") + e.what()});
        }
    }
    return failures == 0 ? 0 : 1;
}
