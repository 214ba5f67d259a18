#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzcalc/error.hpp"
#include "fuzzcalc/fivp.hpp"

namespace fuzzcalc {

std::vector<double> report_times(const FivpModel& m, std::size_t max_points) {
    const std::size_t steps = m.steps();
    const std::size_t stride = std::max<std::size_t>(1, (steps + max_points - 1) / std::max<std::size_t>(1, max_points));
    std::vector<double> times;
    for (std::size_t j = 0; j < steps; j += stride) {
        times.push_back(m.node_time(j));
    }
    times.push_back(m.node_time(steps));
    return times;
}

const SolutionAnalysis* AnalysisReport::find(std::string_view name) const {
    for (const auto& s : closed_forms) {
        if (s.name == name) {
            return &s;
        }
    }
    if (oracle && oracle->name == name) {
        return &*oracle;
    }
    return nullptr;
}

namespace {

struct Sweep {
    std::vector<std::optional<double>> positivity_lost;
    std::vector<double> nonnegative_prefix;  // report times before the first negative value at any level
};

// Walks the report grid once: checks finiteness and records where y leaves
// the non-negative orthant.
Sweep sweep_closed_form(const LevelFunctionField& f, const std::vector<double>& times, const AlphaGrid& grid) {
    Sweep s;
    s.positivity_lost.resize(grid.size());
    bool still_nonnegative = true;
    for (const double t : times) {
        bool all_nonnegative = true;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const LevelPair y = f.value(t, grid[i]);
            const LevelPair dy = time_derivative(f, t, grid[i]);
            if (!std::isfinite(y.y1) || !std::isfinite(y.y2) || !std::isfinite(dy.y1) || !std::isfinite(dy.y2)) {
                throw NumericError("closed form is not finite at t = " + std::to_string(t) +
                                   ", alpha = " + std::to_string(grid[i]));
            }
            if (y.y1 < 0.0 || y.y2 < 0.0) {
                all_nonnegative = false;
                if (!s.positivity_lost[i]) {
                    s.positivity_lost[i] = t;
                }
            }
        }
        still_nonnegative = still_nonnegative && all_nonnegative;
        if (still_nonnegative) {
            s.nonnegative_prefix.push_back(t);
        }
    }
    return s;
}

SolutionAnalysis analyze_closed_form(std::string name, LevelFunctionField field, const FivpModel& m,
                                     const std::vector<double>& times, const AnalysisOptions& options) {
    const AlphaGrid& grid = m.grid();
    Sweep sweep = sweep_closed_form(field, times, grid);
    SolutionAnalysis s{std::move(name), std::move(field), {}, {}, {}, {}, {}, {}};
    s.residual = residual_check(s.field, m, times, grid, ResidualScope::All);
    s.residual_nonnegative = residual_check(s.field, m, times, grid, ResidualScope::NonNegative);
    s.verdict_times = std::move(sweep.nonnegative_prefix);
    s.positivity_lost = std::move(sweep.positivity_lost);
    if (!s.verdict_times.empty()) {
        s.verdict = seikkala_verdict(s.field, s.verdict_times, grid, options.tolerance);
    }
    return s;
}

}  // namespace

AnalysisReport analyze(const FivpModel& m, const AnalysisOptions& options) {
    AnalysisReport report;
    report.case_tag = classify_case(m.k());
    report.times = report_times(m, options.max_report_times);

    auto attempt = [&](const std::string& label, auto&& build) {
        try {
            report.closed_forms.push_back(analyze_closed_form(label, build(), m, report.times, options));
        } catch (const NumericError& e) {
            report.issues.push_back({label, e.what(), true});
        } catch (const Error& e) {
            report.issues.push_back({label, e.what(), false});
        }
    };

    switch (report.case_tag) {
        case CaseTag::Growth:
            attempt("growth", [&] { return solve_growth_closed(m); });
            break;
        case CaseTag::Decay:
            for (const auto v : {DecayVariant::PaperVerbatim, DecayVariant::Rederived}) {
                attempt(std::string(variant_name(v)), [&] { return solve_decay_closed(m, v); });
            }
            break;
        case CaseTag::Mixed:
            break;
    }

    try {
        ParametricSolution sol = integrate_parametric(m);
        SolutionAnalysis o{"oracle", std::move(sol.field), {}, {}, report.times, {}, std::move(sol.positivity_lost), {}};
        o.verdict = seikkala_verdict(o.field, o.verdict_times, m.grid(), options.tolerance);
        report.oracle = std::move(o);
    } catch (const NumericError& e) {
        report.issues.push_back({"oracle", e.what(), true});
    }

    if (report.oracle) {
        for (auto& s : report.closed_forms) {
            s.oracle_deviation = max_deviation(report.oracle->field, s.field, report.times, m.grid(), true);
        }
    }
    return report;
}

}  // namespace fuzzcalc
