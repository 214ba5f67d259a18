#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzcalc/cli.hpp"

namespace fuzzcalc::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Closed-form solutions the user asked about, by analysis name.
std::vector<std::string> requested_solutions(CaseTag tag, VariantSelection v) {
    switch (tag) {
        case CaseTag::Growth: return {"growth"};
        case CaseTag::Decay:
            switch (v) {
                case VariantSelection::Paper: return {"paper"};
                case VariantSelection::Rederived: return {"rederived"};
                case VariantSelection::Both: return {"paper", "rederived"};
            }
            break;
        case CaseTag::Mixed: break;
    }
    return {};
}

std::optional<double> earliest(const std::vector<std::optional<double>>& per_level) {
    std::optional<double> best;
    for (const auto& t : per_level) {
        if (t && (!best || *t < *best)) {
            best = t;
        }
    }
    return best;
}

ordered_json witness_json(const Witness& w) {
    return ordered_json{{"t", w.t}, {"alpha", {w.alpha_lo, w.alpha_hi}}, {"magnitude", w.magnitude}};
}

ordered_json residual_json(const ResidualReport& r) {
    return ordered_json{
        {"max_abs_residual_1", r.max_abs_residual_1},
        {"at_1", {r.t_at_max_1, r.alpha_at_max_1}},
        {"max_abs_residual_2", r.max_abs_residual_2},
        {"at_2", {r.t_at_max_2, r.alpha_at_max_2}},
        {"points", r.points},
    };
}

ordered_json solution_json(const SolutionAnalysis& s) {
    ordered_json j;
    j["differentiable"] = s.verdict.differentiable;
    j["value_valid"] = s.verdict.value_valid;
    j["derivative_valid"] = s.verdict.derivative_valid;
    j["verdict_t_range"] = s.verdict_times.empty() ? ordered_json(nullptr)
                                                   : ordered_json{s.verdict_times.front(), s.verdict_times.back()};
    ordered_json witnesses = ordered_json::object();
    for (const auto c : kAllSeikkalaConditions) {
        if (const auto w = s.verdict.worst(c)) {
            witnesses[std::string(condition_name(c))] = {{"count", s.verdict.witness_count(c)},
                                                         {"worst", witness_json(*w)}};
        }
    }
    j["witnesses"] = std::move(witnesses);
    const auto lost = earliest(s.positivity_lost);
    j["positivity_lost_at"] = lost ? ordered_json(*lost) : ordered_json(nullptr);
    if (s.residual) {
        j["residual"] = residual_json(*s.residual);
    }
    if (s.residual_nonnegative) {
        j["residual_nonnegative"] = residual_json(*s.residual_nonnegative);
    }
    if (s.oracle_deviation) {
        j["oracle_deviation"] = {{"max_abs", s.oracle_deviation->max_abs},
                                 {"max_rel", s.oracle_deviation->max_rel},
                                 {"points", s.oracle_deviation->points}};
    }
    return j;
}

ordered_json issues_json(const AnalysisReport& r) {
    ordered_json out = ordered_json::array();
    for (const auto& i : r.issues) {
        out.push_back({{"label", i.label}, {"message", i.message}, {"numeric", i.numeric}});
    }
    return out;
}

// A numeric failure on something the command needs.
const AnalysisIssue* blocking_issue(const AnalysisReport& r, const std::vector<std::string>& names) {
    for (const auto& i : r.issues) {
        if (!i.numeric) {
            continue;
        }
        if (i.label == "oracle" || std::find(names.begin(), names.end(), i.label) != names.end()) {
            return &i;
        }
    }
    return nullptr;
}

std::filesystem::path suffixed(const std::filesystem::path& p, const std::string& name) {
    std::filesystem::path out = p;
    out.replace_filename(p.stem().string() + "." + name + p.extension().string());
    return out;
}

// Left-justifies to a column width counted in UTF-8 code points.
std::string padded(const std::string& text, std::size_t width) {
    std::size_t shown = 0;
    for (const char ch : text) {
        shown += (static_cast<unsigned char>(ch) & 0xC0) != 0x80 ? 1 : 0;
    }
    return text + std::string(shown < width ? width - shown : 1, ' ');
}

struct Prepared {
    FivpModel model;
    AnalysisReport report;
    std::vector<const SolutionAnalysis*> fields;
};

Prepared prepare(const ModelConfig& config) {
    FivpModel model = to_model(config);
    AnalysisReport report = analyze(model, {config.tolerance, 200});
    return {std::move(model), std::move(report), {}};
}

void select_fields(Prepared& p, const std::vector<std::string>& names) {
    for (const auto& n : names) {
        if (const auto* s = p.report.find(n)) {
            p.fields.push_back(s);
        }
    }
    if (p.fields.empty() && p.report.oracle) {
        p.fields.push_back(&*p.report.oracle);
    }
}

}  // namespace

int cmd_solve(const ModelConfig& config, const std::filesystem::path& out_path,
              std::optional<VariantSelection> variant, std::ostream& out, std::ostream& err) {
    const VariantSelection selection = variant.value_or(config.decay_variant);
    std::optional<Prepared> prep;
    try {
        prep.emplace(prepare(config));
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }
    const auto names = requested_solutions(prep->report.case_tag, selection);
    select_fields(*prep, names);
    const AnalysisReport& r = prep->report;

    ordered_json summary;
    summary["case"] = std::string(case_name(r.case_tag));
    summary["model"] = {{"T", prep->model.horizon()},
                        {"t_step", prep->model.time_step()},
                        {"steps", prep->model.steps()},
                        {"alpha_n", prep->model.grid().intervals()},
                        {"tolerance", config.tolerance},
                        {"decay_variant", std::string(variant_selection_name(selection))}};
    ordered_json variants = ordered_json::object();
    for (const auto& n : names) {
        if (const auto* s = r.find(n)) {
            variants[n] = solution_json(*s);
        }
    }
    summary["variants"] = std::move(variants);
    summary["oracle"] = r.oracle ? solution_json(*r.oracle) : ordered_json(nullptr);
    summary["issues"] = issues_json(r);

    if (const auto* issue = blocking_issue(r, names)) {
        out << summary.dump(2) << '\n';
        err << "numeric failure (" << issue->label << "): " << issue->message << '\n';
        return kExitNumericFailure;
    }

    ordered_json csv = ordered_json::object();
    try {
        for (const auto* field : prep->fields) {
            const auto path = prep->fields.size() > 1 ? suffixed(out_path, field->name) : out_path;
            const auto rows = trajectory_rows(field->field, r.times, prep->model.grid());
            std::ofstream file(path, std::ios::binary);
            if (!file) {
                err << "cannot write " << path.string() << '\n';
                return kExitConfigError;
            }
            write_csv(file, rows);
            csv[field->name] = path.string();
        }
    } catch (const NumericError& e) {
        out << summary.dump(2) << '\n';
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumericFailure;
    }
    summary["csv"] = std::move(csv);
    out << summary.dump(2) << '\n';
    return kExitSuccess;
}

int cmd_check(const ModelConfig& config, std::ostream& out, std::ostream& err) {
    std::optional<Prepared> prep;
    try {
        prep.emplace(prepare(config));
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }
    const auto names = requested_solutions(prep->report.case_tag, config.decay_variant);
    select_fields(*prep, names);
    if (const auto* issue = blocking_issue(prep->report, names)) {
        err << "numeric failure (" << issue->label << "): " << issue->message << '\n';
        return kExitNumericFailure;
    }
    for (const auto& i : prep->report.issues) {
        err << "note: " << i.label << ": " << i.message << '\n';
    }

    out << "case: " << case_name(prep->report.case_tag) << '\n';
    out << padded("solution", 11) << padded("condition", 11) << padded("status", 8) << padded("failures", 10)
        << "worst witness\n";
    bool all_pass = true;
    for (const auto* s : prep->fields) {
        for (const auto c : kAllSeikkalaConditions) {
            const auto worst = s->verdict.worst(c);
            all_pass = all_pass && !worst;
            out << padded(s->name, 11) << padded(std::string(condition_name(c)), 11)
                << padded(worst ? "FAIL" : "pass", 8) << padded(std::to_string(s->verdict.witness_count(c)), 10);
            if (worst) {
                out << "t=" << format_double(worst->t) << " alpha=[" << format_double(worst->alpha_lo) << ","
                    << format_double(worst->alpha_hi) << "] magnitude=" << format_double(worst->magnitude);
            } else {
                out << "-";
            }
            out << '\n';
        }
        if (const auto lost = earliest(s->positivity_lost)) {
            out << "warning: " << s->name << ": y leaves the non-negative region at t = " << format_double(*lost);
            if (!s->verdict_times.empty() && s->name != "oracle") {
                out << "; verdict covers t in [0, " << format_double(s->verdict_times.back()) << "]";
            }
            out << '\n';
        }
    }
    out << (all_pass ? "result: all conditions pass\n" : "result: some conditions fail\n");
    return all_pass ? kExitSuccess : kExitVerdictFailure;
}

int cmd_reproduce_paper(std::ostream& out, const ReproduceOptions& options) {
    constexpr double kTol = 1e-9;
    constexpr double kAlpha = 0.5;
    constexpr int kLabel = 37;
    const double sign = options.flip_expected_sign ? -1.0 : 1.0;
    const AlphaGrid grid = AlphaGrid::uniform();
    bool ok = true;

    out << std::left << std::setw(kLabel) << "quantity" << std::setw(6) << "t" << std::setw(24) << "computed"
        << std::setw(24) << "expected" << std::setw(12) << "delta"
        << "status\n";
    auto row = [&](const std::string& what, double t, double computed, double expected) {
        const double delta = std::abs(computed - expected);
        const bool pass = delta <= kTol;
        ok = ok && pass;
        out << std::left << std::setw(kLabel) << what << std::setw(6) << format_double(t) << std::setw(24)
            << format_double(computed) << std::setw(24) << format_double(expected) << std::setw(12)
            << std::setprecision(3) << std::scientific << delta << std::defaultfloat << (pass ? "ok" : "MISMATCH")
            << '\n';
    };
    auto verdict_row = [&](const std::string& what, bool computed, bool expected) {
        const bool pass = computed == expected;
        ok = ok && pass;
        out << std::left << std::setw(kLabel) << what << std::setw(6) << "-" << std::setw(24)
            << (computed ? "differentiable" : "not differentiable") << std::setw(24)
            << (expected ? "differentiable" : "not differentiable") << std::setw(12) << "-"
            << (pass ? "ok" : "MISMATCH") << '\n';
    };

    // Decay: k = -1, c = (2, 4, 6).
    const FivpModel decay(FuzzyNumber::crisp(-1.0, grid), from_triangular({2.0, 4.0, 6.0}, grid));
    const LevelFunctionField paper = solve_decay_closed(decay, DecayVariant::PaperVerbatim);
    const std::vector<double> times = {0.5, 1.0, 2.0};
    const SeikkalaReport decay_verdict = seikkala_verdict(paper, times, grid, kTol);
    for (const double t : times) {
        const double e = 2.0 * std::exp(-t);
        const LevelJet j = *paper.jet(t, kAlpha);
        row("decay dy1/dalpha", t, j.y1.slope, sign * e);
        row("decay dy2/dalpha", t, j.y2.slope, sign * -e);
        row("decay d(y1')/dalpha", t, j.y1_prime.slope, sign * -e);
        std::optional<Witness> witness;
        for (const auto& w : decay_verdict.witnesses) {
            if (w.t == t && w.condition == SeikkalaCondition::DerivativeLower) {
                witness = w;
                break;
            }
        }
        if (witness) {
            row("decay witness dalpha-y1' magnitude", t, witness->magnitude, sign * -e);
        } else {
            ok = false;
            out << "decay witness dalpha-y1' missing at t = " << format_double(t) << "   MISMATCH\n";
        }
    }
    verdict_row("decay verdict (verbatim form)", decay_verdict.differentiable, options.flip_expected_sign);

    // Growth: k = (0.5, 1, 1.5), c = (2, 4, 6) on [0, 2].
    const FivpModel growth(from_triangular({0.5, 1.0, 1.5}, grid), from_triangular({2.0, 4.0, 6.0}, grid));
    const LevelFunctionField g = solve_growth_closed(growth);
    const auto gtimes = report_times(growth);
    const SeikkalaReport growth_verdict = seikkala_verdict(g, gtimes, grid, kTol);
    verdict_row("growth verdict", growth_verdict.differentiable, !options.flip_expected_sign);

    out << (ok ? "reproduction: all rows match\n" : "reproduction: MISMATCH\n");
    return ok ? kExitSuccess : kExitVerdictFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"fuzzcalc: fuzzy growth/decay initial-value problems under Seikkala differentiability"};
    app.require_subcommand(1);

    std::string model_path;
    std::string out_path;
    std::string variant;

    auto* solve = app.add_subcommand("solve", "Solve a model and write its trajectory as CSV");
    solve->add_option("--model", model_path, "Model config (JSON)")->required();
    solve->add_option("--out", out_path, "Trajectory CSV path")->required();
    solve->add_option("--variant", variant, "Decay closed form: paper, rederived or both")
        ->check(CLI::IsMember({"paper", "rederived", "both"}));

    auto* check = app.add_subcommand("check", "Check fuzzy-number validity and Seikkala differentiability");
    check->add_option("--model", model_path, "Model config (JSON)")->required();

    auto* reproduce = app.add_subcommand("reproduce-paper", "Reproduce the worked decay and growth examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitConfigError;
    }

    if (reproduce->parsed()) {
        return cmd_reproduce_paper(out);
    }

    ModelConfig config;
    try {
        config = load_model_config(model_path);
    } catch (const ConfigError& e) {
        err << "config error";
        if (!e.field().empty()) {
            err << " in '" << e.field() << "'";
        }
        err << ": " << e.what() << '\n';
        return kExitConfigError;
    }

    if (check->parsed()) {
        return cmd_check(config, out, err);
    }
    return cmd_solve(config, out_path, variant.empty() ? std::nullopt : parse_variant(variant), out, err);
}

}  // namespace fuzzcalc::cli
