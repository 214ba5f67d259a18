#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzcalc/error.hpp"
#include "fuzzcalc/fivp.hpp"

namespace fuzzcalc::cli {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitVerdictFailure = 1,
    kExitConfigError = 2,
    kExitNumericFailure = 3,
};

enum class VariantSelection { Paper, Rederived, Both };

std::optional<VariantSelection> parse_variant(std::string_view name);
std::string_view variant_selection_name(VariantSelection v) noexcept;

// Invalid or unparsable model configuration.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& what) : Error(what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// A crisp real or a triangular (a^L, a, a^U).
using FuzzyInput = std::variant<double, TriangularParams>;

struct ModelConfig {
    FuzzyInput k = 0.0;
    FuzzyInput c = 0.0;
    double horizon = kDefaultHorizon;
    double t_step = kDefaultTimeStep;
    std::size_t alpha_n = kDefaultAlphaIntervals;
    VariantSelection decay_variant = VariantSelection::Paper;
    double tolerance = kDefaultTolerance;
};

// alpha_n used when a config omits it: FUZZCALC_ALPHA_N if set, else 100.
std::size_t default_alpha_n();

// JSON document with keys k, c (required), T, t_step, alpha_n,
// decay_variant, tolerance. Unknown keys are rejected. Throws ConfigError.
ModelConfig parse_model_config(std::string_view text);
ModelConfig load_model_config(const std::filesystem::path& path);

FuzzyNumber to_fuzzy(const FuzzyInput& in, const AlphaGrid& grid);

// Throws ConfigError naming the offending field when the model invariants fail.
FivpModel to_model(const ModelConfig& config);

struct TrajectoryRow {
    double t = 0.0;
    double alpha = 0.0;
    double y1 = 0.0;
    double y2 = 0.0;
    double dy1_dalpha = 0.0;
    double dy2_dalpha = 0.0;
    double y1_prime = 0.0;
    double y2_prime = 0.0;

    friend bool operator==(const TrajectoryRow&, const TrajectoryRow&) = default;
};

inline constexpr std::string_view kCsvHeader = "t,alpha,y1,y2,dy1_dalpha,dy2_dalpha,y1_prime,y2_prime";

// Rows ordered by (t, alpha). Alpha partials are analytic for closed forms
// and central differences of one grid spacing otherwise. Throws NumericError
// on non-finite values.
std::vector<TrajectoryRow> trajectory_rows(const LevelFunctionField& f, std::span<const double> times,
                                           const AlphaGrid& grid);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

void write_csv(std::ostream& out, std::span<const TrajectoryRow> rows);
std::vector<TrajectoryRow> read_csv(std::istream& in);

int cmd_solve(const ModelConfig& config, const std::filesystem::path& out_path,
              std::optional<VariantSelection> variant, std::ostream& out, std::ostream& err);

int cmd_check(const ModelConfig& config, std::ostream& out, std::ostream& err);

struct ReproduceOptions {
    // Test hook: negates every expected value so that the comparison fails.
    bool flip_expected_sign = false;
};

int cmd_reproduce_paper(std::ostream& out, const ReproduceOptions& options = {});

// Parses argv and dispatches to a command; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fuzzcalc::cli
