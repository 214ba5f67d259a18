#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fuzzcalc/cli.hpp"

namespace fuzzcalc::cli {

using nlohmann::json;

std::optional<VariantSelection> parse_variant(std::string_view name) {
    if (name == "paper") {
        return VariantSelection::Paper;
    }
    if (name == "rederived") {
        return VariantSelection::Rederived;
    }
    if (name == "both") {
        return VariantSelection::Both;
    }
    return std::nullopt;
}

std::string_view variant_selection_name(VariantSelection v) noexcept {
    switch (v) {
        case VariantSelection::Paper: return "paper";
        case VariantSelection::Rederived: return "rederived";
        case VariantSelection::Both: return "both";
    }
    return "?";
}

std::size_t default_alpha_n() {
    const char* env = std::getenv("FUZZCALC_ALPHA_N");
    if (env == nullptr || *env == '\0') {
        return kDefaultAlphaIntervals;
    }
    char* end = nullptr;
    const long long n = std::strtoll(env, &end, 10);
    if (*end != '\0' || n < 1) {
        throw ConfigError("FUZZCALC_ALPHA_N", "FUZZCALC_ALPHA_N must be a positive integer, got '" +
                                                  std::string(env) + "'");
    }
    return static_cast<std::size_t>(n);
}

namespace {

double number_field(const json& doc, const char* name) {
    const json& v = doc.at(name);
    if (!v.is_number()) {
        throw ConfigError(name, std::string(name) + " must be a number");
    }
    return v.get<double>();
}

FuzzyInput fuzzy_field(const json& doc, const char* name) {
    if (!doc.contains(name)) {
        throw ConfigError(name, std::string(name) + " is required");
    }
    const json& v = doc.at(name);
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_array() && v.size() == 3 && v[0].is_number() && v[1].is_number() && v[2].is_number()) {
        TriangularParams p{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
        if (!p.valid()) {
            throw ConfigError(name, std::string(name) + ": triangular order a^L <= a <= a^U violated");
        }
        return p;
    }
    throw ConfigError(name, std::string(name) + " must be a number or a [a^L, a, a^U] array");
}

}  // namespace

ModelConfig parse_model_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("cannot parse model config: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("", "model config must be a JSON object");
    }
    static const char* const kKnown[] = {"k", "c", "T", "t_step", "alpha_n", "decay_variant", "tolerance"};
    for (const auto& [key, _] : doc.items()) {
        if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
            throw ConfigError(key, "unknown field '" + key + "'");
        }
    }

    ModelConfig cfg;
    cfg.k = fuzzy_field(doc, "k");
    cfg.c = fuzzy_field(doc, "c");
    if (doc.contains("T")) {
        cfg.horizon = number_field(doc, "T");
    }
    if (doc.contains("t_step")) {
        cfg.t_step = number_field(doc, "t_step");
    }
    if (doc.contains("alpha_n")) {
        const json& v = doc.at("alpha_n");
        if (!v.is_number_integer() || v.get<long long>() < 1) {
            throw ConfigError("alpha_n", "alpha_n must be a positive integer");
        }
        cfg.alpha_n = v.get<std::size_t>();
    } else {
        cfg.alpha_n = default_alpha_n();
    }
    if (doc.contains("decay_variant")) {
        const json& v = doc.at("decay_variant");
        const auto sel = v.is_string() ? parse_variant(v.get<std::string>()) : std::nullopt;
        if (!sel) {
            throw ConfigError("decay_variant", "decay_variant must be one of paper, rederived, both");
        }
        cfg.decay_variant = *sel;
    }
    if (doc.contains("tolerance")) {
        cfg.tolerance = number_field(doc, "tolerance");
    }

    if (!(cfg.horizon > 0.0) || !std::isfinite(cfg.horizon)) {
        throw ConfigError("T", "T must be positive and finite");
    }
    if (!(cfg.t_step > 0.0) || !(cfg.t_step <= cfg.horizon)) {
        throw ConfigError("t_step", "t_step must satisfy 0 < t_step <= T");
    }
    if (!(cfg.tolerance >= 0.0) || !std::isfinite(cfg.tolerance)) {
        throw ConfigError("tolerance", "tolerance must be non-negative and finite");
    }
    return cfg;
}

ModelConfig load_model_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("", "cannot open model config " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_config(buf.str());
}

FuzzyNumber to_fuzzy(const FuzzyInput& in, const AlphaGrid& grid) {
    if (const auto* x = std::get_if<double>(&in)) {
        return FuzzyNumber::crisp(*x, grid);
    }
    return from_triangular(std::get<TriangularParams>(in), grid);
}

FivpModel to_model(const ModelConfig& config) {
    const AlphaGrid grid = AlphaGrid::uniform(config.alpha_n);
    try {
        return FivpModel(to_fuzzy(config.k, grid), to_fuzzy(config.c, grid), config.horizon, config.t_step);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("", std::string("invalid model: ") + e.what());
    }
}

}  // namespace fuzzcalc::cli
