#include "eventcurve/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "eventcurve/errors.hpp"

namespace eventcurve {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ConfigError("key '" + key + "': expected a number, got '" + value + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& value) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
    return v;
}

}  // namespace

RunConfig RunConfig::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open config file: " + file.string());
    const std::filesystem::path base = file.has_parent_path()
                                           ? file.parent_path()
                                           : std::filesystem::path(".");
    auto resolve = [&](const std::string& value) {
        std::filesystem::path p(value);
        return p.is_absolute() ? p : base / p;
    };

    RunConfig cfg;
    std::set<std::string> seen;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(file.string() + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError(file.string() + ":" + std::to_string(line_no) + ": empty key");
        if (!seen.insert(key).second)
            throw ConfigError(file.string() + ":" + std::to_string(line_no) +
                              ": duplicate key '" + key + "'");

        if (key == "events")
            cfg.events = resolve(value);
        else if (key == "market")
            cfg.market = resolve(value);
        else if (key == "focus")
            cfg.focus = resolve(value);
        else if (key == "statements_dir")
            cfg.statements_dir = resolve(value);
        else if (key == "lexicon")
            cfg.lexicon = resolve(value);
        else if (key == "output_dir")
            cfg.output_dir = resolve(value);
        else if (key == "sample_start")
            cfg.build.sample_start = Date::from_iso(value);
        else if (key == "slope_orientation") {
            if (value == "long_minus_short")
                cfg.build.slope = SlopeOrientation::LongMinusShort;
            else if (value == "short_minus_long")
                cfg.build.slope = SlopeOrientation::ShortMinusLong;
            else
                throw ConfigError("key 'slope_orientation': expected long_minus_short or "
                                  "short_minus_long, got '" + value + "'");
        } else if (key == "tone_denominator") {
            if (value == "with_neutral")
                cfg.text.tone_denominator = ToneDenominator::WithNeutral;
            else if (value == "hawk_dove_only")
                cfg.text.tone_denominator = ToneDenominator::HawkDoveOnly;
            else
                throw ConfigError("key 'tone_denominator': expected with_neutral or "
                                  "hawk_dove_only, got '" + value + "'");
        } else if (key == "ridge_lambda") {
            cfg.fit.ridge_lambda = parse_double(key, value);
            if (cfg.fit.ridge_lambda < 0) throw ConfigError("ridge_lambda must be >= 0");
        } else if (key == "lasso_lambda_frac") {
            cfg.fit.lasso_lambda_frac = parse_double(key, value);
            if (cfg.fit.lasso_lambda_frac < 0) throw ConfigError("lasso_lambda_frac must be >= 0");
        } else if (key == "loo_lambda_grid") {
            cfg.fit.loo_lambda_grid.clear();
            for (const auto& item : split_list(value))
                cfg.fit.loo_lambda_grid.push_back(parse_double(key, item));
        } else if (key == "controls")
            cfg.fit.controls = split_list(value);
        else if (key == "min_subgroup_n") {
            cfg.fit.min_subgroup_n = parse_int(key, value);
            if (cfg.fit.min_subgroup_n < 1) throw ConfigError("min_subgroup_n must be >= 1");
        } else if (key == "specs")
            cfg.specs = split_list(value);
        else
            throw ConfigError(file.string() + ":" + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
    }
    return cfg;
}

void RunConfig::validate() const {
    auto require = [](const std::filesystem::path& p, const char* key) {
        if (p.empty()) throw ConfigError(std::string("missing required config key '") + key + "'");
    };
    require(events, "events");
    require(market, "market");
    require(focus, "focus");
    require(statements_dir, "statements_dir");
    require(lexicon, "lexicon");
    require(output_dir, "output_dir");
    for (const auto& name : specs) spec_by_name(name);  // throws on unknown names
}

}  // namespace eventcurve
