#include "riskshare/config.hpp"

#include <cstddef>
#include <map>

#include "riskshare/errors.hpp"

namespace riskshare {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

Config::Config(const std::vector<std::string>& tokens) {
    for (const auto& tok : tokens) {
        std::size_t eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq);
        for (const auto& kv : kv_)
            if (kv.first == key) throw ConfigError("duplicate key '" + key + "'");
        kv_.emplace_back(key, tok.substr(eq + 1));
    }
}

bool Config::has(const std::string& key) const {
    for (const auto& kv : kv_)
        if (kv.first == key) return true;
    return false;
}

std::optional<std::string> Config::take(const std::string& key) {
    for (const auto& kv : kv_) {
        if (kv.first == key) {
            used_.insert(key);
            return kv.second;
        }
    }
    return std::nullopt;
}

std::string Config::require(const std::string& key) {
    auto v = take(key);
    if (!v) throw ConfigError("missing required key '" + key + "'");
    return *v;
}

double Config::number(const std::string& key) { return parse_number(key, require(key)); }

std::optional<double> Config::number_opt(const std::string& key) {
    auto v = take(key);
    if (!v) return std::nullopt;
    return parse_number(key, *v);
}

int Config::integer(const std::string& key) {
    double v = number(key);
    int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("key '" + key + "' must be an integer, got " + std::to_string(v));
    return i;
}

std::optional<int> Config::integer_opt(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return integer(key);
}

void Config::finish() const {
    std::string stray;
    for (const auto& kv : kv_) {
        if (used_.count(kv.first)) continue;
        if (!stray.empty()) stray += ", ";
        stray += "'" + kv.first + "'";
    }
    if (!stray.empty()) throw ConfigError("unknown key(s): " + stray);
}

double parse_number(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "' needs a number, got '" + text + "'");
    }
    if (used != text.size())
        throw ConfigError("key '" + key + "' needs a number, got '" + text + "'");
    return v;
}

std::vector<double> parse_number_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    for (const auto& piece : split(text, ',')) out.push_back(parse_number(key, piece));
    return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& text) {
    std::vector<int> out;
    for (double v : parse_number_list(key, text)) {
        int i = static_cast<int>(v);
        if (static_cast<double>(i) != v)
            throw ConfigError("key '" + key + "' needs integers, got " + std::to_string(v));
        out.push_back(i);
    }
    return out;
}

std::vector<Atom> parse_atom_list(const std::string& key, const std::string& text) {
    std::vector<Atom> out;
    for (const auto& piece : split(text, ',')) {
        auto parts = split(piece, ':');
        if (parts.size() != 2)
            throw ConfigError("key '" + key + "' needs value:prob pairs, got '" + piece + "'");
        out.push_back({parse_number(key, parts[0]), parse_number(key, parts[1])});
    }
    return out;
}

Family family_from_name(const std::string& name) {
    static const std::map<std::string, Family> kNames = {
        {"power", Family::power},       {"dual_power", Family::dual_power},
        {"wang", Family::wang},         {"kt", Family::kt},
        {"var_step", Family::var_step}, {"es_cap", Family::es_cap},
        {"appendix_a", Family::appendix_a},
    };
    auto it = kNames.find(name);
    if (it == kNames.end()) throw UnknownFamily("no configurable family named '" + name + "'");
    return it->second;
}

const std::vector<std::string>& family_param_keys(Family family) {
    static const std::map<Family, std::vector<std::string>> kKeys = {
        {Family::power, {"alpha"}},   {Family::dual_power, {"alpha"}},
        {Family::wang, {"lambda"}},   {Family::kt, {"gamma"}},
        {Family::var_step, {"alpha"}}, {Family::es_cap, {"beta"}},
        {Family::appendix_a, {"alpha", "k"}},
    };
    auto it = kKeys.find(family);
    if (it == kKeys.end())
        throw UnknownFamily("family " + family_name(family) + " has no config form");
    return it->second;
}

Distortion distortion_from_config(Config& cfg) {
    Family family = family_from_name(cfg.require("family"));
    std::map<std::string, double> params;
    for (const auto& key : family_param_keys(family)) params[key] = cfg.number(key);
    return make_distortion(family, params);
}

namespace {

Distribution dist_by_name(Config& cfg, const std::string& name, bool allow_negated) {
    if (name == "uniform") return make_uniform(cfg.number("a"), cfg.number("b"));
    if (name == "pareto") return make_pareto(cfg.number("shape"), cfg.number("scale"));
    if (name == "lognormal") return make_lognormal(cfg.number("mu"), cfg.number("sigma"));
    if (name == "finite") return make_finite(parse_atom_list("atoms", cfg.require("atoms")));
    if (name == "negated") {
        if (!allow_negated) throw ConfigError("dist=negated cannot nest");
        return make_negated(dist_by_name(cfg, cfg.require("of"), false));
    }
    throw ConfigError("no configurable distribution named '" + name + "'");
}

}  // namespace

Distribution distribution_from_config(Config& cfg) {
    return dist_by_name(cfg, cfg.require("dist"), true);
}

CostModel cost_from_config(Config& cfg) {
    auto name = cfg.take("cost");
    if (!name || *name == "quadratic") return make_quadratic_cost();
    if (*name == "power") return make_power_cost(cfg.number("p"));
    throw ConfigError("no configurable cost model named '" + *name + "'");
}

}  // namespace riskshare
