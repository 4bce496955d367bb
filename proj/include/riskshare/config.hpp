#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "riskshare/distortion.hpp"
#include "riskshare/distribution.hpp"
#include "riskshare/portfolio.hpp"

namespace riskshare {

// Flat key=value argument bag. Every lookup marks its key as consumed;
// `finish()` rejects whatever was never consumed, so misspelled keys are
// errors rather than silently ignored.
class Config {
public:
    Config() = default;
    // Each token must look like key=value; duplicates and bare words throw.
    explicit Config(const std::vector<std::string>& tokens);

    bool has(const std::string& key) const;
    std::optional<std::string> take(const std::string& key);
    std::string require(const std::string& key);
    double number(const std::string& key);
    std::optional<double> number_opt(const std::string& key);
    int integer(const std::string& key);
    std::optional<int> integer_opt(const std::string& key);
    void finish() const;  // throws config-error listing unconsumed keys

private:
    std::vector<std::pair<std::string, std::string>> kv_;
    std::set<std::string> used_;
};

double parse_number(const std::string& key, const std::string& text);
std::vector<double> parse_number_list(const std::string& key, const std::string& text);
std::vector<int> parse_int_list(const std::string& key, const std::string& text);
// "v1:p1,v2:p2,..." -> atoms
std::vector<Atom> parse_atom_list(const std::string& key, const std::string& text);

Family family_from_name(const std::string& name);

// The config keys the family's constructor consumes, e.g. {"alpha", "k"}.
const std::vector<std::string>& family_param_keys(Family family);

// family=<name> plus that family's parameter keys (family=wang lambda=-0.6,
// family=appendix_a alpha=0.5 k=10, ...).
Distortion distortion_from_config(Config& cfg);

// dist=uniform a=.. b=.. | dist=pareto shape=.. scale=.. |
// dist=lognormal mu=.. sigma=.. | dist=finite atoms=v:p,... |
// dist=negated of=<inner dist name> <inner params>
Distribution distribution_from_config(Config& cfg);

// cost=quadratic (the default when the key is absent) | cost=power p=<p>
CostModel cost_from_config(Config& cfg);

}  // namespace riskshare
