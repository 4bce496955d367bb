#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "riskshare/distortion.hpp"

namespace riskshare {

// One point of a finite law.
struct Atom {
    double value;
    double prob;
};

enum class DistFamily {
    uniform,
    pareto,
    lognormal,
    bernoulli_scaled,
    point_mass,
    negated,
    finite_support,
    custom
};
std::string dist_family_name(DistFamily f);

// Dependence structure imposed on the components of an allocation.
enum class Dependence { unconstrained, counter_monotonic, comonotonic };
std::string dependence_name(Dependence d);

// A law described by its left-continuous quantile and survival function.
// For finite laws `atoms` holds the exact support (sorted ascending) and the
// handles are derived from it.
struct Distribution {
    std::function<double(double)> quantile;  // p in [0,1]; clamps to support ends
    std::function<double(double)> survival;  // x -> P(X > x)
    double support_lo = 0.0;                 // may be -inf
    double support_hi = 0.0;                 // may be +inf
    SpaceClass sign_class = SpaceClass::Linf;
    DistFamily family = DistFamily::custom;
    std::map<std::string, double> params;
    std::vector<Atom> atoms;  // nonempty iff the law is finite

    bool is_finite() const { return !atoms.empty(); }
};

Distribution make_uniform(double a, double b);
Distribution make_pareto(double shape, double scale);
Distribution make_lognormal(double mu, double sigma);
Distribution make_point_mass(double c);
Distribution make_bernoulli_scaled(double scale, double p);  // scale with prob p, else 0
Distribution make_finite(std::vector<Atom> atoms);
Distribution make_negated(const Distribution& d);

}  // namespace riskshare
