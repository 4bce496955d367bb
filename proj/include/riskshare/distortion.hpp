#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace riskshare {

enum class Family {
    power,
    dual_power,
    wang,
    kt,
    var_step,
    es_cap,
    appendix_a,
    piecewise_linear,
    composite,
    custom,
};

std::string family_name(Family f);

enum class SpaceClass { Lplus, Lminus, Linf };

std::string space_class_name(SpaceClass s);

// A distortion: increasing map [0,1] -> [0,1] with h(0)=0. Proper distortions
// also satisfy h(1)=1; transform outputs with h(1) != 1 carry riskmetric=true.
struct Distortion {
    std::function<double(double)> eval;
    std::function<double(double)> derivative;  // empty when no analytic form exists
    Family family = Family::custom;
    std::map<std::string, double> params;
    bool riskmetric = false;

    double operator()(double t) const { return eval(t); }
    bool has_derivative() const { return static_cast<bool>(derivative); }
};

struct ShapeClass {
    enum class Tag { concave, convex, linear, concave_convex, other };
    Tag tag = Tag::other;
    std::optional<double> t0;  // inflection threshold, concave_convex only
};

std::string shape_name(ShapeClass::Tag t);

struct SubadditivityReport {
    bool dually_subadditive = false;
    std::optional<std::pair<double, double>> witness;  // (x, y) of the worst violation
    double max_violation = 0.0;
};

Distortion make_distortion(Family family, const std::map<std::string, double>& params);

// Piecewise-linear distortion through (0,0), the given interior knots, and (1,1).
Distortion make_piecewise_linear(const std::vector<std::pair<double, double>>& knots);

// Wraps an arbitrary callable; caller vouches for monotonicity and endpoints.
Distortion make_custom(std::function<double(double)> eval,
                       std::function<double(double)> derivative = {});

// h~(t) = 1 - h(1-t)
Distortion dual(const Distortion& h);

// Derivative of h at t: analytic when available, else central differences with
// step 1e-6 (one-sided at the endpoints).
double distortion_derivative(const Distortion& h, double t);

ShapeClass classify_shape(const Distortion& h, int grid_n = 1001, double tol = 1e-9);

SubadditivityReport check_dual_subadditivity(const Distortion& h, int grid_n = 1001,
                                             double tol = 1e-9);

// Largest convex minorant of a concave-convex h: the chord (h(t0)/t0) t on
// [0,t0], h itself beyond; t0 is the root of h'(t) t - h(t).
std::pair<Distortion, double> convex_envelope(const Distortion& h, double tol = 1e-10);

// Counter-monotonic pooling transform for convex h:
//   Lplus : g(t) = n h(t/n)
//   Lminus: g(t) = n h(1-(1-t)/n) - n h(1-1/n)
// The result is a riskmetric distortion (g(1) != 1 in general).
Distortion counter_transform(const Distortion& h, int n, SpaceClass space);

// Normalized pooling transform g(t) = (1 - h(1-t/n)) / (1 - h(1-1/n)); a proper
// distortion used by the investment solver's risk-seeking branch.
Distortion portfolio_transform(const Distortion& h, int n);

}  // namespace riskshare
