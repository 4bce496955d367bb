#include "riskshare/distortion.hpp"

#include <algorithm>
#include <cmath>

#include "riskshare/errors.hpp"
#include <limits>
#include "riskshare/normal.hpp"

namespace riskshare {

std::string family_name(Family f) {
    switch (f) {
        case Family::power: return "power";
        case Family::dual_power: return "dual_power";
        case Family::wang: return "wang";
        case Family::kt: return "kt";
        case Family::var_step: return "var_step";
        case Family::es_cap: return "es_cap";
        case Family::appendix_a: return "appendix_a";
        case Family::piecewise_linear: return "piecewise_linear";
        case Family::composite: return "composite";
        case Family::custom: return "custom";
    }
    return "custom";
}

std::string space_class_name(SpaceClass s) {
    switch (s) {
        case SpaceClass::Lplus: return "Lplus";
        case SpaceClass::Lminus: return "Lminus";
        case SpaceClass::Linf: return "Linf";
    }
    return "Linf";
}

std::string shape_name(ShapeClass::Tag t) {
    switch (t) {
        case ShapeClass::Tag::concave: return "concave";
        case ShapeClass::Tag::convex: return "convex";
        case ShapeClass::Tag::linear: return "linear";
        case ShapeClass::Tag::concave_convex: return "concave_convex";
        case ShapeClass::Tag::other: return "other";
    }
    return "other";
}

namespace {

double require_param(const std::map<std::string, double>& params, const std::string& key,
                     Family family) {
    auto it = params.find(key);
    if (it == params.end())
        throw InvalidParameter(family_name(family) + " requires parameter '" + key + "'");
    return it->second;
}

// Endpoint exactness plus monotonicity on the 1001-point grid, required of
// every constructed distortion.
void validate(const Distortion& d) {
    if (d.eval(0.0) != 0.0)
        throw InvalidParameter(family_name(d.family) + ": h(0) must be exactly 0");
    if (!d.riskmetric && d.eval(1.0) != 1.0)
        throw InvalidParameter(family_name(d.family) + ": h(1) must be exactly 1");
    const int n = 1001;
    double prev = 0.0;
    for (int i = 1; i < n; ++i) {
        double t = static_cast<double>(i) / (n - 1);
        double v = d.eval(t);
        if (v < prev - 1e-12)
            throw InvalidParameter(family_name(d.family) + ": not nondecreasing near t=" +
                                   std::to_string(t));
        prev = std::max(prev, v);
    }
}

double clamp01(double t) { return std::min(1.0, std::max(0.0, t)); }

}  // namespace

Distortion make_distortion(Family family, const std::map<std::string, double>& params) {
    Distortion d;
    d.family = family;
    d.params = params;
    switch (family) {
        case Family::power: {
            double alpha = require_param(params, "alpha", family);
            if (!(alpha > 0.0)) throw InvalidParameter("power: alpha must be > 0");
            d.eval = [alpha](double t) {
                t = clamp01(t);
                if (t == 0.0) return 0.0;
                if (t == 1.0) return 1.0;
                return std::pow(t, alpha);
            };
            d.derivative = [alpha](double t) {
                t = std::min(1.0, std::max(1e-300, t));
                return alpha * std::pow(t, alpha - 1.0);
            };
            break;
        }
        case Family::dual_power: {
            double alpha = require_param(params, "alpha", family);
            if (!(alpha > 0.0)) throw InvalidParameter("dual_power: alpha must be > 0");
            d.eval = [alpha](double t) {
                t = clamp01(t);
                if (t == 0.0) return 0.0;
                if (t == 1.0) return 1.0;
                return 1.0 - std::pow(1.0 - t, alpha);
            };
            d.derivative = [alpha](double t) {
                t = std::min(1.0 - 1e-300, std::max(0.0, t));
                return alpha * std::pow(1.0 - t, alpha - 1.0);
            };
            break;
        }
        case Family::wang: {
            double lambda = require_param(params, "lambda", family);
            d.eval = [lambda](double t) {
                t = clamp01(t);
                if (t == 0.0) return 0.0;
                if (t == 1.0) return 1.0;
                return norm_cdf(norm_ppf(t) + lambda);
            };
            d.derivative = [lambda](double t) {
                t = std::min(1.0 - 1e-15, std::max(1e-15, t));
                double z = norm_ppf(t);
                return std::exp(-lambda * z - 0.5 * lambda * lambda);
            };
            break;
        }
        case Family::kt: {
            double gamma = require_param(params, "gamma", family);
            if (!(gamma > 0.0 && gamma < 1.0))
                throw InvalidParameter("kt: gamma must be in (0,1)");
            d.eval = [gamma](double t) {
                t = clamp01(t);
                if (t == 0.0) return 0.0;
                if (t == 1.0) return 1.0;
                double tg = std::pow(t, gamma), ug = std::pow(1.0 - t, gamma);
                return tg / std::pow(tg + ug, 1.0 / gamma);
            };
            break;
        }
        case Family::var_step: {
            double alpha = require_param(params, "alpha", family);
            if (!(alpha >= 0.0 && alpha < 1.0))
                throw InvalidParameter("var_step: alpha must be in [0,1)");
            d.eval = [alpha](double t) { return clamp01(t) > alpha ? 1.0 : 0.0; };
            break;
        }
        case Family::es_cap: {
            double beta = require_param(params, "beta", family);
            if (!(beta > 0.0 && beta < 1.0))
                throw InvalidParameter("es_cap: beta must be in (0,1)");
            d.eval = [beta](double t) { return std::min(clamp01(t) / beta, 1.0); };
            d.derivative = [beta](double t) { return t < beta ? 1.0 / beta : 0.0; };
            break;
        }
        case Family::appendix_a: {
            double alpha = require_param(params, "alpha", family);
            double kd = require_param(params, "k", family);
            if (!(alpha > 0.0)) throw InvalidParameter("appendix_a: alpha must be > 0");
            if (!(kd >= 1.0) || kd != std::floor(kd))
                throw InvalidParameter("appendix_a: k must be a positive integer");
            double k = kd;
            double c = std::pow(k, alpha) / (1.0 + (k - 1.0) * alpha);
            double lin_slope = k * alpha / (1.0 + (k - 1.0) * alpha);
            double lin_icept = (1.0 - alpha) / (1.0 + (k - 1.0) * alpha);
            auto htilde = [=](double s) {
                if (s <= 0.0) return 0.0;
                if (s >= 1.0) return 1.0;
                return s <= 1.0 / k ? c * std::pow(s, alpha) : lin_slope * s + lin_icept;
            };
            d.eval = [htilde](double t) {
                t = clamp01(t);
                if (t == 0.0) return 0.0;
                if (t == 1.0) return 1.0;
                return 1.0 - htilde(1.0 - t);
            };
            d.derivative = [=](double t) {
                double s = 1.0 - std::min(1.0 - 1e-300, std::max(0.0, t));
                return s <= 1.0 / k ? c * alpha * std::pow(s, alpha - 1.0) : lin_slope;
            };
            break;
        }
        case Family::piecewise_linear:
        case Family::composite:
        case Family::custom:
            throw UnknownFamily(family_name(family) +
                                " has no parameter form; use the dedicated constructor");
    }
    validate(d);
    return d;
}

Distortion make_piecewise_linear(const std::vector<std::pair<double, double>>& knots) {
    std::vector<std::pair<double, double>> pts;
    pts.emplace_back(0.0, 0.0);
    for (const auto& kn : knots) pts.push_back(kn);
    pts.emplace_back(1.0, 1.0);
    for (size_t i = 1; i < pts.size(); ++i) {
        if (!(pts[i].first > pts[i - 1].first))
            throw InvalidParameter("piecewise_linear: knot abscissae must be strictly increasing in (0,1)");
        if (pts[i].second < pts[i - 1].second)
            throw InvalidParameter("piecewise_linear: knot ordinates must be nondecreasing");
    }
    Distortion d;
    d.family = Family::piecewise_linear;
    d.eval = [pts](double t) {
        t = clamp01(t);
        if (t == 0.0) return 0.0;
        if (t == 1.0) return 1.0;
        size_t i = 1;
        while (i + 1 < pts.size() && t > pts[i].first) ++i;
        double x0 = pts[i - 1].first, y0 = pts[i - 1].second;
        double x1 = pts[i].first, y1 = pts[i].second;
        return y0 + (y1 - y0) * (t - x0) / (x1 - x0);
    };
    d.derivative = [pts](double t) {
        t = clamp01(t);
        size_t i = 1;
        while (i + 1 < pts.size() && t >= pts[i].first) ++i;
        return (pts[i].second - pts[i - 1].second) / (pts[i].first - pts[i - 1].first);
    };
    validate(d);
    return d;
}

Distortion make_custom(std::function<double(double)> eval,
                       std::function<double(double)> derivative) {
    Distortion d;
    d.family = Family::custom;
    d.eval = std::move(eval);
    d.derivative = std::move(derivative);
    validate(d);
    return d;
}

Distortion dual(const Distortion& h) {
    if (h.riskmetric) throw InvalidParameter("dual: defined for proper distortions only");
    Distortion d;
    d.family = Family::composite;
    d.params = h.params;
    d.params["dual_of_" + family_name(h.family)] = 1.0;
    auto eval = h.eval;
    d.eval = [eval](double t) {
        t = clamp01(t);
        if (t == 0.0) return 0.0;
        if (t == 1.0) return 1.0;
        return 1.0 - eval(1.0 - t);
    };
    if (h.has_derivative()) {
        auto der = h.derivative;
        d.derivative = [der](double t) { return der(1.0 - t); };
    }
    return d;
}

double distortion_derivative(const Distortion& h, double t) {
    if (h.has_derivative()) return h.derivative(t);
    const double s = 1e-6;
    t = clamp01(t);
    if (t < s) return (h.eval(t + s) - h.eval(t)) / s;
    if (t > 1.0 - s) return (h.eval(t) - h.eval(t - s)) / s;
    return (h.eval(t + s) - h.eval(t - s)) / (2.0 * s);
}

namespace {

// Root of d(t) = h'(t) t - h(t); the chord-from-origin tangency point.
double bisect_t0(const Distortion& h, double tol) {
    auto d = [&](double t) { return distortion_derivative(h, t) * t - h.eval(t); };
    const int n = 1001;
    double lo = 0.0, hi = 0.0;
    bool found = false;
    double prev_t = 1.0 / (n - 1), prev_v = d(prev_t);
    for (int i = 2; i < n; ++i) {
        double t = static_cast<double>(i) / (n - 1);
        double v = d(t);
        if (prev_v < 0.0 && v >= 0.0) {
            lo = prev_t;
            hi = t;
            found = true;
            break;
        }
        prev_t = t;
        prev_v = v;
    }
    if (!found) throw RootNotFound("no sign change in h'(t) t - h(t) on (0,1)");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (d(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ShapeClass classify_shape(const Distortion& h, int grid_n, double tol) {
    if (grid_n < 101) throw DegenerateGrid("classify_shape requires grid_n >= 101");
    std::vector<double> v(grid_n);
    double max_lin_dev = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        double t = static_cast<double>(i) / (grid_n - 1);
        v[i] = h.eval(t);
        max_lin_dev = std::max(max_lin_dev, std::abs(v[i] - t));
    }
    ShapeClass out;
    if (max_lin_dev <= 1e-12) {
        out.tag = ShapeClass::Tag::linear;
        return out;
    }
    bool all_le = true, all_ge = true;
    int last_neg = -1, first_pos = grid_n;
    for (int i = 1; i + 1 < grid_n; ++i) {
        double d2 = v[i + 1] - 2.0 * v[i] + v[i - 1];
        if (d2 > tol) {
            all_le = false;
            first_pos = std::min(first_pos, i);
        }
        if (d2 < -tol) {
            all_ge = false;
            last_neg = std::max(last_neg, i);
        }
    }
    if (all_le) {
        out.tag = ShapeClass::Tag::concave;
        return out;
    }
    if (all_ge) {
        out.tag = ShapeClass::Tag::convex;
        return out;
    }
    if (last_neg < first_pos) {
        out.tag = ShapeClass::Tag::concave_convex;
        out.t0 = bisect_t0(h, 1e-10);
        return out;
    }
    out.tag = ShapeClass::Tag::other;
    return out;
}

SubadditivityReport check_dual_subadditivity(const Distortion& h, int grid_n, double tol) {
    if (grid_n < 101) throw DegenerateGrid("check_dual_subadditivity requires grid_n >= 101");
    const int n = grid_n - 1;
    std::vector<double> hv(grid_n), dv(grid_n);
    for (int i = 0; i < grid_n; ++i) hv[i] = h.eval(static_cast<double>(i) / n);
    for (int i = 0; i < grid_n; ++i) dv[i] = 1.0 - hv[n - i];  // dual values on the grid
    SubadditivityReport rep;
    double worst = 0.0;
    std::pair<double, double> at{0.0, 0.0};
    for (int i = 0; i <= n; ++i) {
        for (int j = i; i + j <= n; ++j) {
            double sub = hv[i + j] - hv[i] - hv[j];          // > 0 breaks subadditivity of h
            double sup = dv[i] + dv[j] - dv[i + j];          // > 0 breaks superadditivity of dual
            double excess = std::max(sub, sup);
            if (excess > worst) {
                worst = excess;
                at = {static_cast<double>(i) / n, static_cast<double>(j) / n};
            }
        }
    }
    if (worst <= 16.0 * std::numeric_limits<double>::epsilon()) worst = 0.0;  // grid rounding noise
    rep.max_violation = worst;
    rep.dually_subadditive = worst <= tol;
    if (!rep.dually_subadditive) rep.witness = at;
    return rep;
}

std::pair<Distortion, double> convex_envelope(const Distortion& h, double tol) {
    ShapeClass sc = classify_shape(h);
    if (sc.tag != ShapeClass::Tag::concave_convex)
        throw ShapeMismatch("convex_envelope requires a concave-convex distortion, got " +
                            shape_name(sc.tag));
    double t0 = bisect_t0(h, tol);
    double chord = h.eval(t0) / t0;
    auto eval = h.eval;
    Distortion env;
    env.family = Family::composite;
    env.params = h.params;
    env.params["envelope_t0"] = t0;
    env.eval = [eval, t0, chord](double t) {
        t = clamp01(t);
        if (t == 0.0) return 0.0;
        if (t == 1.0) return 1.0;
        return t <= t0 ? chord * t : eval(t);
    };
    const Distortion base = h;
    env.derivative = [base, t0, chord](double t) {
        return t <= t0 ? chord : distortion_derivative(base, t);
    };
    return {env, t0};
}

Distortion counter_transform(const Distortion& h, int n, SpaceClass space) {
    if (n < 2) throw InvalidParameter("counter_transform: n must be >= 2");
    if (space == SpaceClass::Linf)
        throw InvalidParameter("counter_transform: no finite transform exists for Linf");
    ShapeClass sc = classify_shape(h);
    if (sc.tag != ShapeClass::Tag::convex && sc.tag != ShapeClass::Tag::linear)
        throw ShapeMismatch("counter_transform requires convex (or linear) h, got " +
                            shape_name(sc.tag));
    Distortion g;
    g.family = Family::composite;
    g.params = h.params;
    g.params["pool_n"] = n;
    g.params["pool_space"] = space == SpaceClass::Lplus ? 1.0 : -1.0;
    g.riskmetric = true;
    auto eval = h.eval;
    double nn = n;
    if (space == SpaceClass::Lplus) {
        g.eval = [eval, nn](double t) { return nn * eval(clamp01(t) / nn); };
        if (h.has_derivative()) {
            auto der = h.derivative;
            g.derivative = [der, nn](double t) { return der(clamp01(t) / nn); };
        }
    } else {
        g.eval = [eval, nn](double t) {
            t = clamp01(t);
            return nn * eval(1.0 - (1.0 - t) / nn) - nn * eval(1.0 - 1.0 / nn);
        };
        if (h.has_derivative()) {
            auto der = h.derivative;
            g.derivative = [der, nn](double t) { return der(1.0 - (1.0 - clamp01(t)) / nn); };
        }
    }
    return g;
}

Distortion portfolio_transform(const Distortion& h, int n) {
    if (n < 2) throw InvalidParameter("portfolio_transform: n must be >= 2");
    ShapeClass sc = classify_shape(h);
    if (sc.tag != ShapeClass::Tag::convex && sc.tag != ShapeClass::Tag::linear)
        throw ShapeMismatch("portfolio_transform requires convex (or linear) h, got " +
                            shape_name(sc.tag));
    double denom = 1.0 - h.eval(1.0 - 1.0 / n);
    if (!(denom > 0.0))
        throw DegenerateDenominator("portfolio_transform: h(1-1/n) = 1");
    Distortion g;
    g.family = Family::composite;
    g.params = h.params;
    g.params["portfolio_n"] = n;
    auto eval = h.eval;
    double nn = n;
    g.eval = [eval, nn, denom](double t) {
        t = clamp01(t);
        if (t == 0.0) return 0.0;
        if (t == 1.0) return 1.0;
        return (1.0 - eval(1.0 - t / nn)) / denom;
    };
    if (h.has_derivative()) {
        auto der = h.derivative;
        g.derivative = [der, nn, denom](double t) { return der(1.0 - clamp01(t) / nn) / (nn * denom); };
    }
    return g;
}

}  // namespace riskshare
