#include "riskshare/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riskshare/errors.hpp"
#include "riskshare/normal.hpp"

namespace riskshare {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

SpaceClass derive_sign_class(double lo, double hi) {
    if (lo >= 0.0) return SpaceClass::Lplus;
    if (hi <= 0.0) return SpaceClass::Lminus;
    return SpaceClass::Linf;
}
}  // namespace

std::string dist_family_name(DistFamily f) {
    switch (f) {
        case DistFamily::uniform: return "uniform";
        case DistFamily::pareto: return "pareto";
        case DistFamily::lognormal: return "lognormal";
        case DistFamily::bernoulli_scaled: return "bernoulli_scaled";
        case DistFamily::point_mass: return "point_mass";
        case DistFamily::negated: return "negated";
        case DistFamily::finite_support: return "finite";
        case DistFamily::custom: return "custom";
    }
    return "custom";
}

std::string dependence_name(Dependence d) {
    switch (d) {
        case Dependence::unconstrained: return "unconstrained";
        case Dependence::counter_monotonic: return "counter_monotonic";
        case Dependence::comonotonic: return "comonotonic";
    }
    return "unconstrained";
}

Distribution make_uniform(double a, double b) {
    if (!(a < b)) throw InvalidParameter("uniform: requires a < b");
    Distribution d;
    d.family = DistFamily::uniform;
    d.params = {{"a", a}, {"b", b}};
    d.support_lo = a;
    d.support_hi = b;
    d.sign_class = derive_sign_class(a, b);
    d.quantile = [a, b](double p) {
        if (p <= 0.0) return a;
        if (p >= 1.0) return b;
        return a + p * (b - a);
    };
    d.survival = [a, b](double x) {
        if (x <= a) return 1.0;
        if (x >= b) return 0.0;
        return (b - x) / (b - a);
    };
    return d;
}

Distribution make_pareto(double shape, double scale) {
    if (!(shape > 0.0)) throw InvalidParameter("pareto: shape must be > 0");
    if (!(scale > 0.0)) throw InvalidParameter("pareto: scale must be > 0");
    Distribution d;
    d.family = DistFamily::pareto;
    d.params = {{"shape", shape}, {"scale", scale}};
    d.support_lo = scale;
    d.support_hi = kInf;
    d.sign_class = SpaceClass::Lplus;
    d.quantile = [shape, scale](double p) {
        if (p <= 0.0) return scale;
        if (p >= 1.0) return kInf;
        return scale * std::pow(1.0 - p, -1.0 / shape);
    };
    d.survival = [shape, scale](double x) {
        if (x <= scale) return 1.0;
        return std::pow(scale / x, shape);
    };
    return d;
}

Distribution make_lognormal(double mu, double sigma) {
    if (!(sigma > 0.0)) throw InvalidParameter("lognormal: sigma must be > 0");
    Distribution d;
    d.family = DistFamily::lognormal;
    d.params = {{"mu", mu}, {"sigma", sigma}};
    d.support_lo = 0.0;
    d.support_hi = kInf;
    d.sign_class = SpaceClass::Lplus;
    d.quantile = [mu, sigma](double p) {
        if (p <= 0.0) return 0.0;
        if (p >= 1.0) return kInf;
        return std::exp(mu + sigma * norm_ppf(p));
    };
    d.survival = [mu, sigma](double x) {
        if (x <= 0.0) return 1.0;
        return norm_cdf(-(std::log(x) - mu) / sigma);
    };
    return d;
}

Distribution make_point_mass(double c) {
    return make_finite({{c, 1.0}});
}

Distribution make_bernoulli_scaled(double scale, double p) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidParameter("bernoulli_scaled: p must be in (0,1)");
    Distribution d = make_finite({{0.0, 1.0 - p}, {scale, p}});
    d.family = DistFamily::bernoulli_scaled;
    d.params = {{"scale", scale}, {"p", p}};
    return d;
}

Distribution make_finite(std::vector<Atom> atoms) {
    if (atoms.empty()) throw InvalidParameter("finite: needs at least one atom");
    double total = 0.0;
    for (const auto& a : atoms) {
        if (!(a.prob > 0.0)) throw InvalidParameter("finite: atom probabilities must be > 0");
        if (!std::isfinite(a.value)) throw InvalidParameter("finite: atom values must be finite");
        total += a.prob;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw InvalidParameter("finite: atom probabilities must sum to 1");
    for (auto& a : atoms) a.prob /= total;
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& x, const Atom& y) { return x.value < y.value; });
    std::vector<Atom> merged;
    for (const auto& a : atoms) {
        if (!merged.empty() && merged.back().value == a.value)
            merged.back().prob += a.prob;
        else
            merged.push_back(a);
    }
    Distribution d;
    d.family = DistFamily::finite_support;
    d.atoms = std::move(merged);
    d.support_lo = d.atoms.front().value;
    d.support_hi = d.atoms.back().value;
    d.sign_class = derive_sign_class(d.support_lo, d.support_hi);
    auto pts = d.atoms;
    d.quantile = [pts](double p) {
        if (p <= 0.0) return pts.front().value;
        double cum = 0.0;
        for (const auto& a : pts) {
            cum += a.prob;
            if (cum >= p - 1e-15) return a.value;
        }
        return pts.back().value;
    };
    d.survival = [pts](double x) {
        double s = 0.0;
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
            if (it->value > x)
                s += it->prob;
            else
                break;
        }
        return s;
    };
    return d;
}

Distribution make_negated(const Distribution& src) {
    if (src.is_finite()) {
        std::vector<Atom> neg;
        neg.reserve(src.atoms.size());
        for (const auto& a : src.atoms) neg.push_back({-a.value, a.prob});
        Distribution d = make_finite(std::move(neg));
        d.family = DistFamily::negated;
        d.params = src.params;
        return d;
    }
    Distribution d;
    d.family = DistFamily::negated;
    d.params = src.params;
    d.params["negated_" + dist_family_name(src.family)] = 1.0;
    d.support_lo = -src.support_hi;
    d.support_hi = -src.support_lo;
    d.sign_class = derive_sign_class(d.support_lo, d.support_hi);
    auto q = src.quantile;
    auto s = src.survival;
    // continuous laws: P(-X > x) = P(X < -x) = 1 - P(X > -x); quantile reflects
    d.quantile = [q](double p) { return -q(1.0 - p); };
    d.survival = [s](double x) { return 1.0 - s(-x); };
    return d;
}

}  // namespace riskshare
