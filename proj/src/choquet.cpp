#include "riskshare/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riskshare/errors.hpp"

namespace riskshare {

double choquet_finite(const Distortion& h, const std::vector<Atom>& atoms) {
    if (atoms.empty()) throw InvalidParameter("choquet_finite: empty law");
    std::vector<Atom> sorted = atoms;
    std::sort(sorted.begin(), sorted.end(),
              [](const Atom& a, const Atom& b) { return a.value > b.value; });
    double total = 0.0, cum = 0.0, h_prev = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cum += sorted[i].prob;
        // The full law ends at probability exactly 1, but the fp sum can land an
        // ulp short; distortions with unbounded slope at 1 amplify that gap, so
        // pin the last point.
        double t = (i + 1 == sorted.size()) ? 1.0 : std::min(cum, 1.0);
        double h_cum = h.eval(t);
        total += sorted[i].value * (h_cum - h_prev);
        h_prev = h_cum;
    }
    return total;
}

double var(const Distribution& d, double alpha) {
    if (alpha < 0.0) throw InvalidParameter("var: alpha must be >= 0");
    if (alpha >= 1.0) return d.support_lo;
    return d.quantile(1.0 - alpha);
}

double choquet(const Distortion& h, const Distribution& d, const QuadConfig& cfg) {
    if (d.is_finite()) return choquet_finite(h, d.atoms);
    if (h.family == Family::var_step) return var(d, h.params.at("alpha"));
    double lo = d.support_lo, hi = d.support_hi;
    if (!std::isfinite(lo)) lo = d.quantile(cfg.tail_cut);
    if (!std::isfinite(hi)) hi = d.quantile(1.0 - cfg.tail_cut);
    if (!(lo <= hi)) throw DivergentIntegral("support collapsed after tail clipping");
    const double h1 = h.eval(1.0);
    double pos = 0.0, neg = 0.0;
    if (hi > 0.0)
        pos = integrate([&](double x) { return h.eval(d.survival(x)); }, 0.0, hi, cfg);
    if (lo < 0.0)
        neg = integrate([&](double x) { return h.eval(d.survival(x)) - h1; }, lo, 0.0, cfg);
    return pos + neg;
}

double es(const Distribution& d, double beta, const QuadConfig& cfg) {
    if (!(beta > 0.0 && beta < 1.0)) throw InvalidParameter("es: beta must be in (0,1)");
    return choquet(make_distortion(Family::es_cap, {{"beta", beta}}), d, cfg);
}

}  // namespace riskshare
