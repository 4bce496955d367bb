#include "riskshare/quadrature.hpp"

#include <cmath>

#include "riskshare/errors.hpp"

namespace riskshare {

namespace {

struct Worker {
    const std::function<double(double)>& f;
    int splits_left;

    double eval(double x) {
        double v = f(x);
        if (!std::isfinite(v))
            throw DivergentIntegral("integrand not finite at x=" + std::to_string(x));
        return v;
    }

    // classic adaptive Simpson with Richardson acceptance
    double refine(double a, double b, double fa, double fm, double fb, double whole, double eps,
                  int depth) {
        if (--splits_left < 0)
            throw DivergentIntegral("subdivision budget exhausted before reaching tolerance");
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        double flm = eval(lm), frm = eval(rm);
        double h6 = (b - a) / 12.0;
        double left = h6 * (fa + 4.0 * flm + fm);
        double right = h6 * (fm + 4.0 * frm + fb);
        double delta = left + right - whole;
        if (depth <= 0 && std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
        if (b - a < 1e-14 * (std::abs(a) + std::abs(b) + 1.0)) return left + right;
        return refine(a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
               refine(m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
    }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadConfig& cfg) {
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw DivergentIntegral("integration bounds must be finite");
    if (a == b) return 0.0;
    if (!(cfg.abs_tol > 0.0)) throw InvalidParameter("abs_tol must be > 0");
    Worker w{f, cfg.max_subdivisions};
    // seed with a uniform split so kinks and steps cannot fool the first estimate
    const int panels = 16;
    double total = 0.0;
    double step = (b - a) / panels;
    double eps = cfg.abs_tol / panels;
    for (int i = 0; i < panels; ++i) {
        double lo = a + i * step, hi = (i + 1 == panels) ? b : a + (i + 1) * step;
        double mid = 0.5 * (lo + hi);
        double flo = w.eval(lo), fmid = w.eval(mid), fhi = w.eval(hi);
        double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += w.refine(lo, hi, flo, fmid, fhi, whole, eps, 2);
    }
    return total;
}

}  // namespace riskshare
