#pragma once

#include <functional>

namespace riskshare {

struct QuadConfig {
    double abs_tol = 1e-8;
    int max_subdivisions = 1 << 16;
    double tail_cut = 1e-9;  // quantile-level clip for unbounded supports
};

// Adaptive Simpson integration of f over [a, b]. Throws divergent-integral when
// the subdivision budget runs out before the refinement stabilizes, or when f
// produces a non-finite value.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadConfig& cfg = {});

}  // namespace riskshare
