#pragma once

#include <vector>

#include "riskshare/distortion.hpp"
#include "riskshare/distribution.hpp"
#include "riskshare/quadrature.hpp"

namespace riskshare {

// Exact Choquet integral of a finite law: sort atoms by value descending,
// accumulate h at the running exceedance probabilities. Handles g(1) != 1.
double choquet_finite(const Distortion& h, const std::vector<Atom>& atoms);

// Choquet integral of h over d via the survival form
//   int_0^inf h(P(X>x)) dx + int_{-inf}^0 (h(P(X>x)) - h(1)) dx.
// Finite laws evaluate exactly; unbounded support ends are clipped at quantile
// levels tail_cut and 1-tail_cut; step distortions bypass quadrature.
double choquet(const Distortion& h, const Distribution& d, const QuadConfig& cfg = {});

// Value-at-risk per the generalized-inverse definition; levels alpha >= 1 fall
// through to the support infimum.
double var(const Distribution& d, double alpha);

// Expected shortfall ES_beta = (1/beta) int_0^beta VaR_gamma dgamma.
double es(const Distribution& d, double beta, const QuadConfig& cfg = {});

}  // namespace riskshare
