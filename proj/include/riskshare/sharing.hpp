#pragma once

#include <string>
#include <vector>

#include "riskshare/choquet.hpp"
#include "riskshare/distortion.hpp"
#include "riskshare/distribution.hpp"
#include "riskshare/quadrature.hpp"

namespace riskshare {

// Which established result produced a value.
enum class Provenance {
    three_inequality,
    concave_all_equal,
    var_formula,
    convex_Lplus,
    convex_Lminus,
    convex_Linf_minus_infinity,
    dual_subadditive_identity,
    envelope_Lminus,
    oracle
};
std::string provenance_name(Provenance p);

struct InfConvResult {
    double value;
    Dependence regime;
    Provenance provenance;
};

// n-agent inf-convolution of identical rho_h agents sharing d, dispatched to
// the closed form matching the distortion shape, the dependence regime, and
// the sign constraint on allocations. Cases no result covers are refused.
InfConvResult infconv(const Distortion& h, int n, const Distribution& d, Dependence regime,
                      SpaceClass space, const QuadConfig& cfg = {});

// Quantile-level identity for the step distortion.
InfConvResult var_infconv(double alpha, int n, const Distribution& d, Dependence regime);

// Sup-convolution; equals rho_h for convex (or linear) h.
double supconv(const Distortion& h, int n, const Distribution& d, const QuadConfig& cfg = {});

struct AllocationDescriptor {
    enum class Kind { uniform_counter, proportional_comonotonic, var_tail_split, degenerate };
    Kind kind;
    int n = 0;
    std::vector<double> side_payments;  // m_i, one per agent
    std::vector<double> weights;        // comonotonic proportional weights
    std::string branch;                 // "jackpot" / "scapegoat" / ""
};

AllocationDescriptor optimal_allocation(const Distortion& h, int n, const Distribution& d,
                                        SpaceClass space);

}  // namespace riskshare
