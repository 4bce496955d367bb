#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "riskshare/distortion.hpp"
#include "riskshare/distribution.hpp"
#include "riskshare/finite.hpp"

namespace riskshare {

// A risk functional evaluated on a finite-space random variable.
using Measure = std::function<double(const FiniteSpace&, const Values&)>;

Measure measure_from_distortion(const Distortion& h);

// Indicator-style functional: 0 when the law of the argument matches the
// target (value, weight) profile, 1 otherwise.
Measure law_indicator_measure(std::vector<std::pair<double, std::int64_t>> target);

struct OracleResult {
    double value;
    std::vector<Values> argmin;     // one Values per agent
    std::int64_t candidates = 0;    // full allocations evaluated
};

// Discretized minimum of sum_i measures[i](X_i) over allocations of x.
// Counter-monotonic search for n >= 3 runs over the side-payment/partition
// parametrization plus a sweep of allocations with at most two non-constant
// components; two-agent search is a pruned per-atom DFS. Unconstrained search
// grids each component value independently. Grids hold `levels` points per
// admissible interval and always include the interval endpoints (and 0 where
// admissible). Throws too-large past `budget` explored candidates.
OracleResult brute_force_infconv(const std::vector<Measure>& measures, const FiniteSpace& sp,
                                 const Values& x, Dependence regime, SpaceClass space, int levels,
                                 std::int64_t budget = 10000000);

// Left-to-right variant: each agent's share must be counter-monotonic with the
// running sum of the shares chosen before it.
OracleResult sequential_counter_infconv(const std::vector<Measure>& measures,
                                        const FiniteSpace& sp, const Values& x, SpaceClass space,
                                        int levels, std::int64_t budget = 10000000);

struct RepresentationWitness {
    std::vector<double> side_payments;  // constant each agent holds off its cell
    std::vector<int> partition;         // atom -> agent owning the variable part
    std::string branch;                 // "jackpot" or "scapegoat"
};

// Inverts an allocation of the form X_i = (X - m) 1_{A_i} + m_i. Requires a
// counter-monotonic allocation with at least three non-constant components.
RepresentationWitness representation_decompose(const FiniteSpace& sp,
                                               const std::vector<Values>& components);

struct CounterexampleReport {
    double sequential_value;
    double joint_value;
    bool gap_confirmed;
    std::vector<Values> sequential_argmin;
    std::vector<Values> joint_argmin;
};

// Three heterogeneous indicator agents on a four-atom space whose sequential
// and joint counter-monotonic minima differ.
CounterexampleReport counterexample_report();

}  // namespace riskshare
