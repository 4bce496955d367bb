#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "riskshare/distortion.hpp"
#include "riskshare/distribution.hpp"

namespace riskshare {

// Finite probability space with exact rational atom weights (weight/total).
struct FiniteSpace {
    std::vector<std::int64_t> weights;
    std::int64_t total = 0;

    std::size_t size() const { return weights.size(); }
    double prob(std::size_t i) const { return static_cast<double>(weights[i]) / total; }
};

FiniteSpace make_space(std::vector<std::int64_t> weights);

// A random variable on a FiniteSpace is its vector of per-atom values.
using Values = std::vector<double>;

// Exact Choquet integral on a space: exceedance probabilities accumulate in
// integer weight arithmetic.
double choquet_on_space(const Distortion& h, const FiniteSpace& sp, const Values& x);

Distribution to_distribution(const FiniteSpace& sp, const Values& x);

struct DependenceWitness {
    std::size_t comp_i, comp_j;  // offending component pair
    std::size_t atom_w, atom_v;  // offending atom pair
};

// Exhaustive pairwise scan; nullopt means the allocation satisfies the mode.
std::optional<DependenceWitness> dependence_check(const std::vector<Values>& components,
                                                  Dependence mode);

}  // namespace riskshare
