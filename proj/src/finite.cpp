#include "riskshare/finite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riskshare/errors.hpp"

namespace riskshare {

FiniteSpace make_space(std::vector<std::int64_t> weights) {
    if (weights.empty()) throw InvalidParameter("finite space needs at least one atom");
    FiniteSpace sp;
    sp.total = 0;
    for (auto w : weights) {
        if (w <= 0) throw InvalidParameter("atom weights must be positive integers");
        sp.total += w;
    }
    sp.weights = std::move(weights);
    return sp;
}

double choquet_on_space(const Distortion& h, const FiniteSpace& sp, const Values& x) {
    if (x.size() != sp.size())
        throw ShapeMismatch("value vector length does not match the space");
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
    double total = 0.0, h_prev = 0.0;
    std::int64_t cum = 0;
    for (auto i : idx) {
        cum += sp.weights[i];
        double h_cum = h.eval(static_cast<double>(cum) / sp.total);
        total += x[i] * (h_cum - h_prev);
        h_prev = h_cum;
    }
    return total;
}

Distribution to_distribution(const FiniteSpace& sp, const Values& x) {
    if (x.size() != sp.size())
        throw ShapeMismatch("value vector length does not match the space");
    std::vector<Atom> atoms;
    atoms.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) atoms.push_back({x[i], sp.prob(i)});
    return make_finite(std::move(atoms));
}

std::optional<DependenceWitness> dependence_check(const std::vector<Values>& components,
                                                  Dependence mode) {
    if (components.size() < 2)
        throw InvalidParameter("dependence_check needs at least two components");
    if (mode == Dependence::unconstrained)
        throw InvalidParameter("dependence_check: mode must be comonotonic or counter_monotonic");
    const std::size_t atoms = components.front().size();
    for (const auto& c : components)
        if (c.size() != atoms) throw ShapeMismatch("components live on different spaces");
    for (std::size_t i = 0; i + 1 < components.size(); ++i) {
        for (std::size_t j = i + 1; j < components.size(); ++j) {
            const Values& a = components[i];
            const Values& b = components[j];
            for (std::size_t w = 0; w + 1 < atoms; ++w) {
                for (std::size_t v = w + 1; v < atoms; ++v) {
                    // sign comparison, no product rounding
                    bool a_up = a[w] > a[v], a_dn = a[w] < a[v];
                    bool b_up = b[w] > b[v], b_dn = b[w] < b[v];
                    bool concordant = (a_up && b_up) || (a_dn && b_dn);
                    bool discordant = (a_up && b_dn) || (a_dn && b_up);
                    if ((mode == Dependence::counter_monotonic && concordant) ||
                        (mode == Dependence::comonotonic && discordant))
                        return DependenceWitness{i, j, w, v};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace riskshare
