#include "riskshare/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "riskshare/errors.hpp"

namespace riskshare {

namespace {

// Slack for derived component values (last agent is x minus the chosen grid
// values, so tiny rounding residue must not reject a feasible candidate).
constexpr double kFeasTol = 1e-9;

struct Budget {
    std::int64_t cand_left;
    std::int64_t work_left;
    std::int64_t evaluated = 0;

    explicit Budget(std::int64_t b)
        : cand_left(b),
          work_left(b > std::numeric_limits<std::int64_t>::max() / 64
                        ? std::numeric_limits<std::int64_t>::max()
                        : 64 * b) {}

    // Interior search steps get a generous multiple of the candidate budget so
    // heavily pruned searches still terminate predictably.
    void work() {
        if (--work_left < 0)
            throw TooLarge(
                "allocation search explored too many partial assignments; reduce levels, atoms, "
                "or agents");
    }
    void candidate() {
        if (--cand_left < 0)
            throw TooLarge(
                "allocation search exceeded its candidate budget; reduce levels, atoms, or "
                "agents");
        ++evaluated;
    }
};

// `levels` points across [lo, hi] with exact endpoints; 0 is inserted when it
// falls strictly inside, so side payments and idle shares stay reachable.
std::vector<double> grid_points(double lo, double hi, int levels) {
    std::vector<double> g;
    if (!(hi - lo > 0.0)) {
        g.push_back(lo);
        return g;
    }
    g.reserve(static_cast<std::size_t>(levels) + 1);
    for (int k = 0; k < levels; ++k) {
        if (k == 0)
            g.push_back(lo);
        else if (k == levels - 1)
            g.push_back(hi);
        else
            g.push_back(lo + (hi - lo) * (static_cast<double>(k) / (levels - 1)));
    }
    if (lo < 0.0 && hi > 0.0 &&
        std::none_of(g.begin(), g.end(), [](double v) { return v == 0.0; })) {
        g.push_back(0.0);
        std::sort(g.begin(), g.end());
    }
    return g;
}

bool in_space(double v, SpaceClass space) {
    if (space == SpaceClass::Lplus) return v >= -kFeasTol;
    if (space == SpaceClass::Lminus) return v <= kFeasTol;
    return std::isfinite(v);
}

struct Range {
    double lo, hi;
    bool ok;
};

// Admissible interval for one share of `total` at a single atom. Signed spaces
// pin the share between 0 and the local total; the unsigned space lets a share
// overshoot anywhere within the global range [glo, ghi] of the vector being
// split, since later agents can absorb the difference.
Range share_range(double total, SpaceClass space, double glo, double ghi) {
    if (space == SpaceClass::Lplus) return {0.0, std::max(total, 0.0), total >= -kFeasTol};
    if (space == SpaceClass::Lminus) return {std::min(total, 0.0), 0.0, total <= kFeasTol};
    return {std::min(0.0, glo), std::max(0.0, ghi), true};
}

bool lex_less(const std::vector<Values>& a, const std::vector<Values>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t w = 0; w < a[i].size(); ++w) {
            if (a[i][w] < b[i][w]) return true;
            if (a[i][w] > b[i][w]) return false;
        }
    return false;
}

// Two increments break counter-monotonicity when they move strictly together.
bool co_move(double da, double db) { return (da > 0.0 && db > 0.0) || (da < 0.0 && db < 0.0); }

struct Search {
    const std::vector<Measure>& measures;
    const FiniteSpace& sp;
    Budget budget;
    double best = std::numeric_limits<double>::infinity();
    std::vector<Values> best_arg;
    bool found = false;

    Search(const std::vector<Measure>& ms, const FiniteSpace& s, std::int64_t b)
        : measures(ms), sp(s), budget(b) {}

    void offer(const std::vector<Values>& comps) {
        budget.candidate();
        double v = 0.0;
        for (std::size_t i = 0; i < measures.size(); ++i) v += measures[i](sp, comps[i]);
        if (!found ? !(v != v)  // reject NaN, accept anything else first
                   : (v < best || (v == best && lex_less(comps, best_arg)))) {
            best = v;
            best_arg = comps;
            found = true;
        }
    }

    OracleResult result() const {
        if (!found)
            throw NotRepresentable("no feasible allocation exists on the requested grid");
        return {best, best_arg, budget.evaluated};
    }
};

// ---- unconstrained: independent value grid per atom per agent --------------

struct UncRec {
    Search& s;
    const Values& x;
    SpaceClass space;
    const std::vector<std::vector<double>>& grids;
    std::vector<Values>& comps;
    std::size_t atoms, n;

    void go(std::size_t slot) {
        if (slot == (n - 1) * atoms) {
            Values& last = comps[n - 1];
            for (std::size_t w = 0; w < atoms; ++w) {
                double v = x[w];
                for (std::size_t i = 0; i + 1 < n; ++i) v -= comps[i][w];
                if (!in_space(v, space)) return;
                last[w] = v;
            }
            s.offer(comps);
            return;
        }
        const std::size_t agent = slot / atoms, w = slot % atoms;
        for (double v : grids[w]) {
            s.budget.work();
            comps[agent][w] = v;
            go(slot + 1);
        }
    }
};

void run_unconstrained(Search& s, const Values& x, SpaceClass space, int levels) {
    const std::size_t atoms = x.size();
    const std::size_t n = s.measures.size();
    const double glo = *std::min_element(x.begin(), x.end());
    const double ghi = *std::max_element(x.begin(), x.end());
    std::vector<std::vector<double>> grids(atoms);
    double combos = 1.0;
    for (std::size_t w = 0; w < atoms; ++w) {
        Range r = share_range(x[w], space, glo, ghi);
        grids[w] = grid_points(r.lo, r.hi, levels);
    }
    for (std::size_t rep = 0; rep + 1 < n; ++rep)
        for (std::size_t w = 0; w < atoms; ++w) combos *= static_cast<double>(grids[w].size());
    if (combos > static_cast<double>(s.budget.cand_left))
        throw TooLarge("unconstrained grid needs about " + std::to_string(combos) +
                       " allocations, over the candidate budget");
    std::vector<Values> comps(n, Values(atoms, 0.0));
    UncRec rec{s, x, space, grids, comps, atoms, n};
    rec.go(0);
}

// ---- two variable agents splitting xp, everything else already fixed -------

struct PairRec {
    Search& s;
    std::vector<Values>& comps;
    std::size_t i, j;
    Values xp;
    SpaceClass space;
    std::size_t atoms;
    std::vector<std::vector<double>> grids;

    PairRec(Search& srch, std::vector<Values>& c, std::size_t ai, std::size_t aj, Values split,
            SpaceClass sc, int levels)
        : s(srch), comps(c), i(ai), j(aj), xp(std::move(split)), space(sc), atoms(xp.size()) {
        const double glo = *std::min_element(xp.begin(), xp.end());
        const double ghi = *std::max_element(xp.begin(), xp.end());
        grids.resize(atoms);
        for (std::size_t w = 0; w < atoms; ++w) {
            Range r = share_range(xp[w], space, glo, ghi);
            if (!r.ok) return;  // an empty grid marks the atom infeasible
            grids[w] = grid_points(r.lo, r.hi, levels);
        }
    }

    void go(std::size_t w) {
        if (w == atoms) {
            s.offer(comps);
            return;
        }
        if (grids[w].empty()) return;
        for (double a : grids[w]) {
            s.budget.work();
            const double b = xp[w] - a;
            if (!in_space(b, space)) continue;
            bool bad = false;
            for (std::size_t v = 0; v < w && !bad; ++v)
                bad = co_move(a - comps[i][v], b - comps[j][v]);
            if (bad) continue;
            comps[i][w] = a;
            comps[j][w] = b;
            go(w + 1);
        }
    }
};

// ---- counter-monotonic, n >= 3: side-payment/partition parametrization -----
//
// Candidates have the form X_i = (X - m) 1{A_i} + m_i with either m <= min X
// (one agent absorbs the whole swing upward) or m >= max X (one agent absorbs
// it downward). This family is complete for allocations with three or more
// non-constant components; allocations with at most two non-constant
// components are swept separately by fixing the constants on a grid.

struct PartitionRoute {
    Search& s;
    const Values& x;
    SpaceClass space;
    int levels;
    std::size_t atoms, n;
    double essinf, esssup, spanx;
    std::vector<int> assign;
    std::vector<double> cellmin, cellmax;
    std::vector<Values> comps;

    PartitionRoute(Search& srch, const Values& xx, SpaceClass sc, int lv)
        : s(srch), x(xx), space(sc), levels(lv), atoms(xx.size()), n(srch.measures.size()) {
        essinf = *std::min_element(x.begin(), x.end());
        esssup = *std::max_element(x.begin(), x.end());
        const double span = esssup - essinf;
        spanx = span > 0.0 ? span : 1.0;
        assign.assign(atoms, 0);
        cellmin.assign(n, 0.0);
        cellmax.assign(n, 0.0);
        comps.assign(n, Values(atoms, 0.0));
    }

    void run() { rec_partition(0); }

    void rec_partition(std::size_t w) {
        if (w == atoms) {
            handle_partition();
            return;
        }
        for (std::size_t a = 0; a < n; ++a) {
            s.budget.work();
            assign[w] = static_cast<int>(a);
            rec_partition(w + 1);
        }
    }

    void handle_partition() {
        const double inf = std::numeric_limits<double>::infinity();
        std::fill(cellmin.begin(), cellmin.end(), inf);
        std::fill(cellmax.begin(), cellmax.end(), -inf);
        for (std::size_t w = 0; w < atoms; ++w) {
            auto a = static_cast<std::size_t>(assign[w]);
            cellmin[a] = std::min(cellmin[a], x[w]);
            cellmax[a] = std::max(cellmax[a], x[w]);
        }
        for (int b = 0; b < 2; ++b) try_branch(b == 0);
    }

    void try_branch(bool jackpot) {
        double mlo, mhi;
        if (jackpot) {
            mhi = essinf;
            mlo = (space == SpaceClass::Lplus) ? 0.0 : essinf - spanx;
        } else {
            mlo = esssup;
            mhi = (space == SpaceClass::Lminus) ? 0.0 : esssup + spanx;
        }
        if (mlo > mhi + 1e-12) return;
        for (double m : grid_points(std::min(mlo, mhi), mhi, levels)) try_m(jackpot, m);
    }

    void try_m(bool jackpot, double m) {
        const double box_lo = std::min(m, 0.0) - spanx;
        const double box_hi = std::max(m, 0.0) + spanx;
        std::vector<double> rlo(n), rhi(n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool empty = !(cellmin[i] <= cellmax[i]);
            double lo = box_lo, hi = box_hi;
            if (jackpot) {
                if (space == SpaceClass::Lplus) lo = 0.0;
                if (space == SpaceClass::Lminus) hi = empty ? 0.0 : m - cellmax[i];
            } else {
                if (space == SpaceClass::Lplus) lo = empty ? 0.0 : std::max(0.0, m - cellmin[i]);
                if (space == SpaceClass::Lminus) hi = 0.0;
            }
            rlo[i] = std::max(lo, box_lo);
            rhi[i] = std::min(hi, box_hi);
            if (rlo[i] > rhi[i] + 1e-12) return;
        }
        double slo = 0.0, shi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            slo += rlo[i];
            shi += rhi[i];
        }
        if (m < slo - kFeasTol || m > shi + kFeasTol) return;
        // Couple each side-payment interval with the sum constraint so forced
        // components collapse to a single grid point.
        std::vector<std::vector<double>> grids(n);
        std::vector<double> elo(n), ehi(n);
        for (std::size_t i = 0; i < n; ++i) {
            elo[i] = std::max(rlo[i], m - (shi - rhi[i]));
            ehi[i] = std::min(rhi[i], m - (slo - rlo[i]));
            if (elo[i] > ehi[i] + 1e-12) return;
            if (i + 1 < n) grids[i] = grid_points(std::min(elo[i], ehi[i]), ehi[i], levels);
        }
        std::vector<double> mi(n, 0.0);
        rec_side(0, jackpot, m, mi, elo, ehi, grids);
    }

    void rec_side(std::size_t i, bool jackpot, double m, std::vector<double>& mi,
                  const std::vector<double>& elo, const std::vector<double>& ehi,
                  const std::vector<std::vector<double>>& grids) {
        if (i + 1 == n) {
            double rest = m;
            for (std::size_t k = 0; k + 1 < n; ++k) rest -= mi[k];
            if (rest < elo[n - 1] - kFeasTol || rest > ehi[n - 1] + kFeasTol) return;
            mi[n - 1] = rest;
            emit(m, mi);
            return;
        }
        for (double v : grids[i]) {
            s.budget.work();
            mi[i] = v;
            rec_side(i + 1, jackpot, m, mi, elo, ehi, grids);
        }
    }

    void emit(double m, const std::vector<double>& mi) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t w = 0; w < atoms; ++w)
                comps[i][w] =
                    (static_cast<std::size_t>(assign[w]) == i ? x[w] - m : 0.0) + mi[i];
        s.offer(comps);
    }
};

// Sweep for allocations with at most two non-constant components: fix every
// other agent at a grid constant, then run the exhaustive two-agent split.
void corner_route(Search& s, const Values& x, SpaceClass space, int levels) {
    const std::size_t atoms = x.size();
    const std::size_t n = s.measures.size();
    const double essinf = *std::min_element(x.begin(), x.end());
    const double esssup = *std::max_element(x.begin(), x.end());
    std::vector<double> cgrid;
    if (space == SpaceClass::Lplus)
        cgrid = grid_points(0.0, std::max(essinf, 0.0), levels);
    else if (space == SpaceClass::Lminus)
        cgrid = grid_points(std::min(esssup, 0.0), 0.0, levels);
    else
        cgrid = grid_points(std::min(0.0, essinf), std::max(0.0, esssup), levels);

    std::vector<Values> comps(n, Values(atoms, 0.0));
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            others.clear();
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j) others.push_back(k);

            // recursive sweep over the constants held by the other agents
            auto sweep = [&](auto&& self, std::size_t oi, double csum) -> void {
                if (space == SpaceClass::Lplus && csum > essinf + kFeasTol) return;
                if (space == SpaceClass::Lminus && csum < esssup - kFeasTol) return;
                if (oi == others.size()) {
                    Values xp(atoms);
                    for (std::size_t w = 0; w < atoms; ++w) xp[w] = x[w] - csum;
                    PairRec pair(s, comps, i, j, std::move(xp), space, levels);
                    pair.go(0);
                    return;
                }
                for (double c : cgrid) {
                    s.budget.work();
                    for (std::size_t w = 0; w < atoms; ++w) comps[others[oi]][w] = c;
                    self(self, oi + 1, csum + c);
                }
            };
            sweep(sweep, 0, 0.0);
        }
}

// ---- comonotonic: nondecreasing along the sorted order of x ----------------

struct ComoRec {
    Search& s;
    const Values& x;
    SpaceClass space;
    std::size_t atoms, n;
    std::vector<std::size_t> order;
    std::vector<std::vector<double>> grids;
    std::vector<Values> comps;

    ComoRec(Search& srch, const Values& xx, SpaceClass sc, int levels)
        : s(srch), x(xx), space(sc), atoms(xx.size()), n(srch.measures.size()) {
        order.resize(atoms);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
        const double glo = *std::min_element(x.begin(), x.end());
        const double ghi = *std::max_element(x.begin(), x.end());
        grids.resize(atoms);
        for (std::size_t w = 0; w < atoms; ++w) {
            Range r = share_range(x[w], space, glo, ghi);
            if (r.ok) grids[w] = grid_points(r.lo, r.hi, levels);
        }
        comps.assign(n, Values(atoms, 0.0));
    }

    void go(std::size_t k, std::size_t t) {
        if (k == atoms) {
            s.offer(comps);
            return;
        }
        const std::size_t w = order[k];
        if (grids[w].empty()) return;
        const bool tied = k > 0 && x[w] == x[order[k - 1]];
        if (t + 1 == n) {
            double v = x[w];
            for (std::size_t i = 0; i + 1 < n; ++i) v -= comps[i][w];
            if (!in_space(v, space)) return;
            if (k > 0) {
                const double pv = comps[n - 1][order[k - 1]];
                if (tied ? v != pv : v < pv) return;
            }
            comps[n - 1][w] = v;
            go(k + 1, 0);
            return;
        }
        if (tied) {
            s.budget.work();
            comps[t][w] = comps[t][order[k - 1]];
            go(k, t + 1);
            return;
        }
        for (double a : grids[w]) {
            if (k > 0 && a < comps[t][order[k - 1]]) continue;
            s.budget.work();
            comps[t][w] = a;
            go(k, t + 1);
        }
    }
};

void check_inputs(const std::vector<Measure>& measures, const FiniteSpace& sp, const Values& x,
                  SpaceClass space, int levels) {
    if (measures.empty()) throw InvalidParameter("at least one risk functional is required");
    if (x.size() != sp.size())
        throw ShapeMismatch("total-risk vector length differs from the atom count");
    if (x.empty()) throw ShapeMismatch("space has no atoms");
    if (levels < 2) throw InvalidParameter("grid needs at least 2 levels per interval");
    const double lo = *std::min_element(x.begin(), x.end());
    const double hi = *std::max_element(x.begin(), x.end());
    if (space == SpaceClass::Lplus && lo < -kFeasTol)
        throw IncompatibleSignClass("total risk takes negative values; shares restricted to X >= 0 cannot sum to it");
    if (space == SpaceClass::Lminus && hi > kFeasTol)
        throw IncompatibleSignClass("total risk takes positive values; shares restricted to X <= 0 cannot sum to it");
}

}  // namespace

Measure measure_from_distortion(const Distortion& h) {
    return [h](const FiniteSpace& sp, const Values& v) { return choquet_on_space(h, sp, v); };
}

Measure law_indicator_measure(std::vector<std::pair<double, std::int64_t>> target) {
    std::sort(target.begin(), target.end());
    return [target](const FiniteSpace& sp, const Values& v) -> double {
        std::vector<std::size_t> idx(v.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<std::pair<double, std::int64_t>> prof;
        for (std::size_t k : idx) {
            if (!prof.empty() && std::abs(v[k] - prof.back().first) <= 1e-9)
                prof.back().second += sp.weights[k];
            else
                prof.emplace_back(v[k], sp.weights[k]);
        }
        if (prof.size() != target.size()) return 1.0;
        for (std::size_t k = 0; k < prof.size(); ++k)
            if (std::abs(prof[k].first - target[k].first) > 1e-9 ||
                prof[k].second != target[k].second)
                return 1.0;
        return 0.0;
    };
}

OracleResult brute_force_infconv(const std::vector<Measure>& measures, const FiniteSpace& sp,
                                 const Values& x, Dependence regime, SpaceClass space, int levels,
                                 std::int64_t budget) {
    check_inputs(measures, sp, x, space, levels);
    Search s(measures, sp, budget);
    const std::size_t n = measures.size();
    if (n == 1) {
        s.offer({x});
        return s.result();
    }
    switch (regime) {
        case Dependence::unconstrained:
            run_unconstrained(s, x, space, levels);
            break;
        case Dependence::counter_monotonic:
            if (n == 2) {
                std::vector<Values> comps(2, Values(x.size(), 0.0));
                PairRec pair(s, comps, 0, 1, x, space, levels);
                pair.go(0);
            } else {
                PartitionRoute route(s, x, space, levels);
                route.run();
                corner_route(s, x, space, levels);
            }
            break;
        case Dependence::comonotonic: {
            ComoRec rec(s, x, space, levels);
            rec.go(0, 0);
            break;
        }
    }
    return s.result();
}

OracleResult sequential_counter_infconv(const std::vector<Measure>& measures,
                                        const FiniteSpace& sp, const Values& x, SpaceClass space,
                                        int levels, std::int64_t budget) {
    check_inputs(measures, sp, x, space, levels);
    Search s(measures, sp, budget);
    const std::size_t n = measures.size();
    const std::size_t atoms = x.size();
    if (n == 1) {
        s.offer({x});
        return s.result();
    }
    std::vector<Values> comps(n, Values(atoms, 0.0));
    Values prefix(atoms, 0.0);

    // stage_rec: agent j picks its whole vector, counter-monotonic against the
    // running sum of the agents before it; the final agent takes the leftover.
    auto atom_rec = [&](auto&& self, auto&& next_stage, std::size_t j, std::size_t w, double glo,
                        double ghi) -> void {
        if (w == atoms) {
            next_stage(next_stage, j + 1);
            return;
        }
        Range r = share_range(x[w] - prefix[w], space, glo, ghi);
        if (!r.ok) return;
        for (double a : grid_points(r.lo, r.hi, levels)) {
            s.budget.work();
            bool bad = false;
            for (std::size_t v = 0; v < w && !bad; ++v)
                bad = co_move(a - comps[j][v], prefix[w] - prefix[v]);
            if (bad) continue;
            comps[j][w] = a;
            self(self, next_stage, j, w + 1, glo, ghi);
        }
    };
    auto stage_rec = [&](auto&& self, std::size_t j) -> void {
        if (j + 1 == n) {
            Values& last = comps[n - 1];
            for (std::size_t w = 0; w < atoms; ++w) {
                const double v = x[w] - prefix[w];
                if (!in_space(v, space)) return;
                last[w] = v;
            }
            for (std::size_t w = 0; w < atoms; ++w)
                for (std::size_t v = w + 1; v < atoms; ++v)
                    if (co_move(last[w] - last[v], prefix[w] - prefix[v])) return;
            s.offer(comps);
            return;
        }
        Values saved = prefix;
        auto advance = [&](auto&& adv_self, std::size_t jj) -> void {
            for (std::size_t w = 0; w < atoms; ++w) prefix[w] = saved[w] + comps[jj - 1][w];
            self(self, jj);
            prefix = saved;
            (void)adv_self;
        };
        double glo = x[0] - prefix[0], ghi = glo;
        for (std::size_t w = 1; w < atoms; ++w) {
            glo = std::min(glo, x[w] - prefix[w]);
            ghi = std::max(ghi, x[w] - prefix[w]);
        }
        atom_rec(atom_rec, advance, j, 0, glo, ghi);
    };
    stage_rec(stage_rec, 0);
    return s.result();
}

RepresentationWitness representation_decompose(const FiniteSpace& sp,
                                               const std::vector<Values>& components) {
    const std::size_t n = components.size();
    if (n < 3) throw NotRepresentable("decomposition needs at least three components");
    const std::size_t atoms = sp.size();
    for (const Values& c : components)
        if (c.size() != atoms)
            throw ShapeMismatch("component length differs from the atom count");
    if (dependence_check(components, Dependence::counter_monotonic))
        throw NotRepresentable("allocation is not counter-monotonic");
    int nondeg = 0;
    for (const Values& c : components) {
        auto [mn, mx] = std::minmax_element(c.begin(), c.end());
        if (*mx > *mn) ++nondeg;
    }
    if (nondeg < 3)
        throw NotRepresentable("decomposition needs at least three non-constant components");

    Values x(atoms, 0.0);
    for (std::size_t w = 0; w < atoms; ++w)
        for (std::size_t i = 0; i < n; ++i) x[w] += components[i][w];
    const double essinf = *std::min_element(x.begin(), x.end());
    const double esssup = *std::max_element(x.begin(), x.end());

    for (int hyp = 0; hyp < 2; ++hyp) {
        // Each constant is the value its component holds off its active set:
        // the minimum when the swing is upward, the maximum when downward.
        std::vector<double> mi(n);
        for (std::size_t i = 0; i < n; ++i)
            mi[i] = hyp == 0 ? *std::min_element(components[i].begin(), components[i].end())
                             : *std::max_element(components[i].begin(), components[i].end());
        const double m = std::accumulate(mi.begin(), mi.end(), 0.0);
        std::vector<int> owner(atoms, 0);
        bool okay = true;
        for (std::size_t w = 0; w < atoms && okay; ++w) {
            int own = -1;
            for (std::size_t i = 0; i < n; ++i)
                if (components[i][w] != mi[i]) {
                    if (own >= 0) {
                        okay = false;
                        break;
                    }
                    own = static_cast<int>(i);
                }
            owner[w] = own >= 0 ? own : 0;  // atoms at the pivot may join any cell
        }
        for (std::size_t w = 0; w < atoms && okay; ++w)
            for (std::size_t i = 0; i < n && okay; ++i) {
                const double expected =
                    (owner[w] == static_cast<int>(i)) ? x[w] - m + mi[i] : mi[i];
                if (components[i][w] != expected) okay = false;
            }
        if (!okay) continue;
        std::string branch;
        if (m <= essinf + 1e-12)
            branch = "jackpot";
        else if (m >= esssup - 1e-12)
            branch = "scapegoat";
        else
            continue;
        return {mi, owner, branch};
    }
    throw NotRepresentable("no side-payment decomposition reproduces the allocation");
}

CounterexampleReport counterexample_report() {
    FiniteSpace sp = make_space({1, 1, 1, 1});
    const Values x = {1.0, 1.0, 1.0, 0.0};
    // One agent wants a fair coin on {0,1}; two want a quarter chance of 0.5.
    std::vector<Measure> ms = {
        law_indicator_measure({{0.0, 2}, {1.0, 2}}),
        law_indicator_measure({{0.0, 3}, {0.5, 1}}),
        law_indicator_measure({{0.0, 3}, {0.5, 1}}),
    };
    OracleResult seq = sequential_counter_infconv(ms, sp, x, SpaceClass::Linf, 5);
    OracleResult joint =
        brute_force_infconv(ms, sp, x, Dependence::counter_monotonic, SpaceClass::Linf, 5);
    return {seq.value, joint.value, joint.value > seq.value + 1e-9, seq.argmin, joint.argmin};
}

}  // namespace riskshare
