#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riskshare/distortion.hpp"
#include "riskshare/distribution.hpp"
#include "riskshare/quadrature.hpp"

namespace riskshare {

// Convex friction cost of holding a risky proportion lambda in [0,1],
// normalized so cost(0) = 0. `marginal_inverse` may be left empty; the solver
// then inverts `marginal` by bisection on [0,1] to 1e-10.
struct CostModel {
    std::function<double(double)> cost;              // c(lambda)
    std::function<double(double)> marginal;          // c'
    std::function<double(double)> marginal_inverse;  // c'^{-1}, optional
};

CostModel make_quadratic_cost();      // c(l) = l^2 / 2
CostModel make_power_cost(double p);  // c(l) = l^p / p, p > 1

// A fund of n agents sharing the gain lambda * X of a nonnegative payoff X,
// net of the friction cost, out of initial wealth W.
struct PortfolioProblem {
    Distortion h;
    int n = 2;
    Distribution X;
    CostModel cost;
    double W = 1.0;
};

// Which constraint pinned lambda*: the first-order condition (interior), the
// wealth cap c'^{-1}(W), or the [0,1] clamp (boundary).
enum class Binding { interior, wealth_constrained, boundary };

std::string binding_name(Binding b);

struct LambdaSolution {
    double lambda_star = 0.0;
    Binding binding = Binding::interior;
    double objective_value = 0.0;
};

// lambda* = min{ c'^{-1}(rho(X)), c'^{-1}(W) } clamped to [0,1], where rho is
// taken under the dual distortion for concave or linear h and under the
// normalized pooling transform portfolio_transform(h, n) for convex h.
// Throws shape-mismatch for concave-convex h.
LambdaSolution optimal_lambda(const PortfolioProblem& p, const QuadConfig& cfg = {});

struct SweepRow {
    double param = 0.0;
    int n = 0;
    std::optional<double> lambda_star;  // empty when this row's solve failed
    std::string binding;                // empty when this row's solve failed
    std::string error;                  // failing error kind, empty on success
};

// Solves one problem per (param, n) pair, param sweeping `param_key` of the
// family on top of `fixed_params`. Rows come out sorted by (param, n); a row
// whose solve throws records the error kind and leaves the cells empty.
std::vector<SweepRow> sweep(Family family, const std::string& param_key,
                            const std::vector<double>& param_grid,
                            const std::map<std::string, double>& fixed_params,
                            const std::vector<int>& n_list, const Distribution& X,
                            const CostModel& cost, double W, const QuadConfig& cfg = {});

}  // namespace riskshare
