#include "riskshare/portfolio.hpp"

#include <algorithm>
#include <cmath>

#include "riskshare/choquet.hpp"
#include "riskshare/errors.hpp"

namespace riskshare {

namespace {

struct Inverted {
    double lambda = 0.0;
    bool clamped = false;  // target marginal fell outside c'([0,1])
};

Inverted invert_marginal(const CostModel& c, double y) {
    if (c.marginal_inverse) {
        double v = c.marginal_inverse(y);
        if (std::isnan(v)) throw MarginalNotInvertible("marginal_inverse returned NaN");
        if (v < 0.0) return {0.0, true};
        if (v > 1.0) return {1.0, true};
        return {v, false};
    }
    if (!c.marginal)
        throw MarginalNotInvertible("cost model supplies neither marginal nor marginal_inverse");
    double lo = c.marginal(0.0);
    double hi = c.marginal(1.0);
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
        throw MarginalNotInvertible("marginal is not nondecreasing on [0,1]");
    if (y <= lo) return {0.0, y < lo};
    if (y >= hi) return {1.0, y > hi};
    double a = 0.0;
    double b = 1.0;
    while (b - a > 1e-10) {
        double mid = 0.5 * (a + b);
        if (c.marginal(mid) < y)
            a = mid;
        else
            b = mid;
    }
    return {0.5 * (a + b), false};
}

}  // namespace

CostModel make_quadratic_cost() {
    CostModel c;
    c.cost = [](double l) { return 0.5 * l * l; };
    c.marginal = [](double l) { return l; };
    c.marginal_inverse = [](double y) { return y; };
    return c;
}

CostModel make_power_cost(double p) {
    if (!(p > 1.0)) throw InvalidParameter("power cost needs exponent p > 1");
    CostModel c;
    c.cost = [p](double l) { return std::pow(l, p) / p; };
    c.marginal = [p](double l) { return std::pow(l, p - 1.0); };
    c.marginal_inverse = [p](double y) {
        return y <= 0.0 ? 0.0 : std::pow(y, 1.0 / (p - 1.0));
    };
    return c;
}

std::string binding_name(Binding b) {
    switch (b) {
        case Binding::interior:
            return "interior";
        case Binding::wealth_constrained:
            return "wealth_constrained";
        case Binding::boundary:
            return "boundary";
    }
    return "boundary";
}

LambdaSolution optimal_lambda(const PortfolioProblem& p, const QuadConfig& cfg) {
    if (p.n < 2) throw InvalidParameter("optimal_lambda needs n >= 2");
    if (!(p.W > 0.0)) throw InvalidParameter("initial wealth W must be positive");
    if (!p.cost.cost) throw InvalidParameter("cost model must supply cost()");
    if (p.X.support_lo < -1e-12)
        throw IncompatibleSignClass("risky payoff must be nonnegative; support reaches " +
                                    std::to_string(p.X.support_lo));

    ShapeClass shape = classify_shape(p.h);
    double rho = 0.0;
    switch (shape.tag) {
        case ShapeClass::Tag::concave:
        case ShapeClass::Tag::linear:
            rho = choquet(dual(p.h), p.X, cfg);
            break;
        case ShapeClass::Tag::convex:
            rho = choquet(portfolio_transform(p.h, p.n), p.X, cfg);
            break;
        default:
            throw ShapeMismatch("optimal_lambda handles concave, linear, or convex h; got " +
                                shape_name(shape.tag));
    }

    Inverted foc = invert_marginal(p.cost, rho);
    Inverted cap = invert_marginal(p.cost, p.W);

    LambdaSolution out;
    if (foc.lambda <= cap.lambda) {
        out.lambda_star = foc.lambda;
        out.binding = foc.clamped ? Binding::boundary : Binding::interior;
    } else {
        out.lambda_star = cap.lambda;
        out.binding = cap.clamped ? Binding::boundary : Binding::wealth_constrained;
    }
    out.objective_value = -out.lambda_star * rho + p.cost.cost(out.lambda_star) - p.W;
    return out;
}

std::vector<SweepRow> sweep(Family family, const std::string& param_key,
                            const std::vector<double>& param_grid,
                            const std::map<std::string, double>& fixed_params,
                            const std::vector<int>& n_list, const Distribution& X,
                            const CostModel& cost, double W, const QuadConfig& cfg) {
    if (param_grid.empty() || n_list.empty())
        throw InvalidParameter("sweep needs a nonempty parameter grid and n list");
    std::vector<double> params = param_grid;
    std::vector<int> ns = n_list;
    std::sort(params.begin(), params.end());
    std::sort(ns.begin(), ns.end());

    std::vector<SweepRow> rows;
    rows.reserve(params.size() * ns.size());
    for (double param : params) {
        for (int n : ns) {
            SweepRow row;
            row.param = param;
            row.n = n;
            try {
                std::map<std::string, double> family_params = fixed_params;
                family_params[param_key] = param;
                PortfolioProblem prob;
                prob.h = make_distortion(family, family_params);
                prob.n = n;
                prob.X = X;
                prob.cost = cost;
                prob.W = W;
                LambdaSolution sol = optimal_lambda(prob, cfg);
                row.lambda_star = sol.lambda_star;
                row.binding = binding_name(sol.binding);
            } catch (const EngineError& e) {
                row.error = e.kind();
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace riskshare
