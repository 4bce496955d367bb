#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riskshare/choquet.hpp"
#include "riskshare/config.hpp"
#include "riskshare/errors.hpp"
#include "riskshare/finite.hpp"
#include "riskshare/oracle.hpp"
#include "riskshare/portfolio.hpp"
#include "riskshare/sharing.hpp"

namespace {

using namespace riskshare;

std::string fmt(double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

// Output collects into a buffer and lands on stdout or at out=<path> in one
// final write, so a failing run never leaves a partial file behind.
struct Emit {
    std::optional<std::string> path;
    std::string text;

    void flush() const {
        if (!path) {
            std::cout << text;
            return;
        }
        std::ofstream f(*path);
        if (!f) throw ConfigError("cannot open output file '" + *path + "'");
        f << text;
    }
};

int take_digits(Config& cfg) {
    auto d = cfg.integer_opt("digits");
    if (!d) return 6;
    if (*d < 1 || *d > 17) throw ConfigError("digits must be in [1,17]");
    return *d;
}

SpaceClass space_from_name(const std::string& s) {
    if (s == "Lplus") return SpaceClass::Lplus;
    if (s == "Lminus") return SpaceClass::Lminus;
    if (s == "Linf") return SpaceClass::Linf;
    throw ConfigError("space must be Lplus, Lminus, or Linf; got '" + s + "'");
}

Dependence dependence_from_name(const std::string& s) {
    if (s == "unconstrained") return Dependence::unconstrained;
    if (s == "counter_monotonic") return Dependence::counter_monotonic;
    if (s == "comonotonic") return Dependence::comonotonic;
    throw ConfigError(
        "dependence must be unconstrained, counter_monotonic, or comonotonic; got '" + s + "'");
}

// Which formula route optimal_lambda takes for this shape.
std::string branch_tag(const Distortion& h) {
    return classify_shape(h).tag == ShapeClass::Tag::convex ? "pooling_transform"
                                                            : "dual_distortion";
}

int run_eval(Config& cfg, const QuadConfig& quad) {
    int digits = take_digits(cfg);
    Emit out{cfg.take("out"), {}};
    auto h = distortion_from_config(cfg);
    auto d = distribution_from_config(cfg);
    cfg.finish();
    double v = choquet(h, d, quad);
    std::string tag = d.is_finite()                    ? "finite_sum"
                      : h.family == Family::var_step  ? "quantile_formula"
                                                       : "survival_quadrature";
    out.text = "value,provenance\n" + fmt(v, digits) + "," + tag + "\n";
    out.flush();
    return 0;
}

int run_infconv(Config& cfg, const QuadConfig& quad) {
    int digits = take_digits(cfg);
    Emit out{cfg.take("out"), {}};
    auto h = distortion_from_config(cfg);
    auto d = distribution_from_config(cfg);
    int n = cfg.integer("n");
    auto dep = dependence_from_name(cfg.take("dependence").value_or("counter_monotonic"));
    auto space = space_from_name(cfg.require("space"));
    cfg.finish();
    auto r = infconv(h, n, d, dep, space, quad);
    out.text = "value,provenance\n" + fmt(r.value, digits) + "," +
               provenance_name(r.provenance) + "\n";
    out.flush();
    return 0;
}

int run_portfolio(Config& cfg, const QuadConfig& quad) {
    int digits = take_digits(cfg);
    Emit out{cfg.take("out"), {}};
    PortfolioProblem p;
    p.h = distortion_from_config(cfg);
    p.X = distribution_from_config(cfg);
    p.cost = cost_from_config(cfg);
    p.n = cfg.integer("n");
    p.W = cfg.number_opt("W").value_or(1.0);
    cfg.finish();
    auto sol = optimal_lambda(p, quad);
    out.text = "lambda_star,binding,objective,provenance\n" + fmt(sol.lambda_star, digits) +
               "," + binding_name(sol.binding) + "," + fmt(sol.objective_value, digits) + "," +
               branch_tag(p.h) + "\n";
    out.flush();
    return 0;
}

int run_sweep(Config& cfg, const QuadConfig& quad) {
    int digits = take_digits(cfg);
    Emit out{cfg.take("out"), {}};
    Family family = family_from_name(cfg.require("family"));
    std::string param_key = cfg.require("param");
    const auto& keys = family_param_keys(family);
    if (std::find(keys.begin(), keys.end(), param_key) == keys.end())
        throw ConfigError("family " + family_name(family) + " has no parameter '" + param_key +
                          "' to sweep");
    auto grid = parse_number_list("grid", cfg.require("grid"));
    auto ns = parse_int_list("n", cfg.require("n"));
    std::map<std::string, double> fixed;
    for (const auto& key : keys)
        if (key != param_key)
            if (auto v = cfg.number_opt(key)) fixed[key] = *v;
    auto X = distribution_from_config(cfg);
    auto cost = cost_from_config(cfg);
    double W = cfg.number_opt("W").value_or(1.0);
    cfg.finish();

    auto rows = sweep(family, param_key, grid, fixed, ns, X, cost, W, quad);
    out.text = "param,n,lambda_star,binding,provenance\n";
    for (const auto& row : rows) {
        std::string tag = row.error;
        if (row.lambda_star) {
            auto params = fixed;
            params[param_key] = row.param;
            tag = branch_tag(make_distortion(family, params));
        }
        out.text += fmt(row.param, digits) + "," + std::to_string(row.n) + "," +
                    (row.lambda_star ? fmt(*row.lambda_star, digits) : "") + "," + row.binding +
                    "," + tag + "\n";
    }
    out.flush();
    return 0;
}

int run_oracle(Config& cfg, const QuadConfig&) {
    int digits = take_digits(cfg);
    Emit out{cfg.take("out"), {}};
    auto h = distortion_from_config(cfg);
    auto wts = parse_int_list("weights", cfg.require("weights"));
    Values vals = parse_number_list("values", cfg.require("values"));
    int n = cfg.integer("n");
    auto space = space_from_name(cfg.require("space"));
    int levels = cfg.integer("levels");
    std::int64_t budget = 10000000;
    if (auto b = cfg.number_opt("budget")) {
        if (!(*b >= 1.0) || *b != std::floor(*b))
            throw ConfigError("budget must be a positive integer");
        budget = static_cast<std::int64_t>(*b);
    }
    std::string mode = cfg.take("mode").value_or("joint");
    auto dep_str = cfg.take("dependence");
    cfg.finish();

    if (n < 1) throw ConfigError("n must be >= 1");
    auto sp = make_space(std::vector<std::int64_t>(wts.begin(), wts.end()));
    std::vector<Measure> measures(static_cast<std::size_t>(n), measure_from_distortion(h));

    OracleResult r;
    std::string tag;
    if (mode == "sequential") {
        if (dep_str && *dep_str != "counter_monotonic")
            throw ConfigError("mode=sequential only searches counter_monotonic allocations");
        r = sequential_counter_infconv(measures, sp, vals, space, levels, budget);
        tag = "sequential_search";
    } else if (mode == "joint") {
        auto dep = dependence_from_name(dep_str.value_or("counter_monotonic"));
        r = brute_force_infconv(measures, sp, vals, dep, space, levels, budget);
        tag = "exhaustive_search";
    } else {
        throw ConfigError("mode must be joint or sequential; got '" + mode + "'");
    }
    out.text = "value,candidates,provenance\n" + fmt(r.value, digits) + "," +
               std::to_string(r.candidates) + "," + tag + "\n";
    out.flush();
    return 0;
}

int run_table(Config& cfg, const QuadConfig& quad) {
    int digits = take_digits(cfg);
    Emit out{cfg.take("out"), {}};
    cfg.finish();
    auto h = make_distortion(Family::wang, {{"lambda", -0.6}});
    auto uniform = make_uniform(0.0, 1.0);
    auto pareto = make_pareto(3.0, 2.0);
    auto lognormal = make_lognormal(0.0, 1.0);
    struct Row {
        const char* name;
        Distribution d;
        SpaceClass space;
    };
    const Row rows[] = {
        {"uniform", uniform, SpaceClass::Lplus},
        {"neg_uniform", make_negated(uniform), SpaceClass::Lminus},
        {"pareto", pareto, SpaceClass::Lplus},
        {"neg_pareto", make_negated(pareto), SpaceClass::Lminus},
        {"lognormal", lognormal, SpaceClass::Lplus},
        {"neg_lognormal", make_negated(lognormal), SpaceClass::Lminus},
    };
    out.text = "dist,rho_h,ctm_infconv,provenance\n";
    for (const auto& row : rows) {
        double rho = choquet(h, row.d, quad);
        auto r = infconv(h, 2, row.d, Dependence::counter_monotonic, row.space, quad);
        out.text += std::string(row.name) + "," + fmt(rho, digits) + "," + fmt(r.value, digits) +
                    "," + provenance_name(r.provenance) + "\n";
    }
    out.flush();
    return 0;
}

int run_counterexample(Config& cfg, const QuadConfig&) {
    int digits = take_digits(cfg);
    Emit out{cfg.take("out"), {}};
    cfg.finish();
    auto rep = counterexample_report();
    out.text = "sequential=" + fmt(rep.sequential_value, digits) + " joint>=" +
               fmt(rep.joint_value, digits) + " gap=" + (rep.gap_confirmed ? "true" : "false") +
               " provenance=exhaustive_search\n";
    out.flush();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distortion risk measures, inf-convolutions, and portfolio tools"};
    app.require_subcommand(1);

    struct Verb {
        const char* name;
        const char* desc;
        int (*run)(Config&, const QuadConfig&);
    };
    const Verb verbs[] = {
        {"eval", "evaluate a distortion risk measure against a distribution", run_eval},
        {"infconv", "closed-form inf-convolution of n identical agents", run_infconv},
        {"portfolio", "optimal risky proportion for one cost model", run_portfolio},
        {"sweep", "lambda* table over a parameter grid and pool sizes", run_sweep},
        {"oracle", "grid search over allocations on a finite space", run_oracle},
        {"table", "risk measure vs counter-monotonic pooling for the stock laws", run_table},
        {"counterexample", "sequential vs joint counter-monotonic pooling gap", run_counterexample},
    };

    std::map<std::string, std::vector<std::string>> tokens;
    for (const auto& verb : verbs) {
        auto* sub = app.add_subcommand(verb.name, verb.desc);
        sub->add_option("tokens", tokens[verb.name], "key=value arguments");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        riskshare::QuadConfig quad;
        if (const char* tol = std::getenv("RISKSHARE_TOL"))
            quad.abs_tol = riskshare::parse_number("RISKSHARE_TOL", tol);
        for (const auto& verb : verbs) {
            if (!app.got_subcommand(verb.name)) continue;
            riskshare::Config cfg(tokens[verb.name]);
            return verb.run(cfg, quad);
        }
    } catch (const riskshare::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const riskshare::EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
