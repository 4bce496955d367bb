#include "riskshare/sharing.hpp"

#include <cmath>
#include <limits>

#include "riskshare/errors.hpp"

namespace riskshare {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_sign_compatible(const Distribution& d, SpaceClass space) {
    if (space == SpaceClass::Lplus && d.sign_class != SpaceClass::Lplus)
        throw IncompatibleSignClass("nonnegative allocations require a nonnegative total");
    if (space == SpaceClass::Lminus && d.sign_class != SpaceClass::Lminus)
        throw IncompatibleSignClass("nonpositive allocations require a nonpositive total");
}
}  // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::three_inequality: return "three_inequality";
        case Provenance::concave_all_equal: return "concave_all_equal";
        case Provenance::var_formula: return "var_formula";
        case Provenance::convex_Lplus: return "convex_Lplus";
        case Provenance::convex_Lminus: return "convex_Lminus";
        case Provenance::convex_Linf_minus_infinity: return "convex_Linf_minus_infinity";
        case Provenance::dual_subadditive_identity: return "dual_subadditive_identity";
        case Provenance::envelope_Lminus: return "envelope_Lminus";
        case Provenance::oracle: return "oracle";
    }
    return "oracle";
}

InfConvResult var_infconv(double alpha, int n, const Distribution& d, Dependence regime) {
    if (n < 2) throw InvalidParameter("var_infconv: n must be >= 2");
    if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidParameter("var_infconv: alpha in [0,1)");
    if (regime == Dependence::comonotonic)
        return {var(d, alpha), regime, Provenance::three_inequality};
    return {var(d, n * alpha), regime, Provenance::var_formula};
}

InfConvResult infconv(const Distortion& h, int n, const Distribution& d, Dependence regime,
                      SpaceClass space, const QuadConfig& cfg) {
    if (n < 2) throw InvalidParameter("infconv: n must be >= 2");
    require_sign_compatible(d, space);
    if (regime == Dependence::comonotonic)
        return {choquet(h, d, cfg), regime, Provenance::three_inequality};
    if (h.family == Family::var_step) return var_infconv(h.params.at("alpha"), n, d, regime);

    ShapeClass sc = classify_shape(h);
    if (sc.tag == ShapeClass::Tag::linear || sc.tag == ShapeClass::Tag::concave)
        return {choquet(h, d, cfg), regime, Provenance::concave_all_equal};

    if (regime == Dependence::counter_monotonic &&
        check_dual_subadditivity(h).dually_subadditive)
        return {choquet(h, d, cfg), regime, Provenance::dual_subadditive_identity};

    if (sc.tag == ShapeClass::Tag::convex) {
        switch (space) {
            case SpaceClass::Lplus:
                return {choquet(counter_transform(h, n, SpaceClass::Lplus), d, cfg), regime,
                        Provenance::convex_Lplus};
            case SpaceClass::Lminus:
                return {choquet(counter_transform(h, n, SpaceClass::Lminus), d, cfg), regime,
                        Provenance::convex_Lminus};
            case SpaceClass::Linf:
                return {-kInf, regime, Provenance::convex_Linf_minus_infinity};
        }
    }

    if (sc.tag == ShapeClass::Tag::concave_convex && regime == Dependence::counter_monotonic &&
        space == SpaceClass::Lminus) {
        double t0 = *sc.t0;
        if (t0 < 1.0 && n >= 1.0 / (1.0 - t0)) {
            auto [env, t0_env] = convex_envelope(h);
            (void)t0_env;
            return {choquet(counter_transform(env, n, SpaceClass::Lminus), d, cfg), regime,
                    Provenance::envelope_Lminus};
        }
        throw UnsupportedCase("pool too small for the envelope identity (needs n >= " +
                              std::to_string(1.0 / (1.0 - t0)) + "); try the oracle");
    }

    throw UnsupportedCase("no closed form for this shape/regime/space combination; "
                          "use the oracle on a finite restatement");
}

double supconv(const Distortion& h, int n, const Distribution& d, const QuadConfig& cfg) {
    if (n < 2) throw InvalidParameter("supconv: n must be >= 2");
    ShapeClass sc = classify_shape(h);
    if (sc.tag != ShapeClass::Tag::convex && sc.tag != ShapeClass::Tag::linear)
        throw ShapeMismatch("supconv identity requires convex (or linear) h, got " +
                            shape_name(sc.tag));
    return choquet(h, d, cfg);
}

AllocationDescriptor optimal_allocation(const Distortion& h, int n, const Distribution& d,
                                        SpaceClass space) {
    if (n < 2) throw InvalidParameter("optimal_allocation: n must be >= 2");
    require_sign_compatible(d, space);
    ShapeClass sc = classify_shape(h);
    AllocationDescriptor out;
    out.n = n;
    if (sc.tag == ShapeClass::Tag::concave || sc.tag == ShapeClass::Tag::linear) {
        out.kind = AllocationDescriptor::Kind::proportional_comonotonic;
        out.weights.assign(n, 1.0 / n);
        return out;
    }
    if (sc.tag == ShapeClass::Tag::convex) {
        if (space == SpaceClass::Linf)
            throw UnsupportedCase(
                "no optimal allocation exists without a sign constraint: the value is -inf");
        out.kind = AllocationDescriptor::Kind::uniform_counter;
        out.side_payments.assign(n, 0.0);
        out.branch = space == SpaceClass::Lplus ? "jackpot" : "scapegoat";
        return out;
    }
    throw UnsupportedCase("no optimal-allocation result for shape " + shape_name(sc.tag));
}

}  // namespace riskshare
