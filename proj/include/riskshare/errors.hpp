#pragma once

#include <stdexcept>
#include <string>

namespace riskshare {

// Base for all engine errors. `kind()` is the stable machine-readable tag the
// CLI prints next to its exit-1 diagnostic.
class EngineError : public std::runtime_error {
public:
    EngineError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct InvalidParameter : EngineError {
    explicit InvalidParameter(const std::string& what) : EngineError("invalid-parameter", what) {}
};
struct UnknownFamily : EngineError {
    explicit UnknownFamily(const std::string& what) : EngineError("unknown-family", what) {}
};
struct ShapeMismatch : EngineError {
    explicit ShapeMismatch(const std::string& what) : EngineError("shape-mismatch", what) {}
};
struct RootNotFound : EngineError {
    explicit RootNotFound(const std::string& what) : EngineError("root-not-found", what) {}
};
struct DegenerateGrid : EngineError {
    explicit DegenerateGrid(const std::string& what) : EngineError("degenerate-grid", what) {}
};
struct DegenerateDenominator : EngineError {
    explicit DegenerateDenominator(const std::string& what) : EngineError("degenerate-denominator", what) {}
};
struct DivergentIntegral : EngineError {
    explicit DivergentIntegral(const std::string& what) : EngineError("divergent-integral", what) {}
};
struct UnsupportedCase : EngineError {
    explicit UnsupportedCase(const std::string& what) : EngineError("unsupported-case", what) {}
};
struct IncompatibleSignClass : EngineError {
    explicit IncompatibleSignClass(const std::string& what) : EngineError("incompatible-sign-class", what) {}
};
struct TooLarge : EngineError {
    explicit TooLarge(const std::string& what) : EngineError("too-large", what) {}
};
struct NotRepresentable : EngineError {
    explicit NotRepresentable(const std::string& what) : EngineError("not-representable", what) {}
};
struct MarginalNotInvertible : EngineError {
    explicit MarginalNotInvertible(const std::string& what) : EngineError("marginal-not-invertible", what) {}
};
struct ConfigError : EngineError {
    explicit ConfigError(const std::string& what) : EngineError("config-error", what) {}
};

}  // namespace riskshare
