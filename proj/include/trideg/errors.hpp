#ifndef TRIDEG_ERRORS_HPP
#define TRIDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trideg {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inversion requested for a series whose z^0 coefficient is not the
// constant polynomial +1 or -1.
struct NotAUnit : SeriesError {
    NotAUnit() : SeriesError("series is not a unit over the integers") {}
};

// A z-coefficient was not divisible by the requested power of x.
struct NotDivisible : SeriesError {
    int order;
    explicit NotDivisible(int n)
        : SeriesError("coefficient of z^" + std::to_string(n) +
                      " is not divisible by the requested power of x"),
          order(n) {}
};

// Support off the residue class required by the cube substitution.
struct BadSupport : SeriesError {
    int order;
    explicit BadSupport(int n)
        : SeriesError("unexpected support at order " + std::to_string(n)),
          order(n) {}
};

struct IdentityViolation : SeriesError {
    std::string identity;
    int order;
    IdentityViolation(std::string which, int n)
        : SeriesError("identity '" + which + "' fails at order " +
                      std::to_string(n)),
          identity(std::move(which)), order(n) {}
};

struct NonIntegral : SeriesError {
    int order;
    explicit NonIntegral(int n)
        : SeriesError("non-integral coefficient at order " + std::to_string(n)),
          order(n) {}
};

struct ResidualNonzero : SeriesError {
    int order;
    explicit ResidualNonzero(int n)
        : SeriesError("algebraic residual nonzero at order " +
                      std::to_string(n)),
          order(n) {}
};

struct NoSeriesRoot : SeriesError {
    NoSeriesRoot() : SeriesError("no power-series root at order 0") {}
};

struct NoAnnihilatingFactor : SeriesError {
    NoAnnihilatingFactor()
        : SeriesError("eliminant has no factor annihilating the series") {}
};

struct NoPositiveRoot : SeriesError {
    NoPositiveRoot() : SeriesError("polynomial has no positive real root") {}
};

struct InsufficientOrder : SeriesError {
    InsufficientOrder() : SeriesError("series order too small for the fit") {}
};

struct ToleranceExceeded : SeriesError {
    using SeriesError::SeriesError;
};

struct Mismatch : SeriesError {
    int order;
    explicit Mismatch(int n)
        : SeriesError("parametrization mismatch at order " + std::to_string(n)),
          order(n) {}
};

}  // namespace trideg

#endif
