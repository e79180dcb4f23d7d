#ifndef TRIDEG_MPOLY_HPP
#define TRIDEG_MPOLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "trideg/numeric.hpp"

namespace trideg {

/// Sparse polynomial in at most four variables over the integers. Variable
/// roles are fixed by convention at the call sites (the catalytic systems
/// use 0 = W, 1 = W0, 2 = X, 3 = Z; bivariate algebra uses 0 = y, 1 = t).
class MPoly {
  public:
    static constexpr int kNumVars = 4;
    using Expo = std::array<int, kNumVars>;

    MPoly() = default;
    static MPoly constant(Int c);
    static MPoly variable(int v);
    static MPoly monomial(Expo e, Int c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Int>& terms() const { return terms_; }

    int degree(int v) const;
    bool depends_on(int v) const { return degree(v) > 0; }

    /// Coefficient of v^k, with the v-exponent removed.
    MPoly coeff_wrt(int v, int k) const;
    /// Dense coefficient list in v, lowest first.
    std::vector<MPoly> coeffs_wrt(int v) const;
    static MPoly assemble(int v, const std::vector<MPoly>& coeffs);

    MPoly derivative(int v) const;
    MPoly subst(int v, const MPoly& value) const;

    Int int_content() const;

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Int& s, const MPoly& a);
    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
    MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
    bool operator==(const MPoly& b) const { return terms_ == b.terms_; }
    bool operator!=(const MPoly& b) const { return terms_ != b.terms_; }

    MPoly pow(int e) const;

    /// Exact quotient; asserts that the division leaves no remainder.
    MPoly div_exact(const MPoly& d) const;

    /// Remove every factor v^k and the integer content.
    MPoly strip_monomials() const;

    std::string str(const std::array<const char*, kNumVars>& names) const;

  private:
    void insert(const Expo& e, Int c);
    std::map<Expo, Int> terms_;
};

/// Resultant with respect to variable v, by the subresultant polynomial
/// remainder sequence (fraction-free; agrees with the Sylvester
/// determinant).
MPoly resultant(const MPoly& a, const MPoly& b, int v);

}  // namespace trideg

#endif
