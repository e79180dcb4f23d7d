#ifndef TRIDEG_NUMERIC_HPP
#define TRIDEG_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace trideg {

// Exact scalars. GMP is canonical by construction: mpz_class carries no
// redundant representation and mpq_class is kept reduced with positive
// denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& a) { return sgn(a); }
inline int sign(const Rat& a) { return sgn(a); }

inline Int ipow(Int base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace trideg

#endif
