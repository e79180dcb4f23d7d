#ifndef TRIDEG_STURM_HPP
#define TRIDEG_STURM_HPP

#include <vector>

#include "trideg/numeric.hpp"
#include "trideg/upoly.hpp"

namespace trideg {

/// Certified isolating interval for a real root: lo < root <= hi, with the
/// interval width hi - lo controlled by the caller.
struct RootInterval {
    Rat lo;
    Rat hi;
    double midpoint() const {
        Rat m = (lo + hi) / 2;
        return m.get_d();
    }
};

/// Signed remainder sequence for root counting. Signs at a point are what
/// matter, so each term is kept content-free to bound coefficient growth.
class SturmSequence {
  public:
    explicit SturmSequence(const UPoly& p);

    /// Number of sign changes of the sequence at x.
    int variations(const Rat& x) const;

    /// Number of distinct real roots in (a, b].
    int count_roots(const Rat& a, const Rat& b) const {
        return variations(a) - variations(b);
    }

    const UPoly& squarefree() const { return chain_.front(); }

  private:
    std::vector<UPoly> chain_;
};

/// Isolate the smallest real root in (0, infinity), certified by Sturm
/// counts, and bisect until hi - lo <= width. Throws NoPositiveRoot when
/// the polynomial has no positive real root.
RootInterval smallest_positive_root(const UPoly& p, const Rat& width);

}  // namespace trideg

#endif
