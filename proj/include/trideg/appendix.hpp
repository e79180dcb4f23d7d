#ifndef TRIDEG_APPENDIX_HPP
#define TRIDEG_APPENDIX_HPP

#include <map>
#include <string>

#include "trideg/bipoly.hpp"
#include "trideg/upoly.hpp"

namespace trideg {

/// Parsed contents of data/appendix_polynomials.txt: sections of
/// "i j c" triples adding c * y^i * t^j.
class AppendixData {
  public:
    static AppendixData load(const std::string& path);

    /// Locate the data file relative to a binary: tries dir/, dir/../,
    /// dir/../../ for data/appendix_polynomials.txt.
    static AppendixData locate(const std::string& argv0);

    const BiPoly& poly(const std::string& name) const;
    UPoly upoly(const std::string& name) const;  // must not depend on y

    /// The degree-6 equation satisfied by K(t).
    const BiPoly& k_equation() const { return poly("K_sextic"); }
    /// Minimal polynomials of the dominant singularities of H and K.
    UPoly r_h() const { return upoly("r_H"); }
    UPoly r_k() const { return upoly("r_K"); }

  private:
    std::map<std::string, BiPoly> sections_;
};

}  // namespace trideg

#endif
