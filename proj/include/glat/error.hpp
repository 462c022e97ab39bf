#pragma once

#include <stdexcept>
#include <string>

namespace glat {

// Every failure carries a stable kind string that the CLI reports verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define GLAT_ERROR_KIND(Name)                                               \
    struct Name : Error {                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    };

GLAT_ERROR_KIND(NotALattice)
GLAT_ERROR_KIND(CyclicCovers)
GLAT_ERROR_KIND(NotModular)
GLAT_ERROR_KIND(NotADownset)
GLAT_ERROR_KIND(FactorizationMismatch)
GLAT_ERROR_KIND(NotFullRank)
GLAT_ERROR_KIND(ParamMismatch)
GLAT_ERROR_KIND(NotInNegativeCone)
GLAT_ERROR_KIND(TooLarge)
GLAT_ERROR_KIND(Overflow)
GLAT_ERROR_KIND(InvalidGerm)
GLAT_ERROR_KIND(ProductUndefined)
GLAT_ERROR_KIND(NotCentralDualAtom)
GLAT_ERROR_KIND(InvalidSolution)
GLAT_ERROR_KIND(UnknownSuite)
GLAT_ERROR_KIND(BadInput)

#undef GLAT_ERROR_KIND

}  // namespace glat
