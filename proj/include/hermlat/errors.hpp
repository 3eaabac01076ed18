#pragma once

#include <stdexcept>
#include <string>

namespace hermlat {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HERMLAT_ERROR(Name)                                                 \
    struct Name : Error {                                                   \
        explicit Name(const std::string& what = #Name) : Error(what) {}     \
    }

HERMLAT_ERROR(UnsupportedDiscriminant);
HERMLAT_ERROR(MixedRings);
HERMLAT_ERROR(DivisionByZero);
HERMLAT_ERROR(NotRamified);
HERMLAT_ERROR(NonIntegralEntries);
HERMLAT_ERROR(SingularMatrix);
HERMLAT_ERROR(NotHermitian);
HERMLAT_ERROR(SingularGram);
HERMLAT_ERROR(NotASublattice);
HERMLAT_ERROR(NonIntegralLattice);
HERMLAT_ERROR(ActionIncompatible);
HERMLAT_ERROR(WrongDiscriminant);
HERMLAT_ERROR(ZeroScalar);
HERMLAT_ERROR(NotRamifiedElement);
HERMLAT_ERROR(NotDefinite);
HERMLAT_ERROR(IsotropicVector);
HERMLAT_ERROR(NotInLattice);
HERMLAT_ERROR(WrongSignature);
HERMLAT_ERROR(UnknownCase);
HERMLAT_ERROR(BadD);
HERMLAT_ERROR(ParseError);

#undef HERMLAT_ERROR

}  // namespace hermlat
