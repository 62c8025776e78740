#ifndef SHLAT_ERRORS_HPP
#define SHLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shlat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SHLAT_ERROR(Name)                         \
    struct Name : Error {                         \
        using Error::Error;                       \
        Name() : Error(#Name) {}                  \
    }

// probability-core
SHLAT_ERROR(SumNotOne);
SHLAT_ERROR(NegativeMass);
SHLAT_ERROR(EmptySupport);
SHLAT_ERROR(LengthMismatch);
SHLAT_ERROR(SpaceMismatch);

// lattice-ops
SHLAT_ERROR(NotComparable);

// entropic-metrics
SHLAT_ERROR(DeterministicOperand);

// lattice-geometry
SHLAT_ERROR(TooManyGenerators);
SHLAT_ERROR(SupportTooLarge);

// reconstruction
SHLAT_ERROR(ComponentNotDerived);

// case-studies
SHLAT_ERROR(NotSymmetric);
SHLAT_ERROR(ZeroMass);
SHLAT_ERROR(BadDimensions);
SHLAT_ERROR(NotCoprime);
SHLAT_ERROR(KTooLarge);
SHLAT_ERROR(BadParameters);

// cli / workspace
SHLAT_ERROR(ParseError);
SHLAT_ERROR(ValidationError);

#undef SHLAT_ERROR

}  // namespace shlat

#endif
