#pragma once

#include <stdexcept>
#include <string>

namespace eaqmds {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

#define EAQMDS_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what_arg) : Error(what_arg) {}  \
    }

// Field construction / arithmetic.
EAQMDS_DEFINE_ERROR(NonPrimeCharacteristic);
EAQMDS_DEFINE_ERROR(MagnitudeExceeded);
EAQMDS_DEFINE_ERROR(FieldMismatch);
EAQMDS_DEFINE_ERROR(DivisionByZero);
EAQMDS_DEFINE_ERROR(NotAQuadraticExtension);
EAQMDS_DEFINE_ERROR(OrderDoesNotDivide);
EAQMDS_DEFINE_ERROR(NoEmbedding);

// Polynomials.
EAQMDS_DEFINE_ERROR(DivisionByZeroPolynomial);

// Cyclotomic coset spaces.
EAQMDS_DEFINE_ERROR(NonCoprimeLength);
EAQMDS_DEFINE_ERROR(SNotInAmbient);
EAQMDS_DEFINE_ERROR(NotInAmbient);

// Constacyclic codes.
EAQMDS_DEFINE_ERROR(CoefficientOutsideSubfield);
EAQMDS_DEFINE_ERROR(ZeroDimensional);
EAQMDS_DEFINE_ERROR(FullCode);

// Entanglement-assisted parameters.
EAQMDS_DEFINE_ERROR(NonpositiveLogicalDimension);

// Code families.
EAQMDS_DEFINE_ERROR(NotAdmissible);
EAQMDS_DEFINE_ERROR(LambdaOutOfRange);

// Verification oracles.
EAQMDS_DEFINE_ERROR(OracleBudgetExceeded);

#undef EAQMDS_DEFINE_ERROR

}  // namespace eaqmds
