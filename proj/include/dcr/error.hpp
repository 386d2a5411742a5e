#pragma once

#include <stdexcept>
#include <string>

namespace dcr {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Field construction.
struct NonPrime : Error { using Error::Error; };
struct NotPrimePower : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NotIrreducible : Error { using Error::Error; };

// Arithmetic.
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct NotRational : Error { using Error::Error; };

// Linear algebra.
struct Singular : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// Group and curve objects.
struct DeterminantNotOne : Error { using Error::Error; };
struct NotOnCurve : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct PrecisionTooLow : Error { using Error::Error; };

// Verification failures. These signal a broken identity, not bad input.
struct HomomorphismViolation : Error { using Error::Error; };
struct IntertwinerViolation : Error { using Error::Error; };
struct ChainViolation : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

}  // namespace dcr
