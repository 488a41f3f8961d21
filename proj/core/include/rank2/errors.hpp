#pragma once

#include <stdexcept>

namespace rank2 {

// Caller errors (bad name, point off the lattice, mixed algebras) and
// internal invariant violations (everything else; hitting one is a bug).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NameNotFound : Error { using Error::Error; };
struct NotDominant : Error { using Error::Error; };
struct NonIntegerLabel : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };

struct InexactDivision : Error { using Error::Error; };
struct NonDominantLeading : Error { using Error::Error; };
struct InvalidDecomposition : Error { using Error::Error; };
struct NegativeResidue : Error { using Error::Error; };
struct NonTriangularSystem : Error { using Error::Error; };

}  // namespace rank2
