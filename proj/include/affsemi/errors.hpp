#pragma once

#include <stdexcept>
#include <string>

namespace affsemi {

// Base class for all library errors. Subclasses map onto the CLI exit codes:
// input problems (2), geometry preconditions (3), resource limits (4).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed generator data: empty list, mixed dimensions, negative entries,
// a zero vector, or an unparsable input file.
struct InvalidInput : Error {
  using Error::Error;
};

// coords_in_basis was handed a linearly dependent basis.
struct SingularBasis : Error {
  using Error::Error;
};

// The generators do not span Q^d; the semigroup is not fully embedded.
struct RankDeficient : Error {
  using Error::Error;
};

// The cone has more than d extreme rays.
struct NotSimplicial : Error {
  using Error::Error;
};

struct NotInSemigroup : Error {
  using Error::Error;
};

struct OutsideCone : Error {
  using Error::Error;
};

// An enumeration (Gamma box, class tuples, oracle box) exceeds its cap.
struct ResourceLimit : Error {
  using Error::Error;
};

// A class-representative tuple does not select one element per nonzero class.
struct InvalidTuple : Error {
  using Error::Error;
};

// frobenius_number requires d = 1 and gcd of generators 1.
struct NotNumerical : Error {
  using Error::Error;
};

}  // namespace affsemi
