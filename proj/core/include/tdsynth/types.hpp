#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tdsynth {

// All matrix and vector entries are arbitrary-precision integers. Entries
// grow like 2^k during synthesis, so fixed-width integers are not an option.
using Int = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape or index mismatch between operands.
struct DimensionError : Error {
  using Error::Error;
};

// Input outside the domain of an operation (non-orthogonal matrix, non-unit
// vector, odd exponent where an even one is required, ...).
struct DomainError : Error {
  using Error::Error;
};

// Malformed file or text input.
struct ParseError : Error {
  using Error::Error;
};

// A consistency condition guaranteed by the theory failed. This always
// indicates a bug and is never caught internally.
struct InternalError : Error {
  using Error::Error;
};

inline bool is_even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }
inline bool is_odd(const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

// 2^e as an Int.
inline Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace tdsynth
