#pragma once

#include <gmpxx.h>

namespace creepers {

using Int = mpz_class;
using Rat = mpq_class;

/// Floor of the square root, computed in integer arithmetic.
/// Throws std::domain_error for negative input.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

/// base^exp for a nonnegative exponent.
Int pow_int(const Int& base, unsigned long exp);

/// Floor division (quotient rounded toward -infinity); b must be nonzero.
Int fdiv(const Int& a, const Int& b);

}  // namespace creepers
