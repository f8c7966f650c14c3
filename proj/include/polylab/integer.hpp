#pragma once

// Arbitrary precision scalars. Every arithmetic path in polylab goes through
// these types; fixed-width integers only ever hold sizes and indices.

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace polylab {

using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n (n >= 0).
Int binomial(long n, long k);

/// base^exp for exp >= 0, with 0^0 = 1.
Int power(const Int& base, unsigned long exp);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

/// Nonnegative gcd of all entries; 0 for an empty or all-zero vector.
Int gcd_of(std::span<const Int> values);

/// Divides by the gcd of the entries (no-op on the zero vector).
void make_primitive(IntVector& v);

/// Builds a rational from a reduced num/den pair.
Rat make_rat(const Int& num, const Int& den);

/// Fractional part {x} in [0, 1).
Rat fractional_part(const Rat& x);

RatVector to_rational(std::span<const Int> v);

/// Fits in a signed 64-bit integer.
bool fits_int64(const Int& v);
long long to_int64(const Int& v);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace polylab
