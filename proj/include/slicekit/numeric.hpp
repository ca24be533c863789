#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace slicekit {

// Exact arithmetic everywhere: Rat is an arbitrary-precision rational in
// canonical form, Int an arbitrary-precision integer.
using Rat = mpq_class;
using Int = mpz_class;

// C(n,k) for 0 <= k <= n <= 64; all such values fit in a uint64.
std::uint64_t binom64(int n, int k);

// Exact binomial without the 64-bit cap.
Int binom_int(long n, long k);

// Quotient of an exact division; aborts (ClaimError) if it does not divide.
Int divexact(const Int& num, const Int& den);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

// Accepts "p", "-p", "p/q" in base 10. Throws UsageError on anything else.
Rat rat_from_string(const std::string& s);

double rat_to_double(const Rat& q);

bool fits_int64(const Int& v);
std::int64_t to_int64(const Int& v);

}  // namespace slicekit
