// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tauplus {

// Unbounded nonnegative integers are used for every modulus, range and residue.
using Int = mpz_class;

Int pow2(unsigned long e);

inline bool bit(const Int& x, unsigned long i) { return mpz_tstbit(x.get_mpz_t(), i) != 0; }

// x[lo + len - 1 : lo]
Int bits(const Int& x, unsigned long lo, unsigned long len);

// Ones' complement of the low `width` bits of x.
Int complement(const Int& x, unsigned long width);

// Number of significant bits; 0 for x == 0.
unsigned long bit_length(const Int& x);

// Least nonnegative residue of a modulo m (m > 0), also for negative a.
Int mod(const Int& a, const Int& m);

std::string to_string(const Int& x);

// Strict decimal parse of a nonnegative integer; throws std::invalid_argument.
Int parse_int(std::string_view text);

// Smallest e with 2^e >= n, for n >= 1.
int ceil_log2(unsigned long n);

}  // namespace tauplus
