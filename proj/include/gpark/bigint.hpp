#pragma once

#include <gmpxx.h>

namespace gpark {

/// Exact arbitrary-precision integer. Counts and determinants flow through
/// this type; the verification path never touches floating point.
using BigInt = mpz_class;

/// gmpxx has no long long overloads; long is 64-bit on every platform this
/// builds for.
static_assert(sizeof(long) == sizeof(long long));
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

/// 4^c.
inline BigInt pow4(unsigned long c) {
  BigInt r = 1;
  r <<= 2 * c;
  return r;
}

}  // namespace gpark
