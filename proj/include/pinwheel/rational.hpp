#pragma once

// Exact rational scalars. All arithmetic in the toolkit is exact; no
// floating point exists outside the SVG writer.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pin {

using Int = mpz_class;
using Rat = mpq_class;  // kept canonical: gcd(|num|,den)=1, den>=1

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline const Int num(const Rat& q) { return q.get_num(); }
inline const Int den(const Rat& q) { return q.get_den(); }

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

// Largest integer <= q.
Int floor_int(const Rat& q);

// True iff q = a / lambda^k for some integer a and k >= 0.
bool denominator_is_power_of(const Rat& q, const Int& lambda);

// Strips every factor of lambda from v (v must be nonzero).
Int strip_factors(Int v, const Int& lambda);

// Key serialization. Rationals are encoded sign byte ('+', '-' or '0'),
// then numerator and denominator magnitudes, each as a 4-byte big-endian
// length followed by big-endian bytes. Keys are prefix-free; the format is
// frozen (cache files and canonical class ids depend on it).
void append_key(std::string& out, const Int& z);
void append_key(std::string& out, const Rat& q);

std::string to_hex(const std::string& bytes);

}  // namespace pin
