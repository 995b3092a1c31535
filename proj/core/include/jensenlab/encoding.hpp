#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace jensenlab {

using Int = mpz_class;
using Rat = mpq_class;
using Bytes = std::vector<unsigned char>;

// Canonical byte encodings. Every group element serializes through these
// primitives, which makes element keys stable across runs and platforms:
// fixed-width big-endian length prefixes, minimal big-endian two's-complement
// integer bodies (zero encodes as the empty body).

void append_u32(Bytes& out, std::uint32_t v);
void append_byte(Bytes& out, unsigned char b);

// [u32 length][two's-complement big-endian bytes, minimal width]
void append_int(Bytes& out, const Int& z);

// numerator then denominator of the canonical (reduced, positive-denominator) form
void append_rat(Bytes& out, const Rat& q);

// Exact double conversion helpers used by evaluators. mpz_get_d truncates,
// which is exact whenever the value has at most 53 significant bits; the
// evaluators are arranged so that is the common case.
inline double to_double(const Int& z) { return z.get_d(); }
inline double to_double(const Rat& q) { return q.get_d(); }

std::string hex(const Bytes& b);

}  // namespace jensenlab
