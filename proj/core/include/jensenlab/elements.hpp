#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jensenlab/encoding.hpp"

namespace jensenlab {

class GroupElement;

// ---------------------------------------------------------------------------
// Fields: K = Q (exact rationals) or K = F_p, p an odd prime. The rationals
// are kept canonical (reduced, positive denominator); prime-field scalars are
// least nonnegative residues.
// ---------------------------------------------------------------------------

using FieldScalar = std::variant<Rat, long>;

class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(long p);  // rejects characteristic two and non-primes

    bool is_rationals() const { return p_ == 0; }
    long characteristic() const { return p_; }  // 0 for Q

    FieldScalar zero() const;
    FieldScalar one() const;
    FieldScalar from_long(long v) const;
    FieldScalar from_rat(const Rat& q) const;  // Q only

    FieldScalar add(const FieldScalar& a, const FieldScalar& b) const;
    FieldScalar sub(const FieldScalar& a, const FieldScalar& b) const;
    FieldScalar mul(const FieldScalar& a, const FieldScalar& b) const;
    FieldScalar neg(const FieldScalar& a) const;
    FieldScalar inv(const FieldScalar& a) const;  // domain_error on zero

    bool is_zero(const FieldScalar& a) const;
    bool is_one(const FieldScalar& a) const;
    bool eq(const FieldScalar& a, const FieldScalar& b) const;
    // true for 1 and -1
    bool is_sign_unit(const FieldScalar& a) const;

    std::string to_string(const FieldScalar& a) const;
    void encode(Bytes& out, const FieldScalar& a) const;

    // least primitive root of F_p (p_ > 0)
    long primitive_root() const;

    bool operator==(const Field& o) const { return p_ == o.p_; }

private:
    explicit Field(long p) : p_(p) {}
    long p_;
};

// ---------------------------------------------------------------------------
// Payload types, one per group kind. Coordinates are exact, canonical, and
// compare by value.
// ---------------------------------------------------------------------------

// Discrete Heisenberg group element a^m b^n c^k, stored as the exponent
// triple (m, n, k).
struct HeisenbergCoords {
    Int m, n, k;
    bool operator==(const HeisenbergCoords& o) const { return m == o.m && n == o.n && k == o.k; }
};

// Invertible upper-triangular 2x2 matrix [[alpha, t], [0, beta]] over K.
struct TriangularCoords {
    FieldScalar alpha, t, beta;
    bool operator==(const TriangularCoords& o) const = default;
};

// Z^rank (rank 1 is plain Z).
struct FreeAbelianCoords {
    std::vector<Int> coords;
    bool operator==(const FreeAbelianCoords& o) const { return coords == o.coords; }
};

// Z/n, least nonnegative residue.
struct CyclicCoords {
    Int r;
    bool operator==(const CyclicCoords& o) const { return r == o.r; }
};

// Element of A wr C with C = C2^factors truncated to `factors` generators.
// `shift` is the C-part as a bitmask over factor indices. `parts` is the
// finitely supported D-part: pairs (key, base element) sorted by key, where a
// key is itself a C-element bitmask and identity base values are never stored.
struct WreathCoords {
    std::uint32_t shift = 0;
    std::vector<std::pair<std::uint32_t, GroupElement>> parts;
    bool operator==(const WreathCoords& o) const;
};

// Componentwise element of a direct product.
struct DirectProductCoords {
    std::vector<GroupElement> components;
    bool operator==(const DirectProductCoords& o) const;
};

using ElementPayload = std::variant<FreeAbelianCoords, CyclicCoords, HeisenbergCoords,
                                    TriangularCoords, WreathCoords, DirectProductCoords>;

// Opaque canonical element of one configured group. Equality is exact;
// elements of different groups never compare equal.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(std::string group_id, ElementPayload payload)
        : gid_(std::move(group_id)), payload_(std::move(payload)) {}

    const std::string& group_id() const { return gid_; }
    const ElementPayload& payload() const { return payload_; }

    template <class T>
    const T& as() const { return std::get<T>(payload_); }

    bool operator==(const GroupElement& o) const {
        return gid_ == o.gid_ && payload_ == o.payload_;
    }

private:
    std::string gid_;
    ElementPayload payload_;
};

inline bool WreathCoords::operator==(const WreathCoords& o) const {
    return shift == o.shift && parts == o.parts;
}
inline bool DirectProductCoords::operator==(const DirectProductCoords& o) const {
    return components == o.components;
}

// Full 3x3 integer matrix, used by the unitriangular matrix model of the
// Heisenberg group and its test oracles.
using Mat3 = std::array<std::array<Int, 3>, 3>;

// Upper-unitriangular 3x3 integer matrix with free entries
// (1,2) = n, (1,3) = k, (2,3) = m.
struct Ut3Matrix {
    Int n, k, m;
    bool operator==(const Ut3Matrix& o) const { return n == o.n && k == o.k && m == o.m; }
    Mat3 to_matrix() const {
        return Mat3{{{Int(1), n, k}, {Int(0), Int(1), m}, {Int(0), Int(0), Int(1)}}};
    }
};

Mat3 mat3_mul(const Mat3& a, const Mat3& b);

}  // namespace jensenlab
