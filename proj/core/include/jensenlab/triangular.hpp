#pragma once

#include "jensenlab/elements.hpp"

namespace jensenlab {

// T(2, K): invertible upper-triangular 2x2 matrices [[alpha, t], [0, beta]]
// over a field K of characteristic != 2. Subgroups:
//   T = unipotent (alpha = beta = 1), E = sign-diagonal, D = diagonal,
// and tau : (alpha, t, beta) -> (alpha, 0, beta) projects onto D.
namespace triangular {

struct SubgroupFlags {
    bool in_t = false;
    bool in_e = false;
    bool in_d = false;
};

inline TriangularCoords identity(const Field& f) { return {f.one(), f.zero(), f.one()}; }

// (a, t, b) * (a1, t1, b1) = (a a1, a t1 + t b1, b b1)
inline TriangularCoords multiply(const Field& f, const TriangularCoords& x,
                                 const TriangularCoords& y) {
    return {f.mul(x.alpha, y.alpha),
            f.add(f.mul(x.alpha, y.t), f.mul(x.t, y.beta)),
            f.mul(x.beta, y.beta)};
}

// inverse = (a^-1, -t a^-1 b^-1, b^-1)
inline TriangularCoords inverse(const Field& f, const TriangularCoords& x) {
    FieldScalar ai = f.inv(x.alpha);
    FieldScalar bi = f.inv(x.beta);
    return {ai, f.neg(f.mul(f.mul(x.t, ai), bi)), bi};
}

inline TriangularCoords tau(const Field& f, const TriangularCoords& x) {
    return {x.alpha, f.zero(), x.beta};
}

inline SubgroupFlags membership(const Field& f, const TriangularCoords& x) {
    SubgroupFlags m;
    const bool t_zero = f.is_zero(x.t);
    m.in_t = f.is_one(x.alpha) && f.is_one(x.beta);
    m.in_e = t_zero && f.is_sign_unit(x.alpha) && f.is_sign_unit(x.beta);
    m.in_d = t_zero;
    return m;
}

// All (p-1)^2 * p elements of T(2, F_p), in a fixed deterministic order.
std::vector<TriangularCoords> enumerate_prime_field(const Field& f);

}  // namespace triangular
}  // namespace jensenlab
