#pragma once

#include "jensenlab/elements.hpp"

namespace jensenlab {

// Discrete Heisenberg group H = <a, b, c | c = [b,a], [c,a] = [c,b] = 1>,
// elements written uniquely as a^m b^n c^k. The product law in coordinates:
//   (m, n, k) * (m1, n1, k1) = (m + m1, n + n1, m1*n + k + k1)
namespace heisenberg {

inline HeisenbergCoords identity() { return {0, 0, 0}; }

inline HeisenbergCoords multiply(const HeisenbergCoords& x, const HeisenbergCoords& y) {
    return {x.m + y.m, x.n + y.n, y.m * x.n + x.k + y.k};
}

// (m, n, k)^-1 = (-m, -n, m*n - k)
inline HeisenbergCoords inverse(const HeisenbergCoords& x) {
    return {-x.m, -x.n, x.m * x.n - x.k};
}

// Closed form for powers: (m, n, k)^N = (N m, N n, N k + N(N-1)/2 * m n).
HeisenbergCoords power_closed_form(const HeisenbergCoords& x, const Int& N);

// Isomorphism with UT(3, Z): a^m b^n c^k -> [[1, n, k], [0, 1, m], [0, 0, 1]].
Ut3Matrix to_ut3(const HeisenbergCoords& x);
HeisenbergCoords from_ut3(const Ut3Matrix& M);

// Validates unitriangular shape before extracting coordinates.
HeisenbergCoords from_matrix(const Mat3& M);

// phi(a^m b^n c^k) = m*n - 2k, evaluated exactly.
inline Int phi_exact(const HeisenbergCoords& x) { return x.m * x.n - 2 * x.k; }

}  // namespace heisenberg
}  // namespace jensenlab
