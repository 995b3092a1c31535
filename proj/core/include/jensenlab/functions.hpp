#pragma once

#include "jensenlab/group_function.hpp"

namespace jensenlab {

// phi(a^m b^n c^k) = m n - 2 k. An exact Jensen solution on the Heisenberg
// group that is not a quasicharacter (its additive defect is unbounded).
double heisenberg_phi(const GroupElement& x);
GroupFunction heisenberg_phi_function(const Group& g);

// j(a^m b^n c^k) = alpha m + beta n + lambda (m n - 2 k); the general member
// of the Jensen family on the Heisenberg group vanishing at the identity.
// The integer part m n - 2 k is evaluated exactly before any rounding.
struct HeisenbergJensenParams {
    double alpha = 0.0;
    double beta = 0.0;
    double lambda = 0.0;
};
GroupFunction heisenberg_jensen(const Group& g, const HeisenbergJensenParams& p);

// chi(a^m b^n c^k) = s m + t n, a genuine character of the Heisenberg group.
GroupFunction heisenberg_character(const Group& g, double s, double t);

// Exponent of the prime p in the canonical rational q (negative for
// denominator factors); sign of q is ignored.
long rational_prime_exponent(const Rat& q, unsigned long p);

// Real character of Q^*: sum of weights[i] * v_{primes[i]}(q). Finitely
// supported on a fixed prime list, sign-ignoring; exact on any rational whose
// factors outside the list carry weight zero by construction.
struct RationalCharacter {
    std::vector<unsigned long> primes{2, 3, 5, 7, 11, 13};
    std::vector<double> weights{1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125};
    double operator()(const Rat& q) const;
};

// Character of T(2,K) factoring through the diagonal projection tau:
// f(alpha, t, beta) = chi_a(alpha) + chi_b(beta). Over a prime field the real
// character space of K* is trivial, so the function is identically zero.
GroupFunction t2_diag_character(const Group& g, RationalCharacter chi_alpha,
                                RationalCharacter chi_beta);

// A canonical real character per group kind, scaled by `weight`:
//   z / z^d: weight * (sum of coordinates)      zn: 0
//   heisenberg: weight * (m + n)                t2:q: diagonal prime character
//   t2:fp: 0                                    wreath: sum over support of base character
//   products: sum over components
GroupFunction natural_character(const Group& g, double weight = 1.0);

// f(n) = slope * n on z.
GroupFunction linear_on_z(const Group& g, double slope);

// f(n) = n^2 on z; the standard example with unbounded Jensen defect.
GroupFunction square_on_z(const Group& g);

GroupFunction zero_function(const Group& g, std::size_t dimension = 1);
GroupFunction constant_function(const Group& g, ValueVector value);

// Lookup-table function: declared values at listed elements, `fallback`
// elsewhere.
GroupFunction table_function(const Group& g,
                             std::vector<std::pair<GroupElement, ValueVector>> entries,
                             ValueVector fallback, std::string name);

}  // namespace jensenlab
