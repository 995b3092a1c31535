#include "jensenlab/heisenberg.hpp"

#include <stdexcept>

namespace jensenlab::heisenberg {

HeisenbergCoords power_closed_form(const HeisenbergCoords& x, const Int& N) {
    Int binom = N * (N - 1) / 2;
    return {N * x.m, N * x.n, N * x.k + binom * x.m * x.n};
}

Ut3Matrix to_ut3(const HeisenbergCoords& x) { return {x.n, x.k, x.m}; }

HeisenbergCoords from_ut3(const Ut3Matrix& M) { return {M.m, M.n, M.k}; }

HeisenbergCoords from_matrix(const Mat3& M) {
    const bool unitriangular = M[0][0] == 1 && M[1][1] == 1 && M[2][2] == 1 &&
                               M[1][0] == 0 && M[2][0] == 0 && M[2][1] == 0;
    if (!unitriangular)
        throw std::domain_error("matrix is not upper unitriangular");
    return {M[1][2], M[0][1], M[0][2]};
}

}  // namespace jensenlab::heisenberg
