#include "jensenlab/triangular.hpp"

#include <stdexcept>

namespace jensenlab::triangular {

std::vector<TriangularCoords> enumerate_prime_field(const Field& f) {
    const long p = f.characteristic();
    if (p == 0) throw std::domain_error("cannot enumerate T(2, Q)");
    std::vector<TriangularCoords> all;
    all.reserve(static_cast<std::size_t>((p - 1) * p * (p - 1)));
    for (long a = 1; a < p; ++a)
        for (long t = 0; t < p; ++t)
            for (long b = 1; b < p; ++b)
                all.push_back({FieldScalar(a), FieldScalar(t), FieldScalar(b)});
    return all;
}

}  // namespace jensenlab::triangular
