#pragma once

#include <cstdint>

#include "jensenlab/group_function.hpp"

namespace jensenlab {

// Deterministic bounded noise u : G -> R^d with ||u(x)||_inf <= epsilon.
// Coordinate i of u(x) is epsilon * (2 h - 1) where h in [0,1) comes from
// mix64(seed ^ hash_bytes(canonical_encoding(x)) ^ i). Keying on the element
// encoding (never on evaluation order) makes the stream reproducible across
// runs, platforms, and any parallel schedule.
struct NoiseModel {
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::size_t dimension = 1;
};

ValueVector bounded_noise(const NoiseModel& model, const Group& g, const GroupElement& x);

// f = u as a GroupFunction, with the analytic Jensen-defect bound 4*epsilon
// attached: |u(xy) + u(xy^-1) - 2u(x)| <= epsilon + epsilon + 2*epsilon.
GroupFunction pure_noise(const Group& g, const NoiseModel& model);

// f = j + u for an exact Jensen function j; attaches the analytic defect
// bound 4*epsilon (j contributes zero defect).
GroupFunction noisy_jensen(const GroupFunction& j, const NoiseModel& model);

}  // namespace jensenlab
