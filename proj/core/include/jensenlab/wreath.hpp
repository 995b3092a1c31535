#pragma once

#include <cstdint>
#include <functional>

#include "jensenlab/elements.hpp"

namespace jensenlab {

// Restricted wreath product A wr C with C = C2^factors (each factor a copy of
// the order-two group; truncation of the infinite direct power). An element
// is a pair (shift, d) with shift in C and d a finitely supported map from
// C-elements to base elements. C acts on the support by translation:
// moving the copy at key kappa to key kappa * b, i.e. kappa XOR b.
//
// Product: (b1, d1) * (b2, d2) = (b1 XOR b2, translate(d1, b2) . d2).
namespace wreath {

// Base group callbacks. The wreath law never inspects base payloads; it only
// multiplies them, inverts them, and asks whether a value is the identity.
struct BaseOps {
    std::function<GroupElement(const GroupElement&, const GroupElement&)> multiply;
    std::function<GroupElement(const GroupElement&)> inverse;
    std::function<bool(const GroupElement&)> is_identity;
};

inline WreathCoords identity() { return {0, {}}; }

// Translates every support key by XOR with b and re-sorts.
WreathCoords translate(const WreathCoords& d, std::uint32_t b);

WreathCoords multiply(const BaseOps& ops, const WreathCoords& x, const WreathCoords& y);

// (b, d)^-1 = (b, translate(d^-1, b)) since every shift has order two.
WreathCoords inverse(const BaseOps& ops, const WreathCoords& x);

// Validates that all keys and the shift are below 2^factors.
void validate(const WreathCoords& x, int factors);

// True iff the singleton elements a_i(b_i) with pairwise-distinct keys b_i
// commute (they always do; this doubles as a self-test of the product law).
// Throws std::invalid_argument when two keys coincide.
bool commuting_block_check(const BaseOps& ops,
                           const std::vector<std::pair<std::uint32_t, GroupElement>>& parts);

}  // namespace wreath
}  // namespace jensenlab
