#pragma once

#include <cstdint>

#include "jensenlab/group.hpp"
#include "jensenlab/rng.hpp"

namespace jensenlab {

// Draws elements as bounded random words in the configured generators:
// word length uniform in [0, max_word_len], each letter a uniformly chosen
// generator or generator inverse. Fully determined by (group, seed).
class ElementSampler {
public:
    ElementSampler(Group group, std::uint64_t seed, int max_word_len = 8);

    const Group& group() const { return group_; }

    GroupElement next();
    std::vector<GroupElement> take(int n);
    std::pair<GroupElement, GroupElement> next_pair();

private:
    Group group_;
    std::vector<GroupElement> letters_;  // generators and their inverses
    SplitMix64 rng_;
    int max_word_len_;
};

// Seed for a named experiment stream derived from a user seed; distinct
// experiment names get independent streams for the same --seed value.
std::uint64_t derive_seed(std::uint64_t user_seed, std::string_view stream_name);

}  // namespace jensenlab
