#include "jensenlab/sampler.hpp"

namespace jensenlab {

ElementSampler::ElementSampler(Group group, std::uint64_t seed, int max_word_len)
    : group_(std::move(group)), rng_(seed), max_word_len_(max_word_len) {
    if (max_word_len < 0) throw std::invalid_argument("max word length must be >= 0");
    for (const auto& [name, g] : group_.generators()) {
        letters_.push_back(g);
        letters_.push_back(group_.inverse(g));
    }
    if (letters_.empty()) throw std::logic_error("group has no generators to sample from");
}

GroupElement ElementSampler::next() {
    const auto len = rng_.below(static_cast<std::uint64_t>(max_word_len_) + 1);
    GroupElement e = group_.identity();
    for (std::uint64_t i = 0; i < len; ++i) {
        const auto pick = rng_.below(letters_.size());
        e = group_.multiply(e, letters_[static_cast<std::size_t>(pick)]);
    }
    return e;
}

std::vector<GroupElement> ElementSampler::take(int n) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(next());
    return out;
}

std::pair<GroupElement, GroupElement> ElementSampler::next_pair() {
    GroupElement a = next();
    GroupElement b = next();
    return {std::move(a), std::move(b)};
}

std::uint64_t derive_seed(std::uint64_t user_seed, std::string_view stream_name) {
    std::uint64_t h = 0;
    for (char c : stream_name) h = mix64(h ^ static_cast<unsigned char>(c));
    return mix64(user_seed ^ h);
}

std::optional<MetabelianWitness> find_metabelian_witness(const Group& g,
                                                         ElementSampler& sampler,
                                                         int samples) {
    if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
    for (int i = 0; i < samples; ++i) {
        GroupElement x = sampler.next();
        GroupElement y = sampler.next();
        GroupElement z = sampler.next();
        GroupElement inner = g.commutator(x, y);
        if (!g.is_identity(g.commutator(inner, z)))
            return MetabelianWitness{std::move(x), std::move(y), std::move(z)};
    }
    return std::nullopt;
}

}  // namespace jensenlab
