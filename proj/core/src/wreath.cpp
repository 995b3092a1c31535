#include "jensenlab/wreath.hpp"

#include <algorithm>
#include <stdexcept>

namespace jensenlab::wreath {

WreathCoords translate(const WreathCoords& d, std::uint32_t b) {
    WreathCoords out;
    out.shift = d.shift;
    out.parts.reserve(d.parts.size());
    for (const auto& [key, value] : d.parts) out.parts.emplace_back(key ^ b, value);
    std::sort(out.parts.begin(), out.parts.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

WreathCoords multiply(const BaseOps& ops, const WreathCoords& x, const WreathCoords& y) {
    WreathCoords moved = translate(x, y.shift);
    WreathCoords out;
    out.shift = x.shift ^ y.shift;
    out.parts.reserve(moved.parts.size() + y.parts.size());
    std::size_t i = 0, j = 0;
    while (i < moved.parts.size() || j < y.parts.size()) {
        if (j == y.parts.size() ||
            (i < moved.parts.size() && moved.parts[i].first < y.parts[j].first)) {
            out.parts.push_back(moved.parts[i++]);
        } else if (i == moved.parts.size() || y.parts[j].first < moved.parts[i].first) {
            out.parts.push_back(y.parts[j++]);
        } else {
            GroupElement prod = ops.multiply(moved.parts[i].second, y.parts[j].second);
            if (!ops.is_identity(prod))
                out.parts.emplace_back(moved.parts[i].first, std::move(prod));
            ++i;
            ++j;
        }
    }
    return out;
}

WreathCoords inverse(const BaseOps& ops, const WreathCoords& x) {
    WreathCoords inv_parts;
    inv_parts.parts.reserve(x.parts.size());
    for (const auto& [key, value] : x.parts)
        inv_parts.parts.emplace_back(key, ops.inverse(value));
    WreathCoords out = translate(inv_parts, x.shift);
    out.shift = x.shift;
    return out;
}

void validate(const WreathCoords& x, int factors) {
    const std::uint32_t limit = factors >= 32 ? 0xFFFFFFFFu : ((1u << factors) - 1u);
    if ((x.shift & ~limit) != 0)
        throw std::domain_error("wreath shift uses factor index out of configured range");
    std::uint32_t prev = 0;
    bool first = true;
    for (const auto& [key, value] : x.parts) {
        if ((key & ~limit) != 0)
            throw std::domain_error("wreath support key out of configured range");
        if (!first && key <= prev)
            throw std::domain_error("wreath support keys must be strictly increasing");
        prev = key;
        first = false;
        (void)value;
    }
}

bool commuting_block_check(const BaseOps& ops,
                           const std::vector<std::pair<std::uint32_t, GroupElement>>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].first == parts[j].first)
                throw std::invalid_argument("commuting block keys must be pairwise distinct");
    auto singleton = [&](std::size_t i) {
        WreathCoords w;
        if (!ops.is_identity(parts[i].second)) w.parts.emplace_back(parts[i].first, parts[i].second);
        return w;
    };
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            WreathCoords u = singleton(i), v = singleton(j);
            WreathCoords uv = multiply(ops, u, v);
            WreathCoords vu = multiply(ops, v, u);
            if (!(uv == vu)) return false;
        }
    }
    return true;
}

}  // namespace jensenlab::wreath
