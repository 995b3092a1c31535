#include "jensenlab/encoding.hpp"

#include <stdexcept>

namespace jensenlab {

void append_u32(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<unsigned char>(v >> 24));
    out.push_back(static_cast<unsigned char>(v >> 16));
    out.push_back(static_cast<unsigned char>(v >> 8));
    out.push_back(static_cast<unsigned char>(v));
}

void append_byte(Bytes& out, unsigned char b) { out.push_back(b); }

namespace {

// Minimal-width big-endian two's-complement body of z. Zero -> empty.
Bytes twos_complement(const Int& z) {
    Bytes body;
    if (z == 0) return body;
    if (z > 0) {
        const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
        std::size_t len = bits / 8 + 1;  // always leaves the top bit clear
        body.resize(len, 0);
        std::size_t count = 0;
        mpz_export(body.data() + (len - (bits + 7) / 8), &count, 1, 1, 1, 0,
                   z.get_mpz_t());
        // drop a spare leading zero byte when the top payload bit is clear
        if (len >= 2 && body[0] == 0 && (body[1] & 0x80) == 0)
            body.erase(body.begin());
        return body;
    }
    // negative: find minimal L with z >= -2^(8L-1), then encode 2^(8L) + z
    std::size_t len = 1;
    {
        Int bound = -(Int(1) << (8 * len - 1));
        while (z < bound) {
            ++len;
            bound = -(Int(1) << (8 * len - 1));
        }
    }
    Int t = (Int(1) << (8 * len)) + z;  // in [2^(8L-1), 2^(8L))
    body.resize(len, 0);
    const std::size_t tbytes = (mpz_sizeinbase(t.get_mpz_t(), 2) + 7) / 8;
    std::size_t count = 0;
    mpz_export(body.data() + (len - tbytes), &count, 1, 1, 1, 0, t.get_mpz_t());
    return body;
}

}  // namespace

void append_int(Bytes& out, const Int& z) {
    Bytes body = twos_complement(z);
    if (body.size() > 0xFFFFFFFFu) throw std::length_error("integer encoding too large");
    append_u32(out, static_cast<std::uint32_t>(body.size()));
    out.insert(out.end(), body.begin(), body.end());
}

void append_rat(Bytes& out, const Rat& q) {
    append_int(out, q.get_num());
    append_int(out, q.get_den());
}

std::string hex(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (unsigned char c : b) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 0xF]);
    }
    return s;
}

}  // namespace jensenlab
