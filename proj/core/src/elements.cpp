#include "jensenlab/elements.hpp"

#include <stdexcept>

namespace jensenlab {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_pow(long base, long exp, long p) {
    long r = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = static_cast<long>((static_cast<unsigned __int128>(r) * base) % p);
        base = static_cast<long>((static_cast<unsigned __int128>(base) * base) % p);
        exp >>= 1;
    }
    return r;
}

}  // namespace

Field Field::prime(long p) {
    if (p == 2) throw std::invalid_argument("characteristic two not supported");
    if (!is_prime(p)) throw std::invalid_argument("t2 field modulus must be an odd prime");
    return Field(p);
}

FieldScalar Field::zero() const { return is_rationals() ? FieldScalar(Rat(0)) : FieldScalar(long(0)); }
FieldScalar Field::one() const { return is_rationals() ? FieldScalar(Rat(1)) : FieldScalar(long(1)); }

FieldScalar Field::from_long(long v) const {
    if (is_rationals()) return Rat(v);
    long r = v % p_;
    if (r < 0) r += p_;
    return r;
}

FieldScalar Field::from_rat(const Rat& q) const {
    if (!is_rationals()) throw std::domain_error("rational scalar in prime field");
    Rat c = q;
    c.canonicalize();
    return c;
}

FieldScalar Field::add(const FieldScalar& a, const FieldScalar& b) const {
    if (is_rationals()) return Rat(std::get<Rat>(a) + std::get<Rat>(b));
    return (std::get<long>(a) + std::get<long>(b)) % p_;
}

FieldScalar Field::sub(const FieldScalar& a, const FieldScalar& b) const {
    if (is_rationals()) return Rat(std::get<Rat>(a) - std::get<Rat>(b));
    long r = (std::get<long>(a) - std::get<long>(b)) % p_;
    if (r < 0) r += p_;
    return r;
}

FieldScalar Field::mul(const FieldScalar& a, const FieldScalar& b) const {
    if (is_rationals()) return Rat(std::get<Rat>(a) * std::get<Rat>(b));
    return static_cast<long>((static_cast<unsigned __int128>(std::get<long>(a)) * std::get<long>(b)) % p_);
}

FieldScalar Field::neg(const FieldScalar& a) const {
    if (is_rationals()) return Rat(-std::get<Rat>(a));
    long r = std::get<long>(a);
    return r == 0 ? 0 : p_ - r;
}

FieldScalar Field::inv(const FieldScalar& a) const {
    if (is_zero(a)) throw std::domain_error("field inverse of zero");
    if (is_rationals()) return Rat(1 / std::get<Rat>(a));
    return mod_pow(std::get<long>(a), p_ - 2, p_);
}

bool Field::is_zero(const FieldScalar& a) const {
    return is_rationals() ? std::get<Rat>(a) == 0 : std::get<long>(a) == 0;
}

bool Field::is_one(const FieldScalar& a) const {
    return is_rationals() ? std::get<Rat>(a) == 1 : std::get<long>(a) == 1;
}

bool Field::eq(const FieldScalar& a, const FieldScalar& b) const {
    return is_rationals() ? std::get<Rat>(a) == std::get<Rat>(b)
                          : std::get<long>(a) == std::get<long>(b);
}

bool Field::is_sign_unit(const FieldScalar& a) const {
    if (is_rationals()) {
        const Rat& q = std::get<Rat>(a);
        return q == 1 || q == -1;
    }
    long r = std::get<long>(a);
    return r == 1 || r == p_ - 1;
}

std::string Field::to_string(const FieldScalar& a) const {
    if (is_rationals()) return std::get<Rat>(a).get_str();
    return std::to_string(std::get<long>(a));
}

void Field::encode(Bytes& out, const FieldScalar& a) const {
    if (is_rationals()) {
        append_rat(out, std::get<Rat>(a));
    } else {
        append_int(out, Int(std::get<long>(a)));
    }
}

long Field::primitive_root() const {
    if (p_ == 0) throw std::domain_error("primitive root only defined for prime fields");
    const long order = p_ - 1;
    std::vector<long> prime_factors;
    long m = order;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    for (long g = 2; g < p_; ++g) {
        bool ok = true;
        for (long q : prime_factors)
            if (mod_pow(g, order / q, p_) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

}  // namespace jensenlab
