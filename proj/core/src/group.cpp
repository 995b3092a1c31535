#include "jensenlab/group.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace jensenlab {

struct Group::Desc {
    GroupKind kind;
    std::string text;
    int rank = 0;                  // free_abelian
    long modulus = 0;              // cyclic
    std::optional<Field> field;    // triangular
    int factors = 0;               // wreath
    std::vector<Group> children;   // wreath base / product factors
};

namespace {

long parse_long(std::string_view s, const char* what) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return v;
}

std::string mask_to_set(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    }
    return s + "}";
}

}  // namespace

// --- constructors -----------------------------------------------------------

Group Group::integers() {
    auto d = std::make_shared<Desc>();
    d->kind = GroupKind::free_abelian;
    d->rank = 1;
    d->text = "z";
    return Group(std::move(d));
}

Group Group::free_abelian(int rank) {
    if (rank < 1) throw std::invalid_argument("free abelian rank must be >= 1");
    if (rank == 1) return integers();
    auto d = std::make_shared<Desc>();
    d->kind = GroupKind::free_abelian;
    d->rank = rank;
    d->text = "z^d:" + std::to_string(rank);
    return Group(std::move(d));
}

Group Group::cyclic(long modulus) {
    if (modulus < 1) throw std::invalid_argument("cyclic modulus must be >= 1");
    auto d = std::make_shared<Desc>();
    d->kind = GroupKind::cyclic;
    d->modulus = modulus;
    d->text = "zn:" + std::to_string(modulus);
    return Group(std::move(d));
}

Group Group::heisenberg_group() {
    auto d = std::make_shared<Desc>();
    d->kind = GroupKind::heisenberg;
    d->text = "heisenberg";
    return Group(std::move(d));
}

Group Group::t2_rationals() {
    auto d = std::make_shared<Desc>();
    d->kind = GroupKind::triangular;
    d->field = Field::rationals();
    d->text = "t2:q";
    return Group(std::move(d));
}

Group Group::t2_prime(long p) {
    auto d = std::make_shared<Desc>();
    d->kind = GroupKind::triangular;
    d->field = Field::prime(p);
    d->text = "t2:fp:" + std::to_string(p);
    return Group(std::move(d));
}

Group Group::wreath_product(const Group& base, int factors) {
    if (factors < 1 || factors > 32)
        throw std::invalid_argument("wreath factor count must be in [1, 32]");
    auto d = std::make_shared<Desc>();
    d->kind = GroupKind::wreath;
    d->factors = factors;
    d->children = {base};
    d->text = "wreath:" + base.id() + ":" + std::to_string(factors);
    return Group(std::move(d));
}

Group Group::direct_product(std::vector<Group> factors) {
    if (factors.size() < 2) throw std::invalid_argument("direct product needs >= 2 factors");
    auto d = std::make_shared<Desc>();
    d->kind = GroupKind::direct_product;
    std::string text;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].kind() == GroupKind::wreath || factors[i].kind() == GroupKind::direct_product)
            throw std::invalid_argument("direct product components must be simple descriptors");
        if (i) text += "*";
        text += factors[i].id();
    }
    d->children = std::move(factors);
    d->text = std::move(text);
    return Group(std::move(d));
}

Group Group::parse(std::string_view text) {
    if (text == "heisenberg") return heisenberg_group();
    if (text == "z") return integers();
    if (text == "t2:q") return t2_rationals();
    if (text.starts_with("wreath:")) {
        // the base may itself contain '*'; the factor count follows the last colon
        const auto rest = text.substr(7);
        const auto last_colon = rest.rfind(':');
        if (last_colon == std::string_view::npos)
            throw std::invalid_argument("wreath descriptor needs a factor count");
        Group base = parse(rest.substr(0, last_colon));
        long factors = parse_long(rest.substr(last_colon + 1), "factor count");
        return wreath_product(base, static_cast<int>(factors));
    }
    if (text.find('*') != std::string_view::npos) {
        std::vector<Group> parts;
        std::size_t start = 0;
        while (true) {
            const auto sep = text.find('*', start);
            const auto piece = sep == std::string_view::npos ? text.substr(start)
                                                             : text.substr(start, sep - start);
            parts.push_back(parse(piece));
            if (sep == std::string_view::npos) break;
            start = sep + 1;
        }
        return direct_product(std::move(parts));
    }
    if (text.starts_with("z^d:")) return free_abelian(static_cast<int>(parse_long(text.substr(4), "rank")));
    if (text.starts_with("zn:")) return cyclic(parse_long(text.substr(3), "modulus"));
    if (text.starts_with("t2:fp:")) return t2_prime(parse_long(text.substr(6), "prime"));
    throw std::invalid_argument("unknown group descriptor: '" + std::string(text) + "'");
}

// --- accessors ---------------------------------------------------------------

const std::string& Group::id() const { return d_->text; }
GroupKind Group::kind() const { return d_->kind; }

int Group::rank() const {
    if (d_->kind != GroupKind::free_abelian) throw std::domain_error("rank: not a free abelian group");
    return d_->rank;
}
long Group::modulus() const {
    if (d_->kind != GroupKind::cyclic) throw std::domain_error("modulus: not a cyclic group");
    return d_->modulus;
}
const Field& Group::field() const {
    if (d_->kind != GroupKind::triangular) throw std::domain_error("field: not a t2 group");
    return *d_->field;
}
int Group::wreath_factors() const {
    if (d_->kind != GroupKind::wreath) throw std::domain_error("factors: not a wreath product");
    return d_->factors;
}
const Group& Group::wreath_base() const {
    if (d_->kind != GroupKind::wreath) throw std::domain_error("base: not a wreath product");
    return d_->children[0];
}
const std::vector<Group>& Group::product_factors() const {
    if (d_->kind != GroupKind::direct_product) throw std::domain_error("factors: not a direct product");
    return d_->children;
}

void Group::check_member(const GroupElement& x) const {
    if (x.group_id() != d_->text)
        throw std::domain_error("element of group '" + x.group_id() + "' used with group '" +
                                d_->text + "'");
}

wreath::BaseOps Group::wreath_base_ops() const {
    const Group base = wreath_base();
    return wreath::BaseOps{
        [base](const GroupElement& a, const GroupElement& b) { return base.multiply(a, b); },
        [base](const GroupElement& a) { return base.inverse(a); },
        [base](const GroupElement& a) { return base.is_identity(a); },
    };
}

// --- element builders ---------------------------------------------------------

GroupElement Group::make_integer(Int n) const {
    if (d_->kind != GroupKind::free_abelian || d_->rank != 1)
        throw std::domain_error("make_integer: group is not z");
    FreeAbelianCoords c;
    c.coords.push_back(std::move(n));
    return GroupElement(d_->text, std::move(c));
}

GroupElement Group::make_vector(std::vector<Int> coords) const {
    if (d_->kind != GroupKind::free_abelian) throw std::domain_error("make_vector: not free abelian");
    if (static_cast<int>(coords.size()) != d_->rank)
        throw std::domain_error("make_vector: wrong rank");
    return GroupElement(d_->text, FreeAbelianCoords{std::move(coords)});
}

GroupElement Group::make_cyclic(Int r) const {
    if (d_->kind != GroupKind::cyclic) throw std::domain_error("make_cyclic: not cyclic");
    Int m = d_->modulus;
    Int v = r % m;
    if (v < 0) v += m;
    return GroupElement(d_->text, CyclicCoords{std::move(v)});
}

GroupElement Group::make_heisenberg(Int m, Int n, Int k) const {
    if (d_->kind != GroupKind::heisenberg) throw std::domain_error("make_heisenberg: not heisenberg");
    return GroupElement(d_->text, HeisenbergCoords{std::move(m), std::move(n), std::move(k)});
}

GroupElement Group::make_triangular(FieldScalar alpha, FieldScalar t, FieldScalar beta) const {
    const Field& f = field();
    if (f.is_zero(alpha) || f.is_zero(beta))
        throw std::domain_error("t2 diagonal entries must be nonzero");
    if (f.is_rationals()) {
        std::get<Rat>(alpha).canonicalize();
        std::get<Rat>(t).canonicalize();
        std::get<Rat>(beta).canonicalize();
    }
    return GroupElement(d_->text, TriangularCoords{std::move(alpha), std::move(t), std::move(beta)});
}

GroupElement Group::make_wreath(std::uint32_t shift,
                                std::vector<std::pair<std::uint32_t, GroupElement>> parts) const {
    const Group base = wreath_base();
    std::vector<std::pair<std::uint32_t, GroupElement>> kept;
    kept.reserve(parts.size());
    for (auto& [key, value] : parts) {
        if (value.group_id() != base.id())
            throw std::domain_error("wreath part value from wrong base group");
        if (!base.is_identity(value)) kept.emplace_back(key, std::move(value));
    }
    std::sort(kept.begin(), kept.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t i = 1; i < kept.size(); ++i)
        if (kept[i].first == kept[i - 1].first)
            throw std::domain_error("duplicate wreath support key");
    WreathCoords w{shift, std::move(kept)};
    wreath::validate(w, d_->factors);
    return GroupElement(d_->text, std::move(w));
}

GroupElement Group::make_product(std::vector<GroupElement> components) const {
    const auto& factors = product_factors();
    if (components.size() != factors.size())
        throw std::domain_error("direct product component count mismatch");
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].group_id() != factors[i].id())
            throw std::domain_error("direct product component from wrong factor group");
    return GroupElement(d_->text, DirectProductCoords{std::move(components)});
}

// --- identity / core operations ----------------------------------------------

GroupElement Group::identity() const {
    switch (d_->kind) {
        case GroupKind::free_abelian: {
            FreeAbelianCoords c;
            c.coords.assign(static_cast<std::size_t>(d_->rank), Int(0));
            return GroupElement(d_->text, std::move(c));
        }
        case GroupKind::cyclic:
            return GroupElement(d_->text, CyclicCoords{Int(0)});
        case GroupKind::heisenberg:
            return GroupElement(d_->text, heisenberg::identity());
        case GroupKind::triangular:
            return GroupElement(d_->text, triangular::identity(*d_->field));
        case GroupKind::wreath:
            return GroupElement(d_->text, wreath::identity());
        case GroupKind::direct_product: {
            DirectProductCoords c;
            for (const Group& f : d_->children) c.components.push_back(f.identity());
            return GroupElement(d_->text, std::move(c));
        }
    }
    throw std::logic_error("unreachable");
}

bool Group::is_identity(const GroupElement& x) const {
    check_member(x);
    return x == identity();
}

GroupElement Group::multiply(const GroupElement& x, const GroupElement& y) const {
    check_member(x);
    check_member(y);
    switch (d_->kind) {
        case GroupKind::free_abelian: {
            const auto& a = x.as<FreeAbelianCoords>();
            const auto& b = y.as<FreeAbelianCoords>();
            FreeAbelianCoords c;
            c.coords.reserve(a.coords.size());
            for (std::size_t i = 0; i < a.coords.size(); ++i)
                c.coords.push_back(a.coords[i] + b.coords[i]);
            return GroupElement(d_->text, std::move(c));
        }
        case GroupKind::cyclic: {
            Int r = x.as<CyclicCoords>().r + y.as<CyclicCoords>().r;
            if (r >= d_->modulus) r -= d_->modulus;
            return GroupElement(d_->text, CyclicCoords{std::move(r)});
        }
        case GroupKind::heisenberg:
            return GroupElement(d_->text,
                                heisenberg::multiply(x.as<HeisenbergCoords>(), y.as<HeisenbergCoords>()));
        case GroupKind::triangular:
            return GroupElement(d_->text, triangular::multiply(*d_->field, x.as<TriangularCoords>(),
                                                               y.as<TriangularCoords>()));
        case GroupKind::wreath:
            return GroupElement(d_->text, wreath::multiply(wreath_base_ops(), x.as<WreathCoords>(),
                                                           y.as<WreathCoords>()));
        case GroupKind::direct_product: {
            const auto& a = x.as<DirectProductCoords>();
            const auto& b = y.as<DirectProductCoords>();
            DirectProductCoords c;
            c.components.reserve(a.components.size());
            for (std::size_t i = 0; i < a.components.size(); ++i)
                c.components.push_back(d_->children[i].multiply(a.components[i], b.components[i]));
            return GroupElement(d_->text, std::move(c));
        }
    }
    throw std::logic_error("unreachable");
}

GroupElement Group::inverse(const GroupElement& x) const {
    check_member(x);
    switch (d_->kind) {
        case GroupKind::free_abelian: {
            FreeAbelianCoords c;
            for (const Int& v : x.as<FreeAbelianCoords>().coords) c.coords.push_back(-v);
            return GroupElement(d_->text, std::move(c));
        }
        case GroupKind::cyclic: {
            const Int& r = x.as<CyclicCoords>().r;
            Int v = r == 0 ? Int(0) : Int(d_->modulus - r);
            return GroupElement(d_->text, CyclicCoords{std::move(v)});
        }
        case GroupKind::heisenberg:
            return GroupElement(d_->text, heisenberg::inverse(x.as<HeisenbergCoords>()));
        case GroupKind::triangular:
            return GroupElement(d_->text, triangular::inverse(*d_->field, x.as<TriangularCoords>()));
        case GroupKind::wreath:
            return GroupElement(d_->text, wreath::inverse(wreath_base_ops(), x.as<WreathCoords>()));
        case GroupKind::direct_product: {
            const auto& a = x.as<DirectProductCoords>();
            DirectProductCoords c;
            for (std::size_t i = 0; i < a.components.size(); ++i)
                c.components.push_back(d_->children[i].inverse(a.components[i]));
            return GroupElement(d_->text, std::move(c));
        }
    }
    throw std::logic_error("unreachable");
}

GroupElement Group::power(const GroupElement& x, const Int& n) const {
    check_member(x);
    if (n == 0) return identity();
    const GroupElement base = n < 0 ? inverse(x) : x;
    Int e = abs(n);
    // left-to-right binary exponentiation
    GroupElement acc = base;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits - 1; i-- > 0;) {
        acc = multiply(acc, acc);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = multiply(acc, base);
    }
    return acc;
}

GroupElement Group::commutator(const GroupElement& x, const GroupElement& y) const {
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

GroupElement Group::conjugate(const GroupElement& x, const GroupElement& b) const {
    return multiply(multiply(inverse(b), x), b);
}

std::optional<long> Group::element_order(const GroupElement& x, long cap) const {
    check_member(x);
    if (cap < 1) throw std::invalid_argument("element_order cap must be >= 1");
    GroupElement acc = x;
    for (long n = 1; n <= cap; ++n) {
        if (is_identity(acc)) return n;
        acc = multiply(acc, x);
    }
    return std::nullopt;
}

// --- encoding / printing -------------------------------------------------------

Bytes Group::canonical_encoding(const GroupElement& x) const {
    check_member(x);
    Bytes out;
    switch (d_->kind) {
        case GroupKind::free_abelian: {
            append_byte(out, 'Z');
            const auto& c = x.as<FreeAbelianCoords>().coords;
            append_u32(out, static_cast<std::uint32_t>(c.size()));
            for (const Int& v : c) append_int(out, v);
            break;
        }
        case GroupKind::cyclic:
            append_byte(out, 'C');
            append_int(out, x.as<CyclicCoords>().r);
            break;
        case GroupKind::heisenberg: {
            append_byte(out, 'H');
            const auto& h = x.as<HeisenbergCoords>();
            append_int(out, h.m);
            append_int(out, h.n);
            append_int(out, h.k);
            break;
        }
        case GroupKind::triangular: {
            append_byte(out, 'T');
            append_byte(out, d_->field->is_rationals() ? 'Q' : 'P');
            const auto& t = x.as<TriangularCoords>();
            d_->field->encode(out, t.alpha);
            d_->field->encode(out, t.t);
            d_->field->encode(out, t.beta);
            break;
        }
        case GroupKind::wreath: {
            append_byte(out, 'W');
            const auto& w = x.as<WreathCoords>();
            append_u32(out, w.shift);
            append_u32(out, static_cast<std::uint32_t>(w.parts.size()));
            const Group base = wreath_base();
            for (const auto& [key, value] : w.parts) {
                append_u32(out, key);
                Bytes sub = base.canonical_encoding(value);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            break;
        }
        case GroupKind::direct_product: {
            append_byte(out, 'D');
            const auto& c = x.as<DirectProductCoords>();
            append_u32(out, static_cast<std::uint32_t>(c.components.size()));
            for (std::size_t i = 0; i < c.components.size(); ++i) {
                Bytes sub = d_->children[i].canonical_encoding(c.components[i]);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            break;
        }
    }
    return out;
}

std::string Group::to_string(const GroupElement& x) const {
    check_member(x);
    switch (d_->kind) {
        case GroupKind::free_abelian: {
            const auto& c = x.as<FreeAbelianCoords>().coords;
            if (c.size() == 1) return c[0].get_str();
            std::string s = "(";
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ",";
                s += c[i].get_str();
            }
            return s + ")";
        }
        case GroupKind::cyclic:
            return x.as<CyclicCoords>().r.get_str();
        case GroupKind::heisenberg: {
            const auto& h = x.as<HeisenbergCoords>();
            return "(" + h.m.get_str() + "," + h.n.get_str() + "," + h.k.get_str() + ")";
        }
        case GroupKind::triangular: {
            const auto& t = x.as<TriangularCoords>();
            const Field& f = *d_->field;
            return "(" + f.to_string(t.alpha) + "," + f.to_string(t.t) + "," + f.to_string(t.beta) + ")";
        }
        case GroupKind::wreath: {
            const auto& w = x.as<WreathCoords>();
            std::string s = "w(" + mask_to_set(w.shift) + ";";
            const Group base = wreath_base();
            bool first = true;
            for (const auto& [key, value] : w.parts) {
                if (!first) s += ",";
                s += mask_to_set(key) + "->" + base.to_string(value);
                first = false;
            }
            return s + ")";
        }
        case GroupKind::direct_product: {
            const auto& c = x.as<DirectProductCoords>();
            std::string s = "(";
            for (std::size_t i = 0; i < c.components.size(); ++i) {
                if (i) s += "|";
                s += d_->children[i].to_string(c.components[i]);
            }
            return s + ")";
        }
    }
    throw std::logic_error("unreachable");
}

// --- generators ------------------------------------------------------------------

std::vector<std::pair<std::string, GroupElement>> Group::generators() const {
    std::vector<std::pair<std::string, GroupElement>> gens;
    switch (d_->kind) {
        case GroupKind::free_abelian: {
            for (int i = 0; i < d_->rank; ++i) {
                std::vector<Int> c(static_cast<std::size_t>(d_->rank), Int(0));
                c[static_cast<std::size_t>(i)] = 1;
                gens.emplace_back(d_->rank == 1 ? "e" : "e" + std::to_string(i),
                                  make_vector(std::move(c)));
            }
            break;
        }
        case GroupKind::cyclic:
            gens.emplace_back("g", make_cyclic(1));
            break;
        case GroupKind::heisenberg:
            gens.emplace_back("a", make_heisenberg(1, 0, 0));
            gens.emplace_back("b", make_heisenberg(0, 1, 0));
            gens.emplace_back("c", make_heisenberg(0, 0, 1));
            break;
        case GroupKind::triangular: {
            const Field& f = *d_->field;
            auto tri = [&](long a, long t, long b) {
                return make_triangular(f.from_long(a), f.from_long(t), f.from_long(b));
            };
            gens.emplace_back("u", tri(1, 1, 1));
            gens.emplace_back("e1", tri(-1, 0, 1));
            gens.emplace_back("e2", tri(1, 0, -1));
            if (f.is_rationals()) {
                gens.emplace_back("a2", tri(2, 0, 1));
                gens.emplace_back("b2", tri(1, 0, 2));
                gens.emplace_back("a3", tri(3, 0, 1));
                gens.emplace_back("b3", tri(1, 0, 3));
                gens.emplace_back("a5", tri(5, 0, 1));
                gens.emplace_back("b5", tri(1, 0, 5));
            } else {
                const long g = f.primitive_root();
                gens.emplace_back("ga", tri(g, 0, 1));
                gens.emplace_back("gb", tri(1, 0, g));
            }
            break;
        }
        case GroupKind::wreath: {
            for (int i = 0; i < d_->factors; ++i)
                gens.emplace_back("b" + std::to_string(i), make_wreath(1u << i, {}));
            const Group base = wreath_base();
            for (const auto& [name, value] : base.generators())
                gens.emplace_back(name + "(1)", make_wreath(0, {{0u, value}}));
            break;
        }
        case GroupKind::direct_product: {
            for (std::size_t i = 0; i < d_->children.size(); ++i) {
                for (const auto& [name, value] : d_->children[i].generators()) {
                    std::vector<GroupElement> comps;
                    for (std::size_t j = 0; j < d_->children.size(); ++j)
                        comps.push_back(j == i ? value : d_->children[j].identity());
                    gens.emplace_back("f" + std::to_string(i) + "." + name,
                                      make_product(std::move(comps)));
                }
            }
            break;
        }
    }
    return gens;
}

// --- enumeration --------------------------------------------------------------------

std::optional<std::vector<GroupElement>> Group::try_enumerate(std::size_t cap) const {
    switch (d_->kind) {
        case GroupKind::free_abelian:
        case GroupKind::heisenberg:
            return std::nullopt;
        case GroupKind::cyclic: {
            if (static_cast<std::size_t>(d_->modulus) > cap) return std::nullopt;
            std::vector<GroupElement> all;
            all.reserve(static_cast<std::size_t>(d_->modulus));
            for (long r = 0; r < d_->modulus; ++r) all.push_back(make_cyclic(r));
            return all;
        }
        case GroupKind::triangular: {
            if (d_->field->is_rationals()) return std::nullopt;
            const long p = d_->field->characteristic();
            const std::size_t n = static_cast<std::size_t>((p - 1) * p) * static_cast<std::size_t>(p - 1);
            if (n > cap) return std::nullopt;
            std::vector<GroupElement> all;
            all.reserve(n);
            for (auto& t : triangular::enumerate_prime_field(*d_->field))
                all.push_back(GroupElement(d_->text, std::move(t)));
            return all;
        }
        case GroupKind::wreath: {
            const Group base = wreath_base();
            auto base_all = base.try_enumerate(cap);
            if (!base_all) return std::nullopt;
            if (d_->factors > 20 || base_all->empty()) return std::nullopt;
            const std::size_t keys = std::size_t(1) << d_->factors;
            // |G| = 2^factors * |A|^(2^factors); bail out early if over cap
            const double log_size = static_cast<double>(d_->factors) +
                                    static_cast<double>(keys) *
                                        std::log2(static_cast<double>(base_all->size()));
            if (log_size > std::log2(static_cast<double>(cap))) return std::nullopt;
            std::vector<GroupElement> all;
            std::vector<std::size_t> odo(keys, 0);
            while (true) {
                for (std::uint32_t shift = 0; shift < (1u << d_->factors); ++shift) {
                    std::vector<std::pair<std::uint32_t, GroupElement>> parts;
                    for (std::size_t k = 0; k < keys; ++k)
                        parts.emplace_back(static_cast<std::uint32_t>(k), (*base_all)[odo[k]]);
                    all.push_back(make_wreath(shift, std::move(parts)));
                    if (all.size() > cap) return std::nullopt;
                }
                std::size_t pos = 0;
                while (pos < keys && ++odo[pos] == base_all->size()) odo[pos++] = 0;
                if (pos == keys) break;
            }
            return all;
        }
        case GroupKind::direct_product: {
            std::vector<std::vector<GroupElement>> factor_elems;
            std::size_t total = 1;
            for (const Group& f : d_->children) {
                auto e = f.try_enumerate(cap);
                if (!e) return std::nullopt;
                if (e->empty()) return std::nullopt;
                if (total > cap / e->size() + 1) return std::nullopt;
                total *= e->size();
                factor_elems.push_back(std::move(*e));
            }
            if (total > cap) return std::nullopt;
            std::vector<GroupElement> all;
            all.reserve(total);
            std::vector<std::size_t> odo(factor_elems.size(), 0);
            while (true) {
                std::vector<GroupElement> comps;
                for (std::size_t i = 0; i < odo.size(); ++i) comps.push_back(factor_elems[i][odo[i]]);
                all.push_back(make_product(std::move(comps)));
                std::size_t pos = 0;
                while (pos < odo.size() && ++odo[pos] == factor_elems[pos].size()) odo[pos++] = 0;
                if (pos == odo.size()) break;
            }
            return all;
        }
    }
    return std::nullopt;
}

// --- kind-specific entry points -------------------------------------------------

Ut3Matrix heisenberg_to_ut3(const GroupElement& x) {
    if (!std::holds_alternative<HeisenbergCoords>(x.payload()))
        throw std::domain_error("heisenberg_to_ut3: not a heisenberg element");
    return heisenberg::to_ut3(x.as<HeisenbergCoords>());
}

GroupElement ut3_to_heisenberg(const Group& g, const Mat3& matrix) {
    if (g.kind() != GroupKind::heisenberg)
        throw std::domain_error("ut3_to_heisenberg: target group is not heisenberg");
    HeisenbergCoords h = heisenberg::from_matrix(matrix);
    return g.make_heisenberg(h.m, h.n, h.k);
}

GroupElement t2_projection_tau(const Group& g, const GroupElement& x) {
    if (g.kind() != GroupKind::triangular)
        throw std::domain_error("tau: not a t2 group");
    return GroupElement(g.id(), triangular::tau(g.field(), x.as<TriangularCoords>()));
}

triangular::SubgroupFlags t2_subgroup_membership(const Group& g, const GroupElement& x) {
    if (g.kind() != GroupKind::triangular)
        throw std::domain_error("membership: not a t2 group");
    return triangular::membership(g.field(), x.as<TriangularCoords>());
}

bool wreath_commuting_block_check(
    const Group& g, const std::vector<std::pair<std::uint32_t, GroupElement>>& parts) {
    if (g.kind() != GroupKind::wreath)
        throw std::domain_error("commuting block check: not a wreath product");
    const Group base = g.wreath_base();
    wreath::BaseOps ops{
        [base](const GroupElement& a, const GroupElement& b) { return base.multiply(a, b); },
        [base](const GroupElement& a) { return base.inverse(a); },
        [base](const GroupElement& a) { return base.is_identity(a); },
    };
    return wreath::commuting_block_check(ops, parts);
}

}  // namespace jensenlab
