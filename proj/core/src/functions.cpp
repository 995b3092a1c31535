#include "jensenlab/functions.hpp"

#include <map>
#include <memory>

#include "jensenlab/heisenberg.hpp"

namespace jensenlab {

namespace {

const HeisenbergCoords& hcoords(const GroupElement& x) {
    if (!std::holds_alternative<HeisenbergCoords>(x.payload()))
        throw std::domain_error("expected a heisenberg element");
    return x.as<HeisenbergCoords>();
}

void require_kind(const Group& g, GroupKind k, const char* what) {
    if (g.kind() != k) throw std::domain_error(std::string(what) + ": wrong group kind");
}

}  // namespace

double heisenberg_phi(const GroupElement& x) {
    return to_double(heisenberg::phi_exact(hcoords(x)));
}

GroupFunction heisenberg_phi_function(const Group& g) {
    require_kind(g, GroupKind::heisenberg, "phi");
    GroupFunction f(
        g, 1, [](const GroupElement& x) { return ValueVector::scalar(heisenberg_phi(x)); },
        "phi");
    return f.with_defect_bound(0.0);
}

GroupFunction heisenberg_jensen(const Group& g, const HeisenbergJensenParams& p) {
    require_kind(g, GroupKind::heisenberg, "heisenberg jensen");
    GroupFunction f(
        g, 1,
        [p](const GroupElement& x) {
            const auto& h = hcoords(x);
            // m n - 2 k collapses to a small integer for powers of a fixed
            // element even when m, n, k themselves are huge; evaluate it in
            // exact integers before converting.
            const double phi = to_double(heisenberg::phi_exact(h));
            const double v = p.alpha * to_double(h.m) + p.beta * to_double(h.n) + p.lambda * phi;
            return ValueVector::scalar(v);
        },
        "jensen(a=" + std::to_string(p.alpha) + ",b=" + std::to_string(p.beta) +
            ",l=" + std::to_string(p.lambda) + ")");
    return f.with_defect_bound(0.0);
}

GroupFunction heisenberg_character(const Group& g, double s, double t) {
    require_kind(g, GroupKind::heisenberg, "heisenberg character");
    GroupFunction f(
        g, 1,
        [s, t](const GroupElement& x) {
            const auto& h = hcoords(x);
            return ValueVector::scalar(s * to_double(h.m) + t * to_double(h.n));
        },
        "char(" + std::to_string(s) + "," + std::to_string(t) + ")");
    return f.with_defect_bound(0.0);
}

long rational_prime_exponent(const Rat& q, unsigned long p) {
    if (q == 0) throw std::domain_error("prime exponent of zero");
    Int tmp;
    const long num = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(),
                                                  Int(p).get_mpz_t()));
    const long den = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(),
                                                  Int(p).get_mpz_t()));
    return num - den;
}

double RationalCharacter::operator()(const Rat& q) const {
    if (primes.size() != weights.size())
        throw std::invalid_argument("prime/weight lists differ in length");
    double s = 0.0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (weights[i] == 0.0) continue;
        s += weights[i] * static_cast<double>(rational_prime_exponent(q, primes[i]));
    }
    return s;
}

GroupFunction t2_diag_character(const Group& g, RationalCharacter chi_alpha,
                                RationalCharacter chi_beta) {
    require_kind(g, GroupKind::triangular, "t2 diagonal character");
    if (!g.field().is_rationals()) {
        // real characters of F_p^* vanish; keep the shape but return zero
        return zero_function(g).renamed("diagchar(trivial:finite field)");
    }
    GroupFunction f(
        g, 1,
        [chi_alpha, chi_beta](const GroupElement& x) {
            const auto& t = x.as<TriangularCoords>();
            return ValueVector::scalar(chi_alpha(std::get<Rat>(t.alpha)) +
                                       chi_beta(std::get<Rat>(t.beta)));
        },
        "diagchar");
    return f.with_defect_bound(0.0);
}

namespace {

// Exact integer "coordinate sum" characters; doubles only at the final step.
Int natural_character_int(const Group& g, const GroupElement& x);

Int natural_character_int(const Group& g, const GroupElement& x) {
    switch (g.kind()) {
        case GroupKind::free_abelian: {
            Int s = 0;
            for (const Int& v : x.as<FreeAbelianCoords>().coords) s += v;
            return s;
        }
        case GroupKind::cyclic:
            return 0;
        case GroupKind::heisenberg: {
            const auto& h = x.as<HeisenbergCoords>();
            return h.m + h.n;
        }
        case GroupKind::triangular:
            throw std::domain_error("integer character undefined for t2");
        case GroupKind::wreath: {
            Int s = 0;
            const Group base = g.wreath_base();
            for (const auto& [key, value] : x.as<WreathCoords>().parts)
                s += natural_character_int(base, value);
            return s;
        }
        case GroupKind::direct_product: {
            Int s = 0;
            const auto& factors = g.product_factors();
            const auto& comps = x.as<DirectProductCoords>().components;
            for (std::size_t i = 0; i < comps.size(); ++i)
                s += natural_character_int(factors[i], comps[i]);
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

bool contains_t2(const Group& g) {
    switch (g.kind()) {
        case GroupKind::triangular:
            return true;
        case GroupKind::wreath:
            return contains_t2(g.wreath_base());
        case GroupKind::direct_product:
            for (const Group& f : g.product_factors())
                if (contains_t2(f)) return true;
            return false;
        default:
            return false;
    }
}

}  // namespace

GroupFunction natural_character(const Group& g, double weight) {
    if (g.kind() == GroupKind::triangular) {
        if (!g.field().is_rationals()) return zero_function(g).renamed("natchar(trivial)");
        RationalCharacter ca;
        RationalCharacter cb;
        for (double& w : ca.weights) w *= weight;
        for (double& w : cb.weights) w *= 0.375 * weight;
        return t2_diag_character(g, std::move(ca), std::move(cb)).renamed("natchar");
    }
    if (contains_t2(g))
        throw std::domain_error("natural character with a t2 component is not supported");
    GroupFunction f(
        g, 1,
        [g, weight](const GroupElement& x) {
            return ValueVector::scalar(weight * to_double(natural_character_int(g, x)));
        },
        "natchar");
    return f.with_defect_bound(0.0);
}

GroupFunction linear_on_z(const Group& g, double slope) {
    require_kind(g, GroupKind::free_abelian, "linear");
    GroupFunction f(
        g, 1,
        [slope](const GroupElement& x) {
            return ValueVector::scalar(slope * to_double(x.as<FreeAbelianCoords>().coords[0]));
        },
        "linear(" + std::to_string(slope) + ")");
    return f.with_defect_bound(0.0);
}

GroupFunction square_on_z(const Group& g) {
    require_kind(g, GroupKind::free_abelian, "square");
    return GroupFunction(
        g, 1,
        [](const GroupElement& x) {
            const Int& n = x.as<FreeAbelianCoords>().coords[0];
            return ValueVector::scalar(to_double(Int(n * n)));
        },
        "square");
}

GroupFunction zero_function(const Group& g, std::size_t dimension) {
    GroupFunction f(
        g, dimension, [dimension](const GroupElement&) { return ValueVector(dimension); },
        "zero");
    return f.with_defect_bound(0.0);
}

GroupFunction constant_function(const Group& g, ValueVector value) {
    GroupFunction f(
        g, value.dim(), [value](const GroupElement&) { return value; }, "const");
    return f.with_defect_bound(0.0);
}

GroupFunction table_function(const Group& g,
                             std::vector<std::pair<GroupElement, ValueVector>> entries,
                             ValueVector fallback, std::string name) {
    auto table = std::make_shared<std::map<std::string, ValueVector>>();
    for (auto& [x, v] : entries) {
        if (v.dim() != fallback.dim()) throw std::invalid_argument("table value dimension mismatch");
        (*table)[hex(g.canonical_encoding(x))] = v;
    }
    return GroupFunction(
        g, fallback.dim(),
        [g, table, fallback](const GroupElement& x) {
            const auto it = table->find(hex(g.canonical_encoding(x)));
            return it == table->end() ? fallback : it->second;
        },
        std::move(name));
}

}  // namespace jensenlab
