#include <doctest.h>

#include "jensenlab/group.hpp"
#include "jensenlab/rng.hpp"
#include "jensenlab/sampler.hpp"

using namespace jensenlab;

namespace {

// independent 3x3 integer matrix product, kept local so the isomorphism check
// does not share code with the implementation under test
Mat3 oracle_mul(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

}  // namespace

TEST_CASE("heisenberg product law") {
    const Group h = Group::heisenberg_group();
    auto e = [&](long m, long n, long k) { return h.make_heisenberg(m, n, k); };

    CHECK(h.multiply(e(1, 0, 0), e(0, 1, 0)) == e(1, 1, 0));   // a * b
    CHECK(h.multiply(e(0, 1, 0), e(1, 0, 0)) == e(1, 1, 1));   // b * a = a b c
    CHECK(h.multiply(e(2, 3, 1), e(-2, -3, 5)) == e(0, 0, 0)); // (-2,-3,5) inverts (2,3,1)
    CHECK(h.inverse(e(2, 3, 1)) == e(-2, -3, 5));
}

TEST_CASE("heisenberg inverse formula against brute-force search") {
    const Group h = Group::heisenberg_group();
    for (long m = -3; m <= 3; ++m)
        for (long n = -3; n <= 3; ++n)
            for (long k = -3; k <= 3; ++k) {
                const GroupElement x = h.make_heisenberg(m, n, k);
                // formula: (m,n,k)^-1 = (-m, -n, m n - k)
                const GroupElement formula = h.make_heisenberg(-m, -n, m * n - k);
                CHECK(h.multiply(x, formula) == h.identity());
                CHECK(h.multiply(formula, x) == h.identity());
                // brute force: the only inverse in the coordinate box
                int found = 0;
                for (long m1 = -3; m1 <= 3; ++m1)
                    for (long n1 = -3; n1 <= 3; ++n1)
                        for (long k1 = -12; k1 <= 12; ++k1) {
                            const GroupElement y = h.make_heisenberg(m1, n1, k1);
                            if (h.multiply(x, y) == h.identity()) {
                                ++found;
                                CHECK(y == formula);
                            }
                        }
                CHECK(found == 1);
            }
}

TEST_CASE("heisenberg powers match the closed form") {
    const Group h = Group::heisenberg_group();
    const GroupElement x = h.make_heisenberg(1, 1, 0);
    CHECK(h.power(x, 2) == h.make_heisenberg(2, 2, 1));
    CHECK(h.power(x, 4) == h.make_heisenberg(4, 4, 6));

    ElementSampler s(h, 31);
    for (int i = 0; i < 15; ++i) {
        const auto xe = s.next();
        const auto c = xe.as<HeisenbergCoords>();
        for (long N = -32; N <= 32; N += 7) {
            const HeisenbergCoords cf = heisenberg::power_closed_form(c, N);
            CHECK(h.power(xe, N) == h.make_heisenberg(cf.m, cf.n, cf.k));
        }
    }
}

TEST_CASE("heisenberg to ut3 is a multiplicative bijection") {
    const Group h = Group::heisenberg_group();
    const GroupElement x = h.make_heisenberg(1, 2, 3);
    const Ut3Matrix M = heisenberg_to_ut3(x);
    CHECK(M.to_matrix() ==
          Mat3{{{Int(1), Int(2), Int(3)}, {Int(0), Int(1), Int(1)}, {Int(0), Int(0), Int(1)}}});
    CHECK(heisenberg_to_ut3(h.identity()).to_matrix() ==
          Mat3{{{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}}});
    CHECK(ut3_to_heisenberg(h, M.to_matrix()) == x);

    // reject non-unitriangular input
    Mat3 bad = M.to_matrix();
    bad[2][0] = 1;
    CHECK_THROWS_AS(ut3_to_heisenberg(h, bad), std::domain_error);
    bad = M.to_matrix();
    bad[1][1] = 2;
    CHECK_THROWS_AS(ut3_to_heisenberg(h, bad), std::domain_error);

    // homomorphism on random pairs, coordinates in [-50, 50]
    SplitMix64 rng(404);
    auto coord = [&] { return static_cast<long>(rng.below(101)) - 50; };
    for (int i = 0; i < 10000; ++i) {
        const GroupElement a = h.make_heisenberg(coord(), coord(), coord());
        const GroupElement b = h.make_heisenberg(coord(), coord(), coord());
        const Mat3 lhs = heisenberg_to_ut3(h.multiply(a, b)).to_matrix();
        const Mat3 rhs = oracle_mul(heisenberg_to_ut3(a).to_matrix(),
                                    heisenberg_to_ut3(b).to_matrix());
        REQUIRE(lhs == rhs);
        REQUIRE(ut3_to_heisenberg(h, rhs) == h.multiply(a, b));
    }
}

TEST_CASE("t2 product, inverse and the sign-conjugation relation") {
    const Group t = Group::parse("t2:q");
    const Field& f = t.field();
    auto rat = [&](long num, long den) { return f.from_rat(Rat(num, den)); };

    // diag(-1,1) * unip(t) * diag(-1,1) = unip(-t)
    const GroupElement e1 = t.make_triangular(f.from_long(-1), f.zero(), f.one());
    const GroupElement v = t.make_triangular(f.one(), rat(5, 3), f.one());
    CHECK(t.conjugate(v, e1) == t.make_triangular(f.one(), rat(-5, 3), f.one()));

    // x * x^-1 = 1 over F_7 on random elements
    const Group tp = Group::parse("t2:fp:7");
    ElementSampler s(tp, 41);
    for (int i = 0; i < 1000; ++i) {
        const GroupElement x = s.next();
        CHECK(tp.multiply(x, tp.inverse(x)) == tp.identity());
    }

    // zero diagonal entries are rejected
    CHECK_THROWS_AS(t.make_triangular(f.zero(), f.zero(), f.one()), std::domain_error);
}

TEST_CASE("t2 subgroup membership flags") {
    const Group t = Group::parse("t2:q");
    const Field& f = t.field();
    auto flags = [&](long a, long tt, long b) {
        return t2_subgroup_membership(
            t, t.make_triangular(f.from_long(a), f.from_long(tt), f.from_long(b)));
    };
    CHECK(flags(1, 5, 1).in_t);
    CHECK_FALSE(flags(1, 5, 1).in_d);
    CHECK(flags(-1, 0, 1).in_e);
    CHECK(flags(-1, 0, 1).in_d);
    const auto none = flags(2, 3, 5);
    CHECK_FALSE(none.in_t);
    CHECK_FALSE(none.in_e);
    CHECK_FALSE(none.in_d);

    // every element of E has order <= 2
    for (long a : {1L, -1L})
        for (long b : {1L, -1L}) {
            const GroupElement e = t.make_triangular(f.from_long(a), f.zero(), f.from_long(b));
            CHECK(t.multiply(e, e) == t.identity());
        }
}

TEST_CASE("t2 projection tau is an idempotent homomorphism onto D") {
    const Group t = Group::parse("t2:fp:7");
    const Field& f = t.field();
    const GroupElement x =
        t.make_triangular(f.from_long(2), f.from_long(7 + 7), f.from_long(3));
    CHECK(t2_projection_tau(t, x) == t.make_triangular(f.from_long(2), f.zero(), f.from_long(3)));

    ElementSampler s(t, 42);
    for (int i = 0; i < 1000; ++i) {
        auto [a, b] = s.next_pair();
        const GroupElement lhs = t2_projection_tau(t, t.multiply(a, b));
        const GroupElement rhs = t.multiply(t2_projection_tau(t, a), t2_projection_tau(t, b));
        CHECK(lhs == rhs);
        CHECK(t2_projection_tau(t, t2_projection_tau(t, a)) == t2_projection_tau(t, a));
    }
}

TEST_CASE("t2 splits as tau(x) times a unipotent factor, and T is normal") {
    const Group t = Group::parse("t2:q");
    ElementSampler s(t, 43);
    for (int i = 0; i < 200; ++i) {
        const GroupElement x = s.next();
        const GroupElement d = t2_projection_tau(t, x);
        const GroupElement u = t.multiply(t.inverse(d), x);
        CHECK(t2_subgroup_membership(t, u).in_t);
        CHECK(t.multiply(d, u) == x);

        const GroupElement b = s.next();
        const GroupElement v = t.make_triangular(t.field().one(), t.field().from_long(3),
                                                 t.field().one());
        CHECK(t2_subgroup_membership(t, t.conjugate(v, b)).in_t);
    }
}

TEST_CASE("wreath product law on the examples") {
    const Group base = Group::integers();
    const Group w = Group::wreath_product(base, 4);
    const GroupElement a = base.make_integer(7);

    // shift elements square to the identity
    const GroupElement b1 = w.make_wreath(1, {});
    CHECK(w.multiply(b1, b1) == w.identity());

    // a placed at the identity slot, multiplied by the shift b1, moves to
    // slot b1: (0, {1 -> a}) * (b1, {}) = (b1, {b1 -> a})
    const GroupElement d1 = w.make_wreath(0, {{0u, a}});
    CHECK(w.multiply(d1, b1) == w.make_wreath(1, {{1u, a}}));
    // ... while multiplying in the other order leaves the slot alone
    CHECK(w.multiply(b1, d1) == w.make_wreath(1, {{0u, a}}));

    // identity values are never stored
    const GroupElement z = w.make_wreath(0, {{2u, base.identity()}});
    CHECK(z == w.identity());
}

TEST_CASE("wreath action is an automorphism homomorphism") {
    const Group base = Group::integers();
    const Group w = Group::wreath_product(base, 4);
    ElementSampler s(w, 44);
    auto translate = [&](const GroupElement& x, std::uint32_t b) {
        // conjugation of a D-part element by the shift b
        return w.conjugate(x, w.make_wreath(b, {}));
    };
    for (int i = 0; i < 100; ++i) {
        GroupElement d = s.next();
        // force a pure D-part element
        d = w.make_wreath(0, d.as<WreathCoords>().parts);
        for (std::uint32_t b1 = 0; b1 < 4; ++b1)
            for (std::uint32_t b2 = 0; b2 < 4; ++b2)
                CHECK(translate(translate(d, b1), b2) == translate(d, b1 ^ b2));
    }
}

TEST_CASE("wreath associativity on random triples with a torsion base") {
    const Group base = Group::parse("z*zn:3");
    const Group w = Group::wreath_product(base, 4);
    ElementSampler s(w, 45);
    for (int i = 0; i < 1000; ++i) {
        const GroupElement x = s.next();
        const GroupElement y = s.next();
        const GroupElement z = s.next();
        REQUIRE(w.multiply(w.multiply(x, y), z) == w.multiply(x, w.multiply(y, z)));
    }
}

TEST_CASE("wreath commuting blocks and the distinct-slot precondition") {
    const Group base = Group::integers();
    const Group w = Group::wreath_product(base, 4);
    const GroupElement a = base.make_integer(3);
    const GroupElement a2 = base.make_integer(-5);

    CHECK(wreath_commuting_block_check(w, {{1u, a}, {2u, a2}, {4u, a}}));
    CHECK(wreath_commuting_block_check(w, {{3u, a}}));
    CHECK_THROWS_AS(wreath_commuting_block_check(w, {{1u, a}, {1u, a2}}),
                    std::invalid_argument);
}

TEST_CASE("wreath rejects out-of-range factor indices") {
    const Group base = Group::integers();
    const Group w = Group::wreath_product(base, 4);
    CHECK_THROWS_AS(w.make_wreath(1u << 5, {}), std::domain_error);
    CHECK_THROWS_AS(w.make_wreath(0, {{1u << 7, base.make_integer(1)}}), std::domain_error);
    const Group other = Group::parse("zn:3");
    CHECK_THROWS_AS(w.make_wreath(0, {{0u, other.make_cyclic(1)}}), std::domain_error);
}

TEST_CASE("direct products operate componentwise") {
    const Group p = Group::parse("z*zn:3");
    const auto& factors = p.product_factors();
    const GroupElement x =
        p.make_product({factors[0].make_integer(4), factors[1].make_cyclic(2)});
    const GroupElement y =
        p.make_product({factors[0].make_integer(-1), factors[1].make_cyclic(2)});
    CHECK(p.multiply(x, y) ==
          p.make_product({factors[0].make_integer(3), factors[1].make_cyclic(1)}));
    CHECK(p.element_order(p.make_product({factors[0].identity(), factors[1].make_cyclic(1)}), 10) ==
          3);
}

TEST_CASE("field scalars stay canonical") {
    const Field q = Field::rationals();
    const FieldScalar half = q.from_rat(Rat(2, 4));
    CHECK(q.to_string(half) == "1/2");
    CHECK(q.to_string(q.inv(half)) == "2");
    CHECK(q.is_sign_unit(q.from_long(-1)));

    const Field f7 = Field::prime(7);
    CHECK(f7.to_string(f7.from_long(-1)) == "6");
    CHECK(f7.is_sign_unit(f7.from_long(6)));
    CHECK(f7.to_string(f7.inv(f7.from_long(3))) == "5");
    CHECK(f7.primitive_root() == 3);
    CHECK_THROWS_AS(Field::prime(2), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(15), std::invalid_argument);
    CHECK_THROWS_AS(f7.inv(f7.zero()), std::domain_error);
}
