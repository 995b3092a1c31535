#include <doctest.h>

#include <set>

#include "jensenlab/group.hpp"
#include "jensenlab/sampler.hpp"

using namespace jensenlab;

namespace {

const std::vector<std::string> kAllKinds = {
    "z", "z^d:3", "zn:6", "heisenberg", "t2:q", "t2:fp:7", "wreath:z:4", "z*zn:3",
    "wreath:z*zn:3:3"};

}  // namespace

TEST_CASE("descriptor parsing round-trips and rejects junk") {
    for (const auto& text : kAllKinds) CHECK(Group::parse(text).id() == text);
    CHECK(Group::parse("z^d:1").id() == "z");  // rank-1 normalizes
    CHECK_THROWS_AS(Group::parse("t2:fp:2"), std::invalid_argument);
    CHECK_THROWS_AS(Group::parse("t2:fp:9"), std::invalid_argument);
    CHECK_THROWS_AS(Group::parse("nope"), std::invalid_argument);
    CHECK_THROWS_AS(Group::parse("zn:0"), std::invalid_argument);
    CHECK_THROWS_AS(Group::parse("wreath:z"), std::invalid_argument);
    CHECK_THROWS_AS(Group::parse("wreath:z:33"), std::invalid_argument);
}

TEST_CASE("group axioms hold exactly on sampled words") {
    for (const auto& text : kAllKinds) {
        CAPTURE(text);
        const Group g = Group::parse(text);
        ElementSampler s(g, derive_seed(11, "axioms/" + text));
        const GroupElement id = g.identity();
        for (int i = 0; i < 100; ++i) {
            const GroupElement x = s.next();
            const GroupElement y = s.next();
            const GroupElement z = s.next();
            CHECK(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
            CHECK(g.multiply(x, g.inverse(x)) == id);
            CHECK(g.multiply(g.inverse(x), x) == id);
            CHECK(g.multiply(x, id) == x);
            CHECK(g.multiply(id, x) == x);
        }
    }
}

TEST_CASE("power agrees with repeated multiplication and respects exponent addition") {
    for (const auto& text : kAllKinds) {
        CAPTURE(text);
        const Group g = Group::parse(text);
        ElementSampler s(g, derive_seed(12, "powers/" + text));
        for (int i = 0; i < 10; ++i) {
            const GroupElement x = s.next();
            GroupElement acc = g.identity();
            for (int n = 0; n <= 16; ++n) {
                CHECK(g.power(x, n) == acc);
                acc = g.multiply(acc, x);
            }
            CHECK(g.power(x, -7) == g.inverse(g.power(x, 7)));
            for (int m = -16; m <= 16; m += 5)
                for (int n = -16; n <= 16; n += 7)
                    CHECK(g.power(x, m + n) == g.multiply(g.power(x, m), g.power(x, n)));
        }
        CHECK(g.power(s.next(), 0) == g.identity());
    }
}

TEST_CASE("additive integer examples") {
    const Group z = Group::integers();
    CHECK(z.multiply(z.make_integer(2), z.make_integer(3)) == z.make_integer(5));
    CHECK(z.inverse(z.make_integer(5)) == z.make_integer(-5));
    CHECK(z.inverse(z.identity()) == z.identity());
}

TEST_CASE("commutator and conjugation on the Heisenberg group") {
    const Group h = Group::heisenberg_group();
    const GroupElement a = h.make_heisenberg(1, 0, 0);
    const GroupElement b = h.make_heisenberg(0, 1, 0);
    const GroupElement c = h.make_heisenberg(0, 0, 1);

    // c = [b, a] with [x, y] = x^-1 y^-1 x y
    CHECK(h.commutator(b, a) == c);
    CHECK(h.commutator(a, b) == h.inverse(c));
    // conjugation moves a across b by a central factor:
    // b^-1 a b = a c^-1 and a^-1 b a = b c
    CHECK(h.conjugate(a, b) == h.multiply(a, h.inverse(c)));
    CHECK(h.conjugate(b, a) == h.multiply(b, c));
    CHECK(h.conjugate(a, h.identity()) == a);

    // abelian groups: all commutators trivial
    const Group z3 = Group::parse("z^d:3");
    ElementSampler s(z3, 5);
    for (int i = 0; i < 20; ++i) CHECK(z3.commutator(s.next(), s.next()) == z3.identity());
}

TEST_CASE("element_order") {
    const Group w = Group::parse("wreath:z:4");
    const GroupElement b0 = w.make_wreath(1, {});
    CHECK(w.element_order(b0) == 2);
    CHECK(w.element_order(w.identity()) == 1);

    const Group z = Group::integers();
    CHECK_FALSE(z.element_order(z.make_integer(1), 1000).has_value());

    const Group z6 = Group::parse("zn:6");
    CHECK(z6.element_order(z6.make_cyclic(2)) == 3);
    CHECK(z6.element_order(z6.make_cyclic(1)) == 6);

    // conjugation preserves order outcomes
    const Group t = Group::parse("t2:fp:7");
    ElementSampler s(t, 77);
    for (int i = 0; i < 30; ++i) {
        const GroupElement x = s.next();
        const GroupElement b = s.next();
        CHECK(t.element_order(x, 64) == t.element_order(t.conjugate(x, b), 64));
    }
}

TEST_CASE("mismatched group ids are rejected") {
    const Group z = Group::integers();
    const Group h = Group::heisenberg_group();
    CHECK_THROWS_AS(z.multiply(z.make_integer(1), h.identity()), std::domain_error);
    CHECK_THROWS_AS(h.inverse(z.make_integer(1)), std::domain_error);
}

TEST_CASE("canonical encoding is injective and equality-compatible") {
    for (const auto& text : kAllKinds) {
        CAPTURE(text);
        const Group g = Group::parse(text);
        ElementSampler s(g, derive_seed(13, "enc/" + text));
        std::set<Bytes> seen;
        std::vector<GroupElement> elems;
        for (int i = 0; i < 200; ++i) {
            const GroupElement x = s.next();
            const Bytes e = g.canonical_encoding(x);
            bool duplicate_element = false;
            for (const auto& y : elems) duplicate_element |= (x == y);
            CHECK(duplicate_element == seen.contains(e));
            seen.insert(e);
            elems.push_back(x);
        }
    }
}

TEST_CASE("canonical encoding is injective on whole finite groups") {
    for (const std::string text : {"zn:12", "t2:fp:5", "zn:3*zn:4", "wreath:zn:2:2"}) {
        CAPTURE(text);
        const Group g = Group::parse(text);
        const auto all = g.try_enumerate(100000);
        REQUIRE(all.has_value());
        std::set<Bytes> seen;
        for (const auto& x : *all) seen.insert(g.canonical_encoding(x));
        CHECK(seen.size() == all->size());
    }
    // sizes: (p-1)^2 p for t2:fp, 2^f * |A|^(2^f) for wreath
    CHECK(Group::parse("t2:fp:5").try_enumerate(1000)->size() == 80);
    CHECK(Group::parse("wreath:zn:2:2").try_enumerate(1000)->size() == 64);
    CHECK_FALSE(Group::integers().try_enumerate(1000).has_value());
}

TEST_CASE("identity encodings are the documented constants") {
    const Group z = Group::integers();
    CHECK(hex(z.canonical_encoding(z.identity())) == "5a0000000100000000");
    const Group h = Group::heisenberg_group();
    CHECK(hex(h.canonical_encoding(h.identity())) == "48000000000000000000000000");
    const Group zn = Group::parse("zn:5");
    CHECK(hex(zn.canonical_encoding(zn.identity())) == "4300000000");
}

TEST_CASE("two's-complement integer bodies are minimal and signed") {
    Bytes b;
    append_int(b, Int(0));
    CHECK(hex(b) == "00000000");
    b.clear();
    append_int(b, Int(127));
    CHECK(hex(b) == "000000017f");
    b.clear();
    append_int(b, Int(128));  // needs a leading zero byte to stay nonnegative
    CHECK(hex(b) == "000000020080");
    b.clear();
    append_int(b, Int(-1));
    CHECK(hex(b) == "00000001ff");
    b.clear();
    append_int(b, Int(-128));
    CHECK(hex(b) == "0000000180");
    b.clear();
    append_int(b, Int(-129));
    CHECK(hex(b) == "00000002ff7f");
}

TEST_CASE("sampler is deterministic and respects the word-length bound") {
    const Group h = Group::heisenberg_group();
    ElementSampler s1(h, 99, 8);
    ElementSampler s2(h, 99, 8);
    for (int i = 0; i < 50; ++i) CHECK(s1.next() == s2.next());

    // words of length <= L over a, b, c keep |m|, |n| <= L
    ElementSampler s3(h, 7, 8);
    for (int i = 0; i < 200; ++i) {
        const GroupElement x = s3.next();
        const auto& c = x.as<HeisenbergCoords>();
        CHECK(abs(c.m) <= 8);
        CHECK(abs(c.n) <= 8);
    }
}

TEST_CASE("inner automorphisms wrap conjugation") {
    const Group t = Group::parse("t2:fp:7");
    ElementSampler s(t, 3);
    const GroupElement b = s.next();
    const InnerAutomorphism aut{b};
    for (int i = 0; i < 10; ++i) {
        const GroupElement x = s.next();
        CHECK(aut.apply(t, x) == t.conjugate(x, b));
    }
}

TEST_CASE("metabelian witness search") {
    // Heisenberg: every commutator is central, no witness exists
    {
        const Group h = Group::heisenberg_group();
        ElementSampler s(h, 21);
        CHECK_FALSE(find_metabelian_witness(h, s, 1000).has_value());
    }
    // abelian: trivially none
    {
        const Group z = Group::parse("z^d:2");
        ElementSampler s(z, 22);
        CHECK_FALSE(find_metabelian_witness(z, s, 200).has_value());
    }
    // T(2, F_p) is metabelian in the classical sense (the commutator subgroup
    // is abelian) but double commutators [[x,y],z] do not all vanish; the
    // search must find a violation.
    {
        const Group t = Group::parse("t2:fp:7");
        ElementSampler s(t, 23);
        const auto w = find_metabelian_witness(t, s, 1000);
        REQUIRE(w.has_value());
        CHECK_FALSE(t.is_identity(t.commutator(t.commutator(w->x, w->y), w->z)));
    }
    // frozen counterexample in T(2, F_7): x = diag(2,1), y = unip(1), z = diag(3,1)
    {
        const Group t = Group::parse("t2:fp:7");
        const Field& f = t.field();
        const GroupElement x = t.make_triangular(f.from_long(2), f.zero(), f.one());
        const GroupElement y = t.make_triangular(f.one(), f.one(), f.one());
        const GroupElement z = t.make_triangular(f.from_long(3), f.zero(), f.one());
        const GroupElement inner = t.commutator(x, y);
        CHECK(inner == t.make_triangular(f.one(), f.from_long(4), f.one()));
        CHECK(t.commutator(inner, z) ==
              t.make_triangular(f.one(), f.from_long(2), f.one()));
    }
    // exhaustive confirmation on the 12-element T(2, F_3): violations exist
    {
        const Group t = Group::parse("t2:fp:3");
        const auto all = t.try_enumerate(100);
        REQUIRE(all.has_value());
        REQUIRE(all->size() == 12);
        int violations = 0;
        for (const auto& x : *all)
            for (const auto& y : *all) {
                const GroupElement inner = t.commutator(x, y);
                for (const auto& z : *all)
                    if (!t.is_identity(t.commutator(inner, z))) ++violations;
            }
        CHECK(violations > 0);
    }
}

TEST_CASE("generators carry the advertised names and values") {
    const Group h = Group::heisenberg_group();
    const auto gens = h.generators();
    REQUIRE(gens.size() == 3);
    CHECK(gens[0].first == "a");
    CHECK(gens[1].first == "b");
    CHECK(gens[2].first == "c");
    CHECK(h.commutator(gens[1].second, gens[0].second) == gens[2].second);
}
