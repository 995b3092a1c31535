#include <doctest.h>

#include <cmath>

#include "jensenlab/analysis.hpp"
#include "jensenlab/functions.hpp"
#include "jensenlab/noise.hpp"

using namespace jensenlab;

TEST_CASE("jensen defect worked examples") {
    const Group z = Group::integers();
    // f(n) = n^2: defect at (x, y) is exactly 2 y^2
    const GroupFunction sq = square_on_z(z);
    CHECK(jensen_defect(sq, z.make_integer(0), z.make_integer(3)) == doctest::Approx(18.0));
    CHECK(jensen_defect(sq, z.make_integer(5), z.make_integer(2)) == doctest::Approx(8.0));

    // constant functions have zero defect
    const GroupFunction cst = constant_function(z, ValueVector{2.5, -1.0});
    ElementSampler s(z, 61);
    for (int i = 0; i < 20; ++i) {
        auto [x, y] = s.next_pair();
        CHECK(jensen_defect(cst, x, y) == 0.0);
    }

    // phi is an exact solution on the Heisenberg group
    const Group h = Group::heisenberg_group();
    const GroupFunction phi = heisenberg_phi_function(h);
    ElementSampler sh(h, 62);
    for (int i = 0; i < 200; ++i) {
        auto [x, y] = sh.next_pair();
        CHECK(jensen_defect(phi, x, y) == 0.0);
    }
}

TEST_CASE("sup defect of noisy jensen stays within the analytic bound") {
    const Group h = Group::heisenberg_group();
    for (double eps : {0.1, 0.25, 1.0}) {
        const GroupFunction j = heisenberg_jensen(h, {1.0, -0.5, 0.25});
        const GroupFunction f = noisy_jensen(j, NoiseModel{eps, 17, 1});
        ElementSampler s(h, 63);
        const DefectEstimate est = sup_jensen_defect(f, s, 400);
        CHECK(est.bound <= 4.0 * eps);
        CHECK(est.bound > 0.0);
        CHECK(jensen_defect(f, est.witness_x, est.witness_y) == est.bound);
    }
    // measured bound is monotone in epsilon over the same sample pairs
    const GroupFunction j = heisenberg_jensen(h, {1.0, -0.5, 0.25});
    double prev = 0.0;
    for (double eps : {0.1, 0.2, 0.4, 0.8}) {
        ElementSampler s(h, 64);
        const double bound =
            sup_jensen_defect(noisy_jensen(j, NoiseModel{eps, 99, 1}), s, 200).bound;
        CHECK(bound >= prev);
        prev = bound;
    }
    // the defect of f(n) = n^2 grows with the sampler word length
    const Group z = Group::integers();
    const GroupFunction sq = square_on_z(z);
    ElementSampler s8(z, 65, 8);
    ElementSampler s16(z, 65, 16);
    CHECK(sup_jensen_defect(sq, s16, 300).bound > sup_jensen_defect(sq, s8, 300).bound);
}

TEST_CASE("constant ladder values") {
    const ConstantLadder l1(1.0, 0.0, 5);
    CHECK(l1.at(1) == 1.0);
    CHECK(l1.at(2) == 1.0);
    CHECK(l1.at(3) == 2.0);
    CHECK(l1.at(4) == 3.0);
    CHECK(l1.at(5) == 4.0);

    const ConstantLadder l0(0.0, 0.0, 12);
    for (int m = 1; m <= 12; ++m) CHECK(l0.at(m) == 0.0);

    const ConstantLadder l2(2.0, 0.5, 4);
    CHECK(l2.at(1) == 3.0);
    CHECK(l2.at(2) == 2.5);
    CHECK(l2.at(3) == 5.0);
    CHECK(l2.at(4) == 7.5);

    // nondecreasing in both inputs
    const ConstantLadder lo(1.0, 0.25, 8), hi_c(1.5, 0.25, 8), hi_f(1.0, 0.75, 8);
    for (int m = 1; m <= 8; ++m) {
        CHECK(hi_c.at(m) >= lo.at(m));
        CHECK(hi_f.at(m) >= lo.at(m));
    }
    CHECK_THROWS_AS(ConstantLadder(-1.0, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(lo.at(9), std::out_of_range);
}

TEST_CASE("power deviation vanishes for exact jensen functions with f(1)=0") {
    const Group h = Group::heisenberg_group();
    const GroupFunction j = heisenberg_jensen(h, {2.0, -1.0, 0.5});
    ElementSampler s(h, 66);
    for (int i = 0; i < 50; ++i) {
        const GroupElement x = s.next();
        CHECK(power_deviation(j, x, 1) == 0.0);
        for (int m = 2; m <= 12; ++m) CHECK(power_deviation(j, x, m) <= 1e-9);
    }
    CHECK_THROWS_AS(power_deviation(j, h.identity(), 0), std::invalid_argument);
}

TEST_CASE("scaled powers") {
    const Group z = Group::integers();
    // linear function: scaling is exact at every depth
    const GroupFunction lin = linear_on_z(z, 1.0);
    CHECK(scaled_power(lin, z.make_integer(5), 2, 10) == ValueVector{5.0});

    // f(n) = n + 0.5 (-1)^n at x = 1, base 2, k = 3: 2^-3 (8 + 0.5)
    const GroupFunction wob(
        z, 1,
        [](const GroupElement& x) {
            const Int& n = x.as<FreeAbelianCoords>().coords[0];
            const double sign = mpz_even_p(n.get_mpz_t()) ? 1.0 : -1.0;
            return ValueVector::scalar(to_double(n) + 0.5 * sign);
        },
        "wobble");
    CHECK(scaled_power(wob, z.make_integer(1), 2, 3) == ValueVector{1.0625});

    // ||m^-k f(x^(m^k)) - f(x)|| <= c_m for noisy jensen input
    const Group h = Group::heisenberg_group();
    const double eps = 0.25;
    const GroupFunction f =
        noisy_jensen(heisenberg_jensen(h, {1.0, 0.5, -0.75}), NoiseModel{eps, 5, 1});
    const ConstantLadder ladder(4.0 * eps, eps, 3);
    ElementSampler s(h, 67);
    for (int i = 0; i < 10; ++i) {
        const GroupElement x = s.next();
        const ValueVector fx = f(x);
        for (int k = 0; k <= 20; ++k) {
            CHECK((scaled_power(f, x, 2, k) - fx).norm() <= ladder.at(2) + 1e-12);
            if (k <= 12)
                CHECK((scaled_power(f, x, 3, k) - fx).norm() <= ladder.at(3) + 1e-12);
        }
        // consecutive scaled powers shrink geometrically
        for (int k = 0; k <= 19; ++k) {
            const double gap = (scaled_power(f, x, 2, k + 1) - scaled_power(f, x, 2, k)).norm();
            CHECK(gap <= ladder.at(2) / std::pow(2.0, k) + 1e-12);
        }
    }
}

TEST_CASE("stabilize returns f identically for exact jensen input, at one step") {
    const Group h = Group::heisenberg_group();
    const GroupFunction j = heisenberg_jensen(h, {2.0, -1.0, 0.5});
    ElementSampler s(h, 68);
    for (int i = 0; i < 50; ++i) {
        const GroupElement x = s.next();
        const StabilizationResult r = stabilize(j, x);
        CHECK(r.converged);
        CHECK(r.iterations == 1);
        CHECK(r.certified_error == 0.0);
        if (!h.is_identity(x)) CHECK(r.value == j(x));  // bit-exact
    }
}

TEST_CASE("stabilize recovers the linear part of a noisy linear function") {
    const Group z = Group::integers();
    const GroupFunction f =
        noisy_jensen(linear_on_z(z, 1.0), NoiseModel{0.5, 1234, 1});
    const StabilizationResult r = stabilize(f, z.make_integer(5));
    CHECK(r.converged);
    CHECK(r.certified_error <= 1e-9);
    CHECK(std::fabs(r.value[0] - 5.0) <= 1e-9);
}

TEST_CASE("stabilize conventions and failure modes") {
    const Group h = Group::heisenberg_group();
    const GroupFunction f =
        noisy_jensen(heisenberg_jensen(h, {1.0, 1.0, 1.0}), NoiseModel{0.5, 7, 1});

    // identity stabilizes to exactly zero
    const StabilizationResult rid = stabilize(f, h.identity());
    CHECK(rid.value == ValueVector{0.0});

    // k_max reached: converged flag drops, no exception, certified error reported
    const StabilizationResult rshort =
        stabilize(f, h.make_heisenberg(1, 2, 3), StabilizeOptions{2, 1e-9, 3});
    CHECK_FALSE(rshort.converged);
    CHECK(rshort.iterations == 3);
    CHECK(rshort.certified_error > 1e-9);

    // no defect bound attached -> invalid argument
    const GroupFunction bare(h, 1, [](const GroupElement&) { return ValueVector{0.0}; }, "bare");
    CHECK_THROWS_AS(stabilize(bare, h.identity()), std::invalid_argument);
}

TEST_CASE("stabilized values are base independent") {
    const Group h = Group::heisenberg_group();
    const GroupFunction f =
        noisy_jensen(heisenberg_jensen(h, {2.0, -1.0, 0.5}), NoiseModel{0.5, 21, 1});
    ElementSampler s(h, 69);
    for (int i = 0; i < 25; ++i) {
        const GroupElement x = s.next();
        const StabilizationResult r2 = stabilize(f, x, {2, 1e-9, 60});
        const StabilizationResult r3 = stabilize(f, x, {3, 1e-9, 60});
        CHECK(r2.converged);
        CHECK(r3.converged);
        CHECK((r2.value - r3.value).norm() <= 2e-9);
    }
}

TEST_CASE("decompose splits into pseudo part plus certified bounded part") {
    const Group h = Group::heisenberg_group();

    // exact jensen: bounded part is identically zero
    {
        const GroupFunction j = heisenberg_jensen(h, {1.0, 2.0, -1.0});
        ElementSampler s(h, 71);
        const Decomposition d = decompose(j, s.take(50));
        CHECK(d.bound_ok);
        CHECK(d.max_bounded_norm == 0.0);
        CHECK(d.non_converged == 0);
    }
    // noisy jensen: bounded part within c2 + certified error
    {
        const double eps = 0.25;
        const GroupFunction f =
            noisy_jensen(heisenberg_jensen(h, {1.0, 2.0, -1.0}), NoiseModel{eps, 9, 1});
        ElementSampler s(h, 72);
        const Decomposition d = decompose(f, s.take(50));
        CHECK(d.bound_ok);
        CHECK(d.non_converged == 0);
        CHECK(d.max_bounded_norm <= d.c2 + 1e-9);
        // the bounded part of j + u is u itself up to the stabilization tail
        for (const auto& e : d.entries) CHECK(e.bounded.norm() <= eps + 1e-6);
    }
    // pure noise: pseudo part is (nearly) zero
    {
        const GroupFunction u = pure_noise(h, NoiseModel{1.0, 10, 1});
        ElementSampler s(h, 73);
        const Decomposition d = decompose(u, s.take(50));
        CHECK(d.bound_ok);
        for (const auto& e : d.entries) CHECK(e.pseudo.norm() <= 1e-6);
    }
}

TEST_CASE("additive defect worked examples") {
    const Group z = Group::integers();
    CHECK(additive_defect(linear_on_z(z, 1.0), z.make_integer(3), z.make_integer(9)) == 0.0);

    const Group h = Group::heisenberg_group();
    const GroupFunction phi = heisenberg_phi_function(h);
    const GroupElement a = h.make_heisenberg(1, 0, 0);
    const GroupElement b = h.make_heisenberg(0, 1, 0);
    CHECK(additive_defect(phi, a, b) == 1.0);  // phi(ab) = 1, phi(a) = phi(b) = 0

    const GroupFunction chi = heisenberg_character(h, 1.0, 0.0);
    ElementSampler s(h, 74);
    for (int i = 0; i < 50; ++i) {
        auto [x, y] = s.next_pair();
        CHECK(additive_defect(chi, x, y) == 0.0);
    }
}

TEST_CASE("homogeneity deviation") {
    const Group h = Group::heisenberg_group();
    const GroupFunction phi = heisenberg_phi_function(h);
    ElementSampler s(h, 75);
    for (int i = 0; i < 20; ++i) {
        const GroupElement x = s.next();
        CHECK(homogeneity_deviation(phi, x, 1) == 0.0);
        for (long n = -8; n <= 8; ++n) CHECK(homogeneity_deviation(phi, x, n) == 0.0);
    }

    // stabilized noisy jensen obeys homogeneity within |n| * tol
    const double tol = 1e-10;
    const GroupFunction f =
        noisy_jensen(heisenberg_jensen(h, {1.5, -0.5, 0.25}), NoiseModel{0.5, 11, 1});
    const StabilizeOptions opt{2, tol, 60};
    for (int i = 0; i < 10; ++i) {
        const GroupElement x = s.next();
        const ValueVector hx = stabilize(f, x, opt).value;
        for (long n = -8; n <= 8; ++n) {
            const ValueVector hxn = stabilize(f, h.power(x, n), opt).value;
            CHECK((hxn - static_cast<double>(n) * hx).norm() <=
                  std::max<double>(1, std::labs(n)) * 2 * tol + 1e-12);
        }
    }

    // a stabilized function vanishes on torsion elements
    const Group p = Group::parse("z*zn:3");
    const auto& factors = p.product_factors();
    const GroupFunction fp = noisy_jensen(natural_character(p), NoiseModel{0.5, 12, 1});
    const GroupElement torsion =
        p.make_product({factors[0].identity(), factors[1].make_cyclic(1)});
    CHECK(stabilize(fp, torsion, opt).value.norm() <= tol);
}

TEST_CASE("commuting additivity bound") {
    // abelian: stabilized noisy jensen becomes a homomorphism
    {
        const Group z = Group::integers();
        const GroupFunction f = noisy_jensen(linear_on_z(z, 2.0), NoiseModel{0.5, 13, 1});
        const StabilizeOptions opt{2, 1e-10, 60};
        // f_hat as a group function
        const GroupFunction fhat(
            z, 1, [f, opt](const GroupElement& x) { return stabilize(f, x, opt).value; },
            "fhat");
        ElementSampler s(z, 76);
        const CommutingAdditivityReport rep = commuting_additivity_bound(fhat, s, 100);
        CHECK_FALSE(rep.violation.has_value());
        CHECK(rep.max_additive_defect <= 1e-8);
    }
    // phi fails the symmetry precondition with a reported witness
    {
        const Group h = Group::heisenberg_group();
        ElementSampler s(h, 77);
        const CommutingAdditivityReport rep =
            commuting_additivity_bound(heisenberg_phi_function(h), s, 200);
        CHECK(rep.violation.has_value());
        CHECK(rep.max_symmetry_difference > 0.0);
    }
    // the zero function reports zeros
    {
        const Group h = Group::heisenberg_group();
        ElementSampler s(h, 78);
        const CommutingAdditivityReport rep =
            commuting_additivity_bound(zero_function(h), s, 50);
        CHECK(rep.max_additive_defect == 0.0);
        CHECK_FALSE(rep.violation.has_value());
    }
}

TEST_CASE("classification flags are monotone in the tolerance") {
    const Group h = Group::heisenberg_group();
    const GroupFunction f =
        noisy_jensen(heisenberg_jensen(h, {1.0, 0.0, 0.5}), NoiseModel{0.2, 14, 1});
    auto flags = [&](double tol) {
        ElementSampler s(h, 79);
        const FunctionClassification c = classify(f, s, 60, tol);
        return std::vector<bool>{c.jensen.evidenced,        c.jensen_zero.evidenced,
                                 c.quasi_jensen.evidenced,  c.pseudo_jensen.evidenced,
                                 c.homomorphism.evidenced,  c.quasi_additive.evidenced,
                                 c.pseudo_additive.evidenced, c.bounded.evidenced};
    };
    const auto tight = flags(1e-9);
    const auto loose = flags(1e-3);
    const auto looser = flags(10.0);
    for (std::size_t i = 0; i < tight.size(); ++i) {
        CHECK((!tight[i] || loose[i]));
        CHECK((!loose[i] || looser[i]));
    }
}

TEST_CASE("vector-valued functions stabilize coordinatewise") {
    const Group h = Group::heisenberg_group();
    std::vector<GroupFunction> comps = {heisenberg_jensen(h, {2.0, -1.0, 0.5}),
                                        heisenberg_jensen(h, {0.0, 1.0, 0.0}),
                                        heisenberg_character(h, -1.0, 3.0)};
    const GroupFunction j3 = stack(h, comps, "j3");
    const GroupFunction f = noisy_jensen(j3, NoiseModel{0.25, 15, 3});
    CHECK(f.dimension() == 3);
    ElementSampler s(h, 80);
    for (int i = 0; i < 15; ++i) {
        const GroupElement x = s.next();
        const StabilizationResult r = stabilize(f, x);
        CHECK(r.converged);
        CHECK((r.value - j3(x)).norm() <= 1e-8);
    }
}
