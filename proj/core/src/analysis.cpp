#include "jensenlab/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace jensenlab {

double jensen_defect(const GroupFunction& f, const GroupElement& x, const GroupElement& y) {
    const Group& g = f.domain();
    const GroupElement xy = g.multiply(x, y);
    const GroupElement xyi = g.multiply(x, g.inverse(y));
    return (f(xy) + f(xyi) - 2.0 * f(x)).norm();
}

double additive_defect(const GroupFunction& f, const GroupElement& x, const GroupElement& y) {
    const Group& g = f.domain();
    return (f(g.multiply(x, y)) - f(x) - f(y)).norm();
}

double homogeneity_deviation(const GroupFunction& f, const GroupElement& x, long n) {
    const Group& g = f.domain();
    return (f(g.power(x, Int(n))) - static_cast<double>(n) * f(x)).norm();
}

double power_deviation(const GroupFunction& f, const GroupElement& x, int m) {
    if (m < 1) throw std::invalid_argument("power deviation needs m >= 1");
    return homogeneity_deviation(f, x, m);
}

DefectEstimate sup_jensen_defect(const GroupFunction& f, ElementSampler& sampler, int pairs) {
    if (pairs < 1) throw std::invalid_argument("pair count must be >= 1");
    DefectEstimate est;
    est.pairs = pairs;
    for (int i = 0; i < pairs; ++i) {
        auto [x, y] = sampler.next_pair();
        const double d = jensen_defect(f, x, y);
        if (i == 0 || d > est.bound) {
            est.bound = d;
            est.witness_x = x;
            est.witness_y = y;
        }
    }
    return est;
}

ConstantLadder::ConstantLadder(double c, double f1_norm, int m_max) : c_(c), f1_(f1_norm) {
    if (c < 0 || f1_norm < 0) throw std::invalid_argument("ladder inputs must be nonnegative");
    if (m_max < 1) throw std::invalid_argument("ladder length must be >= 1");
    values_.resize(static_cast<std::size_t>(m_max));
    values_[0] = c + 2.0 * f1_norm;              // c1
    if (m_max >= 2) values_[1] = c + f1_norm;    // c2
    if (m_max >= 3) values_[2] = c + values_[0]; // c3
    for (int m = 4; m <= m_max; ++m) values_[m - 1] = c + values_[0] + values_[m - 3];
}

double ConstantLadder::at(int m) const {
    if (m < 1 || m > m_max()) throw std::out_of_range("ladder index");
    return values_[static_cast<std::size_t>(m - 1)];
}

ValueVector scaled_power(const GroupFunction& f, const GroupElement& x, int base, int k) {
    if (base < 2) throw std::invalid_argument("scaled power base must be >= 2");
    if (k < 0) throw std::invalid_argument("scaled power exponent must be >= 0");
    Int exp;
    mpz_ui_pow_ui(exp.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(k));
    const GroupElement xk = f.domain().power(x, exp);
    return f(xk) / to_double(exp);
}

StabilizationResult stabilize(const GroupFunction& f, const GroupElement& x,
                              const StabilizeOptions& opt) {
    if (!f.defect_bound())
        throw std::invalid_argument("stabilize requires a defect bound on the function");
    if (opt.base < 2) throw std::invalid_argument("stabilize base must be >= 2");
    if (opt.tol <= 0) throw std::invalid_argument("stabilize tolerance must be positive");
    if (opt.k_max < 1) throw std::invalid_argument("stabilize k_max must be >= 1");

    const Group& g = f.domain();
    const double f1 = f(g.identity()).norm();
    const ConstantLadder ladder(*f.defect_bound(), f1, opt.base);
    const double cm = ladder.at(opt.base);
    const double m = static_cast<double>(opt.base);

    StabilizationResult r;
    r.base = opt.base;

    ValueVector raw_prev = f(x);  // f(x^(m^0))
    GroupElement pow = x;
    double scale = 1.0;
    ValueVector value = raw_prev;
    for (int k = 1; k <= opt.k_max; ++k) {
        pow = g.power(pow, Int(opt.base));
        scale *= m;
        const ValueVector raw = f(pow);
        r.max_orbit_deviation =
            std::max(r.max_orbit_deviation, (raw - m * raw_prev).norm());
        raw_prev = raw;
        value = raw / scale;
        r.iterations = k;
        r.certified_error = cm * std::pow(m, 1.0 - k) / (m - 1.0);
        if (r.certified_error <= opt.tol) {
            r.converged = true;
            break;
        }
    }
    // the identity is a fixed point of powering; its limit is exactly zero
    r.value = g.is_identity(x) ? ValueVector(f.dimension()) : value;
    return r;
}

Decomposition decompose(const GroupFunction& f, const std::vector<GroupElement>& sample,
                        const StabilizeOptions& opt) {
    if (!f.defect_bound())
        throw std::invalid_argument("decompose requires a defect bound on the function");
    const Group& g = f.domain();
    Decomposition d;
    d.c2 = *f.defect_bound() + f(g.identity()).norm();
    double max_cert = 0.0;
    for (const GroupElement& x : sample) {
        StabilizationResult r = stabilize(f, x, opt);
        DecompositionEntry e{x, r.value, f(x) - r.value, r.certified_error, r.converged};
        d.max_bounded_norm = std::max(d.max_bounded_norm, e.bounded.norm());
        max_cert = std::max(max_cert, r.certified_error);
        if (!r.converged) ++d.non_converged;
        d.entries.push_back(std::move(e));
    }
    d.bound_limit = d.c2 + max_cert;
    d.bound_ok = true;
    for (const auto& e : d.entries)
        if (e.bounded.norm() > d.c2 + e.certified_error + 1e-12) d.bound_ok = false;
    return d;
}

CommutingAdditivityReport commuting_additivity_bound(const GroupFunction& f,
                                                     ElementSampler& sampler, int pairs,
                                                     double sym_tol) {
    if (pairs < 1) throw std::invalid_argument("pair count must be >= 1");
    const Group& g = f.domain();
    CommutingAdditivityReport rep;
    rep.pairs = pairs;
    for (int i = 0; i < pairs; ++i) {
        auto [x, y] = sampler.next_pair();
        rep.max_additive_defect = std::max(rep.max_additive_defect, additive_defect(f, x, y));
        const double sym = (f(g.multiply(x, y)) - f(g.multiply(y, x))).norm();
        if (sym > rep.max_symmetry_difference) {
            rep.max_symmetry_difference = sym;
            if (sym > sym_tol) rep.violation = SymmetryViolation{x, y, sym};
        }
    }
    return rep;
}

namespace {

// Growth probe: defects at (x^s, y^s) staying comparable to defects at (x, y)
// is evidence of boundedness; scaling with s is evidence against. The factor
// sits strictly between 1 (sampling noise) and s (linear growth) so that both
// sides of the divide are detected reliably.
constexpr int kGrowthPower = 4;
constexpr double kGrowthFactor = 2.0;

bool growth_detected(double base_max, double powered_max, double tol) {
    return powered_max > kGrowthFactor * std::max(base_max, tol);
}

}  // namespace

FunctionClassification classify(const GroupFunction& f, ElementSampler& sampler, int samples,
                                double tol) {
    if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
    if (tol <= 0) throw std::invalid_argument("classification tolerance must be positive");
    const Group& g = f.domain();

    double jd = 0, jd_pow = 0;        // Jensen defects, base and powered pairs
    double ad = 0, ad_pow = 0;        // additive defects
    double vn = 0, vn_pow = 0;        // value norms
    double hom_excess = 0;            // max over n of deviation / max(1, |n|)
    for (int i = 0; i < samples; ++i) {
        auto [x, y] = sampler.next_pair();
        const GroupElement xp = g.power(x, kGrowthPower);
        const GroupElement yp = g.power(y, kGrowthPower);
        jd = std::max(jd, jensen_defect(f, x, y));
        jd_pow = std::max(jd_pow, jensen_defect(f, xp, yp));
        ad = std::max(ad, additive_defect(f, x, y));
        ad_pow = std::max(ad_pow, additive_defect(f, xp, yp));
        vn = std::max(vn, f(x).norm());
        vn_pow = std::max(vn_pow, f(xp).norm());
        for (long n = -8; n <= 8; ++n) {
            const double dev = homogeneity_deviation(f, x, n);
            hom_excess = std::max(hom_excess, dev / std::max(1.0, std::fabs(static_cast<double>(n))));
        }
    }
    const double f1 = f(g.identity()).norm();

    FunctionClassification c;
    c.dimension = f.dimension();
    c.sample_size = samples;
    c.tol = tol;

    c.jensen = {jd <= tol && jd_pow <= tol, std::max(jd, jd_pow), tol};
    c.jensen_zero = {c.jensen.evidenced && f1 <= tol, std::max(c.jensen.measured, f1), tol};
    c.quasi_jensen = {!growth_detected(jd, jd_pow, tol), jd_pow, 0.0};
    c.homogeneity = {hom_excess <= tol, hom_excess, tol};
    c.pseudo_jensen = {c.quasi_jensen.evidenced && c.homogeneity.evidenced, hom_excess, tol};
    c.homomorphism = {ad <= tol && ad_pow <= tol, std::max(ad, ad_pow), tol};
    c.quasi_additive = {!growth_detected(ad, ad_pow, tol), ad_pow, 0.0};
    c.pseudo_additive = {c.quasi_additive.evidenced && c.homogeneity.evidenced, hom_excess, tol};
    c.bounded = {!growth_detected(vn, vn_pow, tol), std::max(vn, vn_pow), 0.0};

    // containments: additive classes sit inside the Jensen classes, exact
    // classes inside their bounded-defect versions
    c.quasi_jensen.evidenced |= c.quasi_additive.evidenced;
    c.pseudo_jensen.evidenced |= c.pseudo_additive.evidenced;
    c.jensen_zero.evidenced |= c.homomorphism.evidenced;
    c.pseudo_jensen.evidenced |= c.jensen_zero.evidenced;
    c.quasi_jensen.evidenced |= c.pseudo_jensen.evidenced;
    c.pseudo_additive.evidenced |= c.homomorphism.evidenced;
    c.quasi_additive.evidenced |= c.pseudo_additive.evidenced;

    if (f.dimension() == 1) {
        c.quasi_character = c.quasi_additive;
        c.pseudo_character = c.pseudo_additive;
        c.character = c.homomorphism;
    }
    return c;
}

}  // namespace jensenlab
