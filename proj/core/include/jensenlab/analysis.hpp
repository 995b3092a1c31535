#pragma once

#include "jensenlab/group_function.hpp"
#include "jensenlab/sampler.hpp"

namespace jensenlab {

// ---------------------------------------------------------------------------
// Defect functionals
// ---------------------------------------------------------------------------

// ||f(xy) + f(xy^-1) - 2 f(x)||
double jensen_defect(const GroupFunction& f, const GroupElement& x, const GroupElement& y);

// ||f(xy) - f(x) - f(y)||
double additive_defect(const GroupFunction& f, const GroupElement& x, const GroupElement& y);

// ||f(x^n) - n f(x)||
double homogeneity_deviation(const GroupFunction& f, const GroupElement& x, long n);

// ||f(x^m) - m f(x)||, m >= 1
double power_deviation(const GroupFunction& f, const GroupElement& x, int m);

struct DefectEstimate {
    double bound = 0.0;         // max over the sample
    GroupElement witness_x, witness_y;  // first argmax pair
    int pairs = 0;
};

// Empirical stand-in for the sup over G x G: max Jensen defect over n sampled
// pairs. First-found maximum kept; the sampler order is seed-deterministic.
DefectEstimate sup_jensen_defect(const GroupFunction& f, ElementSampler& sampler, int pairs);

// ---------------------------------------------------------------------------
// Constant ladder: c1 = c + 2||f(1)||, c2 = c + ||f(1)||, c3 = c + c1,
// c_m = c + c1 + c_{m-2} for m > 3. Controls ||f(x^m) - m f(x)|| <= c_m.
// ---------------------------------------------------------------------------
class ConstantLadder {
public:
    ConstantLadder(double c, double f1_norm, int m_max);

    double c() const { return c_; }
    double f1_norm() const { return f1_; }
    int m_max() const { return static_cast<int>(values_.size()); }
    double at(int m) const;  // c_m for 1 <= m <= m_max
    const std::vector<double>& values() const { return values_; }

private:
    double c_, f1_;
    std::vector<double> values_;
};

// m^-k * f(x^(m^k)). The group power is exact; the scale is applied once to
// the evaluated vector.
ValueVector scaled_power(const GroupFunction& f, const GroupElement& x, int base, int k);

// ---------------------------------------------------------------------------
// Doubling-limit stabilization: f_hat(x) = lim_k m^-k f(x^(m^k)).
// Successive scaled powers differ by at most c_m / m^k, so the tail after k
// iterations telescopes to the geometric bound c_m * m^(1-k) / (m-1); the
// iteration stops once that certified bound reaches tol.
// ---------------------------------------------------------------------------

struct StabilizeOptions {
    int base = 2;
    double tol = 1e-9;
    int k_max = 60;
};

struct StabilizationResult {
    ValueVector value;
    int base = 2;
    int iterations = 0;
    double certified_error = 0.0;  // c_m * m^(1-k) / (m-1) at the reported k
    bool converged = false;
    // max ||f(y^m) - m f(y)|| observed along the orbit y = x^(m^j); always
    // within the ladder bound c_m, recorded as a cross-check
    double max_orbit_deviation = 0.0;
};

// Requires f.defect_bound() (measured or analytic) to form the ladder.
// By convention the identity stabilizes to exactly 0.
StabilizationResult stabilize(const GroupFunction& f, const GroupElement& x,
                              const StabilizeOptions& opt = {});

// ---------------------------------------------------------------------------
// Decomposition of a bounded-defect function into pseudo-Jensen + bounded:
// pseudo part f_hat via stabilization, bounded part f - f_hat with the
// certified norm bound c2 + certified_error at every sampled element.
// ---------------------------------------------------------------------------

struct DecompositionEntry {
    GroupElement x;
    ValueVector pseudo;   // f_hat(x)
    ValueVector bounded;  // f(x) - f_hat(x)
    double certified_error = 0.0;
    bool converged = false;
};

struct Decomposition {
    std::vector<DecompositionEntry> entries;
    double c2 = 0.0;
    double max_bounded_norm = 0.0;
    double bound_limit = 0.0;  // c2 + max certified error
    bool bound_ok = false;
    int non_converged = 0;
};

Decomposition decompose(const GroupFunction& f, const std::vector<GroupElement>& sample,
                        const StabilizeOptions& opt = {});

// ---------------------------------------------------------------------------
// Commuting-values additivity: for pseudo-Jensen f with f(xy) = f(yx) the
// additive defect is bounded by the Jensen defect bound. Reports the max
// additive defect over the sample and any symmetry violation found.
// ---------------------------------------------------------------------------

struct SymmetryViolation {
    GroupElement x, y;
    double difference = 0.0;  // ||f(xy) - f(yx)||
};

struct CommutingAdditivityReport {
    double max_additive_defect = 0.0;
    double max_symmetry_difference = 0.0;
    std::optional<SymmetryViolation> violation;  // worst offender above tol
    int pairs = 0;
};

CommutingAdditivityReport commuting_additivity_bound(const GroupFunction& f,
                                                     ElementSampler& sampler, int pairs,
                                                     double sym_tol = 1e-9);

// ---------------------------------------------------------------------------
// Classification into the function spaces of the theory. Flags are sample
// evidence, not proofs: bounded-defect classes use a growth probe (defects
// re-measured at powered pairs must not scale with the power), exact classes
// use thresholds proportional to tol. All rules are monotone in tol.
// ---------------------------------------------------------------------------

struct ClassEvidence {
    bool evidenced = false;
    double measured = 0.0;   // the relevant max over the sample
    double threshold = 0.0;  // 0 marks growth-probe rules
};

struct FunctionClassification {
    // Jensen side
    ClassEvidence jensen;         // J: zero Jensen defect
    ClassEvidence jensen_zero;    // J0: J and f(1) = 0
    ClassEvidence quasi_jensen;   // KJ: bounded Jensen defect
    ClassEvidence pseudo_jensen;  // PJ: KJ + homogeneity f(x^n) = n f(x)
    // additive side
    ClassEvidence homomorphism;     // Hom: zero additive defect
    ClassEvidence quasi_additive;   // KAM: bounded additive defect
    ClassEvidence pseudo_additive;  // PAM: KAM + homogeneity
    // real-valued aliases (quasicharacter / pseudocharacter / character);
    // meaningful only when dimension == 1
    ClassEvidence quasi_character;
    ClassEvidence pseudo_character;
    ClassEvidence character;
    // bounded functions
    ClassEvidence bounded;

    ClassEvidence homogeneity;  // shared ingredient, reported for reference

    std::size_t dimension = 1;
    int sample_size = 0;
    double tol = 0.0;
};

FunctionClassification classify(const GroupFunction& f, ElementSampler& sampler, int samples,
                                double tol);

}  // namespace jensenlab
