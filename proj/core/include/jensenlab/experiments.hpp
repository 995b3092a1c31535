#pragma once

#include <nlohmann/json.hpp>

#include "jensenlab/analysis.hpp"
#include "jensenlab/functions.hpp"
#include "jensenlab/noise.hpp"

namespace jensenlab {

// ---------------------------------------------------------------------------
// Structured experiment reports. A report passes iff every residual check is
// within its tolerance. Serialization lives in report_io.hpp.
// ---------------------------------------------------------------------------

struct ResidualCheck {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool informational = false;  // recorded but not counted toward pass/fail
};

struct ReportWitness {
    std::string label;
    std::string x, y;  // printable element forms; y may be empty
    double value = 0.0;
};

struct ExperimentReport {
    std::string experiment;
    std::string group;
    nlohmann::json params = nlohmann::json::object();
    double c_measured = 0.0;
    std::array<double, 4> ladder_head{0, 0, 0, 0};  // c1..c4 of the ladder in use
    std::vector<ResidualCheck> residuals;
    std::vector<ReportWitness> witnesses;
    bool pass = false;
    std::uint64_t seed = 0;
    double wall_clock_ms = 0.0;

    // adds a check and returns whether it passed
    bool check(const std::string& name, double value, double tolerance);
    void info(const std::string& name, double value, double tolerance = 0.0);
    void finalize();  // recomputes pass from the recorded checks
};

// ---------------------------------------------------------------------------
// Experiment drivers
// ---------------------------------------------------------------------------

// Exhaustive exact-arithmetic verification that a function given by an
// integer formula on Heisenberg coordinate triples satisfies the Jensen
// identity on the box [-radius, radius]^3 (all pairs of box elements). The
// defect is computed in exact integers; a pass is a proof over the box.
using HeisenbergIntFormula = std::function<Int(const HeisenbergCoords&)>;
ExperimentReport verify_jensen_exhaustive(const HeisenbergIntFormula& formula, long radius,
                                          const std::string& name);
// The above applied to phi(a^m b^n c^k) = m n - 2 k.
ExperimentReport verify_phi_exact(long radius);

// Measured sup of the Jensen defect over sampled pairs.
struct DefectConfig {
    std::string group = "heisenberg";
    std::string function = "phi";  // function spec, see make_named_function
    double epsilon = 0.0;
    std::uint64_t seed = 1;
    int pairs = 500;
    int word_len = 8;
};
ExperimentReport defect_experiment(const DefectConfig& cfg);

// Power-deviation bound: for noisy Jensen functions on the Heisenberg group,
// every sampled x and every m <= m_max satisfies
//   ||f(x^m) - m f(x)|| <= c_m + slack,
// with c measured over the experiment's sample. The measurement sample
// includes, for every tested x, the pairs (x, x^j) and (1, x^j) that the
// inductive derivation of c_m consumes, so the bound is exact, not
// probabilistic.
struct LadderBoundConfig {
    double epsilon = 0.25;
    int runs = 100;
    int elements_per_run = 1000;
    int m_max = 12;
    double slack = 1e-12;
    std::uint64_t seed = 1;
    int pairs = 200;
    int word_len = 8;
};
ExperimentReport ladder_bound_experiment(const LadderBoundConfig& cfg);

// Stabilization on sampled elements: certified error, distance bound
// ||f_hat(x) - f(x)|| <= c2 + tol, and base independence between base 2 and
// base 3 limits.
struct StabilizeConfig {
    std::string group = "heisenberg";
    std::string function = "jensen:1,1,1";
    double epsilon = 0.0;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    int k_max = 60;
    int elements = 100;
    int word_len = 8;
    bool base_independence = false;  // also compare base 2 vs base 3
    double base_independence_tol = 2e-9;
};
ExperimentReport stabilize_experiment(const StabilizeConfig& cfg);

// Pure-noise annihilation: bounded input stabilizes to zero.
struct AnnihilationConfig {
    std::string group = "heisenberg";
    double epsilon = 1.0;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    double accept = 1e-6;
    int elements = 1000;
    int word_len = 8;
};
ExperimentReport noise_annihilation_experiment(const AnnihilationConfig& cfg);

// Decomposition f = f_hat + (f - f_hat) over a sample, with the norm bound
// on the bounded part checked elementwise.
struct DecomposeConfig {
    std::string group = "heisenberg";
    std::string function = "jensen:2,-1,0.5";
    double epsilon = 0.1;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    int elements = 200;
    int word_len = 8;
};
ExperimentReport decompose_experiment(const DecomposeConfig& cfg);

// Classification report (informational; always passes unless evaluation
// fails).
struct ClassifyConfig {
    std::string group = "heisenberg";
    std::string function = "phi";
    double epsilon = 0.0;
    std::uint64_t seed = 1;
    double tol = 1e-6;
    int samples = 200;
    int word_len = 8;
};
ExperimentReport classify_experiment(const ClassifyConfig& cfg);

// Coefficient recovery on the Heisenberg group: stabilizing f = j + noise
// recovers j's coefficients from f_hat at the generators, and f_hat matches
// j everywhere on a sample.
struct RecoveryResult {
    double alpha = 0.0, beta = 0.0, lambda = 0.0;
    double max_residual = 0.0;
    bool converged = false;
};
RecoveryResult recover_heisenberg_coefficients(const GroupFunction& f, double tol, int k_max,
                                               const std::vector<GroupElement>& sample);

struct RecoverConfig {
    double alpha = 2.0, beta = -1.0, lambda = 0.5;
    double epsilon = 0.1;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    double accept = 1e-6;
    int elements = 1000;
    int k_max = 40;
    int pairs = 500;
    int word_len = 8;
};
ExperimentReport recover_experiment(const RecoverConfig& cfg);

// Stability on T(2,K): a noisy diagonal character stabilizes back to a
// function that kills the unipotent subgroup, factors through tau, and is
// additive on the diagonal. Exhaustive over the group for prime fields;
// sampled over the rationals (where doubling makes coordinates exponentially
// large, the run uses a reduced doubling budget and correspondingly looser
// tolerance).
struct T2Config {
    std::string group = "t2:fp:7";
    double epsilon = 0.1;
    std::uint64_t seed = 1;
    double tol = 1e-9;    // certified stabilization tolerance (prime fields)
    double accept = 1e-6; // residual acceptance (prime fields)
    int elements = 200;   // sample size for K = Q
    int pairs = 100;
    int word_len = 8;
    // K = Q budget: tol/accept loosened to match
    int q_k_max = 12;
    double q_accept = 1e-3;
    int q_word_len = 4;
    int q_elements = 60;
    int q_pairs = 40;
};
ExperimentReport t2_stability_experiment(const T2Config& cfg);

// Stability on A wr C2^factors: a noisy character stabilizes back to a
// character; f_hat is additive, kills commutators, and is invariant under
// conjugation by the order-two generators.
struct WreathConfig {
    std::string base = "z";
    int factors = 8;
    double epsilon = 0.1;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    double accept = 1e-6;
    int elements = 1000;
    int pairs = 500;
    int commutators = 200;
    int invariance_elements = 50;
    int word_len = 8;
};
ExperimentReport wreath_stability_experiment(const WreathConfig& cfg);

// Invariance of f_hat under conjugation by sampled order-two elements.
struct InvarianceConfig {
    std::string group = "t2:fp:7";
    std::string function = "natchar";
    double epsilon = 0.1;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    double accept = 1e-6;
    int elements = 100;
    int order_cap = 64;
    int word_len = 8;
};
ExperimentReport order2_invariance_check(const InvarianceConfig& cfg);
ExperimentReport order2_invariance_check(const Group& g, const GroupFunction& f, double tol,
                                         double accept, int elements, std::uint64_t seed,
                                         int word_len = 8, int order_cap = 64);

// Evidence report for a candidate nontrivial pseudocharacter-style witness:
// bounded Jensen defect, homogeneity, and an additive-defect blowup. This
// library does not construct nontrivial pseudocharacters; the check is a
// pluggable evaluator for caller-supplied functions.
struct WitnessCheckConfig {
    double tol = 1e-6;
    int samples = 300;
    std::uint64_t seed = 1;
    int word_len = 8;
};
ExperimentReport pseudocharacter_witness_check(const GroupFunction& f,
                                               const WitnessCheckConfig& cfg);

// Builds the function named by a CLI-style spec over g:
//   phi | jensen:<a>,<b>,<l> | char:<s>,<t> | natchar | natchar:<w>
//   | linear:<slope> | square | zero | noise
// Noise with the given epsilon/seed/d is added on top unless epsilon == 0;
// "noise" is the pure noise function itself.
GroupFunction make_named_function(const Group& g, const std::string& spec, double epsilon,
                                  std::uint64_t seed, std::size_t dimension = 1);

}  // namespace jensenlab
