#include "jensenlab/experiments.hpp"

#include <chrono>
#include <cmath>
#include <map>

namespace jensenlab {

namespace {

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

void attach_ladder(ExperimentReport& rep, const ConstantLadder& ladder) {
    for (int m = 1; m <= 4 && m <= ladder.m_max(); ++m)
        rep.ladder_head[static_cast<std::size_t>(m - 1)] = ladder.at(m);
}

// Measured sup defect combined with any analytic bound carried by f; the
// result is a valid ladder constant for every element the experiment visits.
struct DefectBounds {
    double measured = 0.0;
    double used = 0.0;
    DefectEstimate estimate;
};

DefectBounds measure_defect(const GroupFunction& f, std::uint64_t seed, int pairs, int word_len) {
    DefectBounds b;
    ElementSampler sampler(f.domain(), derive_seed(seed, "defect-pairs"), word_len);
    b.estimate = sup_jensen_defect(f, sampler, pairs);
    b.measured = b.estimate.bound;
    b.used = std::max(b.measured, f.defect_bound().value_or(0.0));
    return b;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number in function spec: '" + s + "'");
    return v;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const std::string piece =
            comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        out.push_back(parse_double(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

bool ExperimentReport::check(const std::string& name, double value, double tolerance) {
    const bool ok = value <= tolerance;
    residuals.push_back({name, value, tolerance, ok, false});
    return ok;
}

void ExperimentReport::info(const std::string& name, double value, double tolerance) {
    residuals.push_back({name, value, tolerance, true, true});
}

void ExperimentReport::finalize() {
    pass = true;
    for (const auto& r : residuals)
        if (!r.informational && !r.pass) pass = false;
}

// ---------------------------------------------------------------------------
// Exhaustive phi verification
// ---------------------------------------------------------------------------

ExperimentReport verify_jensen_exhaustive(const HeisenbergIntFormula& formula, long radius,
                                          const std::string& name) {
    if (radius < 1) throw std::invalid_argument("radius must be >= 1");
    Timer timer;
    ExperimentReport rep;
    rep.experiment = name;
    rep.group = "heisenberg";
    rep.params["radius"] = radius;

    long violations = 0;
    Int max_defect = 0;
    std::uint64_t pairs = 0;
    std::optional<std::pair<HeisenbergCoords, HeisenbergCoords>> first_violation;

    const long R = radius;
    HeisenbergCoords x, y;
    for (long m = -R; m <= R; ++m)
        for (long n = -R; n <= R; ++n)
            for (long k = -R; k <= R; ++k) {
                x = {m, n, k};
                const Int fx2 = 2 * formula(x);
                for (long m1 = -R; m1 <= R; ++m1)
                    for (long n1 = -R; n1 <= R; ++n1)
                        for (long k1 = -R; k1 <= R; ++k1) {
                            y = {m1, n1, k1};
                            const HeisenbergCoords xy = heisenberg::multiply(x, y);
                            const HeisenbergCoords xyi =
                                heisenberg::multiply(x, heisenberg::inverse(y));
                            Int defect = formula(xy) + formula(xyi) - fx2;
                            ++pairs;
                            if (defect != 0) {
                                ++violations;
                                if (abs(defect) > max_defect) max_defect = abs(defect);
                                if (!first_violation) first_violation = {x, y};
                            }
                        }
            }

    rep.params["pairs_checked"] = pairs;
    rep.params["arithmetic"] = "exact-integer";
    rep.check("violations", static_cast<double>(violations), 0.0);
    rep.info("max_abs_defect", to_double(max_defect));
    if (first_violation) {
        auto coords_str = [](const HeisenbergCoords& h) {
            return "(" + h.m.get_str() + "," + h.n.get_str() + "," + h.k.get_str() + ")";
        };
        rep.witnesses.push_back({"nonzero_defect", coords_str(first_violation->first),
                                 coords_str(first_violation->second), to_double(max_defect)});
    }
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

ExperimentReport verify_phi_exact(long radius) {
    ExperimentReport rep = verify_jensen_exhaustive(
        [](const HeisenbergCoords& h) { return heisenberg::phi_exact(h); }, radius,
        "verify-phi");
    rep.params["formula"] = "m*n-2k";
    return rep;
}

// ---------------------------------------------------------------------------
// Named functions
// ---------------------------------------------------------------------------

GroupFunction make_named_function(const Group& g, const std::string& spec, double epsilon,
                                  std::uint64_t seed, std::size_t dimension) {
    const NoiseModel model{epsilon, derive_seed(seed, "noise"), dimension};
    if (spec == "noise") return pure_noise(g, model);

    auto base = [&]() -> GroupFunction {
        if (spec == "phi") return heisenberg_phi_function(g);
        if (spec == "natchar") return natural_character(g);
        if (spec.starts_with("natchar:"))
            return natural_character(g, parse_double(spec.substr(8)));
        if (spec.starts_with("jensen:")) {
            const auto v = parse_doubles(spec.substr(7));
            if (v.size() != 3) throw std::invalid_argument("jensen spec needs alpha,beta,lambda");
            return heisenberg_jensen(g, {v[0], v[1], v[2]});
        }
        if (spec.starts_with("char:")) {
            const auto v = parse_doubles(spec.substr(5));
            if (v.size() != 2) throw std::invalid_argument("char spec needs s,t");
            return heisenberg_character(g, v[0], v[1]);
        }
        if (spec.starts_with("linear:")) return linear_on_z(g, parse_double(spec.substr(7)));
        if (spec == "square") return square_on_z(g);
        if (spec == "zero") return zero_function(g, dimension);
        throw std::invalid_argument("unknown function spec: '" + spec + "'");
    }();

    if (dimension != 1 && base.dimension() != dimension)
        throw std::invalid_argument("function spec '" + spec + "' is scalar; use dimension 1");
    if (epsilon == 0.0) return base;
    return noisy_jensen(base, model);
}

// ---------------------------------------------------------------------------
// Defect measurement
// ---------------------------------------------------------------------------

ExperimentReport defect_experiment(const DefectConfig& cfg) {
    Timer timer;
    const Group g = Group::parse(cfg.group);
    const GroupFunction f = make_named_function(g, cfg.function, cfg.epsilon, cfg.seed);

    ExperimentReport rep;
    rep.experiment = "defect";
    rep.group = g.id();
    rep.seed = cfg.seed;
    rep.params["function"] = cfg.function;
    rep.params["epsilon"] = cfg.epsilon;
    rep.params["pairs"] = cfg.pairs;
    rep.params["word_len"] = cfg.word_len;

    ElementSampler sampler(g, derive_seed(cfg.seed, "defect-pairs"), cfg.word_len);
    const DefectEstimate est = sup_jensen_defect(f, sampler, cfg.pairs);
    rep.c_measured = est.bound;
    if (f.defect_bound()) rep.params["c_analytic"] = *f.defect_bound();
    attach_ladder(rep, ConstantLadder(est.bound, f(g.identity()).norm(), 4));
    rep.info("sup_defect", est.bound);
    rep.witnesses.push_back(
        {"argmax_pair", g.to_string(est.witness_x), g.to_string(est.witness_y), est.bound});
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Power-deviation ladder bound
// ---------------------------------------------------------------------------

ExperimentReport ladder_bound_experiment(const LadderBoundConfig& cfg) {
    Timer timer;
    const Group g = Group::heisenberg_group();

    ExperimentReport rep;
    rep.experiment = "ladder-bound";
    rep.group = g.id();
    rep.seed = cfg.seed;
    rep.params["epsilon"] = cfg.epsilon;
    rep.params["runs"] = cfg.runs;
    rep.params["elements_per_run"] = cfg.elements_per_run;
    rep.params["m_max"] = cfg.m_max;
    rep.params["slack"] = cfg.slack;

    long violations = 0;
    double worst_margin = -1e300;  // max of deviation - bound
    double max_c = 0.0;
    const int m_max = cfg.m_max;

    for (int run = 0; run < cfg.runs; ++run) {
        const std::uint64_t run_seed = derive_seed(cfg.seed, "ladder-run/" + std::to_string(run));
        SplitMix64 prng(derive_seed(run_seed, "params"));
        const HeisenbergJensenParams params{4.0 * unit_interval(prng.next()) - 2.0,
                                            4.0 * unit_interval(prng.next()) - 2.0,
                                            4.0 * unit_interval(prng.next()) - 2.0};
        const GroupFunction j = heisenberg_jensen(g, params);
        const GroupFunction f =
            noisy_jensen(j, NoiseModel{cfg.epsilon, derive_seed(run_seed, "noise"), 1});

        ElementSampler elems(g, derive_seed(run_seed, "elements"), cfg.word_len);
        const std::vector<GroupElement> xs = elems.take(cfg.elements_per_run);

        // random pair defects
        double c_run = 0.0;
        {
            ElementSampler pair_sampler(g, derive_seed(run_seed, "pairs"), cfg.word_len);
            c_run = sup_jensen_defect(f, pair_sampler, cfg.pairs).bound;
        }

        const ValueVector f1 = f(g.identity());
        const double f1n = f1.norm();

        // Per element: cache f at powers x^j for j in [-(m_max-2), m_max],
        // fold the pairs (x, x^j) and (1, x^j) used by the inductive bound
        // into the measured sample, then test every deviation.
        struct Cached {
            std::vector<ValueVector> pos;  // f(x^j), j = 0..m_max
            std::vector<ValueVector> neg;  // f(x^-j), j = 0..m_max-2
        };
        std::vector<Cached> cache;
        cache.reserve(xs.size());
        for (const GroupElement& x : xs) {
            Cached c;
            c.pos.reserve(static_cast<std::size_t>(m_max) + 1);
            c.neg.reserve(static_cast<std::size_t>(m_max) - 1);
            GroupElement p = g.identity();
            const GroupElement xi = g.inverse(x);
            c.pos.push_back(f1);
            for (int jp = 1; jp <= m_max; ++jp) {
                p = g.multiply(p, x);
                c.pos.push_back(f(p));
            }
            GroupElement q = g.identity();
            c.neg.push_back(f1);
            for (int jp = 1; jp <= m_max - 2; ++jp) {
                q = g.multiply(q, xi);
                c.neg.push_back(f(q));
            }
            // defect(x, x^j) = ||f(x^{j+1}) + f(x^{1-j}) - 2 f(x)||
            for (int jp = 1; jp <= m_max - 1; ++jp) {
                const ValueVector& fxj1 = c.pos[static_cast<std::size_t>(jp) + 1];
                const ValueVector& fx1j =
                    jp >= 1 ? (jp == 1 ? c.pos[0] : c.neg[static_cast<std::size_t>(jp - 1)])
                            : c.pos[0];
                c_run = std::max(c_run, (fxj1 + fx1j - 2.0 * c.pos[1]).norm());
            }
            // defect(1, x^j) = ||f(x^j) + f(x^-j) - 2 f(1)||
            for (int jp = 1; jp <= m_max - 2; ++jp)
                c_run = std::max(
                    c_run, (c.pos[static_cast<std::size_t>(jp)] +
                            c.neg[static_cast<std::size_t>(jp)] - 2.0 * f1)
                               .norm());
            cache.push_back(std::move(c));
        }

        max_c = std::max(max_c, c_run);
        const ConstantLadder ladder(c_run, f1n, m_max);
        for (const Cached& c : cache) {
            for (int m = 1; m <= m_max; ++m) {
                const double dev =
                    (c.pos[static_cast<std::size_t>(m)] - static_cast<double>(m) * c.pos[1]).norm();
                const double margin = dev - (ladder.at(m) + cfg.slack);
                worst_margin = std::max(worst_margin, margin);
                if (margin > 0) ++violations;
            }
        }
    }

    rep.c_measured = max_c;
    attach_ladder(rep, ConstantLadder(max_c, 0.0, 4));
    rep.check("ladder_violations", static_cast<double>(violations), 0.0);
    rep.info("worst_margin", worst_margin);
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Stabilization experiments
// ---------------------------------------------------------------------------

ExperimentReport stabilize_experiment(const StabilizeConfig& cfg) {
    Timer timer;
    const Group g = Group::parse(cfg.group);
    GroupFunction f = make_named_function(g, cfg.function, cfg.epsilon, cfg.seed);

    ExperimentReport rep;
    rep.experiment = "stabilize";
    rep.group = g.id();
    rep.seed = cfg.seed;
    rep.params["function"] = cfg.function;
    rep.params["epsilon"] = cfg.epsilon;
    rep.params["tol"] = cfg.tol;
    rep.params["k_max"] = cfg.k_max;
    rep.params["elements"] = cfg.elements;

    const DefectBounds bounds = measure_defect(f, cfg.seed, std::max(100, cfg.elements / 2),
                                               cfg.word_len);
    rep.c_measured = bounds.measured;
    rep.params["c_used"] = bounds.used;
    f = f.with_defect_bound(bounds.used);

    const double f1n = f(g.identity()).norm();
    const ConstantLadder ladder(bounds.used, f1n, 4);
    attach_ladder(rep, ladder);
    const double c2 = ladder.at(2);

    ElementSampler elems(g, derive_seed(cfg.seed, "elements"), cfg.word_len);
    const std::vector<GroupElement> xs = elems.take(cfg.elements);

    const StabilizeOptions opt{2, cfg.tol, cfg.k_max};
    double max_distance = 0.0, max_cert = 0.0, max_base_diff = 0.0;
    int non_converged = 0, max_iter = 0;
    for (const GroupElement& x : xs) {
        const StabilizationResult r = stabilize(f, x, opt);
        if (!r.converged) ++non_converged;
        max_iter = std::max(max_iter, r.iterations);
        max_cert = std::max(max_cert, r.certified_error);
        max_distance = std::max(max_distance, (r.value - f(x)).norm());
        if (cfg.base_independence) {
            const StabilizationResult r3 = stabilize(f, x, StabilizeOptions{3, cfg.tol, cfg.k_max});
            if (!r3.converged) ++non_converged;
            max_base_diff = std::max(max_base_diff, (r.value - r3.value).norm());
        }
    }

    rep.params["max_iterations"] = max_iter;
    rep.check("non_converged", static_cast<double>(non_converged), 0.0);
    rep.check("certified_error_max", max_cert, cfg.tol);
    rep.check("stabilization_distance_max", max_distance, c2 + cfg.tol);
    if (cfg.base_independence)
        rep.check("base2_vs_base3_max", max_base_diff, cfg.base_independence_tol);
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

ExperimentReport noise_annihilation_experiment(const AnnihilationConfig& cfg) {
    Timer timer;
    const Group g = Group::parse(cfg.group);
    GroupFunction f = make_named_function(g, "noise", cfg.epsilon, cfg.seed);

    ExperimentReport rep;
    rep.experiment = "noise-annihilation";
    rep.group = g.id();
    rep.seed = cfg.seed;
    rep.params["epsilon"] = cfg.epsilon;
    rep.params["tol"] = cfg.tol;
    rep.params["accept"] = cfg.accept;
    rep.params["elements"] = cfg.elements;

    const DefectBounds bounds = measure_defect(f, cfg.seed, 500, cfg.word_len);
    rep.c_measured = bounds.measured;
    rep.params["c_used"] = bounds.used;
    f = f.with_defect_bound(bounds.used);
    const ConstantLadder ladder(bounds.used, f(g.identity()).norm(), 4);
    attach_ladder(rep, ladder);

    ElementSampler elems(g, derive_seed(cfg.seed, "elements"), cfg.word_len);
    double max_value = 0.0, max_distance = 0.0;
    int non_converged = 0;
    for (int i = 0; i < cfg.elements; ++i) {
        const GroupElement x = elems.next();
        const StabilizationResult r = stabilize(f, x, StabilizeOptions{2, cfg.tol, 60});
        if (!r.converged) ++non_converged;
        max_value = std::max(max_value, r.value.norm());
        max_distance = std::max(max_distance, (r.value - f(x)).norm());
    }
    rep.check("non_converged", static_cast<double>(non_converged), 0.0);
    rep.check("stabilized_norm_max", max_value, cfg.accept);
    rep.check("stabilization_distance_max", max_distance, ladder.at(2) + cfg.tol);
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

ExperimentReport decompose_experiment(const DecomposeConfig& cfg) {
    Timer timer;
    const Group g = Group::parse(cfg.group);
    GroupFunction f = make_named_function(g, cfg.function, cfg.epsilon, cfg.seed);

    ExperimentReport rep;
    rep.experiment = "decompose";
    rep.group = g.id();
    rep.seed = cfg.seed;
    rep.params["function"] = cfg.function;
    rep.params["epsilon"] = cfg.epsilon;
    rep.params["tol"] = cfg.tol;
    rep.params["elements"] = cfg.elements;

    const DefectBounds bounds = measure_defect(f, cfg.seed, 300, cfg.word_len);
    rep.c_measured = bounds.measured;
    rep.params["c_used"] = bounds.used;
    f = f.with_defect_bound(bounds.used);
    attach_ladder(rep, ConstantLadder(bounds.used, f(g.identity()).norm(), 4));

    ElementSampler elems(g, derive_seed(cfg.seed, "elements"), cfg.word_len);
    const Decomposition d = decompose(f, elems.take(cfg.elements), StabilizeOptions{2, cfg.tol, 60});

    double excess = 0.0;
    for (const auto& e : d.entries)
        excess = std::max(excess, e.bounded.norm() - (d.c2 + e.certified_error));
    rep.params["c2"] = d.c2;
    rep.check("non_converged", static_cast<double>(d.non_converged), 0.0);
    rep.check("bounded_norm_excess", excess, 1e-12);
    // the bounded part is f - f_hat, so its max norm is the distance bound
    rep.check("stabilization_distance_max", d.max_bounded_norm, d.c2 + cfg.tol);
    rep.info("bounded_norm_max", d.max_bounded_norm, d.bound_limit);
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

ExperimentReport classify_experiment(const ClassifyConfig& cfg) {
    Timer timer;
    const Group g = Group::parse(cfg.group);
    const GroupFunction f = make_named_function(g, cfg.function, cfg.epsilon, cfg.seed);

    ExperimentReport rep;
    rep.experiment = "classify";
    rep.group = g.id();
    rep.seed = cfg.seed;
    rep.params["function"] = cfg.function;
    rep.params["epsilon"] = cfg.epsilon;
    rep.params["tol"] = cfg.tol;
    rep.params["samples"] = cfg.samples;

    ElementSampler sampler(g, derive_seed(cfg.seed, "classify"), cfg.word_len);
    const FunctionClassification c = classify(f, sampler, cfg.samples, cfg.tol);

    auto evidence_json = [](const ClassEvidence& e) {
        return nlohmann::json{{"evidenced", e.evidenced},
                              {"measured", e.measured},
                              {"threshold", e.threshold}};
    };
    nlohmann::json cls;
    cls["jensen"] = evidence_json(c.jensen);
    cls["jensen_zero"] = evidence_json(c.jensen_zero);
    cls["quasi_jensen"] = evidence_json(c.quasi_jensen);
    cls["pseudo_jensen"] = evidence_json(c.pseudo_jensen);
    cls["homomorphism"] = evidence_json(c.homomorphism);
    cls["quasi_additive"] = evidence_json(c.quasi_additive);
    cls["pseudo_additive"] = evidence_json(c.pseudo_additive);
    cls["quasi_character"] = evidence_json(c.quasi_character);
    cls["pseudo_character"] = evidence_json(c.pseudo_character);
    cls["character"] = evidence_json(c.character);
    cls["bounded"] = evidence_json(c.bounded);
    cls["homogeneity"] = evidence_json(c.homogeneity);
    rep.params["classification"] = cls;

    rep.info("jensen_defect_max", c.jensen.measured);
    rep.info("additive_defect_max", c.homomorphism.measured);
    rep.info("homogeneity_excess", c.homogeneity.measured);
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Coefficient recovery
// ---------------------------------------------------------------------------

RecoveryResult recover_heisenberg_coefficients(const GroupFunction& f, double tol, int k_max,
                                               const std::vector<GroupElement>& sample) {
    const Group& g = f.domain();
    if (g.kind() != GroupKind::heisenberg)
        throw std::domain_error("coefficient recovery runs on the Heisenberg group");
    const StabilizeOptions opt{2, tol, k_max};

    const StabilizationResult ra = stabilize(f, g.make_heisenberg(1, 0, 0), opt);
    const StabilizationResult rb = stabilize(f, g.make_heisenberg(0, 1, 0), opt);
    const StabilizationResult rc = stabilize(f, g.make_heisenberg(0, 0, 1), opt);

    RecoveryResult out;
    out.converged = ra.converged && rb.converged && rc.converged;
    out.alpha = ra.value[0];
    out.beta = rb.value[0];
    out.lambda = rc.value[0] / -2.0;
    if (!out.converged) return out;

    const GroupFunction j_hat =
        heisenberg_jensen(g, {out.alpha, out.beta, out.lambda});
    for (const GroupElement& x : sample) {
        const StabilizationResult r = stabilize(f, x, opt);
        if (!r.converged) {
            out.converged = false;
            return out;
        }
        out.max_residual = std::max(out.max_residual, (r.value - j_hat(x)).norm());
    }
    return out;
}

ExperimentReport recover_experiment(const RecoverConfig& cfg) {
    Timer timer;
    const Group g = Group::heisenberg_group();
    const GroupFunction j = heisenberg_jensen(g, {cfg.alpha, cfg.beta, cfg.lambda});
    GroupFunction f = noisy_jensen(j, NoiseModel{cfg.epsilon, derive_seed(cfg.seed, "noise"), 1});

    ExperimentReport rep;
    rep.experiment = "recover";
    rep.group = g.id();
    rep.seed = cfg.seed;
    rep.params["alpha"] = cfg.alpha;
    rep.params["beta"] = cfg.beta;
    rep.params["lambda"] = cfg.lambda;
    rep.params["epsilon"] = cfg.epsilon;
    rep.params["tol"] = cfg.tol;
    rep.params["accept"] = cfg.accept;
    rep.params["elements"] = cfg.elements;
    rep.params["k_max"] = cfg.k_max;

    const DefectBounds bounds = measure_defect(f, cfg.seed, cfg.pairs, cfg.word_len);
    rep.c_measured = bounds.measured;
    rep.params["c_used"] = bounds.used;
    f = f.with_defect_bound(bounds.used);
    const ConstantLadder ladder(bounds.used, f(g.identity()).norm(), 4);
    attach_ladder(rep, ladder);

    ElementSampler elems(g, derive_seed(cfg.seed, "elements"), cfg.word_len);
    const std::vector<GroupElement> xs = elems.take(cfg.elements);

    const RecoveryResult rec = recover_heisenberg_coefficients(f, cfg.tol, cfg.k_max, xs);
    rep.params["alpha_recovered"] = rec.alpha;
    rep.params["beta_recovered"] = rec.beta;
    rep.params["lambda_recovered"] = rec.lambda;

    rep.check("non_converged", rec.converged ? 0.0 : 1.0, 0.0);
    rep.check("alpha_error", std::fabs(rec.alpha - cfg.alpha), cfg.accept);
    rep.check("beta_error", std::fabs(rec.beta - cfg.beta), cfg.accept);
    rep.check("lambda_error", std::fabs(rec.lambda - cfg.lambda), cfg.accept);
    rep.check("recovery_residual_max", rec.max_residual, cfg.accept);

    // distance bound surfaced alongside every stabilization experiment
    double max_distance = 0.0;
    const StabilizeOptions opt{2, cfg.tol, cfg.k_max};
    for (std::size_t i = 0; i < xs.size(); i += 97) {
        const StabilizationResult r = stabilize(f, xs[i], opt);
        max_distance = std::max(max_distance, (r.value - f(xs[i])).norm());
    }
    rep.check("stabilization_distance_max", max_distance, ladder.at(2) + cfg.tol);
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// T(2, K) stability
// ---------------------------------------------------------------------------

ExperimentReport t2_stability_experiment(const T2Config& cfg) {
    Timer timer;
    const Group g = Group::parse(cfg.group);
    if (g.kind() != GroupKind::triangular)
        throw std::invalid_argument("t2 experiment needs a t2:* group");
    const bool rationals = g.field().is_rationals();

    const int word_len = rationals ? cfg.q_word_len : cfg.word_len;
    const int k_max = rationals ? cfg.q_k_max : 60;
    const double accept = rationals ? cfg.q_accept : cfg.accept;
    const double stab_tol = rationals ? 0.8 * cfg.q_accept : cfg.tol;

    GroupFunction f = [&] {
        const GroupFunction chi = natural_character(g);
        if (cfg.epsilon == 0.0) return chi;
        return noisy_jensen(chi, NoiseModel{cfg.epsilon, derive_seed(cfg.seed, "noise"), 1});
    }();

    ExperimentReport rep;
    rep.experiment = "t2-stability";
    rep.group = g.id();
    rep.seed = cfg.seed;
    rep.params["epsilon"] = cfg.epsilon;
    rep.params["tol"] = stab_tol;
    rep.params["accept"] = accept;
    rep.params["k_max"] = k_max;
    if (!rationals)
        rep.params["character_space"] = "trivial for finite D; base function is zero";

    const DefectBounds bounds = measure_defect(f, cfg.seed, rationals ? cfg.q_pairs : 300,
                                               word_len);
    rep.c_measured = bounds.measured;
    rep.params["c_used"] = bounds.used;
    f = f.with_defect_bound(bounds.used);
    const ConstantLadder ladder(bounds.used, f(g.identity()).norm(), 4);
    attach_ladder(rep, ladder);
    const StabilizeOptions opt{2, stab_tol, k_max};

    // test elements: exhaustive for prime fields, sampled for Q
    std::vector<GroupElement> xs;
    bool exhaustive = false;
    if (!rationals) {
        auto all = g.try_enumerate(100000);
        if (all) {
            xs = std::move(*all);
            exhaustive = true;
        }
    }
    if (xs.empty()) {
        ElementSampler elems(g, derive_seed(cfg.seed, "elements"), word_len);
        xs = elems.take(rationals ? cfg.q_elements : cfg.elements);
    }
    rep.params["exhaustive"] = exhaustive;
    rep.params["elements"] = xs.size();

    // f_hat cache keyed by canonical encoding
    std::map<std::string, ValueVector> hat;
    int non_converged = 0;
    double max_distance = 0.0;
    auto f_hat = [&](const GroupElement& x) -> const ValueVector& {
        const std::string key = hex(g.canonical_encoding(x));
        auto it = hat.find(key);
        if (it == hat.end()) {
            const StabilizationResult r = stabilize(f, x, opt);
            if (!r.converged) ++non_converged;
            max_distance = std::max(max_distance, (r.value - f(x)).norm());
            it = hat.emplace(key, r.value).first;
        }
        return it->second;
    };

    // (i) f_hat kills the unipotent subgroup: sampled/enumerated x gives the
    // unipotent part u = tau(x)^-1 x
    double unipotent_max = 0.0;
    for (const GroupElement& x : xs) {
        const GroupElement d = t2_projection_tau(g, x);
        const GroupElement u = g.multiply(g.inverse(d), x);
        unipotent_max = std::max(unipotent_max, f_hat(u).norm());
    }

    // (ii) f_hat factors through tau
    double tau_max = 0.0;
    for (const GroupElement& x : xs)
        tau_max = std::max(tau_max, (f_hat(x) - f_hat(t2_projection_tau(g, x))).norm());

    // (iii) additive defect of f_hat on the diagonal subgroup
    double diag_additive_max = 0.0;
    if (exhaustive) {
        std::vector<GroupElement> diag;
        for (const GroupElement& x : xs)
            if (t2_subgroup_membership(g, x).in_d) diag.push_back(x);
        rep.params["diagonal_elements"] = diag.size();
        for (const GroupElement& d1 : diag)
            for (const GroupElement& d2 : diag) {
                const GroupElement d12 = g.multiply(d1, d2);
                diag_additive_max = std::max(
                    diag_additive_max, (f_hat(d12) - f_hat(d1) - f_hat(d2)).norm());
            }
    } else {
        ElementSampler pairs(g, derive_seed(cfg.seed, "diag-pairs"), word_len);
        const int n_pairs = rationals ? cfg.q_pairs : cfg.pairs;
        for (int i = 0; i < n_pairs; ++i) {
            auto [x, y] = pairs.next_pair();
            const GroupElement d1 = t2_projection_tau(g, x);
            const GroupElement d2 = t2_projection_tau(g, y);
            const GroupElement d12 = g.multiply(d1, d2);
            diag_additive_max =
                std::max(diag_additive_max, (f_hat(d12) - f_hat(d1) - f_hat(d2)).norm());
        }
    }

    rep.check("non_converged", static_cast<double>(non_converged), 0.0);
    rep.check("unipotent_kernel_max", unipotent_max, accept);
    rep.check("tau_factorization_max", tau_max, accept);
    rep.check("diag_additive_defect_max", diag_additive_max, accept);
    rep.check("stabilization_distance_max", max_distance, ladder.at(2) + stab_tol);
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Wreath-product stability
// ---------------------------------------------------------------------------

ExperimentReport wreath_stability_experiment(const WreathConfig& cfg) {
    Timer timer;
    if (cfg.factors < 2) throw std::invalid_argument("wreath experiment needs >= 2 factors");
    const Group base = Group::parse(cfg.base);
    const Group g = Group::wreath_product(base, cfg.factors);

    GroupFunction f = [&] {
        const GroupFunction chi = natural_character(g);
        if (cfg.epsilon == 0.0) return chi;
        return noisy_jensen(chi, NoiseModel{cfg.epsilon, derive_seed(cfg.seed, "noise"), 1});
    }();

    ExperimentReport rep;
    rep.experiment = "wreath-stability";
    rep.group = g.id();
    rep.seed = cfg.seed;
    rep.params["base"] = base.id();
    rep.params["factors"] = cfg.factors;
    rep.params["epsilon"] = cfg.epsilon;
    rep.params["tol"] = cfg.tol;
    rep.params["accept"] = cfg.accept;

    const DefectBounds bounds = measure_defect(f, cfg.seed, 300, cfg.word_len);
    rep.c_measured = bounds.measured;
    rep.params["c_used"] = bounds.used;
    f = f.with_defect_bound(bounds.used);
    const ConstantLadder ladder(bounds.used, f(g.identity()).norm(), 4);
    attach_ladder(rep, ladder);
    const StabilizeOptions opt{2, cfg.tol, 60};

    int non_converged = 0;
    double max_distance = 0.0;
    auto f_hat = [&](const GroupElement& x) {
        const StabilizationResult r = stabilize(f, x, opt);
        if (!r.converged) ++non_converged;
        max_distance = std::max(max_distance, (r.value - f(x)).norm());
        return r.value;
    };

    // additive defect of f_hat over sampled pairs
    double additive_max = 0.0;
    {
        ElementSampler pairs(g, derive_seed(cfg.seed, "pairs"), cfg.word_len);
        for (int i = 0; i < cfg.pairs; ++i) {
            auto [x, y] = pairs.next_pair();
            additive_max = std::max(
                additive_max,
                (f_hat(g.multiply(x, y)) - f_hat(x) - f_hat(y)).norm());
        }
    }

    // f_hat kills commutators
    double commutator_max = 0.0;
    {
        ElementSampler pairs(g, derive_seed(cfg.seed, "commutators"), cfg.word_len);
        for (int i = 0; i < cfg.commutators; ++i) {
            auto [x, y] = pairs.next_pair();
            commutator_max = std::max(commutator_max, f_hat(g.commutator(x, y)).norm());
        }
    }

    // invariance under conjugation by the order-two factor generators
    double invariance_max = 0.0;
    {
        ElementSampler elems(g, derive_seed(cfg.seed, "invariance"), cfg.word_len);
        std::vector<GroupElement> bs;
        for (int i = 0; i < cfg.factors; ++i) bs.push_back(g.make_wreath(1u << i, {}));
        for (int i = 0; i < cfg.invariance_elements; ++i) {
            const GroupElement x = elems.next();
            const ValueVector hx = f_hat(x);
            for (const GroupElement& b : bs)
                invariance_max =
                    std::max(invariance_max, (f_hat(g.conjugate(x, b)) - hx).norm());
        }
    }

    // torsion elements of the base must stabilize to zero (when any exist)
    double torsion_max = -1.0;
    {
        ElementSampler elems(g, derive_seed(cfg.seed, "torsion"), cfg.word_len);
        int found = 0;
        for (int i = 0; i < cfg.elements && found < 50; ++i) {
            const GroupElement x = elems.next();
            if (g.is_identity(x)) continue;
            if (g.element_order(x, 64)) {
                torsion_max = std::max(torsion_max, f_hat(x).norm());
                ++found;
            }
        }
        rep.params["torsion_elements_found"] = found;
    }

    rep.check("non_converged", static_cast<double>(non_converged), 0.0);
    rep.check("additive_defect_max", additive_max, cfg.accept);
    rep.check("commutator_value_max", commutator_max, cfg.accept);
    rep.check("order2_invariance_max", invariance_max, cfg.accept);
    if (torsion_max >= 0.0) rep.check("torsion_vanishing_max", torsion_max, cfg.accept);
    rep.check("stabilization_distance_max", max_distance, ladder.at(2) + cfg.tol);
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Order-two invariance
// ---------------------------------------------------------------------------

ExperimentReport order2_invariance_check(const Group& g, const GroupFunction& f_in, double tol,
                                         double accept, int elements, std::uint64_t seed,
                                         int word_len, int order_cap) {
    Timer timer;
    ExperimentReport rep;
    rep.experiment = "order2-invariance";
    rep.group = g.id();
    rep.seed = seed;
    rep.params["tol"] = tol;
    rep.params["accept"] = accept;
    rep.params["elements"] = elements;

    GroupFunction f = f_in;
    const DefectBounds bounds = measure_defect(f, seed, 200, word_len);
    rep.c_measured = bounds.measured;
    rep.params["c_used"] = bounds.used;
    f = f.with_defect_bound(bounds.used);
    const ConstantLadder ladder(bounds.used, f(g.identity()).norm(), 4);
    attach_ladder(rep, ladder);

    // order-two conjugators: sampled elements plus generators
    std::vector<GroupElement> conjugators;
    {
        ElementSampler elems(g, derive_seed(seed, "conjugators"), word_len);
        auto consider = [&](const GroupElement& b) {
            if (g.is_identity(b)) return;
            const auto ord = g.element_order(b, order_cap);
            if (ord && *ord == 2 && conjugators.size() < 16) {
                for (const GroupElement& seen : conjugators)
                    if (seen == b) return;
                conjugators.push_back(b);
            }
        };
        for (const auto& [name, gen] : g.generators()) consider(gen);
        for (int i = 0; i < 200 && conjugators.size() < 16; ++i) consider(elems.next());
    }
    rep.params["order2_conjugators"] = conjugators.size();
    if (conjugators.empty()) {
        rep.params["vacuous"] = true;
        rep.info("invariance_residual_max", 0.0, accept);
        rep.finalize();
        rep.wall_clock_ms = timer.ms();
        return rep;
    }

    const StabilizeOptions opt{2, tol, 60};
    int non_converged = 0;
    double max_distance = 0.0;
    auto f_hat = [&](const GroupElement& x) {
        const StabilizationResult r = stabilize(f, x, opt);
        if (!r.converged) ++non_converged;
        max_distance = std::max(max_distance, (r.value - f(x)).norm());
        return r.value;
    };

    double invariance_max = 0.0;
    ElementSampler elems(g, derive_seed(seed, "elements"), word_len);
    for (int i = 0; i < elements; ++i) {
        const GroupElement x = elems.next();
        const ValueVector hx = f_hat(x);
        for (const GroupElement& b : conjugators) {
            const InnerAutomorphism aut{b};
            invariance_max = std::max(invariance_max, (f_hat(aut.apply(g, x)) - hx).norm());
        }
    }

    rep.check("non_converged", static_cast<double>(non_converged), 0.0);
    rep.check("invariance_residual_max", invariance_max, accept);
    rep.check("stabilization_distance_max", max_distance, ladder.at(2) + tol);
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

ExperimentReport order2_invariance_check(const InvarianceConfig& cfg) {
    const Group g = Group::parse(cfg.group);
    const GroupFunction f = make_named_function(g, cfg.function, cfg.epsilon, cfg.seed);
    ExperimentReport rep = order2_invariance_check(g, f, cfg.tol, cfg.accept, cfg.elements,
                                                   cfg.seed, cfg.word_len, cfg.order_cap);
    rep.params["function"] = cfg.function;
    rep.params["epsilon"] = cfg.epsilon;
    return rep;
}

// ---------------------------------------------------------------------------
// Pseudocharacter witness evidence
// ---------------------------------------------------------------------------

ExperimentReport pseudocharacter_witness_check(const GroupFunction& f,
                                               const WitnessCheckConfig& cfg) {
    Timer timer;
    const Group& g = f.domain();
    ExperimentReport rep;
    rep.experiment = "pseudocharacter-witness";
    rep.group = g.id();
    rep.seed = cfg.seed;
    rep.params["function"] = f.name();
    rep.params["tol"] = cfg.tol;
    rep.params["samples"] = cfg.samples;

    double jd = 0, jd_pow = 0, ad = 0, hom_excess = 0;
    std::optional<ReportWitness> blowup;
    ElementSampler sampler(g, derive_seed(cfg.seed, "witness"), cfg.word_len);
    std::vector<std::pair<GroupElement, GroupElement>> pairs;
    for (int i = 0; i < cfg.samples; ++i) pairs.push_back(sampler.next_pair());

    for (const auto& [x, y] : pairs) {
        jd = std::max(jd, jensen_defect(f, x, y));
        jd_pow = std::max(jd_pow, jensen_defect(f, g.power(x, 4), g.power(y, 4)));
        for (long n = -8; n <= 8; ++n)
            hom_excess = std::max(hom_excess, homogeneity_deviation(f, x, n) /
                                                  std::max(1.0, std::fabs(static_cast<double>(n))));
    }
    rep.c_measured = jd;

    const double blowup_threshold = std::max(10.0 * jd, 10.0 * cfg.tol);
    for (const auto& [x, y] : pairs) {
        const double d = additive_defect(f, x, y);
        if (d > ad) {
            ad = d;
            if (d > blowup_threshold)
                blowup = ReportWitness{"additive_blowup", g.to_string(x), g.to_string(y), d};
        }
    }
    if (blowup) rep.witnesses.push_back(*blowup);

    const bool jensen_bounded = jd_pow <= std::max(2.0 * std::max(jd, cfg.tol), cfg.tol);
    const bool homogeneous = hom_excess <= cfg.tol;
    const bool additive_trivial = ad <= cfg.tol;
    const bool jensen_exact = jd <= cfg.tol && jd_pow <= cfg.tol;

    rep.info("jensen_defect_max", jd);
    rep.info("jensen_defect_powered_max", jd_pow);
    rep.info("additive_defect_max", ad);
    rep.info("homogeneity_excess", hom_excess, cfg.tol);
    rep.params["clause_jensen_bounded"] = jensen_bounded;
    rep.params["clause_homogeneity"] = homogeneous;
    rep.params["clause_additive_blowup"] = blowup.has_value();

    std::string verdict;
    if (additive_trivial)
        verdict = "trivial: additive defect within tolerance everywhere";
    else if (jensen_exact)
        verdict = "jensen-exact input with additive blowup: solution of the equation, "
                  "not an instability witness";
    else if (jensen_bounded && homogeneous && blowup)
        verdict = "nontrivial pseudo-jensen witness candidate";
    else
        verdict = "inconclusive";
    rep.params["verdict"] = verdict;
    rep.finalize();
    rep.wall_clock_ms = timer.ms();
    return rep;
}

}  // namespace jensenlab
