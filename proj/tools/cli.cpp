#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "jensenlab/report_io.hpp"

namespace jensenlab::cli {

namespace {

enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level() {
    const char* env = std::getenv("JENSEN_LAB_LOG");
    if (!env) return LogLevel::error;
    const std::string v(env);
    if (v == "debug") return LogLevel::debug;
    if (v == "info") return LogLevel::info;
    return LogLevel::error;
}

struct CommonOpts {
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--format", c.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out_path, "write the report to this path instead of stdout");
}

constexpr const char* kGrammar =
    "group descriptors: heisenberg | z | z^d:<rank> | zn:<modulus> | t2:q | "
    "t2:fp:<odd prime> | wreath:<base>:<factors> | <a>*<b> (direct product); "
    "function specs: phi | jensen:<a>,<b>,<l> | char:<s>,<t> | natchar[:<w>] | "
    "linear:<slope> | square | zero | noise";

int emit(const ExperimentReport& rep, const CommonOpts& common, std::ostream& out,
         std::ostream& err) {
    const std::string text = emit_report(rep, parse_report_format(common.format));
    if (!common.out_path.empty()) {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write to '" << common.out_path << "'\n";
            return 2;
        }
        file << text;
        if (!file.good()) {
            err << "error: short write to '" << common.out_path << "'\n";
            return 2;
        }
    } else {
        out << text;
    }
    if (log_level() >= LogLevel::info)
        err << "[info] " << rep.experiment << " on " << rep.group << ": "
            << (rep.pass ? "PASS" : "FAIL") << " (" << rep.wall_clock_ms << " ms)\n";
    if (log_level() >= LogLevel::debug)
        for (const auto& r : rep.residuals)
            err << "[debug] " << r.name << " = " << r.value << " tol " << r.tolerance
                << (r.informational ? " (info)" : (r.pass ? " ok" : " VIOLATION")) << "\n";
    return rep.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"jensen-lab: stability analysis of Jensen's functional equation on "
                 "noncommutative groups"};
    app.footer(kGrammar);
    app.require_subcommand(1);

    // verify-phi
    auto* verify = app.add_subcommand(
        "verify-phi", "exhaustively verify the explicit Jensen function phi = m n - 2 k "
                      "on a Heisenberg coordinate box, in exact integer arithmetic");
    long radius = 3;
    CommonOpts verify_common;
    verify->add_option("--radius", radius, "box radius")->capture_default_str();
    add_common(verify, verify_common);

    // defect
    auto* defect = app.add_subcommand("defect", "measure the sup Jensen defect over sampled pairs");
    DefectConfig defect_cfg;
    CommonOpts defect_common;
    defect->add_option("--group", defect_cfg.group, "group descriptor")->capture_default_str();
    defect->add_option("--function", defect_cfg.function, "function spec")->capture_default_str();
    defect->add_option("--eps", defect_cfg.epsilon, "noise amplitude")->capture_default_str();
    defect->add_option("--seed", defect_cfg.seed, "seed")->capture_default_str();
    defect->add_option("--pairs", defect_cfg.pairs, "sampled pairs")->capture_default_str();
    defect->add_option("--word-len", defect_cfg.word_len, "sampler word length")
        ->capture_default_str();
    add_common(defect, defect_common);

    // stabilize
    auto* stab = app.add_subcommand(
        "stabilize", "doubling-limit stabilization with certified error bounds");
    StabilizeConfig stab_cfg;
    CommonOpts stab_common;
    stab->add_option("--group", stab_cfg.group, "group descriptor")->capture_default_str();
    stab->add_option("--function", stab_cfg.function, "function spec")->capture_default_str();
    stab->add_option("--eps", stab_cfg.epsilon, "noise amplitude")->capture_default_str();
    stab->add_option("--seed", stab_cfg.seed, "seed")->capture_default_str();
    stab->add_option("--tol", stab_cfg.tol, "certified tolerance")->capture_default_str();
    stab->add_option("--k-max", stab_cfg.k_max, "doubling budget")->capture_default_str();
    stab->add_option("--elements", stab_cfg.elements, "sample size")->capture_default_str();
    stab->add_option("--word-len", stab_cfg.word_len, "sampler word length")
        ->capture_default_str();
    stab->add_flag("--base-independence", stab_cfg.base_independence,
                   "also compare base-2 and base-3 limits");
    add_common(stab, stab_common);

    // decompose
    auto* dec = app.add_subcommand(
        "decompose", "split a bounded-defect function into pseudo-Jensen plus bounded parts");
    DecomposeConfig dec_cfg;
    CommonOpts dec_common;
    dec->add_option("--group", dec_cfg.group, "group descriptor")->capture_default_str();
    dec->add_option("--function", dec_cfg.function, "function spec")->capture_default_str();
    dec->add_option("--eps", dec_cfg.epsilon, "noise amplitude")->capture_default_str();
    dec->add_option("--seed", dec_cfg.seed, "seed")->capture_default_str();
    dec->add_option("--tol", dec_cfg.tol, "certified tolerance")->capture_default_str();
    dec->add_option("--elements", dec_cfg.elements, "sample size")->capture_default_str();
    add_common(dec, dec_common);

    // classify
    auto* cls = app.add_subcommand("classify",
                                   "evidence-based classification into the function spaces");
    ClassifyConfig cls_cfg;
    CommonOpts cls_common;
    cls->add_option("--group", cls_cfg.group, "group descriptor")->capture_default_str();
    cls->add_option("--function", cls_cfg.function, "function spec")->capture_default_str();
    cls->add_option("--eps", cls_cfg.epsilon, "noise amplitude")->capture_default_str();
    cls->add_option("--seed", cls_cfg.seed, "seed")->capture_default_str();
    cls->add_option("--tol", cls_cfg.tol, "evidence tolerance")->capture_default_str();
    cls->add_option("--samples", cls_cfg.samples, "sample size")->capture_default_str();
    add_common(cls, cls_common);

    // recover
    auto* rec = app.add_subcommand(
        "recover", "recover Heisenberg Jensen coefficients from a noisy function");
    RecoverConfig rec_cfg;
    CommonOpts rec_common;
    rec->add_option("--group", "group descriptor (must be heisenberg)")
        ->check(CLI::IsMember({"heisenberg"}));
    rec->add_option("--alpha", rec_cfg.alpha, "alpha coefficient")->capture_default_str();
    rec->add_option("--beta", rec_cfg.beta, "beta coefficient")->capture_default_str();
    rec->add_option("--lambda", rec_cfg.lambda, "lambda coefficient")->capture_default_str();
    rec->add_option("--eps", rec_cfg.epsilon, "noise amplitude")->capture_default_str();
    rec->add_option("--seed", rec_cfg.seed, "seed")->capture_default_str();
    rec->add_option("--tol", rec_cfg.tol, "certified tolerance")->capture_default_str();
    rec->add_option("--accept", rec_cfg.accept, "acceptance residual")->capture_default_str();
    rec->add_option("--elements", rec_cfg.elements, "sample size")->capture_default_str();
    rec->add_option("--k-max", rec_cfg.k_max, "doubling budget")->capture_default_str();
    add_common(rec, rec_common);

    // t2
    auto* t2 = app.add_subcommand("t2", "stability experiment on T(2,K)");
    T2Config t2_cfg;
    CommonOpts t2_common;
    t2->add_option("--group", t2_cfg.group, "t2:q or t2:fp:<odd prime>")->capture_default_str();
    t2->add_option("--eps", t2_cfg.epsilon, "noise amplitude")->capture_default_str();
    t2->add_option("--seed", t2_cfg.seed, "seed")->capture_default_str();
    t2->add_option("--tol", t2_cfg.tol, "certified tolerance (prime fields)")
        ->capture_default_str();
    t2->add_option("--accept", t2_cfg.accept, "acceptance residual (prime fields)")
        ->capture_default_str();
    add_common(t2, t2_common);

    // wreath
    auto* wr = app.add_subcommand("wreath", "stability experiment on A wr C2^factors");
    WreathConfig wr_cfg;
    CommonOpts wr_common;
    wr->add_option("--base", wr_cfg.base, "base group descriptor")->capture_default_str();
    wr->add_option("--factors", wr_cfg.factors, "number of order-two factors")
        ->capture_default_str();
    wr->add_option("--eps", wr_cfg.epsilon, "noise amplitude")->capture_default_str();
    wr->add_option("--seed", wr_cfg.seed, "seed")->capture_default_str();
    wr->add_option("--tol", wr_cfg.tol, "certified tolerance")->capture_default_str();
    wr->add_option("--accept", wr_cfg.accept, "acceptance residual")->capture_default_str();
    wr->add_option("--pairs", wr_cfg.pairs, "additivity pairs")->capture_default_str();
    wr->add_option("--commutators", wr_cfg.commutators, "commutator samples")
        ->capture_default_str();
    add_common(wr, wr_common);

    // invariance
    auto* inv = app.add_subcommand(
        "invariance", "invariance of the stabilized function under order-two conjugation");
    InvarianceConfig inv_cfg;
    CommonOpts inv_common;
    inv->add_option("--group", inv_cfg.group, "group descriptor")->capture_default_str();
    inv->add_option("--function", inv_cfg.function, "function spec")->capture_default_str();
    inv->add_option("--eps", inv_cfg.epsilon, "noise amplitude")->capture_default_str();
    inv->add_option("--seed", inv_cfg.seed, "seed")->capture_default_str();
    inv->add_option("--tol", inv_cfg.tol, "certified tolerance")->capture_default_str();
    inv->add_option("--accept", inv_cfg.accept, "acceptance residual")->capture_default_str();
    inv->add_option("--elements", inv_cfg.elements, "sample size")->capture_default_str();
    inv->add_option("--order-cap", inv_cfg.order_cap, "order search cap")->capture_default_str();
    add_common(inv, inv_common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*verify) return emit(verify_phi_exact(radius), verify_common, out, err);
        if (*defect) return emit(defect_experiment(defect_cfg), defect_common, out, err);
        if (*stab) return emit(stabilize_experiment(stab_cfg), stab_common, out, err);
        if (*dec) return emit(decompose_experiment(dec_cfg), dec_common, out, err);
        if (*cls) return emit(classify_experiment(cls_cfg), cls_common, out, err);
        if (*rec) return emit(recover_experiment(rec_cfg), rec_common, out, err);
        if (*t2) return emit(t2_stability_experiment(t2_cfg), t2_common, out, err);
        if (*wr) return emit(wreath_stability_experiment(wr_cfg), wr_common, out, err);
        if (*inv) return emit(order2_invariance_check(inv_cfg), inv_common, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand selected\n";
    return 2;
}

}  // namespace jensenlab::cli
