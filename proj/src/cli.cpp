#include "braidrep/cli.hpp"

#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "braidrep/bmw.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/bratteli.hpp"
#include "braidrep/lk.hpp"
#include "braidrep/probe.hpp"

namespace braidrep {

namespace {

nlohmann::json basis_json(int n) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& p : pair_basis(n)) basis.push_back(to_string(p));
    return basis;
}

std::string latex_basis_comment(int n) {
    std::string out = "% basis:";
    for (const auto& p : pair_basis(n)) out += " v_{" + to_string(p) + "}";
    return out + "\n";
}

struct MatrixArgs {
    int n = 0;
    int gen = 0;
    bool inverse = false;
    std::string format = "json";
};

int cmd_lk_matrix(const MatrixArgs& a, std::ostream& out) {
    const RingMatrix m = a.inverse ? lk_generator_inverse(a.n, a.gen) : lk_generator(a.n, a.gen);
    if (a.format == "latex") {
        out << "% sigma_" << a.gen << (a.inverse ? "^{-1}" : "") << " on B_" << a.n << "\n"
            << latex_basis_comment(a.n) << to_latex(m);
        return kSuccess;
    }
    nlohmann::json j{{"n", a.n},     {"gen", a.gen},          {"inverse", a.inverse},
                     {"basis", basis_json(a.n)}, {"vars", lk_vars().names()}, {"entries", to_json(m)}};
    out << j.dump(2) << '\n';
    return kSuccess;
}

struct ApplyArgs {
    int n = 0;
    std::string word;
    std::string q, t;
    std::string format = "json";
};

int cmd_apply(const ApplyArgs& a, std::ostream& out) {
    const BraidWord w = parse_word(a.word, a.n);
    const bool numeric = !a.q.empty() || !a.t.empty();
    nlohmann::json j{{"n", a.n}, {"word", w.letters()}, {"basis", basis_json(a.n)}};
    if (numeric) {
        if (a.q.empty() || a.t.empty()) throw std::invalid_argument("numeric evaluation needs both --q and --t");
        RationalPoint pt;
        pt.set("q", parse_rational(a.q));
        pt.set("t", parse_rational(a.t));
        const RationalMatrix m = lk_evaluate_numeric(w, pt);
        if (a.format == "latex") {
            out << "% " << (w.empty() ? "identity" : to_string(w)) << " at q=" << to_string(*pt.find("q"))
                << ", t=" << to_string(*pt.find("t")) << "\n"
                << latex_basis_comment(a.n) << to_latex(m);
            return kSuccess;
        }
        j["point"] = {{"q", to_string(*pt.find("q"))}, {"t", to_string(*pt.find("t"))}};
        j["entries"] = to_json(m);
    } else {
        const RingMatrix m = lk_evaluate(w);
        if (a.format == "latex") {
            out << "% " << (w.empty() ? "identity" : to_string(w)) << "\n"
                << latex_basis_comment(a.n) << to_latex(m);
            return kSuccess;
        }
        j["vars"] = lk_vars().names();
        j["entries"] = to_json(m);
    }
    out << j.dump(2) << '\n';
    return kSuccess;
}

struct VerifyArgs {
    std::string suite;
    int n = 0;
    int k_shift = 0;
    bool experiment_generic = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    CheckReport report;
    nlohmann::json extra;
    if (a.suite == "braid") {
        report = check_braid_relations(a.n, [&](int i) { return lk_generator(a.n, i); }, "lk");
        const BmwParams identified = BmwParams::identified();
        report.append(check_braid_relations(
            a.n, [&](int i) { return bmw_generator(a.n, i, identified); }, "bmw"));
        if (a.experiment_generic) {
            // Independent (kappa, m, l): recorded, never asserted.
            const BmwParams generic = BmwParams::generic();
            extra["experiment_generic_bmw"] =
                check_braid_relations(a.n, [&](int i) { return bmw_generator(a.n, i, generic); },
                                      "bmw-generic")
                    .to_json();
        }
    } else if (a.suite == "bmw") {
        report = bmw_relation_suite(a.n);
    } else if (a.suite == "theorem3") {
        report = theorem3_check(a.n, a.k_shift);
    } else if (a.suite == "cubic") {
        report = eigen_structure_check(a.n);
    } else if (a.suite == "bratteli") {
        const BratteliGraph g = build_bratteli(a.n);
        report = dimension_theorem_check(g, a.n);
        report.append(hecke_dimension_check(g, a.n));
        CheckReport level = level_dimension_identity(g, a.n);
        for (auto& item : level.items) item.detail += " (external cross-check)";
        report.append(level);
    } else {
        throw std::invalid_argument("unknown suite: " + a.suite);
    }
    report.suite = a.suite;
    report.n = a.n;
    nlohmann::json j = report.to_json();
    if (a.suite == "theorem3") j["k_shift"] = a.k_shift;
    if (!extra.is_null()) j.update(extra);
    out << j.dump(2) << '\n';
    return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_bratteli(int levels, const std::string& format, std::ostream& out) {
    const BratteliGraph g = build_bratteli(levels);
    if (format == "dot")
        out << g.to_dot();
    else if (format == "json")
        out << g.to_json().dump(2) << '\n';
    else
        out << g.to_table();
    return kSuccess;
}

int cmd_probe(const ProbeConfig& cfg, std::ostream& out) {
    const ProbeReport r = run_probe(cfg);
    nlohmann::json j = r.to_json();
    j["max_len"] = cfg.max_len;
    j["point"] = {{"q", to_string(*cfg.point.find("q"))}, {"t", to_string(*cfg.point.find("t"))}};
    out << j.dump(2) << '\n';
    return r.true_collisions == 0 ? kSuccess : kVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Lawrence-Krammer / BMW representation toolkit"};
    app.require_subcommand(1);

    MatrixArgs matrix_args;
    auto* lk_cmd = app.add_subcommand("lk-matrix", "Print a Lawrence-Krammer generator matrix");
    lk_cmd->add_option("--n", matrix_args.n, "Strand count")->required();
    lk_cmd->add_option("--gen", matrix_args.gen, "Generator index")->required();
    lk_cmd->add_flag("--inverse", matrix_args.inverse, "Print the inverse instead");
    lk_cmd->add_option("--format", matrix_args.format)->check(CLI::IsMember({"json", "latex"}));

    ApplyArgs apply_args;
    auto* apply_cmd = app.add_subcommand("apply", "Evaluate a braid word");
    apply_cmd->add_option("--n", apply_args.n, "Strand count")->required();
    apply_cmd->add_option("--word", apply_args.word, "Signed generator indices, e.g. \"1 -2 1\"");
    apply_cmd->add_option("--q", apply_args.q, "Rational value p/r for q");
    apply_cmd->add_option("--t", apply_args.t, "Rational value p/r for t");
    apply_cmd->add_option("--format", apply_args.format)->check(CLI::IsMember({"json", "latex"}));

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", verify_args.suite)
        ->required()
        ->check(CLI::IsMember({"braid", "bmw", "theorem3", "cubic", "bratteli"}));
    verify_cmd->add_option("--n", verify_args.n, "Strand count / level")->required();
    verify_cmd->add_option("--k-shift", verify_args.k_shift, "Extra exponent in v_ij = kappa^(i+j+k) T_ij");
    verify_cmd->add_flag("--experiment-generic", verify_args.experiment_generic,
                         "Also report braid relations for independent (kappa, m, l)");

    int levels = 0;
    std::string bratteli_format = "table";
    auto* bratteli_cmd = app.add_subcommand("bratteli", "Export the Bratteli diagram");
    bratteli_cmd->add_option("--levels", levels)->required();
    bratteli_cmd->add_option("--format", bratteli_format)->check(CLI::IsMember({"dot", "json", "table"}));

    ProbeConfig probe_cfg;
    std::string probe_q = "3/5", probe_t = "7/11";
    auto* probe_cmd = app.add_subcommand("probe", "Search random braids for identity collisions");
    probe_cmd->add_option("--n", probe_cfg.n);
    probe_cmd->add_option("--trials", probe_cfg.trials, "Words to keep after filtering");
    probe_cmd->add_option("--max-len", probe_cfg.max_len);
    probe_cmd->add_option("--seed", probe_cfg.seed);
    probe_cmd->add_option("--q", probe_q);
    probe_cmd->add_option("--t", probe_t);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*lk_cmd) return cmd_lk_matrix(matrix_args, out);
        if (*apply_cmd) return cmd_apply(apply_args, out);
        if (*verify_cmd) return cmd_verify(verify_args, out);
        if (*bratteli_cmd) return cmd_bratteli(levels, bratteli_format, out);
        if (*probe_cmd) {
            probe_cfg.point = RationalPoint{};
            probe_cfg.point.set("q", parse_rational(probe_q));
            probe_cfg.point.set("t", parse_rational(probe_t));
            return cmd_probe(probe_cfg, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsageError;
}

}  // namespace braidrep
