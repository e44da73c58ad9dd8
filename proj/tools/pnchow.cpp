// pnchow: exact intersection-theory and cohomology checks on projective
// bundles over P^n.
//
// exit codes: 0 all checks passed, 1 some check failed, 2 usage/parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pnchow/cohomology.hpp"
#include "pnchow/expr.hpp"
#include "pnchow/matrix.hpp"
#include "pnchow/proj_bundle.hpp"
#include "pnchow/verify.hpp"

namespace {

using namespace pnchow;

int emit_report(const Report& rep, bool json) {
    if (json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return rep.all_pass() ? 0 : 1;
}

int run_chow(const std::string& mode, int n, const std::string& expr_text,
             bool json) {
    ExprPtr ast = parse_expr(expr_text);
    Bundle b = elaborate(*ast, n);
    if (mode == "degree") {
        Int d = taut_degree(b);
        if (json) {
            nlohmann::json out = {{"version", Report::version},
                                  {"command", "degree"},
                                  {"n", n},
                                  {"expr", print_expr(*ast)},
                                  {"degree", d.get_str()}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << d.get_str() << "\n";
        }
        return 0;
    }
    TruncZ cls = mode == "chern" ? b.chern() : segre(b);
    if (json) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Int& c : cls.coeffs()) coeffs.push_back(c.get_str());
        nlohmann::json out = {{"version", Report::version},
                              {"command", mode},
                              {"n", n},
                              {"expr", print_expr(*ast)},
                              {"rank", b.rank()},
                              {"coeffs", coeffs},
                              {"class", cls.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        if (mode == "chern") std::cout << "rank " << b.rank() << "\n";
        std::cout << cls.str() << "\n";
    }
    return 0;
}

int run_bott(int n, int p, long t, bool json) {
    CohTable table = bott(n, p, t);
    if (json) {
        nlohmann::json dims = nlohmann::json::array();
        for (int q = 0; q <= n; ++q) dims.push_back(table[q].get_str());
        nlohmann::json out = {{"version", Report::version},
                              {"command", "bott"},
                              {"n", n},
                              {"p", p},
                              {"t", t},
                              {"dims", dims}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    bool any = false;
    for (int q = 0; q <= n; ++q) {
        if (table[q] == 0) continue;
        any = true;
        std::cout << "h^" << q << "(P^" << n << ", Omega^" << p << "(" << t
                  << ")) = " << table[q].get_str() << "\n";
    }
    if (!any)
        std::cout << "h^q(P^" << n << ", Omega^" << p << "(" << t
                  << ")) = 0 for all q\n";
    return 0;
}

int run_pfaffian(const std::string& path, bool json) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    QMatrix m = read_matrix_json(in);
    Rat pf = pfaffian(m);
    if (json) {
        nlohmann::json out = {{"version", Report::version},
                              {"command", "pfaffian"},
                              {"size", m.rows()},
                              {"pfaffian", pf.get_str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << pf.get_str() << "\n";
    }
    return 0;
}

int run_probe(ProbeVariant variant, int n, const SampleConfig& cfg, bool json) {
    Report rep;
    const char* vname = variant == ProbeVariant::Hom ? "hom" : "alt";
    ProbeReport pb = probe_birational(variant, n, cfg);
    rep.add("probe_birational",
            {{"variant", vname},
             {"n", n},
             {"samples", cfg.samples},
             {"seed", cfg.seed},
             {"bound", cfg.bound},
             {"full_rank", pb.full_rank},
             {"singleton_fibers", pb.singleton_fibers},
             {"degenerate_draws", pb.degenerate_draws}},
            "pass", pb.pass ? "pass" : "fail");
    ProbeReport pe = probe_exceptional(variant, n, cfg);
    rep.add("probe_exceptional",
            {{"variant", vname},
             {"n", n},
             {"samples", cfg.samples},
             {"seed", cfg.seed},
             {"bound", cfg.bound},
             {"deficient_samples", pe.deficient_samples},
             {"zero_sections", pe.zero_sections},
             {"full_rank", pe.full_rank},
             {"nonzero_sections", pe.nonzero_sections}},
            "pass", pe.pass ? "pass" : "fail");
    return emit_report(rep, json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of blow-up structures on projective "
                 "bundles over P^n"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit machine-readable JSON");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named check battery");
    std::string target;
    int vn = 0;
    SampleConfig cfg;
    verify_cmd->add_option("target", target, "thm1, thm2, lemma1 or lemma2")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "lemma1", "lemma2"}));
    verify_cmd->add_option("--n", vn, "ambient dimension")
        ->required()
        ->check(CLI::Range(1, 10000));
    verify_cmd->add_option("--samples", cfg.samples, "probe sample count")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", cfg.seed, "probe seed");
    verify_cmd->add_option("--bound", cfg.bound, "probe entry bound")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--json", json, "emit machine-readable JSON");

    // chow
    auto* chow_cmd = app.add_subcommand("chow", "evaluate a bundle expression");
    std::string chow_mode, chow_expr;
    int cn = 0;
    chow_cmd->add_option("mode", chow_mode, "chern, segre or degree")
        ->required()
        ->check(CLI::IsMember({"chern", "segre", "degree"}));
    chow_cmd->add_option("--n", cn, "ambient dimension")
        ->required()
        ->check(CLI::Range(1, 10000));
    chow_cmd->add_option("expr", chow_expr, "bundle expression")->required();
    chow_cmd->add_flag("--json", json, "emit machine-readable JSON");

    // bott
    auto* bott_cmd = app.add_subcommand("bott", "cohomology table of Omega^p(t)");
    int bn = 0, bp = 0;
    long bt = 0;
    bott_cmd->add_option("--n", bn, "ambient dimension")
        ->required()
        ->check(CLI::Range(1, 10000));
    bott_cmd->add_option("--p", bp, "form degree")->required();
    bott_cmd->add_option("--t", bt, "twist");
    bott_cmd->add_flag("--json", json, "emit machine-readable JSON");

    // pfaffian
    auto* pf_cmd = app.add_subcommand("pfaffian", "pfaffian of a matrix file");
    std::string pf_file;
    pf_cmd->add_option("file", pf_file, "JSON matrix file")->required();
    pf_cmd->add_flag("--json", json, "emit machine-readable JSON");

    // probe
    auto* probe_cmd = app.add_subcommand("probe", "random fiber probes");
    std::string probe_variant;
    int pn = 0;
    probe_cmd->add_option("variant", probe_variant, "hom or alt")
        ->required()
        ->check(CLI::IsMember({"hom", "alt"}));
    probe_cmd->add_option("--n", pn, "ambient dimension")
        ->required()
        ->check(CLI::Range(1, 10000));
    probe_cmd->add_option("--samples", cfg.samples, "sample count")
        ->check(CLI::NonNegativeNumber);
    probe_cmd->add_option("--seed", cfg.seed, "seed");
    probe_cmd->add_option("--bound", cfg.bound, "entry bound")
        ->check(CLI::NonNegativeNumber);
    probe_cmd->add_flag("--json", json, "emit machine-readable JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify_cmd->parsed()) {
            VerifyTarget t = target == "thm1"     ? VerifyTarget::Thm1
                             : target == "thm2"   ? VerifyTarget::Thm2
                             : target == "lemma1" ? VerifyTarget::Lemma1
                                                  : VerifyTarget::Lemma2;
            return emit_report(run_verify(t, vn, cfg), json);
        }
        if (chow_cmd->parsed()) return run_chow(chow_mode, cn, chow_expr, json);
        if (bott_cmd->parsed()) return run_bott(bn, bp, bt, json);
        if (pf_cmd->parsed()) return run_pfaffian(pf_file, json);
        if (probe_cmd->parsed())
            return run_probe(probe_variant == "hom" ? ProbeVariant::Hom
                                                    : ProbeVariant::Alt,
                             pn, cfg, json);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
