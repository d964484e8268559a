// Command-line front end: axiom checks, single-subset NSSD checks, exhaustive
// table reproduction, the two constructions, and catalog verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nssd/catalog.hpp"
#include "nssd/constructions.hpp"
#include "nssd/enumerate.hpp"
#include "nssd/nssd_check.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int resolve_workers(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("NSSD_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 0;  // library default: all hardware threads
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string verdict_text(const nssd::NssdCertificate& cert) {
    return cert.verdict ? "NSSD" : "not NSSD";
}

void print_certificate(const nssd::NssdCertificate& cert) {
    std::cout << "determinant: " << cert.det << "\n";
    std::cout << "minor_diag:";
    for (const auto& m : cert.minor_diag) std::cout << ' ' << m;
    std::cout << "\nverdict: " << verdict_text(cert) << "\n";
    if (cert.failure == nssd::NssdFailure::Singular)
        std::cout << "failure: singular adjacency matrix\n";
    else if (cert.failure == nssd::NssdFailure::NonsingularDeckEntry)
        std::cout << "failure: non-singular deck entry at vertex " << cert.failure_vertex << "\n";
}

int run_axioms(int n, int workers) {
    nssd::HvGroupCtx ctx(n);
    auto wa = nssd::check_weak_associativity(ctx, workers);
    if (wa.holds) {
        std::cout << "weak_associativity: pass\n";
    } else {
        auto [s, t, u] = *wa.witness;
        std::cout << "weak_associativity: FAIL witness=(" << nssd::format_element(s) << ", "
                  << nssd::format_element(t) << ", " << nssd::format_element(u) << ")\n";
    }
    auto re = nssd::check_reproduction(ctx, workers);
    if (re.holds)
        std::cout << "reproduction: pass\n";
    else
        std::cout << "reproduction: FAIL witness=" << nssd::format_element(*re.witness) << "\n";
    return kExitOk;
}

int run_check(int n, const std::string& subset_text, const std::string& dot_path,
              bool want_graph6) {
    nssd::HvGroupCtx ctx(n);
    auto subset = nssd::parse_subset(subset_text, ctx.group);
    nssd::Graph g = nssd::commuting_graph(ctx, subset);
    std::cout << "n: " << n << "\n";
    std::cout << "subset: " << nssd::format_subset(g.labels()) << "\n";
    std::cout << "order: " << g.order() << "\n";
    std::cout << "adjacency_matrix:\n";
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) std::cout << (j ? " " : "") << g.adjacency(i, j);
        std::cout << "\n";
    }
    print_certificate(nssd::is_nssd(g));
    std::cout << "connected: " << (nssd::is_connected(g) ? "true" : "false") << "\n";
    std::cout << "max_degree: " << nssd::max_degree(g) << "\n";
    std::cout << "molecular: " << (nssd::is_molecular(g) ? "true" : "false") << "\n";
    if (want_graph6) std::cout << "graph6: " << nssd::export_graph6(g) << "\n";
    if (!dot_path.empty()) write_text_file(dot_path, nssd::export_dot(g));
    return kExitOk;
}

int run_table(const std::vector<int>& ns, const nssd::EnumerateOptions& opt,
              const std::string& format, const std::string& out_path, bool expect_paper) {
    nssd::EnumerationReport report;
    for (int n : ns) report.merge(nssd::enumerate_nssd(n, opt));
    nssd::write_report(report, format, out_path);
    if (!expect_paper) return kExitOk;

    auto mismatches = nssd::compare_with_published(report);
    if (mismatches.empty()) {
        std::cerr << "all computed rows match the published table\n";
        return kExitOk;
    }
    for (const auto& mm : mismatches) {
        std::cerr << "table mismatch at n=" << mm.computed.n << " order=" << mm.computed.order
                  << ": computed subsets=" << mm.computed.nssd_subsets
                  << " classes=" << mm.computed.iso_classes
                  << ", published subsets=" << mm.published.nssd_subsets
                  << " classes=" << mm.published.iso_classes << "\n";
        std::cerr << "  witness subsets (one per isomorphism class):\n";
        for (const auto& rep : report.representatives)
            if (rep.n == mm.computed.n && rep.order == mm.computed.order)
                std::cerr << "    " << nssd::format_subset(rep.subset)
                          << "  graph6=" << rep.form.bytes << "\n";
    }
    return kExitMismatch;
}

int run_construct(int n, const std::string& mode, const std::string& u_text,
                  const std::string& v_text) {
    nssd::HvGroupCtx ctx(n);
    auto u = nssd::parse_subset(u_text, ctx.group);
    auto v = nssd::parse_subset(v_text, ctx.group);
    nssd::ConstructionResult res = mode == "pendant" ? nssd::pendant_union(ctx, u, v)
                                                     : nssd::bridge_join(ctx, u, v);
    std::cout << "mode: " << mode << "\n";
    std::cout << "n: " << n << "\n";
    std::cout << "U: " << nssd::format_subset(u) << "\n";
    std::cout << "V: " << nssd::format_subset(v) << "\n";
    for (const auto& check : res.report)
        std::cout << "check " << check.name << ": " << (check.passed ? "pass" : "fail") << " ("
                  << check.detail << ")\n";
    std::cout << "paper_preconditions: " << (res.paper_preconditions_met ? "met" : "not met")
              << "\n";
    std::cout << "preconditions: " << (res.preconditions_met ? "met" : "not met") << "\n";
    std::cout << "order: " << res.graph.order() << "\n";
    print_certificate(res.certificate);
    return kExitOk;
}

int run_gamma(int id, bool all, const std::string& format, const std::string& dot_path,
              bool want_graph6) {
    if (all) {
        auto results = nssd::verify_all();
        if (format == "csv") {
            std::cout << "id,n,order,nssd,molecular\n";
            for (const auto& v : results)
                std::cout << v.id << ',' << v.n << ',' << v.order << ','
                          << (v.certificate.verdict ? "true" : "false") << ','
                          << (v.molecular ? "true" : "false") << "\n";
        } else {
            for (const auto& v : results)
                std::cout << "G" << v.id << ": n=" << v.n << " order=" << v.order
                          << " verdict=" << verdict_text(v.certificate)
                          << " molecular=" << (v.molecular ? "true" : "false") << "\n";
        }
        for (const auto& d : nssd::catalog_discrepancies(results))
            std::cerr << "discrepancy: G" << d.id << " is not NSSD as printed: " << d.reason
                      << "\n";
        return kExitOk;
    }
    auto v = nssd::verify_gamma(id);
    std::cout << "id: " << v.id << "\n";
    std::cout << "n: " << v.n << "\n";
    std::cout << "order: " << v.order << "\n";
    std::cout << "elements: " << nssd::format_subset(v.graph.labels()) << "\n";
    print_certificate(v.certificate);
    std::cout << "molecular: " << (v.molecular ? "true" : "false") << "\n";
    if (want_graph6) std::cout << "graph6: " << nssd::export_graph6(v.graph) << "\n";
    if (!dot_path.empty()) write_text_file(dot_path, nssd::export_dot(v.graph));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Commuting graphs of (D_2n, o): exact NSSD decisions, enumeration, constructions"};
    app.require_subcommand(1);

    // axioms
    auto* ax = app.add_subcommand("axioms", "exhaustively check the two hyperstructure axioms");
    int ax_n = 0;
    int ax_workers = 0;
    ax->add_option("--n", ax_n, "group parameter n (2..64)")->required()->check(CLI::Range(2, 64));
    ax->add_option("--workers", ax_workers, "thread count (default: all)");

    // check
    auto* ck = app.add_subcommand("check", "commuting graph and NSSD certificate for one subset");
    int ck_n = 0;
    std::string ck_subset, ck_dot;
    bool ck_g6 = false;
    ck->add_option("--n", ck_n, "group parameter n (>= 2)")->required()->check(CLI::Range(2, 1 << 20));
    ck->add_option("--subset", ck_subset, "comma-separated elements, e.g. \"a,a^3,b,a b\"")->required();
    ck->add_option("--dot", ck_dot, "write DOT to this file");
    ck->add_flag("--graph6", ck_g6, "also print the graph6 encoding");

    // table
    auto* tb = app.add_subcommand("table", "exhaustive NSSD counts per (n, order)");
    int tb_n = 0, tb_workers = 0;
    std::string tb_range, tb_format = "csv", tb_out = "-";
    nssd::EnumerateOptions tb_opt;
    bool tb_expect = false;
    auto* tb_n_opt = tb->add_option("--n", tb_n, "single n")->check(CLI::Range(2, 32));
    auto* tb_range_opt =
        tb->add_option("--n-range", tb_range, "inclusive range A..B")->excludes(tb_n_opt);
    tb_n_opt->excludes(tb_range_opt);
    tb->add_option("--min-order", tb_opt.min_order, "smallest subset size")->check(CLI::Range(2, 16));
    tb->add_option("--max-order", tb_opt.max_order, "largest subset size")->check(CLI::Range(2, 16));
    tb->add_option("--format", tb_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    tb->add_option("--out", tb_out, "output path, - for stdout");
    tb->add_option("--workers", tb_workers, "thread count (default: all)");
    tb->add_flag("--connected-only", tb_opt.connected_only,
                 "count only subsets with connected commuting graphs");
    tb->add_flag("--expect-paper", tb_expect,
                 "compare against the published table; non-zero exit on mismatch");

    // construct
    auto* cs = app.add_subcommand("construct", "pendant or bridge construction with certificate");
    int cs_n = 0;
    std::string cs_mode, cs_u, cs_v;
    cs->add_option("--n", cs_n, "group parameter n (>= 2)")->required()->check(CLI::Range(2, 1 << 20));
    cs->add_option("--mode", cs_mode, "pendant or bridge")
        ->required()
        ->check(CLI::IsMember({"pendant", "bridge"}));
    cs->add_option("--u", cs_u, "subset U")->required();
    cs->add_option("--v", cs_v, "subset V")->required();

    // gamma
    auto* gm = app.add_subcommand("gamma", "verify cataloged vertex sets");
    int gm_id = 0;
    bool gm_all = false, gm_g6 = false;
    std::string gm_format = "text", gm_dot;
    auto* gm_id_opt = gm->add_option("--id", gm_id, "catalog id (1..43)")->check(CLI::Range(1, 43));
    auto* gm_all_opt = gm->add_flag("--all", gm_all, "verify the whole catalog");
    gm_id_opt->excludes(gm_all_opt);
    gm_all_opt->excludes(gm_id_opt);
    gm->add_option("--format", gm_format, "text or csv (with --all)")
        ->check(CLI::IsMember({"text", "csv"}));
    gm->add_option("--dot", gm_dot, "write DOT to this file (with --id)");
    gm->add_flag("--graph6", gm_g6, "also print the graph6 encoding (with --id)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ax) return run_axioms(ax_n, resolve_workers(ax_workers));
        if (*ck) return run_check(ck_n, ck_subset, ck_dot, ck_g6);
        if (*tb) {
            std::vector<int> ns;
            if (tb_range.empty() && tb_n == 0)
                throw std::invalid_argument("table needs --n or --n-range");
            if (!tb_range.empty()) {
                auto dots = tb_range.find("..");
                if (dots == std::string::npos)
                    throw std::invalid_argument("--n-range must look like A..B");
                int a = std::stoi(tb_range.substr(0, dots));
                int b = std::stoi(tb_range.substr(dots + 2));
                if (a < 2 || b < a) throw std::invalid_argument("--n-range must satisfy 2 <= A <= B");
                for (int n = a; n <= b; ++n) ns.push_back(n);
            } else {
                ns.push_back(tb_n);
            }
            tb_opt.workers = resolve_workers(tb_workers);
            return run_table(ns, tb_opt, tb_format, tb_out, tb_expect);
        }
        if (*cs) return run_construct(cs_n, cs_mode, cs_u, cs_v);
        if (*gm) {
            if (!gm_all && gm_id == 0) throw std::invalid_argument("gamma needs --id or --all");
            return run_gamma(gm_id, gm_all, gm_format, gm_dot, gm_g6);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
