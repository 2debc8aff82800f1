// Command-line front door: parse SPC/PCX files, run checks, emit reports.
// Exit codes: 0 all pass, 1 violation or undecided, 2 usage/parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "strata/acceptance.hpp"
#include "strata/cell_table.hpp"
#include "strata/complicial.hpp"
#include "strata/gray_tensor.hpp"
#include "strata/gray_tensor_detail.hpp"
#include "strata/omega.hpp"
#include "strata/parity.hpp"
#include "strata/stratified.hpp"

using namespace strata;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Built-in stratified complexes: delta:n, delta_t:n, boundary:n, horn:n:k,
// adm:n:k, adm_horn:n:k, adm_prime:n:k, adm_dprime:n:k, or a .spc path.
StratifiedComplex load_complex(const std::string& spec) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ':')) parts.push_back(tok);
        return parts;
    };
    std::vector<std::string> p = split(spec);
    auto arg = [&p](std::size_t i) { return std::stoi(p.at(i)); };
    if (p[0] == "delta") return delta(arg(1));
    if (p[0] == "delta_t") return delta_t(arg(1));
    if (p[0] == "boundary") return boundary(arg(1));
    if (p[0] == "horn") return horn(arg(1), arg(2));
    if (p[0] == "adm") return adm(arg(1), arg(2));
    if (p[0] == "adm_horn") return adm_horn(arg(1), arg(2));
    if (p[0] == "adm_prime") return adm_prime(arg(1), arg(2));
    if (p[0] == "adm_dprime") return adm_dprime(arg(1), arg(2));
    return read_spc(slurp(spec));
}

// Built-in parity complexes: osimp:n, osimp_t:n, prod:n:m, susp:k:osimp:n,
// or a .pcx path.
StratifiedParityComplex load_parity(const std::string& spec) {
    std::vector<std::string> p;
    {
        std::istringstream is(spec);
        std::string tok;
        while (std::getline(is, tok, ':')) p.push_back(tok);
    }
    auto arg = [&p](std::size_t i) { return std::stoi(p.at(i)); };
    if (p[0] == "osimp") return minimal_stratification(simplex_parity(arg(1)).complex);
    if (p[0] == "osimp_t") return simplex_parity_thin(arg(1));
    if (p[0] == "prod") {
        SimplexParity a = simplex_parity(arg(1)), b = simplex_parity(arg(2));
        return minimal_stratification(parity_product(a.complex, b.complex).complex);
    }
    if (p[0] == "susp") {
        if (p.at(2) != "osimp") throw ParseError("susp expects susp:k:osimp:n");
        SimplexParity s = simplex_parity(arg(3));
        return minimal_stratification(suspension(arg(1), s.complex).complex);
    }
    return read_pcx(slurp(spec));
}

int cmd_identities(int max) {
    IdentityReport rep = simplicial_identities_check(max);
    std::cout << "identities checked=" << rep.instances
              << " violations=" << rep.violations.size() << '\n';
    for (const std::string& v : rep.violations) std::cout << "  " << v << '\n';
    return rep.ok() ? 0 : 1;
}

int cmd_shuffles(int n, int m, const std::string& format) {
    std::vector<Shuffle> s = enumerate_shuffles(n, m);
    if (format == "tsv") {
        std::cout << "index\tgamma\talpha\tbeta\n";
        for (std::size_t i = 0; i < s.size(); ++i)
            std::cout << i << '\t' << s[i].gamma.str() << '\t' << s[i].alpha.str()
                      << '\t' << s[i].beta.str() << '\n';
    } else {
        std::cout << "shuffles of delta[" << n << "] x delta[" << m
                  << "]: " << s.size() << '\n';
        for (std::size_t i = 0; i < s.size(); ++i)
            std::cout << "  " << i << ": alpha { " << s[i].alpha.str() << " } beta { "
                      << s[i].beta.str() << " }\n";
    }
    return 0;
}

int cmd_tensor_table(int n, int m, bool pre) {
    StratifiedComplex X = delta(n), Y = delta(m);
    ProductComplex T = pre ? pretensor(X, Y) : tensor(X, Y);
    std::cout << "dim\tthin\tnonthin\tmediator\tcrushed\n";
    for (int d = 0; d <= T.complex.dim_bound(); ++d) {
        int thin = 0, nonthin = 0, mediator = 0, crushed = 0;
        for (int id = 0; id < T.complex.size(); ++id) {
            if (T.complex.dim(id) != d) continue;
            (T.complex.thin(id) ? thin : nonthin)++;
            const auto& [sx, sy] = T.coords[static_cast<std::size_t>(id)];
            TensorSimplexClass c = classify(X, Y, sx, sy);
            if (c.tag == TensorSimplexClass::Mediator) ++mediator;
            if (c.tag == TensorSimplexClass::CrushedCylinder) ++crushed;
        }
        std::cout << d << '\t' << thin << '\t' << nonthin << '\t' << mediator << '\t'
                  << crushed << '\n';
    }
    return 0;
}

int cmd_lp_reflect(const std::string& in, const std::string& out) {
    StratifiedComplex X = load_complex(in);
    StratifiedComplex R = lp_reflect(X);
    std::ofstream os(out);
    if (!os) {
        std::cerr << "cannot write " << out << '\n';
        return 2;
    }
    os << write_spc(R);
    int added = 0;
    for (int id = 0; id < X.size(); ++id)
        if (R.thin(id) && !X.thin(id)) ++added;
    std::cout << "lp-reflect: thinned " << added << " additional simplices\n";
    return 0;
}

int cmd_check_complicial(const std::string& in, int bound, int workers) {
    StratifiedComplex X = load_complex(in);
    ComplicialReport rep = is_complicial(X, bound, workers);
    std::cout << "pre-complicial: " << (rep.precomplicial ? "yes" : "no") << '\n';
    std::cout << "horns checked: " << rep.horns_checked
              << " (skipped at bound: " << rep.horns_skipped_at_bound << ")\n";
    for (const std::string& f : rep.failures) std::cout << "failure: " << f << '\n';
    for (const std::string& d : rep.filler_disagreements)
        std::cout << "finding: " << d << '\n';
    std::cout << (rep.ok() ? "complicial within bound" : "NOT complicial") << '\n';
    return rep.ok() ? 0 : 1;
}

int cmd_verify_parity(const std::string& in) {
    StratifiedParityComplex C = load_parity(in);
    AxiomReport rep = verify_axioms(C.base);
    auto show = [](const char* tag, const std::vector<std::string>& v) {
        std::cout << tag << ": " << (v.empty() ? "pass" : "FAIL") << '\n';
        for (const std::string& s : v) std::cout << "  " << s << '\n';
    };
    show("axiom 1", rep.axiom1);
    show("axiom 2", rep.axiom2);
    show("axiom 3a", rep.axiom3a);
    show("axiom 3b", rep.axiom3b);
    show("filled-triangle antisymmetry", rep.filledtri);
    show("relevance", rep.relevance);
    return rep.ok() ? 0 : 1;
}

int cmd_oriental(int n, bool cells, bool do_collapse, long long budget) {
    SimplexParity S = simplex_parity(n);
    std::cout << "elements:";
    for (int d = 0; d <= n; ++d)
        std::cout << ' ' << S.complex.elements_of_dim(d).size();
    std::cout << '\n';
    if (!cells && !do_collapse) return 0;
    CellTable T = enumerate_cells(S.complex, -1, static_cast<std::size_t>(budget));
    std::vector<int> per_dim(static_cast<std::size_t>(n + 1));
    for (int id = 0; id < T.size(); ++id) ++per_dim[static_cast<std::size_t>(T.dim(id))];
    std::cout << "cells:";
    for (int d = 0; d <= n; ++d) std::cout << ' ' << per_dim[static_cast<std::size_t>(d)];
    std::cout << " (total " << T.size() << ")\n";
    if (do_collapse) {
        StratifiedParityComplex Ct = simplex_parity_thin(n);
        CollapseQuotient Q = collapse(Ct, T);
        std::cout << "collapse classes: " << Q.classes << '\n';
        FiniteOmegaCat O = from_cell_table(T, &Q);
        bool lower = true;
        for (int c = 0; c < O.size(); ++c) lower = lower && O.dim(c) <= n - 1;
        std::cout << "collapsed category is " << (lower ? "" : "NOT ") << "an ("
                  << n - 1 << ")-category\n";
        if (!lower) return 1;
    }
    return 0;
}

int cmd_nerve(const std::string& in, int d, bool check, long long budget, int workers) {
    StratifiedParityComplex C = load_parity(in);
    CellTable T = enumerate_cells(C.base, -1, static_cast<std::size_t>(budget));
    FiniteOmegaCat O = [&] {
        bool any_thin = false;
        for (char t : C.thin) any_thin = any_thin || t;
        if (!any_thin) return from_cell_table(T);
        CollapseQuotient Q = collapse(C, T);
        return from_cell_table(T, &Q);
    }();
    std::vector<CellTable> orient = oriental_tables(d);
    std::vector<const CellTable*> optr;
    for (const CellTable& t : orient) optr.push_back(&t);
    Nerve N = nerve(O, d, optr, static_cast<std::size_t>(budget));
    std::cout << "nerve simplices per dim:";
    for (int r = 0; r <= d; ++r)
        std::cout << ' ' << N.complex.simplices_of_dim(r).size();
    std::cout << '\n';
    if (check) {
        ComplicialReport rep = is_complicial(N.complex, -1, workers);
        std::cout << (rep.ok() ? "complicial within bound" : "NOT complicial") << '\n';
        for (const std::string& f : rep.failures) std::cout << "failure: " << f << '\n';
        WellTemperedReport wt = is_well_tempered(N.complex);
        std::cout << "well tempered: " << (wt.ok() ? "yes" : "no") << '\n';
        return rep.ok() && wt.ok() ? 0 : 1;
    }
    return 0;
}

int cmd_bridge(int n, int m) {
    BridgeReport rep = tensor_bridge_check(delta(n), delta(m));
    std::cout << "r\tcylinders\telements\tbijection\n";
    for (const auto& lvl : rep.levels)
        std::cout << lvl.r << '\t' << lvl.cylinders << '\t' << lvl.elements << '\t'
                  << (lvl.bijection ? "PASS" : "FAIL") << '\n';
    std::cout << "atom relevance: " << (rep.relevance_ok ? "PASS" : "FAIL") << '\n';
    std::cout << "diag characterization: " << (rep.diag_ok ? "PASS" : "FAIL") << '\n';
    return rep.ok() ? 0 : 1;
}

int cmd_witness_chain(const std::string& fx, const std::string& fy) {
    StratifiedComplex X = load_complex(fx), Y = load_complex(fy);
    WitnessChainResult res = t_extension_witness_chain(X, Y);
    for (const WitnessStep& s : res.chain)
        std::cout << "thin " << X.name(s.simplex) << " via witness " << X.name(s.witness)
                  << " at k=" << s.k << '\n';
    if (res.success) {
        std::cout << "t-extension certified (" << res.chain.size() << " steps)\n";
        return 0;
    }
    std::cout << "undecided: " << res.unreached.size() << " thin simplices unreached\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification and enumeration toolkit for stratified simplicial "
                 "sets, Gray tensors, parity complexes and omega-categorical nerves"};
    app.require_subcommand(1);

    int max_n = 4;
    auto* identities = app.add_subcommand("identities", "audit the elementary identities");
    identities->add_option("--max", max_n, "largest ambient ordinal");

    int sh_n = 1, sh_m = 1;
    std::string format = "text";
    auto* shuffles = app.add_subcommand("shuffles", "enumerate shuffles of a product");
    shuffles->add_option("n", sh_n)->required();
    shuffles->add_option("m", sh_m)->required();
    shuffles->add_option("--format", format, "text or tsv");

    int tt_n = 1, tt_m = 1;
    bool tt_pre = false;
    auto* ttable = app.add_subcommand("tensor-table", "per-dimension tensor statistics");
    ttable->add_option("n", tt_n)->required();
    ttable->add_option("m", tt_m)->required();
    ttable->add_flag("--pretensor", tt_pre, "use the pre-tensor stratification");

    std::string lp_in, lp_out;
    auto* lpr = app.add_subcommand("lp-reflect", "pre-complicial reflector");
    lpr->add_option("in", lp_in)->required();
    lpr->add_option("out", lp_out)->required();

    std::string cc_in;
    int cc_bound = -1;
    int workers = 1;
    auto* ccheck = app.add_subcommand("check-complicial", "compliciality report");
    ccheck->add_option("file", cc_in)->required();
    ccheck->add_option("--bound", cc_bound, "truncation bound");
    ccheck->add_option("--workers", workers, "horn-check worker budget");

    std::string vp_in;
    auto* vparity = app.add_subcommand("verify-parity", "parity complex axioms");
    vparity->add_option("file", vp_in)->required();

    int or_n = 2;
    bool or_cells = false, or_collapse = false;
    long long budget = 1000000;
    auto* oriental = app.add_subcommand("oriental", "oriental element and cell counts");
    oriental->add_option("n", or_n)->required();
    oriental->add_flag("--cells", or_cells);
    oriental->add_flag("--collapse", or_collapse);
    oriental->add_option("--budget", budget, "cell budget");

    std::string nv_in;
    int nv_dim = 3;
    bool nv_check = false;
    auto* nervecmd = app.add_subcommand("nerve", "omega-categorical nerve");
    nervecmd->add_option("input", nv_in)->required();
    nervecmd->add_option("--dim", nv_dim, "truncation dimension");
    nervecmd->add_flag("--check-complicial", nv_check);
    nervecmd->add_option("--budget", budget, "search budget");
    nervecmd->add_option("--workers", workers, "horn-check worker budget");

    int br_n = 1, br_m = 1;
    auto* bridge = app.add_subcommand("bridge", "cylinder/product-element bridge");
    bridge->add_option("n", br_n)->required();
    bridge->add_option("m", br_m)->required();

    std::string wc_x, wc_y;
    auto* wchain = app.add_subcommand("witness-chain", "certify a t-extension");
    wchain->add_option("fileX", wc_x)->required();
    wchain->add_option("fileY", wc_y)->required();

    int ac_only = -1;
    auto* accept = app.add_subcommand("accept", "run the acceptance criteria");
    accept->add_option("criterion", ac_only, "criterion number, all when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(identities)) return cmd_identities(max_n);
        if (app.got_subcommand(shuffles)) return cmd_shuffles(sh_n, sh_m, format);
        if (app.got_subcommand(ttable)) return cmd_tensor_table(tt_n, tt_m, tt_pre);
        if (app.got_subcommand(lpr)) return cmd_lp_reflect(lp_in, lp_out);
        if (app.got_subcommand(ccheck)) return cmd_check_complicial(cc_in, cc_bound, workers);
        if (app.got_subcommand(vparity)) return cmd_verify_parity(vp_in);
        if (app.got_subcommand(oriental))
            return cmd_oriental(or_n, or_cells, or_collapse, budget);
        if (app.got_subcommand(nervecmd))
            return cmd_nerve(nv_in, nv_dim, nv_check, budget, workers);
        if (app.got_subcommand(bridge)) return cmd_bridge(br_n, br_m);
        if (app.got_subcommand(wchain)) return cmd_witness_chain(wc_x, wc_y);
        if (app.got_subcommand(accept)) {
            if (ac_only != -1 &&
                (ac_only < 1 ||
                 ac_only > static_cast<int>(acceptance_criteria().size()))) {
                std::cerr << "no such criterion\n";
                return 2;
            }
            return run_acceptance(ac_only) == 0 ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
