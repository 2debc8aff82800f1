#include "strata/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>

#include "strata/cell_table.hpp"
#include "strata/complicial.hpp"
#include "strata/gray_tensor.hpp"
#include "strata/gray_tensor_detail.hpp"
#include "strata/omega.hpp"
#include "strata/parity.hpp"
#include "strata/stratified.hpp"

namespace strata {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// isomorphism search over non-degenerate simplices (test-only, desk scale)
bool isomorphic(const StratifiedComplex& X, const StratifiedComplex& Y) {
    if (X.size() != Y.size()) return false;
    std::vector<int> order;
    for (int d = 0; d <= X.dim_bound(); ++d)
        for (int id : X.simplices_of_dim(d)) order.push_back(id);
    std::vector<int> image(static_cast<std::size_t>(X.size()), -1);
    std::vector<char> used(static_cast<std::size_t>(Y.size()), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == order.size()) return true;
        int x = order[pos];
        for (int y = 0; y < Y.size(); ++y) {
            if (used[static_cast<std::size_t>(y)]) continue;
            if (Y.dim(y) != X.dim(x) || Y.thin(y) != X.thin(x)) continue;
            bool ok = true;
            int d = X.dim(x);
            for (int i = 0; i <= (d >= 1 ? d : -1) && ok; ++i) {
                const NormalSimplex& fx = X.at(x).faces[static_cast<std::size_t>(i)];
                const NormalSimplex& fy = Y.at(y).faces[static_cast<std::size_t>(i)];
                ok = fx.degen == fy.degen &&
                     image[static_cast<std::size_t>(fx.base)] == fy.base;
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(x)] = y;
            used[static_cast<std::size_t>(y)] = 1;
            if (rec(pos + 1)) return true;
            image[static_cast<std::size_t>(x)] = -1;
            used[static_cast<std::size_t>(y)] = 0;
        }
        return false;
    };
    return rec(0);
}

std::pair<SimplicialOperator, SimplicialOperator> coord_ops(const StratifiedComplex& N,
                                                            const StratifiedComplex& M,
                                                            const ProductComplex& P,
                                                            int id) {
    const auto& [sx, sy] = P.coords[static_cast<std::size_t>(id)];
    return {compose(delta_face_operator(N, sx.base), sx.degen),
            compose(delta_face_operator(M, sy.base), sy.degen)};
}

// --- criterion bodies ---

bool criterion1(std::string& note) {
    IdentityReport rep = simplicial_identities_check(6);
    bool ok = rep.ok() && rep.instances >= 200;
    long long checked = 0;
    for (int a = 0; a <= 6 && ok; ++a)
        for (int b = 0; b <= 6 && ok; ++b) {
            std::vector<std::vector<SimplicialOperator>> degs, faces;
            for (int k = 0; k <= std::max(a, b); ++k) {
                degs.push_back(all_degeneracy_operators(a, k));
                faces.push_back(all_face_operators(k, b));
            }
            for (const auto& alpha : all_operators(a, b)) {
                EzFactorization ez = ez_factorize(alpha);
                if (compose(ez.face, ez.degeneracy) != alpha || !ez.face.is_face() ||
                    !ez.degeneracy.is_degeneracy()) {
                    ok = false;
                    break;
                }
                int count = 0;
                for (int k = 0; k <= std::max(a, b); ++k)
                    for (const auto& d : degs[static_cast<std::size_t>(k)])
                        for (const auto& f : faces[static_cast<std::size_t>(k)])
                            if (compose(f, d) == alpha) ++count;
                ++checked;
                if (count != 1) {
                    ok = false;
                    break;
                }
            }
        }
    note = "identities " + std::to_string(rep.instances) + ", EZ unique on " +
           std::to_string(checked) + " operators";
    return ok;
}

bool criterion2(std::string& note) {
    bool ok = true;
    for (int n = 0; n <= 8 && ok; ++n)
        for (int m = 0; n + m <= 8 && ok; ++m) {
            std::vector<Shuffle> s = enumerate_shuffles(n, m);
            if (static_cast<long long>(s.size()) != binomial(n + m, n)) ok = false;
            for (const Shuffle& sh : s)
                if (max_operator_of_simplex(n, m, sh.alpha, sh.beta) != sh.gamma)
                    ok = false;
        }
    // face membership inequality vs direct enumeration, n+m <= 5
    for (int n = 1; n <= 5 && ok; ++n)
        for (int m = 0; n + m <= 5 && ok; ++m) {
            std::vector<Shuffle> shuffles = enumerate_shuffles(n, m);
            for (int r = 0; r <= n + m; ++r) {
                std::vector<SimplicialOperator> rhos = all_operators(r, n + m);
                for (const auto& a : all_operators(r, n))
                    for (const auto& b : all_operators(r, m)) {
                        int hits = 0;
                        for (const Shuffle& sh : shuffles) {
                            bool direct = false;
                            for (const auto& rho : rhos)
                                if (compose(sh.alpha, rho) == a &&
                                    compose(sh.beta, rho) == b) {
                                    direct = true;
                                    break;
                                }
                            if (is_face_of_shuffle(sh, a, b) != direct) ok = false;
                            if (direct) ++hits;
                        }
                        if (hits < 1) ok = false;
                    }
            }
        }
    note = "shuffle counts to n+m=8, face membership to n+m=5";
    return ok;
}

bool criterion3(std::string& note) {
    bool ok = true;
    int simplices = 0;
    for (int n = 0; n <= 5 && ok; ++n)
        for (int m = 0; n + m <= 5 && ok; ++m) {
            StratifiedComplex X = delta(n), Y = delta(m);
            ProductComplex T = tensor(X, Y);
            for (int id = 0; id < T.complex.size(); ++id) {
                if (T.complex.dim(id) < 1) continue;
                ++simplices;
                auto [a, b] = coord_ops(X, Y, T, id);
                bool uv = false;
                for (int u = 0; u + 1 <= a.dom() && !uv; ++u)
                    for (int v = u; v + 1 <= b.dom() && !uv; ++v)
                        uv = a.collapses_at(u) && b.collapses_at(v);
                if (T.complex.thin(id) != uv) ok = false;
                const auto& [sx, sy] = T.coords[static_cast<std::size_t>(id)];
                TensorSimplexClass c = classify(X, Y, sx, sy);
                if ((c.tag == TensorSimplexClass::Mediator ||
                     c.tag == TensorSimplexClass::CrushedCylinder) &&
                    !T.complex.thin(id))
                    ok = false;
            }
        }
    // monoidal laws at total dimension <= 4
    if (ok) {
        StratifiedComplex A = delta(1), B = delta_t(1), C = delta(2);
        StratifiedComplex D = adm(2, 1);
        ok = isomorphic(tensor(A, delta(0)).complex, A) &&
             isomorphic(tensor(delta(0), C).complex, C) &&
             isomorphic(tensor(tensor(A, B).complex, delta(1)).complex,
                        tensor(A, tensor(B, delta(1)).complex).complex) &&
             isomorphic(tensor(tensor(A, B).complex, C).complex,
                        tensor(A, tensor(B, C).complex).complex) &&
             isomorphic(dual(tensor(B, C).complex), tensor(dual(C), dual(B)).complex) &&
             isomorphic(dual(tensor(D, C).complex), tensor(dual(C), dual(D)).complex);
    }
    note = "u<=v criterion on " + std::to_string(simplices) +
           " simplices, monoidal laws at dim<=4";
    return ok;
}

bool criterion4(std::string& note) {
    bool ok = true;
    int chains = 0, steps = 0;
    for (int n = 1; n <= 4 && ok; ++n)
        for (int m = 1; n + m <= 5 && ok; ++m) {
            StratifiedComplex X = delta(n), Y = delta(m);
            ProductComplex pre = pretensor(X, Y);
            ProductComplex ten = tensor(X, Y);
            WitnessChainResult res = pretensor_witness_chain(X, Y, pre, ten);
            if (!res.success) ok = false;
            ++chains;
            for (const WitnessStep& s : res.chain) {
                ++steps;
                const auto& [wx, wy] = pre.coords[static_cast<std::size_t>(s.witness)];
                TensorSimplexClass c = classify(X, Y, wx, wy);
                if (c.tag != TensorSimplexClass::Mediator || c.k != s.k) ok = false;
                auto [xa, xb] = coord_ops(X, Y, pre, s.simplex);
                long long target_phi = phi_potential(xa, xb);
                int d = pre.complex.dim(s.witness);
                for (int i : {s.k - 1, s.k + 1}) {
                    NormalSimplex f = pre.complex.act(s.witness, face_op(d, i));
                    auto [fa, fb] = coord_ops(X, Y, pre, f.base);
                    if (phi_potential(compose(fa, f.degen), compose(fb, f.degen)) >=
                        target_phi)
                        ok = false;
                }
            }
            // the reflector absorbs the witnessed extension
            StratifiedComplex refl = lp_reflect(pre.complex);
            for (int id = 0; id < ten.complex.size(); ++id)
                if (ten.complex.thin(id) && !refl.thin(id)) ok = false;
        }
    note = std::to_string(chains) + " chains, " + std::to_string(steps) +
           " mediator steps, reflector absorbs each";
    return ok;
}

bool criterion5(std::string& note) {
    std::vector<StratifiedComplex> fixtures;
    for (int n = 0; n <= 4; ++n) fixtures.push_back(delta(n));
    for (int n = 1; n <= 4; ++n) fixtures.push_back(delta_t(n));
    for (int n = 1; n <= 4; ++n) fixtures.push_back(boundary(n));
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) fixtures.push_back(horn(n, k));
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            fixtures.push_back(adm(n, k));
            fixtures.push_back(adm_horn(n, k));
            fixtures.push_back(adm_prime(n, k));
            fixtures.push_back(adm_dprime(n, k));
        }
    fixtures.push_back(tensor(delta(1), delta(1)).complex);
    fixtures.push_back(tensor(delta(2), delta(1)).complex);
    fixtures.push_back(pretensor(delta(2), delta(1)).complex);
    fixtures.push_back(dual(adm_prime(3, 1)));
    bool ok = fixtures.size() >= 20;
    for (const StratifiedComplex& X : fixtures) {
        StratifiedComplex R = lp_reflect(X);
        for (int id = 0; id < X.size(); ++id)
            if (X.thin(id) && !R.thin(id)) ok = false;
        if (lp_reflect(R) != R) ok = false;
        if (!is_precomplicial(R).ok()) ok = false;
    }
    for (int n = 2; n <= 4 && ok; ++n)
        for (int k = 1; k <= n - 1; ++k)
            if (lp_reflect(adm_prime(n, k)) != adm_dprime(n, k)) ok = false;
    note = std::to_string(fixtures.size()) +
           " fixtures; adm' reflects to adm'' for n<=4";
    return ok;
}

bool criterion6(std::string& note) {
    bool ok = true;
    int complexes = 0;
    auto check = [&ok, &complexes](const ParityComplex& C) {
        ++complexes;
        if (!verify_axioms(C).ok()) ok = false;
    };
    for (int n = 0; n <= 5; ++n) check(simplex_parity(n).complex);
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; n + m <= 4; ++m) {
            SimplexParity a = simplex_parity(n), b = simplex_parity(m);
            check(parity_product(a.complex, b.complex).complex);
        }
    for (int k = 0; k <= 3; ++k)
        for (int n = 0; n <= 2; ++n) {
            SimplexParity s = simplex_parity(n);
            check(suspension(k, s.complex).complex);
        }
    note = std::to_string(complexes) + " complexes pass all axioms and relevance";
    return ok;
}

bool criterion7(std::string& note) {
    bool ok = true;
    std::vector<ParityComplex> complexes;
    for (int n = 0; n <= 3; ++n) complexes.push_back(simplex_parity(n).complex);
    SimplexParity s1 = simplex_parity(1), s2 = simplex_parity(2);
    complexes.push_back(parity_product(s1.complex, s1.complex).complex);
    complexes.push_back(parity_product(s2.complex, s1.complex).complex);
    int total = 0;
    for (const ParityComplex& C : complexes) {
        CellTable T = enumerate_cells(C, -1, 1000000);
        total += T.size();
        try {
            from_cell_table(T);  // validates every law exhaustively
        } catch (const LawViolation&) {
            ok = false;
        }
        for (int id = 0; id < T.size(); ++id) {
            if (T.eval_witness(id) != T.cell(id)) ok = false;
            // non-empty layers below the top of each non-trivial cell
            const Cell& c = T.cell(id);
            for (int r = 0; r < T.dim(id); ++r) {
                bool m_empty = true, p_empty = true;
                for (int x : c.m)
                    if (C.dim(x) == r) m_empty = false;
                for (int x : c.p)
                    if (C.dim(x) == r) p_empty = false;
                if (m_empty || p_empty) ok = false;
            }
        }
        // exactly one non-trivial top cell
        int top = C.top_dim(), count = 0;
        for (int id = 0; id < T.size(); ++id)
            if (T.dim(id) == top) ++count;
        if (top >= 1 && count != 1) ok = false;
    }
    // frozen regression anchor for the third oriental
    CellTable T3 = enumerate_cells(simplex_parity(3).complex, -1, 1000000);
    if (T3.size() != 24) ok = false;
    note = std::to_string(total) + " cells across the fixture tables; |O3| = " +
           std::to_string(T3.size());
    return ok;
}

bool criterion8(std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
        SimplexParity S = simplex_parity(n);
        CellTable T = enumerate_cells(S.complex);
        CollapseQuotient Q = collapse(simplex_parity_thin(n), T);
        FiniteOmegaCat C = from_cell_table(T, &Q);
        for (int c = 0; c < C.size(); ++c)
            if (C.dim(c) > n - 1) ok = false;
    }
    note = "collapsed thin orientals are (n-1)-categories for n<=3";
    return ok;
}

bool criterion9(std::string& note) {
    bool ok = true;
    std::vector<CellTable> tables = oriental_tables(3);
    std::vector<const CellTable*> optr;
    for (const CellTable& t : tables) optr.push_back(&t);
    SimplexParity s1 = simplex_parity(1), s2 = simplex_parity(2);
    CellTable arrowT = enumerate_cells(s1.complex);
    CellTable triT = enumerate_cells(s2.complex);
    CollapseQuotient Q = collapse(simplex_parity_thin(2), triT);
    std::vector<FiniteOmegaCat> cats;
    cats.push_back(from_cell_table(arrowT));
    cats.push_back(from_cell_table(triT));
    cats.push_back(from_cell_table(triT, &Q));
    int simplices = 0;
    for (const FiniteOmegaCat& C : cats) {
        Nerve N = nerve(C, 3, optr);
        simplices += N.complex.size();
        ComplicialReport rep = is_complicial(N.complex);
        if (!rep.ok()) ok = false;
        if (!rep.filler_disagreements.empty()) ok = false;
        if (!is_well_tempered(N.complex).ok()) ok = false;
    }
    note = "3 nerves, " + std::to_string(simplices) +
           " non-degenerate simplices, complicial and well tempered";
    return ok;
}

bool criterion10(std::string& note) {
    bool ok = true;
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; n + m <= 3; ++m)
            if (!tensor_bridge_check(delta(n), delta(m)).ok()) ok = false;
    BridgeReport a = tensor_bridge_check(delta_t(1), delta(1));
    BridgeReport b = tensor_bridge_check(delta(2), delta_t(1));
    if (!a.thinness_checked || !a.ok()) ok = false;
    if (!b.thinness_checked || !b.ok()) ok = false;
    note = "all (n,m) with n+m<=3, plus two stratified fixtures";
    return ok;
}

bool criterion11(std::string& note) {
    bool ok = true;
    StratifiedComplex fixtures[] = {delta(2), tensor(delta(1), delta(1)).complex};
    for (const StratifiedComplex& X : fixtures)
        for (int n = 0; n <= 2; ++n)
            if (!decalage_reconstructs_level(X, n)) ok = false;
    note = "split coequalizer recovers X_n for both fixtures, n<=2";
    return ok;
}

} // namespace

const std::vector<AcceptanceCriterion>& acceptance_criteria() {
    static const std::vector<AcceptanceCriterion> criteria = {
        {"1 simplicial identities + EZ uniqueness", 5.0, criterion1},
        {"2 shuffle calculus", 30.0, criterion2},
        {"3 tensor thinness + monoidal laws", 60.0, criterion3},
        {"4 pre-tensor witness chains", 60.0, criterion4},
        {"5 reflector laws", 60.0, criterion5},
        {"6 parity axioms", 60.0, criterion6},
        {"7 free omega-category laws", 120.0, criterion7},
        {"8 collapse", 60.0, criterion8},
        {"9 nerve compliciality", 300.0, criterion9},
        {"10 tensor bridge", 60.0, criterion10},
        {"11 decalage reconstruction", 60.0, criterion11},
    };
    return criteria;
}

int run_acceptance(int only) {
    int failures = 0;
    const auto& criteria = acceptance_criteria();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only >= 0 && static_cast<int>(i) + 1 != only) continue;
        const AcceptanceCriterion& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (secs > c.limit_seconds) {
            ok = false;
            detail += " [over time limit]";
        }
        std::printf("%s criterion %s (%.2fs) %s\n", ok ? "PASS" : "FAIL",
                    c.name.c_str(), secs, detail.c_str());
        if (!ok) ++failures;
    }
    return failures;
}

} // namespace strata
