#include "strata/omega.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace strata {

int FiniteOmegaCat::src(int n, int c) const {
    if (n >= dim(c)) return c;
    return src_[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
}

int FiniteOmegaCat::tgt(int n, int c) const {
    if (n >= dim(c)) return c;
    return tgt_[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
}

std::optional<int> FiniteOmegaCat::compose(int a, int b, int n) const {
    if (dim(a) <= n && dim(b) <= n) {
        if (a != b) return std::nullopt;
        return a;  // identities compose with themselves only
    }
    auto it = comp_.find({n, a, b});
    if (it == comp_.end()) return std::nullopt;
    return it->second;
}

void FiniteOmegaCat::validate(long long triple_budget) const {
    auto complain = [](const std::string& msg) { throw LawViolation(msg); };
    for (int c = 0; c < size(); ++c) {
        for (int n = 0; n < max_dim_; ++n) {
            int s = src(n, c), t = tgt(n, c);
            if (dim(s) > n || dim(t) > n)
                complain("boundary of " + label(c) + " at level " +
                         std::to_string(n) + " is not an identity");
            for (int m = 0; m < n; ++m) {
                if (src(m, s) != src(m, c) || src(m, t) != src(m, c))
                    complain("globularity (source) fails at " + label(c));
                if (tgt(m, s) != tgt(m, c) || tgt(m, t) != tgt(m, c))
                    complain("globularity (target) fails at " + label(c));
            }
        }
    }
    // composite pairs, identities, boundary rules
    std::vector<std::vector<std::pair<int, int>>> pairs(
        static_cast<std::size_t>(max_dim_));
    for (int n = 0; n < max_dim_; ++n)
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b) {
                if (dim(a) <= n && dim(b) <= n) continue;
                if (!composable(a, b, n)) continue;
                auto c = compose(a, b, n);
                if (!c)
                    complain("missing composite of " + label(a) + " and " + label(b) +
                             " at level " + std::to_string(n));
                pairs[static_cast<std::size_t>(n)].emplace_back(a, b);
                if (src(n, *c) != src(n, b) || tgt(n, *c) != tgt(n, a))
                    complain("composite boundaries wrong at level " + std::to_string(n));
                for (int m = 0; m < n; ++m)
                    if (src(m, *c) != src(m, a) || tgt(m, *c) != tgt(m, a))
                        complain("composite globularity wrong at level " +
                                 std::to_string(m));
                for (int m = n + 1; m < max_dim_; ++m) {
                    auto sm = compose(src(m, a), src(m, b), n);
                    auto tm = compose(tgt(m, a), tgt(m, b), n);
                    if (!sm || *sm != src(m, *c) || !tm || *tm != tgt(m, *c))
                        complain("boundary functoriality fails at level " +
                                 std::to_string(m));
                }
            }
    for (int n = 0; n < max_dim_; ++n)
        for (int a = 0; a < size(); ++a) {
            auto left = compose(a, src(n, a), n);
            auto right = compose(tgt(n, a), a, n);
            if (!left || *left != a || !right || *right != a)
                complain("identity law fails for " + label(a) + " at level " +
                         std::to_string(n));
        }
    long long probes = 0;
    for (int n = 0; n < max_dim_ && probes < triple_budget; ++n)
        for (auto [b, c] : pairs[static_cast<std::size_t>(n)]) {
            int bc = *compose(b, c, n);
            for (int a = 0; a < size() && probes < triple_budget; ++a) {
                if (dim(a) <= n && dim(b) <= n && dim(c) <= n) continue;
                if (!composable(a, b, n)) continue;
                ++probes;
                int ab = *compose(a, b, n);
                auto lhs = compose(ab, c, n);
                auto rhs = compose(a, bc, n);
                if (!lhs || !rhs || *lhs != *rhs)
                    complain("associativity fails at level " + std::to_string(n));
            }
        }
    // middle-four interchange
    for (int n = 1; n < max_dim_ && probes < triple_budget; ++n)
        for (int m = 0; m < n; ++m)
            for (auto [a, b] : pairs[static_cast<std::size_t>(n)])
                for (auto [c, d] : pairs[static_cast<std::size_t>(n)]) {
                    if (!composable(a, c, m) || !composable(b, d, m)) continue;
                    if (++probes >= triple_budget) break;
                    int ab = *compose(a, b, n), cd = *compose(c, d, n);
                    if (!composable(ab, cd, m)) continue;
                    auto lhs = compose(ab, cd, m);
                    auto ac = compose(a, c, m);
                    auto bd = compose(b, d, m);
                    if (!ac || !bd)
                        complain("interchange operands missing");
                    auto rhs = compose(*ac, *bd, n);
                    if (!lhs || !rhs || *lhs != *rhs)
                        complain("interchange fails at levels " + std::to_string(m) +
                                 "," + std::to_string(n));
                }
}

FiniteOmegaCat from_cell_table(const CellTable& table, const CollapseQuotient* quotient) {
    FiniteOmegaCat C;
    if (!quotient) {
        C.max_dim_ = table.top_dim();
        for (int id = 0; id < table.size(); ++id) {
            C.dims_.push_back(table.dim(id));
            C.labels_.push_back("c" + std::to_string(id));
        }
        C.src_.assign(static_cast<std::size_t>(C.max_dim_),
                      std::vector<int>(static_cast<std::size_t>(table.size())));
        C.tgt_ = C.src_;
        for (int n = 0; n < C.max_dim_; ++n)
            for (int id = 0; id < table.size(); ++id) {
                C.src_[static_cast<std::size_t>(n)][static_cast<std::size_t>(id)] =
                    table.src(n, id);
                C.tgt_[static_cast<std::size_t>(n)][static_cast<std::size_t>(id)] =
                    table.tgt(n, id);
            }
        for (int n = 0; n < C.max_dim_; ++n)
            for (int a = 0; a < table.size(); ++a)
                for (int b = 0; b < table.size(); ++b) {
                    if (table.dim(a) <= n && table.dim(b) <= n) continue;
                    if (!table.composable_ids(a, b, n)) continue;
                    C.comp_[{n, a, b}] = table.compose_ids(a, b, n);
                }
        C.validate();
        return C;
    }

    const CollapseQuotient& Q = *quotient;
    C.max_dim_ = table.top_dim();
    C.dims_.assign(static_cast<std::size_t>(Q.classes), 0);
    for (int k = 0; k < Q.classes; ++k)
        C.labels_.push_back("q" + std::to_string(k));
    C.src_.assign(static_cast<std::size_t>(C.max_dim_),
                  std::vector<int>(static_cast<std::size_t>(Q.classes), -1));
    C.tgt_ = C.src_;
    for (int n = 0; n < C.max_dim_; ++n)
        for (int id = 0; id < table.size(); ++id) {
            int k = Q.cls[static_cast<std::size_t>(id)];
            int s = Q.cls[static_cast<std::size_t>(table.src(n, id))];
            int t = Q.cls[static_cast<std::size_t>(table.tgt(n, id))];
            int& sslot = C.src_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            int& tslot = C.tgt_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            if (sslot >= 0 && (sslot != s || tslot != t))
                throw LawViolation("collapse: boundaries not constant on a class");
            sslot = s;
            tslot = t;
        }
    // class dimension: least level fixed by the source map
    for (int k = 0; k < Q.classes; ++k) {
        int d = 0;
        while (d < C.max_dim_ &&
               C.src_[static_cast<std::size_t>(d)][static_cast<std::size_t>(k)] != k)
            ++d;
        C.dims_[static_cast<std::size_t>(k)] = d;
    }
    for (int n = 0; n < C.max_dim_; ++n)
        for (int ka = 0; ka < Q.classes; ++ka)
            for (int kb = 0; kb < Q.classes; ++kb) {
                if (C.dims_[static_cast<std::size_t>(ka)] <= n &&
                    C.dims_[static_cast<std::size_t>(kb)] <= n)
                    continue;
                if (C.tgt(n, kb) != C.src(n, ka)) continue;
                // find a composable representative pair
                std::optional<int> composite;
                for (int a : Q.members[static_cast<std::size_t>(ka)]) {
                    for (int b : Q.members[static_cast<std::size_t>(kb)]) {
                        if (!table.composable_ids(a, b, n)) continue;
                        composite = Q.cls[static_cast<std::size_t>(
                            table.compose_ids(a, b, n))];
                        break;
                    }
                    if (composite) break;
                }
                if (!composite)
                    throw LawViolation(
                        "collapse: no representatives compose at level " +
                        std::to_string(n));
                C.comp_[{n, ka, kb}] = *composite;
            }
    C.validate();
    return C;
}

FiniteOmegaCat sup_cat(const FiniteOmegaCat& C, int n) {
    FiniteOmegaCat S;
    std::vector<int> keep, remap(static_cast<std::size_t>(C.size()), -1);
    for (int c = 0; c < C.size(); ++c)
        if (C.dim(c) <= n) {
            remap[static_cast<std::size_t>(c)] = static_cast<int>(keep.size());
            keep.push_back(c);
        }
    S.max_dim_ = std::min(C.max_dim(), n);
    for (int c : keep) {
        S.dims_.push_back(C.dim(c));
        S.labels_.push_back(C.label(c));
    }
    S.src_.assign(static_cast<std::size_t>(S.max_dim_),
                  std::vector<int>(keep.size()));
    S.tgt_ = S.src_;
    for (int m = 0; m < S.max_dim_; ++m)
        for (std::size_t i = 0; i < keep.size(); ++i) {
            S.src_[static_cast<std::size_t>(m)][i] =
                remap[static_cast<std::size_t>(C.src(m, keep[i]))];
            S.tgt_[static_cast<std::size_t>(m)][i] =
                remap[static_cast<std::size_t>(C.tgt(m, keep[i]))];
        }
    for (const auto& [key, c] : C.comp_) {
        auto [lvl, a, b] = key;
        if (lvl >= S.max_dim_) continue;
        int ra = remap[static_cast<std::size_t>(a)], rb = remap[static_cast<std::size_t>(b)],
            rc = remap[static_cast<std::size_t>(c)];
        if (ra < 0 || rb < 0) continue;
        if (rc < 0) throw LawViolation("sup_cat: composite escapes the superstructure");
        S.comp_[{lvl, ra, rb}] = rc;
    }
    S.validate();
    return S;
}

// ---- functors ----

int OmegaFunctor::eval(int cell_id) const {
    const CellWitness& w = source->witness(cell_id);
    if (w.kind == CellWitness::AtomW)
        return atom_images[static_cast<std::size_t>(w.elem)];
    int l = eval(w.left), r = eval(w.right);
    auto c = target->compose(l, r, w.level);
    if (!c) throw NotComposable("functor evaluation hit a missing composite");
    return *c;
}

namespace {

// evaluation against a partial atom assignment; returns -1 when undefined
int eval_partial(const CellTable& T, const FiniteOmegaCat& C,
                 const std::vector<int>& atom_images, int cell_id) {
    const CellWitness& w = T.witness(cell_id);
    if (w.kind == CellWitness::AtomW) return atom_images[static_cast<std::size_t>(w.elem)];
    int l = eval_partial(T, C, atom_images, w.left);
    if (l < 0) return -1;
    int r = eval_partial(T, C, atom_images, w.right);
    if (r < 0) return -1;
    auto c = C.compose(l, r, w.level);
    return c ? *c : -1;
}

bool certify(const CellTable& T, const FiniteOmegaCat& C, const std::vector<int>& images) {
    OmegaFunctor F{&T, &C, images};
    std::vector<int> value(static_cast<std::size_t>(T.size()));
    for (int id = 0; id < T.size(); ++id) {
        try {
            value[static_cast<std::size_t>(id)] = F.eval(id);
        } catch (const NotComposable&) {
            return false;
        }
        if (C.dim(value[static_cast<std::size_t>(id)]) > T.dim(id))
            return false;  // n-cells must land on n-cells
    }
    for (int id = 0; id < T.size(); ++id)
        for (int n = 0; n < T.top_dim(); ++n) {
            if (C.src(n, value[static_cast<std::size_t>(id)]) !=
                value[static_cast<std::size_t>(T.src(n, id))])
                return false;
            if (C.tgt(n, value[static_cast<std::size_t>(id)]) !=
                value[static_cast<std::size_t>(T.tgt(n, id))])
                return false;
        }
    for (int n = 0; n < T.top_dim(); ++n)
        for (int a = 0; a < T.size(); ++a)
            for (int b = 0; b < T.size(); ++b) {
                if (T.dim(a) <= n && T.dim(b) <= n) continue;
                if (!T.composable_ids(a, b, n)) continue;
                auto c = C.compose(value[static_cast<std::size_t>(a)],
                                   value[static_cast<std::size_t>(b)], n);
                if (!c || *c != value[static_cast<std::size_t>(T.compose_ids(a, b, n))])
                    return false;
            }
    return true;
}

} // namespace

std::vector<OmegaFunctor> enumerate_functors(const CellTable& oriental,
                                             const FiniteOmegaCat& C, bool thin_top,
                                             std::size_t budget) {
    const ParityComplex& P = oriental.complex();
    std::vector<int> atoms(static_cast<std::size_t>(P.size()));
    std::iota(atoms.begin(), atoms.end(), 0);
    std::stable_sort(atoms.begin(), atoms.end(),
                     [&P](int a, int b) { return P.dim(a) < P.dim(b); });
    int top = P.top_dim();

    std::vector<OmegaFunctor> out;
    std::vector<int> images(static_cast<std::size_t>(P.size()), -1);
    std::size_t explored = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (++explored > budget)
            throw BudgetExceeded("enumerate_functors: search budget exceeded");
        if (pos == atoms.size()) {
            if (certify(oriental, C, images)) out.push_back(OmegaFunctor{&oriental, &C, images});
            return;
        }
        int x = atoms[pos];
        int d = P.dim(x);
        int aid = oriental.atom_id(x);
        int want_src = -1, want_tgt = -1;
        if (d >= 1) {
            want_src = eval_partial(oriental, C, images, oriental.src(d - 1, aid));
            want_tgt = eval_partial(oriental, C, images, oriental.tgt(d - 1, aid));
            if (want_src < 0 || want_tgt < 0) return;  // inconsistent partial assignment
        }
        for (int c = 0; c < C.size(); ++c) {
            if (C.dim(c) > d) continue;
            if (d >= 1 && (C.src(d - 1, c) != want_src || C.tgt(d - 1, c) != want_tgt))
                continue;
            if (thin_top && d == top && C.dim(c) > d - 1) continue;
            images[static_cast<std::size_t>(x)] = c;
            rec(pos + 1);
            images[static_cast<std::size_t>(x)] = -1;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CellTable> oriental_tables(int d) {
    std::vector<CellTable> out;
    for (int r = 0; r <= d; ++r)
        out.push_back(enumerate_cells(simplex_parity(r).complex));
    return out;
}

// ---- nerve ----

namespace {

// the nerve action: reindex a functor along alpha using atom images only
std::vector<int> reindex_images(const std::vector<int>& images, const SimplexParity& src,
                                const SimplexParity& tgt, const SimplicialOperator& alpha) {
    std::vector<int> out(static_cast<std::size_t>(src.complex.size()));
    for (int v = 0; v < src.complex.size(); ++v) {
        std::vector<int> w;
        for (int u : src.verts[static_cast<std::size_t>(v)]) {
            int a = alpha(u);
            if (w.empty() || w.back() != a) w.push_back(a);
        }
        out[static_cast<std::size_t>(v)] = images[static_cast<std::size_t>(tgt.element(w))];
    }
    return out;
}

} // namespace

Nerve nerve(const FiniteOmegaCat& C, int d, const std::vector<const CellTable*>& orientals,
            std::size_t budget) {
    if (static_cast<int>(orientals.size()) < d + 1)
        throw RangeError("nerve: need oriental tables up to the truncation dimension");
    Nerve N;
    N.orientals = orientals;
    std::vector<SimplexParity> simplices;
    for (int r = 0; r <= d; ++r) simplices.push_back(simplex_parity(r));
    for (int r = 0; r <= d; ++r)
        N.levels.push_back(enumerate_functors(*orientals[static_cast<std::size_t>(r)], C,
                                              false, budget));

    auto level_index = [&](int r, const std::vector<int>& images) {
        const auto& L = N.levels[static_cast<std::size_t>(r)];
        OmegaFunctor probe{orientals[static_cast<std::size_t>(r)], &C, images};
        auto it = std::lower_bound(L.begin(), L.end(), probe);
        if (it == L.end() || !(*it == probe))
            throw LawViolation("nerve: reindexed functor missing from level");
        return static_cast<int>(it - L.begin());
    };

    auto degenerate_at = [&](int r, const std::vector<int>& images, int k) {
        std::vector<int> down = reindex_images(
            images, simplices[static_cast<std::size_t>(r - 1)],
            simplices[static_cast<std::size_t>(r)], face_op(r, k));
        std::vector<int> back = reindex_images(
            down, simplices[static_cast<std::size_t>(r)],
            simplices[static_cast<std::size_t>(r - 1)], degeneracy_op(r - 1, k));
        return back == images;
    };

    // identify non-degenerate simplices per level
    std::vector<std::vector<int>> nondeg(static_cast<std::size_t>(d + 1));
    std::map<std::pair<int, int>, int> simplex_id;  // (r, level index) -> complex id
    for (int r = 0; r <= d; ++r) {
        const auto& L = N.levels[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < L.size(); ++i) {
            bool degen = false;
            for (int k = 0; k < r && !degen; ++k)
                degen = degenerate_at(r, L[i].atom_images, k);
            if (degen) continue;
            int top_elem = simplices[static_cast<std::size_t>(r)].element([&] {
                std::vector<int> v(static_cast<std::size_t>(r + 1));
                std::iota(v.begin(), v.end(), 0);
                return v;
            }());
            bool thin =
                r >= 1 &&
                C.dim(L[i].atom_images[static_cast<std::size_t>(top_elem)]) <= r - 1;
            int id = N.complex.add_simplex("f" + std::to_string(r) + "_" +
                                               std::to_string(i),
                                           r, thin);
            simplex_id[{r, static_cast<int>(i)}] = id;
            N.simplex_functor.push_back(L[i]);
            nondeg[static_cast<std::size_t>(r)].push_back(static_cast<int>(i));
        }
    }
    N.complex.set_dim_bound(d);
    // face assignments with EZ stripping
    for (int r = 1; r <= d; ++r) {
        for (int i : nondeg[static_cast<std::size_t>(r)]) {
            int id = simplex_id.at({r, i});
            for (int fidx = 0; fidx <= r; ++fidx) {
                std::vector<int> cur = reindex_images(
                    N.levels[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]
                        .atom_images,
                    simplices[static_cast<std::size_t>(r - 1)],
                    simplices[static_cast<std::size_t>(r)], face_op(r, fidx));
                int cd = r - 1;
                SimplicialOperator g = SimplicialOperator::identity(cd);
                bool stripped = true;
                while (stripped) {
                    stripped = false;
                    for (int k = 0; k < cd; ++k) {
                        if (degenerate_at(cd, cur, k)) {
                            cur = reindex_images(cur,
                                                 simplices[static_cast<std::size_t>(cd - 1)],
                                                 simplices[static_cast<std::size_t>(cd)],
                                                 face_op(cd, k));
                            g = compose(degeneracy_op(cd - 1, k), g);
                            --cd;
                            stripped = true;
                            break;
                        }
                    }
                }
                int base = simplex_id.at({cd, level_index(cd, cur)});
                N.complex.set_face(id, fidx, NormalSimplex{base, g});
            }
        }
    }
    N.complex.validate();
    return N;
}

// ---- the tensor bridge ----

SimplicialOperator delta_face_operator(const StratifiedComplex& deltaN, int id) {
    int d = deltaN.dim(id);
    std::vector<int> v(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        NormalSimplex vert = deltaN.act(id, vertex_op(d, i));
        v[static_cast<std::size_t>(i)] = vert.base;  // vertex ids equal vertex numbers
    }
    return SimplicialOperator(d, deltaN.dim_bound(), std::move(v));
}

StratifiedParityComplex to_stratified_parity(const StratifiedComplex& N,
                                             const SimplexParity& S) {
    StratifiedParityComplex out;
    out.base = S.complex;
    out.thin.assign(static_cast<std::size_t>(S.complex.size()), 0);
    int n = N.dim_bound();
    for (int x = 0; x < S.complex.size(); ++x) {
        const std::vector<int>& v = S.verts[static_cast<std::size_t>(x)];
        SimplicialOperator f(static_cast<int>(v.size()) - 1, n, v);
        // locate the simplex of N carrying this face operator
        bool found = false;
        for (int id = 0; id < N.size(); ++id) {
            if (N.dim(id) != f.dom()) continue;
            if (delta_face_operator(N, id) == f) {
                out.thin[static_cast<std::size_t>(x)] = N.thin(id);
                found = true;
                break;
            }
        }
        if (!found)
            throw LawViolation("to_stratified_parity: input is not a standard simplex");
    }
    out.validate();
    return out;
}

BridgeReport tensor_bridge_check(const StratifiedComplex& N, const StratifiedComplex& M) {
    int n = N.dim_bound(), m = M.dim_bound();
    BridgeReport rep;
    rep.bijection_ok = true;
    rep.relevance_ok = true;
    rep.diag_ok = true;

    ProductComplex T = tensor(N, M);
    SimplexParity Sn = simplex_parity(n), Sm = simplex_parity(m);
    ParityProduct prodNM = parity_product(Sn.complex, Sm.complex);
    StratifiedParityComplex Npar = to_stratified_parity(N, Sn);
    StratifiedParityComplex Mpar = to_stratified_parity(M, Sm);

    bool minimalN = true, minimalM = true;
    for (int id = 0; id < N.size(); ++id) minimalN = minimalN && !N.thin(id);
    for (int id = 0; id < M.size(); ++id) minimalM = minimalM && !M.thin(id);
    rep.thinness_checked = !(minimalN && minimalM);
    rep.thinness_ok = true;

    for (int r = 0; r <= n + m; ++r) {
        BridgeReport::Level lvl;
        lvl.r = r;
        lvl.elements = static_cast<int>(prodNM.complex.elements_of_dim(r).size());
        std::set<std::pair<int, int>> hit;
        bool level_ok = true;
        SimplexParity Sr = simplex_parity(std::max(r, 0));
        ParityProduct prodRR = parity_product(Sr.complex, Sr.complex);
        ParityMorphism diag = diag_morphism(Sr, prodRR);
        for (int id = 0; id < T.complex.size(); ++id) {
            if (T.complex.dim(id) != r) continue;
            const auto& [sx, sy] = T.coords[static_cast<std::size_t>(id)];
            TensorSimplexClass c = classify(N, M, sx, sy);
            // every 0-simplex factors trivially through the (0,0) partition
            bool is_cylinder = r == 0 || c.tag == TensorSimplexClass::Cylinder ||
                               c.tag == TensorSimplexClass::CrushedCylinder;
            if (!is_cylinder) continue;
            ++lvl.cylinders;
            SimplicialOperator alpha =
                compose(delta_face_operator(N, sx.base), sx.degen);
            SimplicialOperator beta = compose(delta_face_operator(M, sy.base), sy.degen);
            std::vector<int> v = alpha.image(), w = beta.image();
            int ve = Sn.element(v), we = Sm.element(w);
            if (static_cast<int>(v.size() + w.size()) != r + 2) {
                level_ok = false;
                continue;
            }
            if (!hit.insert({ve, we}).second) level_ok = false;
            int elem = prodNM.index.at({ve, we});
            // relevance of the image atom
            Cell at;
            try {
                at = atom(prodNM.complex, elem);
            } catch (const NotRelevant&) {
                rep.relevance_ok = false;
                continue;
            }
            // the diag-composite characterization of the atom image
            ParityMorphism fa = operator_morphism(alpha, Sr, Sn);
            ParityMorphism fb = operator_morphism(beta, Sr, Sm);
            ParityMorphism fab = morphism_product(fa, fb, prodRR, prodNM);
            ParityMorphism route = compose(fab, diag);
            std::vector<int> topv(static_cast<std::size_t>(r + 1));
            std::iota(topv.begin(), topv.end(), 0);
            Cell image = apply_morphism(route, atom(Sr.complex, Sr.element(topv)));
            if (image != at) rep.diag_ok = false;
            // thinness correspondence on stratified fixtures
            if (rep.thinness_checked && r >= 1) {
                bool cyl_thin = T.complex.thin(id);
                bool elem_thin = Npar.thin[static_cast<std::size_t>(ve)] ||
                                 Mpar.thin[static_cast<std::size_t>(we)];
                if (cyl_thin != elem_thin) rep.thinness_ok = false;
            }
        }
        lvl.bijection = level_ok && lvl.cylinders == lvl.elements &&
                        static_cast<int>(hit.size()) == lvl.elements;
        if (!lvl.bijection) rep.bijection_ok = false;
        rep.levels.push_back(lvl);
    }
    return rep;
}

} // namespace strata
