#include "strata/cell_table.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace strata {

std::optional<int> CellTable::find(const Cell& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int CellTable::src(int n, int id) const {
    if (n >= dim(id)) return id;
    return src_[static_cast<std::size_t>(n)][static_cast<std::size_t>(id)];
}

int CellTable::tgt(int n, int id) const {
    if (n >= dim(id)) return id;
    return tgt_[static_cast<std::size_t>(n)][static_cast<std::size_t>(id)];
}

bool CellTable::composable_ids(int a, int b, int n) const {
    return tgt(n, b) == src(n, a);
}

int CellTable::compose_ids(int a, int b, int n) const {
    if (!composable_ids(a, b, n))
        throw NotComposable("compose_ids: boundary mismatch");
    Cell c = cell_compose(complex_, cell(a), cell(b), n);
    auto id = find(c);
    if (!id) throw LawViolation("compose_ids: composite missing from table");
    return *id;
}

Cell CellTable::eval_witness(int id) const {
    const CellWitness& w = witness(id);
    if (w.kind == CellWitness::AtomW) return atom(complex_, w.elem);
    return cell_compose(complex_, eval_witness(w.left), eval_witness(w.right), w.level);
}

CellTable enumerate_cells(const ParityComplex& C, int dim_cap, std::size_t budget) {
    const AxiomReport ax = verify_axioms(C);
    if (!ax.ok()) throw LawViolation("enumerate_cells: parity axioms fail");
    if (dim_cap < 0) dim_cap = C.top_dim();

    CellTable T;
    T.complex_ = C;
    auto insert = [&T, &C, budget](const Cell& c, CellWitness w) -> bool {
        if (T.index_.count(c)) return false;
        if (T.cells_.size() >= budget)
            throw ClosureBudgetExceeded("enumerate_cells: cell budget exceeded");
        int id = static_cast<int>(T.cells_.size());
        T.cells_.push_back(c);
        T.dims_.push_back(cell_dim(C, c));
        T.witness_.push_back(w);
        T.index_[c] = id;
        return true;
    };

    T.atom_ids_.assign(static_cast<std::size_t>(C.size()), -1);
    std::vector<int> order(static_cast<std::size_t>(C.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&C](int a, int b) { return C.dim(a) < C.dim(b); });
    for (int x : order) {
        if (C.dim(x) > dim_cap) continue;
        Cell c = atom(C, x);
        CellWitness w;
        w.kind = CellWitness::AtomW;
        w.elem = x;
        insert(c, w);
        T.atom_ids_[static_cast<std::size_t>(x)] = *T.find(c);
    }

    int levels = dim_cap;
    // persistent boundary caches, grown as cells are inserted
    std::vector<std::vector<Cell>> bsrc(static_cast<std::size_t>(levels)),
        btgt(static_cast<std::size_t>(levels));
    auto grow_caches = [&]() {
        for (int n = 0; n < levels; ++n) {
            auto& sn = bsrc[static_cast<std::size_t>(n)];
            auto& tn = btgt[static_cast<std::size_t>(n)];
            while (sn.size() < T.cells_.size()) {
                const Cell& c = T.cells_[sn.size()];
                sn.push_back(cell_source(C, c, n));
                tn.push_back(cell_target(C, c, n));
            }
        }
    };
    bool progress = true;
    while (progress) {
        progress = false;
        grow_caches();
        int sz = T.size();
        // candidates ordered by (composite dim, level descending, operand ids)
        std::vector<std::tuple<int, int, int, int>> cand;
        for (int a = 0; a < sz; ++a)
            for (int b = 0; b < sz; ++b) {
                int d = std::max(T.dims_[static_cast<std::size_t>(a)],
                                 T.dims_[static_cast<std::size_t>(b)]);
                for (int n = 0; n < levels; ++n) {
                    if (T.dims_[static_cast<std::size_t>(a)] <= n &&
                        T.dims_[static_cast<std::size_t>(b)] <= n)
                        continue;  // both identities at this level
                    if (btgt[static_cast<std::size_t>(n)][static_cast<std::size_t>(b)] !=
                        bsrc[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)])
                        continue;
                    cand.emplace_back(d, -n, a, b);
                }
            }
        std::sort(cand.begin(), cand.end());
        for (auto [d, negn, a, b] : cand) {
            int n = -negn;
            Cell c = cell_compose(C, T.cells_[static_cast<std::size_t>(a)],
                                  T.cells_[static_cast<std::size_t>(b)], n);
            CellWitness w;
            w.kind = CellWitness::ComposeW;
            w.level = n;
            w.left = a;
            w.right = b;
            if (insert(c, w)) {
                if (!is_cell(C, c))
                    throw LawViolation("enumerate_cells: composite is not a cell");
                progress = true;
            }
        }
    }

    T.top_dim_ = 0;
    for (int d : T.dims_) T.top_dim_ = std::max(T.top_dim_, d);
    T.src_.assign(static_cast<std::size_t>(T.top_dim_), {});
    T.tgt_.assign(static_cast<std::size_t>(T.top_dim_), {});
    for (int n = 0; n < T.top_dim_; ++n) {
        auto& sn = T.src_[static_cast<std::size_t>(n)];
        auto& tn = T.tgt_[static_cast<std::size_t>(n)];
        sn.resize(static_cast<std::size_t>(T.size()));
        tn.resize(static_cast<std::size_t>(T.size()));
        for (int id = 0; id < T.size(); ++id) {
            if (T.dims_[static_cast<std::size_t>(id)] <= n) {
                sn[static_cast<std::size_t>(id)] = id;
                tn[static_cast<std::size_t>(id)] = id;
                continue;
            }
            auto s = T.find(cell_source(C, T.cells_[static_cast<std::size_t>(id)], n));
            auto t = T.find(cell_target(C, T.cells_[static_cast<std::size_t>(id)], n));
            if (!s || !t)
                throw LawViolation("enumerate_cells: table not closed under boundaries");
            sn[static_cast<std::size_t>(id)] = *s;
            tn[static_cast<std::size_t>(id)] = *t;
        }
    }
    return T;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int root(int a) {
        while (parent[static_cast<std::size_t>(a)] != a)
            a = parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        return a;
    }
    bool unite(int a, int b) {
        a = root(a);
        b = root(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }
};

} // namespace

CollapseQuotient collapse(const StratifiedParityComplex& C, const CellTable& table) {
    UnionFind uf(table.size());
    for (int x = 0; x < C.base.size(); ++x) {
        if (!C.thin[static_cast<std::size_t>(x)]) continue;
        int a = table.atom_id(x);
        if (a < 0) throw LawViolation("collapse: thin element beyond table cap");
        uf.unite(a, table.src(C.base.dim(x) - 1, a));
    }
    bool progress = true;
    while (progress) {
        progress = false;
        // structure maps descend to classes
        for (int a = 0; a < table.size(); ++a)
            for (int b = a + 1; b < table.size(); ++b) {
                if (uf.root(a) != uf.root(b)) continue;
                for (int n = 0; n < table.top_dim(); ++n) {
                    if (uf.unite(table.src(n, a), table.src(n, b))) progress = true;
                    if (uf.unite(table.tgt(n, a), table.tgt(n, b))) progress = true;
                }
            }
        // composition descends: congruent operands give congruent composites
        for (int n = 0; n < table.top_dim(); ++n) {
            // group composites by (class of left, class of right)
            std::map<std::pair<int, int>, int> seen;
            for (int a = 0; a < table.size(); ++a)
                for (int b = 0; b < table.size(); ++b) {
                    if (!table.composable_ids(a, b, n)) continue;
                    int c = table.compose_ids(a, b, n);
                    auto key = std::make_pair(uf.root(a), uf.root(b));
                    auto it = seen.find(key);
                    if (it == seen.end())
                        seen.emplace(key, c);
                    else if (uf.unite(it->second, c))
                        progress = true;
                }
        }
    }
    CollapseQuotient Q;
    Q.cls.assign(static_cast<std::size_t>(table.size()), -1);
    std::map<int, int> dense;
    for (int id = 0; id < table.size(); ++id) {
        int r = uf.root(id);
        auto it = dense.find(r);
        if (it == dense.end()) {
            it = dense.emplace(r, static_cast<int>(dense.size())).first;
            Q.members.emplace_back();
        }
        Q.cls[static_cast<std::size_t>(id)] = it->second;
        Q.members[static_cast<std::size_t>(it->second)].push_back(id);
    }
    Q.classes = static_cast<int>(dense.size());
    return Q;
}

} // namespace strata
