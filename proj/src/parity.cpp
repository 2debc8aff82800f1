#include "strata/parity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace strata {

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
    ElemSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ElemSet set_diff(const ElemSet& a, const ElemSet& b) {
    ElemSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ElemSet set_intersect(const ElemSet& a, const ElemSet& b) {
    ElemSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const ElemSet& a, int x) {
    return std::binary_search(a.begin(), a.end(), x);
}

int ParityComplex::top_dim() const {
    int d = 0;
    for (int x = 0; x < size(); ++x) d = std::max(d, dim(x));
    return d;
}

std::optional<int> ParityComplex::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> ParityComplex::elements_of_dim(int d) const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (dim(x) == d) out.push_back(x);
    return out;
}

int ParityComplex::add_element(const std::string& name, int d) {
    if (d < 0) throw RangeError("element dimension must be >= 0");
    if (by_name_.count(name)) throw LawViolation("duplicate element name: " + name);
    int id = size();
    names_.push_back(name);
    dims_.push_back(d);
    minus_.emplace_back();
    plus_.emplace_back();
    by_name_[name] = id;
    return id;
}

void ParityComplex::set_faces(int x, ElemSet minus, ElemSet plus) {
    std::sort(minus.begin(), minus.end());
    std::sort(plus.begin(), plus.end());
    minus_[static_cast<std::size_t>(x)] = std::move(minus);
    plus_[static_cast<std::size_t>(x)] = std::move(plus);
}

void ParityComplex::validate() const {
    for (int x = 0; x < size(); ++x) {
        if (dim(x) == 0) {
            if (!minus(x).empty() || !plus(x).empty())
                throw LawViolation("0-element with faces: " + name(x));
            continue;
        }
        if (minus(x).empty() || plus(x).empty())
            throw LawViolation("empty face set at " + name(x));
        if (!set_intersect(minus(x), plus(x)).empty())
            throw LawViolation("face sets not disjoint at " + name(x));
        for (int s : {-1, +1})
            for (int y : faces(x, s))
                if (y < 0 || y >= size() || dim(y) != dim(x) - 1)
                    throw LawViolation("face of wrong dimension at " + name(x));
    }
}

void StratifiedParityComplex::validate() const {
    base.validate();
    if (thin.size() != static_cast<std::size_t>(base.size()))
        throw LawViolation("thin flags out of step with elements");
    for (int x = 0; x < base.size(); ++x)
        if (thin[static_cast<std::size_t>(x)] && base.dim(x) == 0)
            throw LawViolation("thin 0-element: " + base.name(x));
}

ElemSet faces_of_set(const ParityComplex& C, const ElemSet& S, int sign) {
    ElemSet out;
    for (int x : S) out = set_union(out, C.faces(x, sign));
    return out;
}

std::pair<ElemSet, ElemSet> s_minus_plus(const ParityComplex& C, const ElemSet& S) {
    ElemSet sm = faces_of_set(C, S, -1);
    ElemSet sp = faces_of_set(C, S, +1);
    return {set_diff(sm, sp), set_diff(sp, sm)};
}

bool orthogonal(const ParityComplex& C, int x, int y) {
    return set_intersect(C.plus(x), C.plus(y)).empty() &&
           set_intersect(C.minus(x), C.minus(y)).empty();
}

bool well_formed(const ParityComplex& C, const ElemSet& S) {
    int zero_count = 0;
    for (int x : S)
        if (C.dim(x) == 0) ++zero_count;
    if (zero_count > 1) return false;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (!orthogonal(C, S[i], S[j])) return false;
    return true;
}

bool moves(const ParityComplex& C, const ElemSet& S, const ElemSet& M, const ElemSet& P) {
    ElemSet sm = faces_of_set(C, S, -1);
    ElemSet sp = faces_of_set(C, S, +1);
    return P == set_diff(set_union(M, sp), sm) && M == set_diff(set_union(P, sm), sp);
}

namespace {

// reflexive-transitive reachability of the "<" relation (x+ meets y-)
std::vector<std::vector<char>> triangle_reach(const ParityComplex& C) {
    int n = C.size();
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && C.dim(x) == C.dim(y) &&
                !set_intersect(C.plus(x), C.minus(y)).empty())
                succ[static_cast<std::size_t>(x)].push_back(y);
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x) {
        std::deque<int> q{x};
        reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : succ[static_cast<std::size_t>(u)])
                if (!reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)]) {
                    reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)] = 1;
                    q.push_back(v);
                }
        }
    }
    return reach;
}

bool has_cycle(const std::vector<std::vector<int>>& succ) {
    int n = static_cast<int>(succ.size());
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    std::vector<int> stack, phase;
    for (int s = 0; s < n; ++s) {
        if (state[static_cast<std::size_t>(s)]) continue;
        stack.push_back(s);
        phase.push_back(0);
        while (!stack.empty()) {
            int u = stack.back();
            if (phase.back() == 0) {
                phase.back() = 1;
                state[static_cast<std::size_t>(u)] = 1;
            }
            bool descended = false;
            for (int v : succ[static_cast<std::size_t>(u)]) {
                if (state[static_cast<std::size_t>(v)] == 1) return true;
                if (state[static_cast<std::size_t>(v)] == 0) {
                    stack.push_back(v);
                    phase.push_back(0);
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                state[static_cast<std::size_t>(u)] = 2;
                stack.pop_back();
                phase.pop_back();
            }
        }
    }
    return false;
}

} // namespace

AxiomReport verify_axioms(const ParityComplex& C) {
    AxiomReport rep;
    for (int x = 0; x < C.size(); ++x) {
        if (C.dim(x) >= 2) {
            ElemSet lhs = set_union(faces_of_set(C, C.minus(x), -1),
                                    faces_of_set(C, C.plus(x), +1));
            ElemSet rhs = set_union(faces_of_set(C, C.plus(x), -1),
                                    faces_of_set(C, C.minus(x), +1));
            if (lhs != rhs) rep.axiom1.push_back(C.name(x));
        }
        if (C.dim(x) >= 1) {
            if (!well_formed(C, C.minus(x)) || !well_formed(C, C.plus(x)))
                rep.axiom2.push_back(C.name(x));
        }
    }
    {
        // axiom 3(a): the triangle preorder is antisymmetric
        std::vector<std::vector<int>> succ(static_cast<std::size_t>(C.size()));
        for (int x = 0; x < C.size(); ++x)
            for (int y = 0; y < C.size(); ++y)
                if (x != y && C.dim(x) == C.dim(y) &&
                    !set_intersect(C.plus(x), C.minus(y)).empty())
                    succ[static_cast<std::size_t>(x)].push_back(y);
        if (has_cycle(succ)) rep.axiom3a.push_back("triangle order has a cycle");
    }
    {
        std::vector<std::vector<char>> reach = triangle_reach(C);
        for (int z = 0; z < C.size(); ++z)
            for (int x : C.minus(z))
                for (int y : C.plus(z))
                    if (reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ||
                        reach[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)])
                        rep.axiom3b.push_back(C.name(z) + " relates " + C.name(x) +
                                              " and " + C.name(y));
    }
    {
        // antisymmetry of the dimension-traversing order generated by
        // x in y- or y in x+
        std::vector<std::vector<int>> succ(static_cast<std::size_t>(C.size()));
        for (int y = 0; y < C.size(); ++y) {
            for (int x : C.minus(y)) succ[static_cast<std::size_t>(x)].push_back(y);
            for (int x : C.plus(y)) succ[static_cast<std::size_t>(y)].push_back(x);
        }
        if (has_cycle(succ)) rep.filledtri.push_back("filled triangle order has a cycle");
    }
    for (int x = 0; x < C.size(); ++x) {
        try {
            atom(C, x);
        } catch (const NotRelevant&) {
            rep.relevance.push_back(C.name(x));
        }
    }
    return rep;
}

int cell_dim(const ParityComplex& C, const Cell& c) {
    int d = 0;
    for (int x : c.m) d = std::max(d, C.dim(x));
    for (int x : c.p) d = std::max(d, C.dim(x));
    return d;
}

namespace {

ElemSet slice(const ParityComplex& C, const ElemSet& S, int d) {
    ElemSet out;
    for (int x : S)
        if (C.dim(x) == d) out.push_back(x);
    return out;
}

ElemSet up_to(const ParityComplex& C, const ElemSet& S, int d) {
    ElemSet out;
    for (int x : S)
        if (C.dim(x) <= d) out.push_back(x);
    return out;
}

ElemSet strip_dim(const ParityComplex& C, const ElemSet& S, int d) {
    ElemSet out;
    for (int x : S)
        if (C.dim(x) != d) out.push_back(x);
    return out;
}

} // namespace

Cell atom(const ParityComplex& C, int x) {
    int n = C.dim(x);
    Cell c;
    ElemSet mu{x}, pi{x};
    c.m = mu;
    c.p = pi;
    for (int m = n - 1; m >= 0; --m) {
        auto [mu_minus, mu_plus] = s_minus_plus(C, mu);
        auto [pi_minus, pi_plus] = s_minus_plus(C, pi);
        mu = mu_minus;
        pi = pi_plus;
        c.m = set_union(c.m, mu);
        c.p = set_union(c.p, pi);
    }
    if (!is_cell(C, c))
        throw NotRelevant("atom of " + C.name(x) + " is not a cell");
    return c;
}

bool is_cell_direct(const ParityComplex& C, const Cell& c) {
    if (c.m.empty() || c.p.empty()) return false;
    if (!well_formed(C, c.m) || !well_formed(C, c.p)) return false;
    return moves(C, c.m, c.m, c.p) && moves(C, c.p, c.m, c.p);
}

bool is_cell_inductive(const ParityComplex& C, const Cell& c) {
    if (c.m.empty() || c.p.empty()) return false;
    int n = cell_dim(C, c);
    if (n == 0) return c.m == c.p && c.m.size() == 1;
    ElemSet mn = slice(C, c.m, n), pn = slice(C, c.p, n);
    if (mn != pn) return false;
    if (!well_formed(C, mn)) return false;
    if (!moves(C, mn, slice(C, c.m, n - 1), slice(C, c.p, n - 1))) return false;
    return is_cell_inductive(C, cell_source(C, c, n - 1)) &&
           is_cell_inductive(C, cell_target(C, c, n - 1));
}

bool is_cell(const ParityComplex& C, const Cell& c) {
    bool a = is_cell_direct(C, c);
    bool b = is_cell_inductive(C, c);
    if (a != b)
        throw LawViolation("cell characterizations disagree");
    return a;
}

Cell cell_source(const ParityComplex& C, const Cell& c, int n) {
    if (n < 0) throw RangeError("cell_source: n >= 0");
    Cell out;
    out.m = up_to(C, c.m, n);
    out.p = set_union(slice(C, c.m, n), up_to(C, c.p, n - 1));
    return out;
}

Cell cell_target(const ParityComplex& C, const Cell& c, int n) {
    if (n < 0) throw RangeError("cell_target: n >= 0");
    Cell out;
    out.m = set_union(up_to(C, c.m, n - 1), slice(C, c.p, n));
    out.p = up_to(C, c.p, n);
    return out;
}

bool composable(const ParityComplex& C, const Cell& a, const Cell& b, int n) {
    return cell_target(C, b, n) == cell_source(C, a, n);
}

Cell cell_compose(const ParityComplex& C, const Cell& a, const Cell& b, int n) {
    if (!composable(C, a, b, n))
        throw NotComposable("cell_compose: t_n of second argument != s_n of first");
    Cell out;
    out.m = set_union(b.m, strip_dim(C, a.m, n));
    out.p = set_union(strip_dim(C, b.p, n), a.p);
    return out;
}

// ---- morphisms ----

ElemSet ParityMorphism::apply(const ElemSet& S) const {
    ElemSet out;
    for (int x : S) out = set_union(out, images[static_cast<std::size_t>(x)]);
    return out;
}

void ParityMorphism::validate() const {
    if (!source || !target || images.size() != static_cast<std::size_t>(source->size()))
        throw LawViolation("parity morphism: images missing");
    for (int x = 0; x < source->size(); ++x) {
        const ElemSet& fx = images[static_cast<std::size_t>(x)];
        for (int y : fx)
            if (target->dim(y) != source->dim(x))
                throw LawViolation("parity morphism: dimension not respected at " +
                                   source->name(x));
        if (source->dim(x) == 0) {
            if (fx.size() != 1)
                throw LawViolation("parity morphism: not a singleton at 0-element " +
                                   source->name(x));
        } else {
            if (!well_formed(*target, fx))
                throw LawViolation("parity morphism: image not well formed at " +
                                   source->name(x));
            if (!moves(*target, fx, apply(source->minus(x)), apply(source->plus(x))))
                throw LawViolation("parity morphism: movement fails at " +
                                   source->name(x));
        }
    }
}

ParityMorphism identity_morphism(const ParityComplex& C) {
    ParityMorphism f;
    f.source = &C;
    f.target = &C;
    for (int x = 0; x < C.size(); ++x) f.images.push_back({x});
    return f;
}

ParityMorphism compose(const ParityMorphism& g, const ParityMorphism& f) {
    if (f.target != g.source)
        throw CompositionMismatch("parity morphism composition mismatch");
    ParityMorphism out;
    out.source = f.source;
    out.target = g.target;
    for (const ElemSet& fx : f.images) out.images.push_back(g.apply(fx));
    return out;
}

Cell apply_morphism(const ParityMorphism& f, const Cell& c) {
    return Cell{f.apply(c.m), f.apply(c.p)};
}

void StratifiedParityMorphism::validate() const {
    map.validate();
    if (!source || !target) throw LawViolation("stratified parity morphism: missing ends");
    for (int x = 0; x < source->base.size(); ++x)
        if (source->thin[static_cast<std::size_t>(x)])
            for (int y : map.images[static_cast<std::size_t>(x)])
                if (!target->thin[static_cast<std::size_t>(y)])
                    throw LawViolation("stratified parity morphism: thinness lost at " +
                                       source->base.name(x));
}

// ---- simplex models ----

namespace {

std::string vert_name(const std::vector<int>& v) {
    bool wide = !v.empty() && v.back() > 9;
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (wide && i) s += '.';
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace

int SimplexParity::element(const std::vector<int>& vertices) const {
    auto it = index.find(vertices);
    if (it == index.end()) throw IndexError("no such simplex element");
    return it->second;
}

SimplexParity simplex_parity(int n) {
    if (n < 0) throw RangeError("simplex_parity: n >= 0");
    SimplexParity S;
    for (int d = 0; d <= n; ++d)
        for (auto& f : all_face_operators(d, n)) {
            int id = S.complex.add_element(vert_name(f.values()), d);
            S.verts.push_back(f.values());
            S.index[f.values()] = id;
        }
    for (int x = 0; x < S.complex.size(); ++x) {
        const std::vector<int>& v = S.verts[static_cast<std::size_t>(x)];
        int d = static_cast<int>(v.size()) - 1;
        if (d == 0) continue;
        ElemSet minus, plus;
        for (int i = 0; i <= d; ++i) {
            std::vector<int> w = v;
            w.erase(w.begin() + i);
            int y = S.index.at(w);
            (i % 2 == 1 ? minus : plus).push_back(y);
        }
        S.complex.set_faces(x, std::move(minus), std::move(plus));
    }
    S.complex.validate();
    return S;
}

StratifiedParityComplex simplex_parity_thin(int n) {
    if (n < 1) throw RangeError("simplex_parity_thin: n >= 1");
    SimplexParity S = simplex_parity(n);
    StratifiedParityComplex out;
    out.base = S.complex;
    out.thin.assign(static_cast<std::size_t>(out.base.size()), 0);
    std::vector<int> top(static_cast<std::size_t>(n + 1));
    std::iota(top.begin(), top.end(), 0);
    out.thin[static_cast<std::size_t>(S.element(top))] = 1;
    out.validate();
    return out;
}

ParityMorphism operator_morphism(const SimplicialOperator& alpha,
                                 const SimplexParity& src, const SimplexParity& tgt) {
    ParityMorphism f;
    f.source = &src.complex;
    f.target = &tgt.complex;
    for (int x = 0; x < src.complex.size(); ++x) {
        std::vector<int> image;
        for (int v : src.verts[static_cast<std::size_t>(x)]) {
            int w = alpha(v);
            if (image.empty() || image.back() != w) image.push_back(w);
        }
        if (image.size() == src.verts[static_cast<std::size_t>(x)].size())
            f.images.push_back({tgt.element(image)});
        else
            f.images.push_back({});
    }
    f.validate();
    return f;
}

// ---- products ----

ParityProduct parity_product(const ParityComplex& C, const ParityComplex& D) {
    ParityProduct P;
    for (int r = 0; r <= C.top_dim() + D.top_dim(); ++r)
        for (int x = 0; x < C.size(); ++x) {
            if (C.dim(x) > r) continue;
            for (int y = 0; y < D.size(); ++y) {
                if (D.dim(y) != r - C.dim(x)) continue;
                int id = P.complex.add_element(C.name(x) + "|" + D.name(y), r);
                P.coords.emplace_back(x, y);
                P.index[{x, y}] = id;
            }
        }
    for (int e = 0; e < P.complex.size(); ++e) {
        auto [x, y] = P.coords[static_cast<std::size_t>(e)];
        int p = C.dim(x);
        if (P.complex.dim(e) == 0) continue;
        ElemSet minus, plus;
        for (int sign : {-1, +1}) {
            ElemSet& out = sign < 0 ? minus : plus;
            for (int xf : C.faces(x, sign)) out.push_back(P.index.at({xf, y}));
            int ysign = p % 2 == 0 ? sign : -sign;
            for (int yf : D.faces(y, ysign)) out.push_back(P.index.at({x, yf}));
        }
        P.complex.set_faces(e, std::move(minus), std::move(plus));
    }
    P.complex.validate();
    return P;
}

StratifiedParityComplex parity_product_thin(const StratifiedParityComplex& C,
                                            const StratifiedParityComplex& D) {
    ParityProduct P = parity_product(C.base, D.base);
    StratifiedParityComplex out;
    out.base = P.complex;
    out.thin.assign(static_cast<std::size_t>(out.base.size()), 0);
    for (int e = 0; e < out.base.size(); ++e) {
        auto [x, y] = P.coords[static_cast<std::size_t>(e)];
        if (C.thin[static_cast<std::size_t>(x)] || D.thin[static_cast<std::size_t>(y)])
            out.thin[static_cast<std::size_t>(e)] = 1;
    }
    out.validate();
    return out;
}

ParityMorphism morphism_product(const ParityMorphism& f, const ParityMorphism& g,
                                const ParityProduct& sourceP, const ParityProduct& targetP) {
    ParityMorphism out;
    out.source = &sourceP.complex;
    out.target = &targetP.complex;
    for (int e = 0; e < sourceP.complex.size(); ++e) {
        auto [x, y] = sourceP.coords[static_cast<std::size_t>(e)];
        ElemSet image;
        for (int fx : f.images[static_cast<std::size_t>(x)])
            for (int gy : g.images[static_cast<std::size_t>(y)])
                image.push_back(targetP.index.at({fx, gy}));
        std::sort(image.begin(), image.end());
        out.images.push_back(std::move(image));
    }
    out.validate();
    return out;
}

StratifiedParityComplex th_parity(const StratifiedParityComplex& C, int n) {
    StratifiedParityComplex out = C;
    for (int x = 0; x < out.base.size(); ++x)
        if (out.base.dim(x) > n) out.thin[static_cast<std::size_t>(x)] = 1;
    return out;
}

StratifiedParityComplex minimal_stratification(const ParityComplex& C) {
    StratifiedParityComplex out;
    out.base = C;
    out.thin.assign(static_cast<std::size_t>(C.size()), 0);
    return out;
}

// ---- suspension ----

Suspension suspension(int n, const ParityComplex& C) {
    if (n < 0) throw RangeError("suspension: n >= 0");
    Suspension S;
    for (int i = 0; i <= n; ++i) {
        int id = S.complex.add_element("p" + std::to_string(i), 0);
        S.coords.emplace_back(-1, i);
        S.index[{-1, i}] = id;
    }
    for (int r = 0; r <= C.top_dim(); ++r)
        for (int x : C.elements_of_dim(r))
            for (int i = 1; i <= n; ++i) {
                int id = S.complex.add_element(C.name(x) + ";" + std::to_string(i), r + 1);
                S.coords.emplace_back(x, i);
                S.index[{x, i}] = id;
            }
    for (int e = 0; e < S.complex.size(); ++e) {
        auto [x, i] = S.coords[static_cast<std::size_t>(e)];
        if (x < 0) continue;
        ElemSet minus, plus;
        if (C.dim(x) == 0) {
            minus.push_back(S.index.at({-1, i - 1}));
            plus.push_back(S.index.at({-1, i}));
        } else {
            for (int xf : C.minus(x)) minus.push_back(S.index.at({xf, i}));
            for (int xf : C.plus(x)) plus.push_back(S.index.at({xf, i}));
        }
        S.complex.set_faces(e, std::move(minus), std::move(plus));
    }
    S.complex.validate();
    return S;
}

ParityMorphism suspension_operator(const SimplicialOperator& alpha, const ParityComplex& C,
                                   const Suspension& Sn, const Suspension& Sm) {
    ParityMorphism f;
    f.source = &Sn.complex;
    f.target = &Sm.complex;
    (void)C;
    for (int e = 0; e < Sn.complex.size(); ++e) {
        auto [x, i] = Sn.coords[static_cast<std::size_t>(e)];
        ElemSet image;
        if (x < 0) {
            image.push_back(Sm.index.at({-1, alpha(i)}));
        } else {
            for (int j = alpha(i - 1) + 1; j <= alpha(i); ++j)
                image.push_back(Sm.index.at({x, j}));
        }
        std::sort(image.begin(), image.end());
        f.images.push_back(std::move(image));
    }
    f.validate();
    return f;
}

ParityMorphism suspension_morphism(int n, const ParityMorphism& f, const Suspension& SnC,
                                   const Suspension& SnD) {
    (void)n;
    ParityMorphism out;
    out.source = &SnC.complex;
    out.target = &SnD.complex;
    for (int e = 0; e < SnC.complex.size(); ++e) {
        auto [x, i] = SnC.coords[static_cast<std::size_t>(e)];
        ElemSet image;
        if (x < 0) {
            image.push_back(SnD.index.at({-1, i}));
        } else {
            for (int fx : f.images[static_cast<std::size_t>(x)])
                image.push_back(SnD.index.at({fx, i}));
        }
        std::sort(image.begin(), image.end());
        out.images.push_back(std::move(image));
    }
    out.validate();
    return out;
}

ParityMorphism diag_morphism(const SimplexParity& simplex, const ParityProduct& prod) {
    ParityMorphism f;
    f.source = &simplex.complex;
    f.target = &prod.complex;
    for (int x = 0; x < simplex.complex.size(); ++x) {
        const std::vector<int>& v = simplex.verts[static_cast<std::size_t>(x)];
        int r = static_cast<int>(v.size()) - 1;
        ElemSet image;
        for (int s = 0; s <= r; ++s) {
            std::vector<int> lo(v.begin(), v.begin() + s + 1);
            std::vector<int> hi(v.begin() + s, v.end());
            image.push_back(prod.index.at({simplex.element(lo), simplex.element(hi)}));
        }
        std::sort(image.begin(), image.end());
        f.images.push_back(std::move(image));
    }
    f.validate();
    return f;
}

StratifiedParityMorphism k_morphism(const StratifiedParityComplex& C,
                                    const SimplexParity& simplex,
                                    const ParityProduct& prod,
                                    const StratifiedParityComplex& prodThin,
                                    const Suspension& SmC,
                                    const StratifiedParityComplex& SmCThin) {
    StratifiedParityMorphism out;
    out.source = &prodThin;
    out.target = &SmCThin;
    out.map.source = &prod.complex;
    out.map.target = &SmC.complex;
    for (int e = 0; e < prod.complex.size(); ++e) {
        auto [x, w] = prod.coords[static_cast<std::size_t>(e)];
        const std::vector<int>& wv = simplex.verts[static_cast<std::size_t>(w)];
        int q = static_cast<int>(wv.size()) - 1;
        ElemSet image;
        if (q == 0 && C.base.dim(x) == 0) {
            image.push_back(SmC.index.at({-1, wv[0]}));
        } else if (q == 1) {
            for (int j = wv[0] + 1; j <= wv[1]; ++j)
                image.push_back(SmC.index.at({x, j}));
        }
        std::sort(image.begin(), image.end());
        out.map.images.push_back(std::move(image));
    }
    out.validate();
    return out;
}

// ---- PCX io ----

std::string write_pcx(const StratifiedParityComplex& C) {
    std::vector<int> order(static_cast<std::size_t>(C.base.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&C](int a, int b) {
        if (C.base.dim(a) != C.base.dim(b)) return C.base.dim(a) < C.base.dim(b);
        return C.base.name(a) < C.base.name(b);
    });
    std::ostringstream os;
    os << "pcx 1\n";
    for (int x : order)
        os << "elem " << C.base.name(x) << " dim=" << C.base.dim(x)
           << " thin=" << (C.thin[static_cast<std::size_t>(x)] ? 1 : 0) << '\n';
    auto write_faces = [&](const char* tag, int sign) {
        for (int x : order) {
            if (C.base.dim(x) == 0) continue;
            std::vector<std::string> names;
            for (int y : C.base.faces(x, sign)) names.push_back(C.base.name(y));
            std::sort(names.begin(), names.end());
            os << tag << ' ' << C.base.name(x) << " :";
            for (const std::string& s : names) os << ' ' << s;
            os << '\n';
        }
    };
    write_faces("minus", -1);
    write_faces("plus", +1);
    return os.str();
}

StratifiedParityComplex read_pcx(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&lineno](const std::string& msg) -> void {
        throw ParseError("pcx line " + std::to_string(lineno) + ": " + msg);
    };
    StratifiedParityComplex C;
    bool seen_header = false;
    struct FaceLine {
        int lineno;
        int sign;
        std::string owner;
        std::vector<std::string> faces;
    };
    std::vector<FaceLine> face_lines;
    std::vector<char> thin_flags;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "pcx") {
            std::string version;
            if (seen_header) fail("duplicate header");
            if (!(ls >> version) || version != "1") fail("expected header 'pcx 1'");
            seen_header = true;
        } else if (!seen_header) {
            fail("expected header 'pcx 1' first");
        } else if (word == "elem") {
            std::string name, dimword, thinword;
            if (!(ls >> name >> dimword >> thinword) || dimword.rfind("dim=", 0) != 0 ||
                thinword.rfind("thin=", 0) != 0)
                fail("expected 'elem <id> dim=<d> thin=<0|1>'");
            int d = std::stoi(dimword.substr(4));
            int t = std::stoi(thinword.substr(5));
            if (t != 0 && t != 1) fail("thin flag must be 0 or 1");
            C.base.add_element(name, d);
            thin_flags.push_back(static_cast<char>(t));
        } else if (word == "minus" || word == "plus") {
            FaceLine fl;
            fl.lineno = lineno;
            fl.sign = word == "minus" ? -1 : +1;
            std::string colon;
            if (!(ls >> fl.owner >> colon) || colon != ":")
                fail("expected '" + word + " <id> : <id> ...'");
            std::string f;
            while (ls >> f) fl.faces.push_back(f);
            face_lines.push_back(std::move(fl));
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    if (!seen_header) throw ParseError("pcx: missing header");
    std::map<int, std::pair<ElemSet, ElemSet>> faces;
    for (const FaceLine& fl : face_lines) {
        lineno = fl.lineno;
        auto owner = C.base.find(fl.owner);
        if (!owner) fail("unknown element '" + fl.owner + "'");
        ElemSet ids;
        for (const std::string& f : fl.faces) {
            auto y = C.base.find(f);
            if (!y) fail("unknown element '" + f + "'");
            ids.push_back(*y);
        }
        auto& slot = faces[*owner];
        (fl.sign < 0 ? slot.first : slot.second) = std::move(ids);
    }
    for (auto& [x, mp] : faces) C.base.set_faces(x, mp.first, mp.second);
    C.thin = std::move(thin_flags);
    try {
        C.validate();
    } catch (const std::exception& e) {
        throw ParseError(std::string("pcx: ") + e.what());
    }
    return C;
}

} // namespace strata
