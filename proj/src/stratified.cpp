#include "strata/stratified.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace strata {

namespace {

std::string face_name(const std::vector<int>& image) {
    bool wide = !image.empty() && image.back() > 9;
    std::string s;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (wide && i) s += '.';
        s += std::to_string(image[i]);
    }
    return s;
}

std::string degen_suffix(const SimplicialOperator& d) {
    if (d.is_identity()) return "";
    std::string s = "@";
    for (std::size_t i = 0; i < d.values().size(); ++i) {
        if (i) s += '.';
        s += std::to_string(d.values()[i]);
    }
    return s;
}

} // namespace

std::optional<int> StratifiedComplex::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> StratifiedComplex::simplices_of_dim(int d) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (dim(i) == d) out.push_back(i);
    return out;
}

NormalSimplex StratifiedComplex::act(int base, const SimplicialOperator& alpha) const {
    const Simplex& x = at(base);
    if (alpha.cod() != x.dim)
        throw ActionMismatch("act: operator codomain " + std::to_string(alpha.cod()) +
                             " != simplex dimension " + std::to_string(x.dim));
    EzFactorization ez = ez_factorize(alpha);
    if (ez.face.is_identity())
        return NormalSimplex{base, ez.degeneracy};
    // peel the largest index missing from the image of the face part
    int j = x.dim;
    while (ez.face.in_image(j)) --j;
    // face = delta_j . face'   with face' into [dim-1]
    std::vector<int> fv = ez.face.values();
    for (int& v : fv)
        if (v > j) --v;
    SimplicialOperator rest(ez.face.dom(), x.dim - 1, std::move(fv));
    const NormalSimplex& fj = x.faces[static_cast<std::size_t>(j)];
    NormalSimplex rec = act(fj.base, compose(fj.degen, rest));
    return NormalSimplex{rec.base, compose(rec.degen, ez.degeneracy)};
}

NormalSimplex StratifiedComplex::act(const NormalSimplex& s, const SimplicialOperator& alpha) const {
    return act(s.base, compose(s.degen, alpha));
}

std::vector<NormalSimplex> StratifiedComplex::normal_simplices_of_dim(int d) const {
    std::vector<NormalSimplex> out;
    for (int id = 0; id < size(); ++id) {
        int e = dim(id);
        if (e > d) continue;
        for (const SimplicialOperator& g : all_degeneracy_operators(d, e))
            out.push_back(NormalSimplex{id, g});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> StratifiedComplex::face_closure(int base) const {
    std::vector<int> stack{base};
    std::set<int> seen{base};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const NormalSimplex& f : at(x).faces)
            if (seen.insert(f.base).second) stack.push_back(f.base);
    }
    return std::vector<int>(seen.begin(), seen.end());
}

int StratifiedComplex::add_simplex(const std::string& name, int d, bool thin) {
    if (d < 0) throw RangeError("simplex dimension must be >= 0");
    if (thin && d == 0) throw LawViolation("0-simplices may not be thin: " + name);
    if (by_name_.count(name)) throw LawViolation("duplicate simplex name: " + name);
    int id = size();
    Simplex s;
    s.name = name;
    s.dim = d;
    s.thin = thin;
    s.faces.resize(d >= 1 ? static_cast<std::size_t>(d + 1) : 0);
    simplices_.push_back(std::move(s));
    by_name_[name] = id;
    dim_bound_ = std::max(dim_bound_, d);
    return id;
}

void StratifiedComplex::set_face(int id, int i, NormalSimplex f) {
    Simplex& x = simplices_[static_cast<std::size_t>(id)];
    if (x.dim < 1 || i < 0 || i > x.dim)
        throw IndexError("set_face: index out of range");
    x.faces[static_cast<std::size_t>(i)] = std::move(f);
}

void StratifiedComplex::set_thin(int id, bool t) {
    Simplex& x = simplices_[static_cast<std::size_t>(id)];
    if (t && x.dim == 0) throw LawViolation("0-simplices may not be thin");
    x.thin = t;
}

void StratifiedComplex::validate() const {
    for (int id = 0; id < size(); ++id) {
        const Simplex& x = at(id);
        if (x.dim > dim_bound_)
            throw LawViolation("simplex above dim_bound: " + x.name);
        for (int i = 0; i <= (x.dim >= 1 ? x.dim : -1); ++i) {
            const NormalSimplex& f = x.faces[static_cast<std::size_t>(i)];
            if (f.base < 0 || f.base >= size())
                throw LawViolation("missing face " + std::to_string(i) + " of " + x.name);
            if (!f.degen.is_degeneracy() || f.degen.dom() != x.dim - 1 ||
                f.degen.cod() != dim(f.base))
                throw LawViolation("face of " + x.name + " is not in EZ normal form");
        }
    }
    for (int id = 0; id < size(); ++id) {
        const Simplex& x = at(id);
        if (x.dim < 2) continue;
        for (int i = 1; i <= x.dim; ++i)
            for (int j = 0; j < i; ++j) {
                NormalSimplex a = act(x.faces[static_cast<std::size_t>(i)],
                                      face_op(x.dim - 1, j));
                NormalSimplex b = act(x.faces[static_cast<std::size_t>(j)],
                                      face_op(x.dim - 1, i - 1));
                if (a != b)
                    throw LawViolation("simplicial identity fails at " + x.name + " (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
}

// ---- standard objects ----

namespace {

// delta(n) restricted to the given set of face operators (must be face-closed)
StratifiedComplex standard_on(const std::vector<SimplicialOperator>& kept) {
    StratifiedComplex X;
    X.set_dim_bound(0);
    std::map<std::vector<int>, int> ids;
    for (const SimplicialOperator& f : kept) {
        int id = X.add_simplex(face_name(f.values()), f.dom(), false);
        ids[f.values()] = id;
    }
    for (const SimplicialOperator& f : kept) {
        if (f.dom() < 1) continue;
        int id = ids.at(f.values());
        for (int i = 0; i <= f.dom(); ++i) {
            SimplicialOperator g = compose(f, face_op(f.dom(), i));
            auto it = ids.find(g.values());
            if (it == ids.end())
                throw LawViolation("standard_on: face set not closed");
            X.set_face(id, i, NormalSimplex{it->second, SimplicialOperator::identity(g.dom())});
        }
    }
    X.validate();
    return X;
}

std::vector<SimplicialOperator> all_faces_into(int n) {
    std::vector<SimplicialOperator> out;
    for (int d = 0; d <= n; ++d)
        for (auto& f : all_face_operators(d, n)) out.push_back(f);
    return out;
}

bool k_divided(const SimplicialOperator& f, int k) {
    return f.in_image(k - 1) && f.in_image(k) && f.in_image(k + 1);
}

void check_adm_range(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw RangeError("admissible simplex needs n >= 2, 1 <= k <= n-1");
}

} // namespace

StratifiedComplex delta(int n) {
    if (n < 0) throw RangeError("delta: n >= 0");
    return standard_on(all_faces_into(n));
}

StratifiedComplex delta_t(int n) {
    if (n < 1) throw RangeError("delta_t: n >= 1");
    StratifiedComplex X = delta(n);
    X.set_thin(*X.find(face_name(SimplicialOperator::identity(n).values())), true);
    return X;
}

StratifiedComplex boundary(int n) {
    if (n < 1) throw RangeError("boundary: n >= 1");
    std::vector<SimplicialOperator> kept;
    for (auto& f : all_faces_into(n))
        if (f.dom() < n) kept.push_back(f);
    return standard_on(kept);
}

StratifiedComplex horn(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw RangeError("horn: need 0 <= k <= n");
    std::vector<SimplicialOperator> kept;
    for (auto& f : all_faces_into(n)) {
        if (f.dom() == n) continue;
        if (f.dom() == n - 1 && !f.in_image(k)) continue;
        kept.push_back(f);
    }
    return standard_on(kept);
}

StratifiedComplex adm(int n, int k) {
    check_adm_range(n, k);
    StratifiedComplex X = delta(n);
    for (auto& f : all_faces_into(n))
        if (f.dom() >= 1 && k_divided(f, k))
            X.set_thin(*X.find(face_name(f.values())), true);
    return X;
}

StratifiedComplex adm_horn(int n, int k) {
    check_adm_range(n, k);
    StratifiedComplex X = horn(n, k);
    for (auto& f : all_faces_into(n)) {
        if (f.dom() < 1 || !k_divided(f, k)) continue;
        if (auto id = X.find(face_name(f.values())))
            X.set_thin(*id, true);
    }
    return X;
}

StratifiedComplex adm_prime(int n, int k) {
    check_adm_range(n, k);
    StratifiedComplex X = adm(n, k);
    X.set_thin(*X.find(face_name(face_op(n, k - 1).values())), true);
    X.set_thin(*X.find(face_name(face_op(n, k + 1).values())), true);
    return X;
}

StratifiedComplex adm_dprime(int n, int k) {
    StratifiedComplex X = adm_prime(n, k);
    X.set_thin(*X.find(face_name(face_op(n, k).values())), true);
    return X;
}

// ---- dual, th, sup, pi0 ----

StratifiedComplex dual(const StratifiedComplex& X) {
    StratifiedComplex D;
    D.set_dim_bound(X.dim_bound());
    for (int id = 0; id < X.size(); ++id)
        D.add_simplex(X.name(id), X.dim(id), X.thin(id));
    for (int id = 0; id < X.size(); ++id) {
        int d = X.dim(id);
        for (int i = 0; i <= (d >= 1 ? d : -1); ++i) {
            const NormalSimplex& f = X.at(id).faces[static_cast<std::size_t>(d - i)];
            D.set_face(id, i, NormalSimplex{f.base, dual(f.degen)});
        }
    }
    D.validate();
    return D;
}

StratifiedComplex th(const StratifiedComplex& X, int n) {
    StratifiedComplex T = X;
    for (int id = 0; id < T.size(); ++id)
        if (T.dim(id) > n) T.set_thin(id, true);
    return T;
}

namespace {

StratifiedComplex subcomplex(const StratifiedComplex& X, const std::vector<int>& keep) {
    std::vector<int> remap(static_cast<std::size_t>(X.size()), -1);
    StratifiedComplex S;
    int bound = 0;
    for (int id : keep) {
        remap[static_cast<std::size_t>(id)] = S.add_simplex(X.name(id), X.dim(id), X.thin(id));
        bound = std::max(bound, X.dim(id));
    }
    S.set_dim_bound(bound);
    for (int id : keep) {
        int d = X.dim(id);
        for (int i = 0; i <= (d >= 1 ? d : -1); ++i) {
            const NormalSimplex& f = X.at(id).faces[static_cast<std::size_t>(i)];
            int nb = remap[static_cast<std::size_t>(f.base)];
            if (nb < 0) throw LawViolation("subcomplex: kept set is not face-closed");
            S.set_face(remap[static_cast<std::size_t>(id)], i, NormalSimplex{nb, f.degen});
        }
    }
    S.validate();
    return S;
}

} // namespace

StratifiedComplex sup(const StratifiedComplex& X, int n) {
    std::vector<int> keep;
    for (int id = 0; id < X.size(); ++id) {
        bool ok = true;
        for (int z : X.face_closure(id))
            if (X.dim(z) > n && !X.thin(z)) { ok = false; break; }
        if (ok) keep.push_back(id);
    }
    return subcomplex(X, keep);
}

std::vector<int> pi0(const StratifiedComplex& X) {
    std::vector<int> parent(static_cast<std::size_t>(X.size()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (int id = 0; id < X.size(); ++id) {
        if (X.dim(id) != 1) continue;
        int v0 = X.act(id, vertex_op(1, 0)).base;
        int v1 = X.act(id, vertex_op(1, 1)).base;
        int a = root(v0), b = root(v1);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> out;
    for (int id = 0; id < X.size(); ++id)
        if (X.dim(id) == 0) out.push_back(root(id));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- product ----

NormalSimplex ProductComplex::normalize(const NormalSimplex& sx, const NormalSimplex& sy) const {
    NormalSimplex a = sx, b = sy;
    if (a.dim() != b.dim()) throw ActionMismatch("product normalize: dimension mismatch");
    SimplicialOperator g = SimplicialOperator::identity(a.dim());
    bool stripped = true;
    while (stripped) {
        stripped = false;
        int d = a.dim();
        for (int k = 0; k + 1 <= d; ++k) {
            if (a.degen.collapses_at(k) && b.degen.collapses_at(k)) {
                a.degen = compose(a.degen, face_op(d, k));
                b.degen = compose(b.degen, face_op(d, k));
                g = compose(degeneracy_op(d - 1, k), g);
                stripped = true;
                break;
            }
        }
    }
    auto it = index.find({a, b});
    if (it == index.end()) throw LawViolation("product normalize: pair not registered");
    return NormalSimplex{it->second, g};
}

ProductComplex product(const StratifiedComplex& X, const StratifiedComplex& Y) {
    ProductComplex P;
    int bound = X.dim_bound() + Y.dim_bound();
    P.complex.set_dim_bound(bound);
    for (int r = 0; r <= bound; ++r) {
        for (int x = 0; x < X.size(); ++x) {
            int d1 = X.dim(x);
            if (d1 > r) continue;
            for (int y = 0; y < Y.size(); ++y) {
                int d2 = Y.dim(y);
                if (d2 > r || (r - d1) + (r - d2) > r) continue;
                for (const SimplicialOperator& b1 : all_degeneracy_operators(r, d1)) {
                    for (const SimplicialOperator& b2 : all_degeneracy_operators(r, d2)) {
                        bool degenerate = false;
                        for (int k = 0; k + 1 <= r && !degenerate; ++k)
                            if (b1.collapses_at(k) && b2.collapses_at(k)) degenerate = true;
                        if (degenerate) continue;
                        NormalSimplex sx{x, b1}, sy{y, b2};
                        bool thin = r >= 1 && X.thin_simplex(sx) && Y.thin_simplex(sy);
                        int id = P.complex.add_simplex(
                            X.name(x) + degen_suffix(b1) + "|" + Y.name(y) + degen_suffix(b2),
                            r, thin);
                        P.coords.emplace_back(sx, sy);
                        P.index[{sx, sy}] = id;
                    }
                }
            }
        }
    }
    for (int id = 0; id < P.complex.size(); ++id) {
        int r = P.complex.dim(id);
        if (r < 1) continue;
        const auto& [sx, sy] = P.coords[static_cast<std::size_t>(id)];
        for (int i = 0; i <= r; ++i) {
            SimplicialOperator di = face_op(r, i);
            P.complex.set_face(id, i, P.normalize(X.act(sx, di), Y.act(sy, di)));
        }
    }
    P.complex.validate();
    return P;
}

// ---- decalage ----

namespace {

// Dec-normal form of an X-normal simplex (strip all collapses except a final
// one): returns the Dec base as an X-normal simplex together with the
// accumulated Dec degeneracy.
std::pair<NormalSimplex, SimplicialOperator> dec_strip(NormalSimplex s) {
    SimplicialOperator g = SimplicialOperator::identity(s.dim() - 1);
    bool stripped = true;
    while (stripped) {
        stripped = false;
        int d = s.dim();
        for (int k = 0; k + 2 <= d; ++k) {
            if (s.degen.collapses_at(k)) {
                s.degen = compose(s.degen, face_op(d, k));
                g = compose(degeneracy_op(d - 2, k), g);
                stripped = true;
                break;
            }
        }
    }
    return {s, g};
}

} // namespace

Decalage decalage(const StratifiedComplex& X) {
    Decalage D;
    std::map<NormalSimplex, int> ids;
    // level m carries X-simplices of dimension m+1; bases are the X-normal
    // simplices whose degeneracy collapses nothing below the top pair
    for (int m = 0; m <= X.dim_bound(); ++m) {
        for (int x = 0; x < X.size(); ++x) {
            if (X.dim(x) == m + 1) {
                NormalSimplex u{x, SimplicialOperator::identity(m + 1)};
                int id = D.complex.add_simplex("d:" + X.name(x), m, false);
                D.underlying.push_back(u);
                ids[u] = id;
            }
            if (X.dim(x) == m) {
                NormalSimplex u{x, degeneracy_op(m, m)};
                int id = D.complex.add_simplex("s:" + X.name(x), m, false);
                D.underlying.push_back(u);
                ids[u] = id;
            }
        }
    }
    D.complex.set_dim_bound(X.dim_bound());
    for (int id = 0; id < D.complex.size(); ++id) {
        int m = D.complex.dim(id);
        if (m < 1) continue;
        const NormalSimplex& u = D.underlying[static_cast<std::size_t>(id)];
        for (int i = 0; i <= m; ++i) {
            NormalSimplex f = X.act(u, face_op(m + 1, i));
            auto [b, g] = dec_strip(f);
            D.complex.set_face(id, i, NormalSimplex{ids.at(b), g});
        }
    }
    D.complex.validate();
    return D;
}

StratifiedMap dec_counit(const StratifiedComplex& X, const Decalage& D) {
    StratifiedMap f;
    f.source = &D.complex;
    f.target = &X;
    for (int id = 0; id < D.complex.size(); ++id) {
        const NormalSimplex& u = D.underlying[static_cast<std::size_t>(id)];
        int m = D.complex.dim(id);
        f.images.push_back(X.act(u, face_op(m + 1, m + 1)));
    }
    f.validate();
    return f;
}

// ---- maps ----

NormalSimplex StratifiedMap::apply(const NormalSimplex& s) const {
    const NormalSimplex& im = images[static_cast<std::size_t>(s.base)];
    return target->act(im.base, compose(im.degen, s.degen));
}

void StratifiedMap::validate() const {
    if (!source || !target || static_cast<int>(images.size()) != source->size())
        throw LawViolation("stratified map: images missing");
    for (int id = 0; id < source->size(); ++id) {
        const NormalSimplex& im = images[static_cast<std::size_t>(id)];
        if (im.dim() != source->dim(id))
            throw LawViolation("stratified map: dimension not preserved at " +
                               source->name(id));
        int d = source->dim(id);
        for (int i = 0; i <= (d >= 1 ? d : -1); ++i) {
            NormalSimplex lhs = apply(source->at(id).faces[static_cast<std::size_t>(i)]);
            NormalSimplex rhs = target->act(im, face_op(d, i));
            if (lhs != rhs)
                throw LawViolation("stratified map: face action not preserved at " +
                                   source->name(id));
        }
        if (source->thin(id) && !target->thin_simplex(im))
            throw LawViolation("stratified map: thinness not preserved at " +
                               source->name(id));
    }
}

MapClassification classify_map(const StratifiedMap& f) {
    MapClassification c;
    c.regular = true;
    for (int id = 0; id < f.source->size(); ++id)
        if (f.target->thin_simplex(f.images[static_cast<std::size_t>(id)]) !=
            f.source->thin(id)) {
            c.regular = false;
            break;
        }
    int bound = std::max(f.source->dim_bound(), f.target->dim_bound());
    c.entire = true;
    c.inclusion = true;
    for (int m = 0; m <= bound; ++m) {
        std::set<NormalSimplex> image;
        bool injective = true;
        for (const NormalSimplex& s : f.source->normal_simplices_of_dim(m))
            if (!image.insert(f.apply(s)).second) injective = false;
        if (!injective) c.inclusion = false;
        for (const NormalSimplex& t : f.target->normal_simplices_of_dim(m))
            if (!image.count(t)) { c.entire = false; break; }
        if (!c.entire && !c.inclusion) break;
    }
    return c;
}

bool decalage_reconstructs_level(const StratifiedComplex& X, int n) {
    std::vector<NormalSimplex> verts = X.normal_simplices_of_dim(n + 1);
    std::map<NormalSimplex, int> vid;
    for (std::size_t i = 0; i < verts.size(); ++i) vid[verts[i]] = static_cast<int>(i);
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a)
            a = parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        return a;
    };
    for (const NormalSimplex& e : X.normal_simplices_of_dim(n + 2)) {
        int a = root(vid.at(X.act(e, face_op(n + 2, n + 1))));
        int b = root(vid.at(X.act(e, face_op(n + 2, n + 2))));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    // the top face should induce a bijection from components onto X_n
    std::map<int, NormalSimplex> image;
    std::set<NormalSimplex> hit;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        NormalSimplex down = X.act(verts[i], face_op(n + 1, n + 1));
        int r = root(static_cast<int>(i));
        auto it = image.find(r);
        if (it == image.end())
            image[r] = down;
        else if (it->second != down)
            return false;  // not constant on a component
        hit.insert(down);
    }
    std::vector<NormalSimplex> level = X.normal_simplices_of_dim(n);
    if (image.size() != level.size()) return false;
    for (const NormalSimplex& s : level)
        if (!hit.count(s)) return false;
    return true;
}

// ---- SPC io ----

std::string write_spc(const StratifiedComplex& X) {
    std::vector<int> order(static_cast<std::size_t>(X.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&X](int a, int b) {
        if (X.dim(a) != X.dim(b)) return X.dim(a) < X.dim(b);
        return X.name(a) < X.name(b);
    });
    std::ostringstream os;
    os << "spc 1 dim=" << X.dim_bound() << '\n';
    for (int id : order)
        os << "simplex " << X.name(id) << " dim=" << X.dim(id)
           << " thin=" << (X.thin(id) ? 1 : 0) << '\n';
    std::vector<int> forder = order;
    std::sort(forder.begin(), forder.end(),
              [&X](int a, int b) { return X.name(a) < X.name(b); });
    for (int id : forder) {
        int d = X.dim(id);
        for (int i = 0; i <= (d >= 1 ? d : -1); ++i) {
            const NormalSimplex& f = X.at(id).faces[static_cast<std::size_t>(i)];
            os << "face " << X.name(id) << ' ' << i << " = " << X.name(f.base);
            if (!f.degen.is_identity()) {
                os << " deg:";
                for (int v : f.degen.values()) os << ' ' << v;
            }
            os << '\n';
        }
    }
    return os.str();
}

StratifiedComplex read_spc(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&lineno](const std::string& msg) -> void {
        throw ParseError("spc line " + std::to_string(lineno) + ": " + msg);
    };
    StratifiedComplex X;
    int declared_bound = -1;
    struct FaceLine {
        int lineno;
        std::string owner, base;
        int i;
        std::vector<int> deg;
        bool has_deg;
    };
    std::vector<FaceLine> face_lines;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "spc") {
            std::string version, dimword;
            if (declared_bound >= 0) fail("duplicate header");
            if (!(ls >> version >> dimword) || version != "1" ||
                dimword.rfind("dim=", 0) != 0)
                fail("expected header 'spc 1 dim=<d>'");
            declared_bound = std::stoi(dimword.substr(4));
        } else if (declared_bound < 0) {
            fail("expected header 'spc 1 dim=<d>' first");
        } else if (word == "simplex") {
            std::string name, dimword, thinword;
            if (!(ls >> name >> dimword >> thinword) || dimword.rfind("dim=", 0) != 0 ||
                thinword.rfind("thin=", 0) != 0)
                fail("expected 'simplex <id> dim=<d> thin=<0|1>'");
            int d = std::stoi(dimword.substr(4));
            int t = std::stoi(thinword.substr(5));
            if (t != 0 && t != 1) fail("thin flag must be 0 or 1");
            try {
                X.add_simplex(name, d, t == 1);
            } catch (const std::exception& e) {
                fail(e.what());
            }
        } else if (word == "face") {
            FaceLine fl;
            fl.lineno = lineno;
            std::string eq, rest;
            if (!(ls >> fl.owner >> fl.i >> eq >> fl.base) || eq != "=")
                fail("expected 'face <id> <i> = <id'> [deg: ...]'");
            fl.has_deg = false;
            std::string degword;
            if (ls >> degword) {
                if (degword != "deg:") fail("expected 'deg:'");
                fl.has_deg = true;
                int v;
                while (ls >> v) fl.deg.push_back(v);
            }
            face_lines.push_back(std::move(fl));
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    if (declared_bound < 0) throw ParseError("spc: missing header");
    for (const FaceLine& fl : face_lines) {
        lineno = fl.lineno;
        auto owner = X.find(fl.owner);
        auto base = X.find(fl.base);
        if (!owner) fail("unknown simplex '" + fl.owner + "'");
        if (!base) fail("unknown simplex '" + fl.base + "'");
        int d = X.dim(*owner);
        if (d < 1 || fl.i < 0 || fl.i > d) fail("face index out of range");
        SimplicialOperator degen = SimplicialOperator::identity(d - 1);
        if (fl.has_deg) {
            try {
                degen = SimplicialOperator(d - 1, X.dim(*base), fl.deg);
            } catch (const std::exception& e) {
                fail(e.what());
            }
            if (!degen.is_degeneracy()) fail("deg clause is not a degeneracy operator");
        } else if (X.dim(*base) != d - 1) {
            fail("identity face must target a simplex of one dimension lower");
        }
        X.set_face(*owner, fl.i, NormalSimplex{*base, degen});
    }
    X.set_dim_bound(std::max(declared_bound, X.dim_bound()));
    try {
        X.validate();
    } catch (const std::exception& e) {
        throw ParseError(std::string("spc: ") + e.what());
    }
    return X;
}

} // namespace strata
