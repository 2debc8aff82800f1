#include "strata/gray_tensor.hpp"
#include "strata/gray_tensor_detail.hpp"

#include <algorithm>
#include <map>

#include "strata/complicial.hpp"

namespace strata {

bool cleaves(const StratifiedComplex& X, const StratifiedComplex& Y,
             const NormalSimplex& sx, const NormalSimplex& sy, int p, int q) {
    if (sx.dim() != sy.dim() || sx.dim() != p + q || p < 0 || q < 0)
        throw ActionMismatch("cleaves: partition does not match dimension");
    if (X.thin_simplex(X.act(sx, part_inj1(p, q)))) return true;
    return Y.thin_simplex(Y.act(sy, part_inj2(p, q)));
}

ProductComplex tensor(const StratifiedComplex& X, const StratifiedComplex& Y) {
    ProductComplex P = product(X, Y);
    for (int id = 0; id < P.complex.size(); ++id) {
        int r = P.complex.dim(id);
        if (r < 1) continue;
        const auto& [sx, sy] = P.coords[static_cast<std::size_t>(id)];
        bool thin = true;
        for (int p = 0; p <= r && thin; ++p)
            thin = cleaves(X, Y, sx, sy, p, r - p);
        P.complex.set_thin(id, thin);
    }
    return P;
}

std::string TensorSimplexClass::str() const {
    switch (tag) {
        case Degenerate: return "degenerate";
        case Mediator: return "mediator(" + std::to_string(k) + ")";
        case CrushedCylinder:
            return "crushed-cylinder(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Cylinder:
            return "cylinder(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Other: return "other";
    }
    return "other";
}

TensorSimplexClass classify(const StratifiedComplex& X, const StratifiedComplex& Y,
                            const NormalSimplex& sx, const NormalSimplex& sy) {
    if (sx.dim() != sy.dim())
        throw ActionMismatch("classify: coordinate dimensions differ");
    int r = sx.dim();
    TensorSimplexClass c;
    for (int k = 0; k + 1 <= r; ++k)
        if (sx.degen.collapses_at(k) && sy.degen.collapses_at(k)) {
            c.tag = TensorSimplexClass::Degenerate;
            c.k = k;
            return c;
        }
    for (int k = 1; k <= r - 1; ++k)
        if (sx.degen.collapses_at(k - 1) && sy.degen.collapses_at(k)) {
            c.tag = TensorSimplexClass::Mediator;
            c.k = k;
            return c;
        }
    for (int p = 0; p <= r && r >= 1; ++p) {
        int q = r - p;
        SimplicialOperator cx = compose(sx.degen, compose(part_inj1(p, q), part_proj1(p, q)));
        SimplicialOperator cy = compose(sy.degen, compose(part_inj2(p, q), part_proj2(p, q)));
        if (cx == sx.degen && cy == sy.degen) {
            c.p = p;
            c.q = q;
            c.tag = cleaves(X, Y, sx, sy, p, q) ? TensorSimplexClass::CrushedCylinder
                                                : TensorSimplexClass::Cylinder;
            return c;
        }
    }
    c.tag = TensorSimplexClass::Other;
    return c;
}

ProductComplex pretensor(const StratifiedComplex& X, const StratifiedComplex& Y) {
    ProductComplex P = product(X, Y);
    for (int id = 0; id < P.complex.size(); ++id) {
        int r = P.complex.dim(id);
        if (r < 1) continue;
        const auto& [sx, sy] = P.coords[static_cast<std::size_t>(id)];
        TensorSimplexClass c = classify(X, Y, sx, sy);
        P.complex.set_thin(id, c.tag == TensorSimplexClass::Mediator ||
                                   c.tag == TensorSimplexClass::CrushedCylinder);
    }
    return P;
}

StratifiedMap tensor_map(const StratifiedMap& f, const StratifiedMap& g,
                         const ProductComplex& src, const ProductComplex& dst) {
    StratifiedMap out;
    out.source = &src.complex;
    out.target = &dst.complex;
    for (int id = 0; id < src.complex.size(); ++id) {
        const auto& [sx, sy] = src.coords[static_cast<std::size_t>(id)];
        out.images.push_back(dst.normalize(f.apply(sx), g.apply(sy)));
    }
    out.validate();
    return out;
}

namespace {

void require_shared_complex(const StratifiedComplex& X, const StratifiedComplex& Y) {
    if (X.size() != Y.size())
        throw LawViolation("witness chain: stratifications on different complexes");
    for (int id = 0; id < X.size(); ++id) {
        if (X.dim(id) != Y.dim(id) || X.name(id) != Y.name(id) ||
            X.at(id).faces != Y.at(id).faces)
            throw LawViolation("witness chain: stratifications on different complexes");
        if (X.thin(id) && !Y.thin(id))
            throw LawViolation("witness chain: tX is not a subset of tY");
    }
}

bool thin_under(const std::vector<char>& thin, const NormalSimplex& s) {
    return s.is_degenerate() || thin[static_cast<std::size_t>(s.base)];
}

} // namespace

WitnessChainResult t_extension_witness_chain_ranked(const StratifiedComplex& X,
                                                    const StratifiedComplex& Y,
                                                    const WitnessRank& rank,
                                                    const TargetKey& key) {
    require_shared_complex(X, Y);
    std::vector<char> thin(static_cast<std::size_t>(X.size()));
    for (int id = 0; id < X.size(); ++id) thin[static_cast<std::size_t>(id)] = X.thin(id);

    // candidate witnesses per target: non-degenerate w with w.delta_k = target
    std::map<int, std::vector<std::pair<int, int>>> candidates;
    for (int w = 0; w < X.size(); ++w) {
        int r = X.dim(w);
        for (int k = 1; k <= r - 1; ++k) {
            const NormalSimplex& f = X.at(w).faces[static_cast<std::size_t>(k)];
            if (!f.is_degenerate()) candidates[f.base].emplace_back(w, k);
        }
    }
    std::vector<int> targets;
    for (int id = 0; id < X.size(); ++id)
        if (Y.thin(id) && !X.thin(id)) targets.push_back(id);
    std::sort(targets.begin(), targets.end(), [&](int a, int b) {
        long long ka = key ? key(a) : 0, kb = key ? key(b) : 0;
        if (ka != kb) return ka < kb;
        if (X.dim(a) != X.dim(b)) return X.dim(a) < X.dim(b);
        return a < b;
    });

    WitnessChainResult out;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int x : targets) {
            if (thin[static_cast<std::size_t>(x)]) continue;
            auto it = candidates.find(x);
            if (it == candidates.end()) continue;
            std::vector<std::pair<int, int>> cs = it->second;
            std::stable_sort(cs.begin(), cs.end(),
                             [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                                 long long ra = rank ? rank(x, a.first, a.second) : 0;
                                 long long rb = rank ? rank(x, b.first, b.second) : 0;
                                 if (ra != rb) return ra < rb;
                                 return a < b;
                             });
            for (auto [w, k] : cs) {
                int d = X.dim(w);
                NormalSimplex ws{w, SimplicialOperator::identity(d)};
                if (!thin_under(thin, X.act(ws, face_op(d, k - 1)))) continue;
                if (!thin_under(thin, X.act(ws, face_op(d, k + 1)))) continue;
                if (!is_k_admissible_under(X, thin, ws, k)) continue;
                thin[static_cast<std::size_t>(x)] = true;
                out.chain.push_back(WitnessStep{x, w, k});
                progress = true;
                break;
            }
        }
    }
    for (int x : targets)
        if (!thin[static_cast<std::size_t>(x)]) out.unreached.push_back(x);
    out.success = out.unreached.empty();
    return out;
}

WitnessChainResult t_extension_witness_chain(const StratifiedComplex& X,
                                             const StratifiedComplex& Y) {
    return t_extension_witness_chain_ranked(X, Y, nullptr, nullptr);
}

long long phi_potential(const SimplicialOperator& a, const SimplicialOperator& b) {
    if (a.dom() != b.dom())
        throw ActionMismatch("phi_potential: dimensions differ");
    long long phi = 0;
    for (int i = 0; i <= a.dom(); ++i) phi += a(i) + (b.cod() - b(i));
    return phi;
}

WitnessChainResult pretensor_witness_chain(const StratifiedComplex& X,
                                           const StratifiedComplex& Y,
                                           const ProductComplex& pre,
                                           const ProductComplex& tens) {
    // Phi of a product simplex via its coordinate degeneracy operators acting
    // on the coordinates viewed as maps into the factors' vertex posets; in
    // the standard-simplex case these are exactly the alpha, beta operators.
    auto phi_of = [&pre](int id) {
        const auto& [sx, sy] = pre.coords[static_cast<std::size_t>(id)];
        long long phi = 0;
        for (int i = 0; i <= sx.dim(); ++i)
            phi += sx.degen(i) + (sy.degen.cod() - sy.degen(i));
        return phi;
    };
    auto rank = [&pre, &X, &Y](int, int w, int k) -> long long {
        const auto& [wx, wy] = pre.coords[static_cast<std::size_t>(w)];
        TensorSimplexClass c = classify(X, Y, wx, wy);
        bool mediator_at_k = c.tag == TensorSimplexClass::Mediator && c.k == k;
        return mediator_at_k ? 0 : 1;
    };
    return t_extension_witness_chain_ranked(pre.complex, tens.complex, rank, phi_of);
}

ThTensorReport th_tensor_laws_check(const StratifiedComplex& X,
                                    const StratifiedComplex& Y, int n, int m) {
    ThTensorReport rep;
    ProductComplex base = tensor(X, Y);
    ProductComplex mid = tensor(th(X, n), th(Y, m));
    StratifiedComplex lhs = th(base.complex, n + m);
    StratifiedComplex rhs = th(base.complex, std::min(n, m));
    if (mid.complex.size() != base.complex.size())
        throw LawViolation("th_tensor_laws_check: product tables inconsistent");
    rep.first_inclusion = true;
    rep.second_inclusion = true;
    bool zero_eq = true;
    for (int id = 0; id < base.complex.size(); ++id) {
        if (mid.complex.name(id) != base.complex.name(id))
            throw LawViolation("th_tensor_laws_check: product tables inconsistent");
        if (lhs.thin(id) && !mid.complex.thin(id)) rep.first_inclusion = false;
        if (mid.complex.thin(id) && !rhs.thin(id)) rep.second_inclusion = false;
        if (lhs.thin(id) != mid.complex.thin(id)) zero_eq = false;
    }
    if (n == 0 && m == 0) {
        rep.zero_equality_checked = true;
        rep.zero_equality = zero_eq;
    }
    return rep;
}

} // namespace strata
