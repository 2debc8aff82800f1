#include <doctest.h>

#include <algorithm>
#include <set>

#include "iso.hpp"
#include "strata/complicial.hpp"
#include "strata/gray_tensor.hpp"
#include "strata/gray_tensor_detail.hpp"

using namespace strata;

namespace {

// Oracle for thinness in a tensor of standard simplices: some u <= v with
// the first coordinate degenerate at u and the second degenerate at v
// (corollary to the degenerate-ordinate lemma).
bool uv_thin(const SimplicialOperator& a, const SimplicialOperator& b) {
    for (int u = 0; u + 1 <= a.dom(); ++u)
        for (int v = u; v + 1 <= b.dom(); ++v)
            if (a.collapses_at(u) && b.collapses_at(v)) return true;
    return false;
}

// Total coordinate operators of a product simplex over standard simplices.
std::pair<SimplicialOperator, SimplicialOperator> coords_ops(
    const StratifiedComplex& N, const StratifiedComplex& M, const ProductComplex& P,
    int id) {
    const auto& [sx, sy] = P.coords[static_cast<std::size_t>(id)];
    auto face_of = [](const StratifiedComplex& X, int base) {
        int d = X.dim(base);
        std::vector<int> v(static_cast<std::size_t>(d + 1));
        for (int i = 0; i <= d; ++i)
            v[static_cast<std::size_t>(i)] = X.act(base, vertex_op(d, i)).base;
        return SimplicialOperator(d, X.dim_bound(), std::move(v));
    };
    return {compose(face_of(N, sx.base), sx.degen), compose(face_of(M, sy.base), sy.degen)};
}

} // namespace

TEST_CASE("cleaving basics") {
    StratifiedComplex X = delta(1), Y = delta(1);
    ProductComplex P = product(X, Y);
    // the shuffle <[0,0,1];[0,1,1]> is a mediator: (1,1) cleaves it
    NormalSimplex sx{*X.find("01"), SimplicialOperator(2, 1, {0, 0, 1})};
    NormalSimplex sy{*Y.find("01"), SimplicialOperator(2, 1, {0, 1, 1})};
    CHECK(cleaves(X, Y, sx, sy, 1, 1));
    // the other shuffle is cleaved by no partition at the interior
    NormalSimplex tx{*X.find("01"), SimplicialOperator(2, 1, {0, 1, 1})};
    NormalSimplex ty{*Y.find("01"), SimplicialOperator(2, 1, {0, 0, 1})};
    CHECK_FALSE(cleaves(X, Y, tx, ty, 1, 1));
    // (r,0) partitions reduce to thinness of the first coordinate: the
    // second restricts to a vertex, never thin
    NormalSimplex ex{*X.find("01"), SimplicialOperator::identity(1)};
    NormalSimplex vy{*Y.find("0"), degeneracy_op(0, 0)};
    CHECK_FALSE(cleaves(X, Y, ex, vy, 1, 0));
    StratifiedComplex Xt = delta_t(1);
    NormalSimplex ext{*Xt.find("01"), SimplicialOperator::identity(1)};
    CHECK(cleaves(Xt, Y, ext, vy, 1, 0));
    CHECK_THROWS_AS(cleaves(X, Y, tx, ty, 1, 0), ActionMismatch);
}

TEST_CASE("pairs with a common degeneracy index below a later one are thin") {
    // lemma: x degenerate at u, y degenerate at v, u <= v makes every
    // partition cleave; exercised through the tensor stratification below
    StratifiedComplex X = delta(2), Y = delta(1);
    ProductComplex T = tensor(X, Y);
    for (int id = 0; id < T.complex.size(); ++id) {
        if (T.complex.dim(id) < 1) continue;
        auto [a, b] = coords_ops(X, Y, T, id);
        CHECK(T.complex.thin(id) == uv_thin(a, b));
    }
}

TEST_CASE("tensor thinness equals the u <= v criterion up to total dim 4") {
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; n + m <= 4 && m <= 3; ++m) {
            StratifiedComplex X = delta(n), Y = delta(m);
            ProductComplex T = tensor(X, Y);
            for (int id = 0; id < T.complex.size(); ++id) {
                if (T.complex.dim(id) < 1) continue;
                auto [a, b] = coords_ops(X, Y, T, id);
                CHECK(T.complex.thin(id) == uv_thin(a, b));
            }
        }
}

TEST_CASE("tensor thinness at total dimension six") {
    StratifiedComplex X = delta(3);
    ProductComplex T = tensor(X, X);
    int checked = 0;
    for (int id = 0; id < T.complex.size(); ++id) {
        if (T.complex.dim(id) < 1) continue;
        auto [a, b] = coords_ops(X, X, T, id);
        CHECK(T.complex.thin(id) == uv_thin(a, b));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("classification") {
    StratifiedComplex X = delta(1), Y = delta(1);
    SUBCASE("a 0-simplex is Other") {
        NormalSimplex v{0, SimplicialOperator::identity(0)};
        CHECK(classify(X, Y, v, v).tag == TensorSimplexClass::Other);
    }
    SUBCASE("the mediator shuffle") {
        NormalSimplex sx{*X.find("01"), SimplicialOperator(2, 1, {0, 0, 1})};
        NormalSimplex sy{*Y.find("01"), SimplicialOperator(2, 1, {0, 1, 1})};
        TensorSimplexClass c = classify(X, Y, sx, sy);
        CHECK(c.tag == TensorSimplexClass::Mediator);
        CHECK(c.k == 1);
    }
    SUBCASE("degenerate pairs") {
        NormalSimplex sx{*X.find("0"), SimplicialOperator(1, 0, {0, 0})};
        NormalSimplex sy{*Y.find("0"), SimplicialOperator(1, 0, {0, 0})};
        CHECK(classify(X, Y, sx, sy).tag == TensorSimplexClass::Degenerate);
    }
    SUBCASE("the non-mediator shuffle is a non-crushed cylinder") {
        // the path right-then-up factors through the (1,1) partition
        NormalSimplex sx{*X.find("01"), SimplicialOperator(2, 1, {0, 1, 1})};
        NormalSimplex sy{*Y.find("01"), SimplicialOperator(2, 1, {0, 0, 1})};
        TensorSimplexClass c = classify(X, Y, sx, sy);
        CHECK(c.tag == TensorSimplexClass::Cylinder);
        CHECK(c.p == 1);
        CHECK(c.q == 1);
        // the same cylinder is crushed when a coordinate is thin
        StratifiedComplex Xt = delta_t(1);
        NormalSimplex sxt{*Xt.find("01"), SimplicialOperator(2, 1, {0, 1, 1})};
        CHECK(classify(Xt, Y, sxt, sy).tag == TensorSimplexClass::CrushedCylinder);
    }
    SUBCASE("mediators and crushed cylinders are thin in the tensor") {
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; n + m <= 4; ++m) {
                StratifiedComplex A = adm(std::max(n, 2), 1), B = delta(m);
                ProductComplex T = tensor(A, B);
                for (int id = 0; id < T.complex.size(); ++id) {
                    const auto& [sx, sy] = T.coords[static_cast<std::size_t>(id)];
                    TensorSimplexClass c = classify(A, B, sx, sy);
                    if (c.tag == TensorSimplexClass::Mediator ||
                        c.tag == TensorSimplexClass::CrushedCylinder)
                        CHECK(T.complex.thin(id));
                }
            }
    }
}

TEST_CASE("monoidal structure of the tensor") {
    SUBCASE("unit") {
        StratifiedComplex X = adm(3, 1);
        CHECK(find_isomorphism(tensor(X, delta(0)).complex, X).has_value());
        CHECK(find_isomorphism(tensor(delta(0), X).complex, X).has_value());
    }
    SUBCASE("dual symmetry") {
        StratifiedComplex X = delta_t(1), Y = delta(2);
        StratifiedComplex lhs = dual(tensor(X, Y).complex);
        StratifiedComplex rhs = tensor(dual(Y), dual(X)).complex;
        CHECK(find_isomorphism(lhs, rhs).has_value());
    }
    SUBCASE("associativity at small size") {
        StratifiedComplex A = delta(1), B = delta_t(1), C = delta(1);
        StratifiedComplex lhs = tensor(tensor(A, B).complex, C).complex;
        StratifiedComplex rhs = tensor(A, tensor(B, C).complex).complex;
        CHECK(find_isomorphism(lhs, rhs).has_value());
    }
    SUBCASE("regular maps tensor to regular maps") {
        StratifiedComplex H = adm_horn(3, 1), A = adm(3, 1), Y = delta_t(1);
        StratifiedMap f;
        f.source = &H;
        f.target = &A;
        for (int id = 0; id < H.size(); ++id)
            f.images.push_back(NormalSimplex{*A.find(H.name(id)),
                                             SimplicialOperator::identity(H.dim(id))});
        f.validate();
        StratifiedMap idY;
        idY.source = &Y;
        idY.target = &Y;
        for (int id = 0; id < Y.size(); ++id)
            idY.images.push_back(NormalSimplex{id, SimplicialOperator::identity(Y.dim(id))});
        idY.validate();
        ProductComplex src = tensor(H, Y), dst = tensor(A, Y);
        StratifiedMap fg = tensor_map(f, idY, src, dst);
        CHECK(classify_map(fg).regular);
        CHECK(classify_map(fg).inclusion);
    }
}

TEST_CASE("pre-tensor") {
    SUBCASE("unit") {
        StratifiedComplex Y = adm(3, 2);
        CHECK(find_isomorphism(pretensor(delta(0), Y).complex, Y).has_value());
    }
    SUBCASE("the mediator 2-simplex of delta(1) pretensor delta(1) is thin") {
        StratifiedComplex X = delta(1);
        ProductComplex P = pretensor(X, X);
        const StratifiedComplex& PX = P.complex;
        int thin_count = 0;
        for (int id = 0; id < PX.size(); ++id)
            if (PX.thin(id)) ++thin_count;
        CHECK(thin_count == 1);
        for (int id = 0; id < PX.size(); ++id)
            if (PX.thin(id)) {
                auto [a, b] = coords_ops(X, X, P, id);
                CHECK(a == SimplicialOperator(2, 1, {0, 0, 1}));
                CHECK(b == SimplicialOperator(2, 1, {0, 1, 1}));
            }
    }
    SUBCASE("pre-tensor thin sets sit inside tensor thin sets") {
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; n + m <= 4; ++m) {
                StratifiedComplex X = delta(n), Y = delta(m);
                ProductComplex pre = pretensor(X, Y);
                ProductComplex ten = tensor(X, Y);
                for (int id = 0; id < pre.complex.size(); ++id)
                    if (pre.complex.thin(id)) CHECK(ten.complex.thin(id));
            }
    }
    SUBCASE("the thin sets agree for (1,1) and differ first at (2,2)") {
        // computed by diffing the two stratifications
        ProductComplex pre11 = pretensor(delta(1), delta(1));
        ProductComplex ten11 = tensor(delta(1), delta(1));
        for (int id = 0; id < pre11.complex.size(); ++id)
            CHECK(pre11.complex.thin(id) == ten11.complex.thin(id));
        StratifiedComplex D2 = delta(2);
        ProductComplex pre22 = pretensor(D2, D2);
        ProductComplex ten22 = tensor(D2, D2);
        std::vector<int> diff;
        for (int id = 0; id < pre22.complex.size(); ++id)
            if (ten22.complex.thin(id) && !pre22.complex.thin(id)) diff.push_back(id);
        CHECK(!diff.empty());
        // a hand-checked member of the difference: first coordinate collapses
        // only at 0, second only at 2, no mediator index, not a cylinder
        bool found = false;
        for (int id : diff) {
            auto [a, b] = coords_ops(D2, D2, pre22, id);
            if (a == SimplicialOperator(3, 2, {0, 0, 1, 2}) &&
                b == SimplicialOperator(3, 2, {0, 1, 2, 2}))
                found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("mediator admissibility") {
    // every mediator is k-admissible in the pre-tensor, and when the middle
    // face of a mediator is thin in the tensor so are the side faces
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; n + m <= 4; ++m) {
            StratifiedComplex X = delta(n), Y = delta(m);
            ProductComplex pre = pretensor(X, Y);
            ProductComplex ten = tensor(X, Y);
            for (int r = 2; r <= n + m; ++r)
                for (const NormalSimplex& s : pre.complex.normal_simplices_of_dim(r)) {
                    if (s.is_degenerate()) continue;
                    const auto& [sx, sy] = pre.coords[static_cast<std::size_t>(s.base)];
                    TensorSimplexClass c = classify(X, Y, sx, sy);
                    if (c.tag != TensorSimplexClass::Mediator) continue;
                    CHECK(is_k_admissible(pre.complex, s, c.k));
                    if (ten.complex.thin_simplex(
                            ten.complex.act(s.base, face_op(r, c.k)))) {
                        CHECK(ten.complex.thin_simplex(
                            ten.complex.act(s.base, face_op(r, c.k - 1))));
                        CHECK(ten.complex.thin_simplex(
                            ten.complex.act(s.base, face_op(r, c.k + 1))));
                    }
                }
        }
}

TEST_CASE("witness chains") {
    SUBCASE("equal stratifications give an empty chain") {
        StratifiedComplex X = adm(3, 1);
        WitnessChainResult res = t_extension_witness_chain(X, X);
        CHECK(res.success);
        CHECK(res.chain.empty());
    }
    SUBCASE("the primitive t-extension needs a single witness") {
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k <= n - 1; ++k) {
                StratifiedComplex X = adm_prime(n, k), Y = adm_dprime(n, k);
                WitnessChainResult res = t_extension_witness_chain(X, Y);
                REQUIRE(res.success);
                REQUIRE(res.chain.size() == 1);
                CHECK(X.dim(res.chain[0].witness) == n);  // the top simplex
                CHECK(res.chain[0].k == k);
            }
    }
    SUBCASE("tX must be contained in tY") {
        CHECK_THROWS_AS(t_extension_witness_chain(delta_t(2), delta(2)), LawViolation);
    }
    SUBCASE("an unreachable extension reports undecided") {
        WitnessChainResult res = t_extension_witness_chain(delta(2), delta_t(2));
        CHECK_FALSE(res.success);
        CHECK(res.unreached.size() == 1);
    }
    SUBCASE("the generic engine certifies stratified-factor pre-tensors") {
        // lemma-level claim: the pre-tensor into the tensor is always a
        // t-extension, whatever the factor stratifications
        std::vector<std::pair<StratifiedComplex, StratifiedComplex>> pairs;
        pairs.emplace_back(adm(2, 1), delta(1));
        pairs.emplace_back(delta_t(1), delta_t(1));
        pairs.emplace_back(adm_dprime(2, 1), delta_t(1));
        for (const auto& [X, Y] : pairs) {
            WitnessChainResult res = t_extension_witness_chain(
                pretensor(X, Y).complex, tensor(X, Y).complex);
            CHECK(res.success);
        }
    }
    SUBCASE("pretensor into tensor, witnesses are mediators with falling Phi") {
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; n + m <= 4; ++m) {
                StratifiedComplex X = delta(n), Y = delta(m);
                ProductComplex pre = pretensor(X, Y);
                ProductComplex ten = tensor(X, Y);
                WitnessChainResult res = pretensor_witness_chain(X, Y, pre, ten);
                REQUIRE(res.success);
                for (const WitnessStep& s : res.chain) {
                    const auto& [wx, wy] =
                        pre.coords[static_cast<std::size_t>(s.witness)];
                    TensorSimplexClass c = classify(X, Y, wx, wy);
                    CHECK(c.tag == TensorSimplexClass::Mediator);
                    CHECK(c.k == s.k);
                    auto [xa, xb] = coords_ops(X, Y, pre, s.simplex);
                    int d = pre.complex.dim(s.witness);
                    auto phi_of_face = [&](int i) {
                        NormalSimplex f =
                            pre.complex.act(s.witness, face_op(d, i));
                        auto [fa, fb] = coords_ops(X, Y, pre, f.base);
                        return phi_potential(compose(fa, f.degen),
                                             compose(fb, f.degen));
                    };
                    long long target_phi = phi_potential(xa, xb);
                    CHECK(phi_of_face(s.k - 1) < target_phi);
                    CHECK(phi_of_face(s.k + 1) < target_phi);
                }
            }
    }
}

TEST_CASE("pre-tensors against entire subsets cover the full pre-tensor") {
    // for entire subsets X' of X and Y' of Y, the union of the thin sets of
    // X pretensor Y' and X' pretensor Y is the thin set of X pretensor Y
    StratifiedComplex X = delta_t(1), Xp = delta(1);
    StratifiedComplex Y = adm_dprime(2, 1), Yp = adm(2, 1);
    ProductComplex full = pretensor(X, Y);
    ProductComplex left = pretensor(X, Yp);
    ProductComplex right = pretensor(Xp, Y);
    REQUIRE(left.complex.size() == full.complex.size());
    REQUIRE(right.complex.size() == full.complex.size());
    for (int id = 0; id < full.complex.size(); ++id)
        CHECK(full.complex.thin(id) ==
              (left.complex.thin(id) || right.complex.thin(id)));
}

TEST_CASE("Th interacts with the tensor as stated") {
    SUBCASE("trivial cases") {
        ThTensorReport rep = th_tensor_laws_check(delta(0), delta(0), 0, 0);
        CHECK(rep.ok());
        CHECK(rep.zero_equality_checked);
    }
    SUBCASE("delta(1) against itself at n = m = 1") {
        ThTensorReport rep = th_tensor_laws_check(delta(1), delta(1), 1, 1);
        CHECK(rep.first_inclusion);
        CHECK(rep.second_inclusion);
    }
    SUBCASE("zero equality") {
        ThTensorReport rep = th_tensor_laws_check(delta(1), delta_t(1), 0, 0);
        CHECK(rep.ok());
        CHECK(rep.zero_equality);
    }
    SUBCASE("a spread of shapes") {
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 2; ++m)
                CHECK(th_tensor_laws_check(delta(2), delta_t(1), n, m).ok());
    }
}
