#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "strata/parity.hpp"

using namespace strata;

namespace {

std::vector<int> iota_vec(int n) {
    std::vector<int> v(static_cast<std::size_t>(n + 1));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

TEST_CASE("simplex parity complexes") {
    SUBCASE("element counts are binomial") {
        SimplexParity S2 = simplex_parity(2);
        CHECK(S2.complex.size() == 7);  // 3 + 3 + 1
        CHECK(S2.complex.elements_of_dim(0).size() == 3);
        CHECK(S2.complex.elements_of_dim(2).size() == 1);
        SimplexParity S3 = simplex_parity(3);
        CHECK(S3.complex.size() == 15);
    }
    SUBCASE("face parity follows the odd/even rule") {
        SimplexParity S = simplex_parity(2);
        int top = S.element({0, 1, 2});
        CHECK(S.complex.minus(top) == ElemSet{S.element({0, 2})});
        ElemSet plus{S.element({1, 2}), S.element({0, 1})};
        std::sort(plus.begin(), plus.end());
        CHECK(S.complex.plus(top) == plus);
    }
    SUBCASE("axioms hold for n <= 5") {
        for (int n = 0; n <= 5; ++n)
            CHECK(verify_axioms(simplex_parity(n).complex).ok());
    }
}

TEST_CASE("well-formedness, perpendicularity and movement") {
    SimplexParity S = simplex_parity(2);
    int e01 = S.element({0, 1}), e12 = S.element({1, 2}), e02 = S.element({0, 2});
    int top = S.element({0, 1, 2});
    SUBCASE("the empty set moves anything to itself") {
        ElemSet M{e02};
        CHECK(moves(S.complex, {}, M, M));
        CHECK_FALSE(moves(S.complex, {}, M, ElemSet{e01}));
    }
    SUBCASE("the top element moves its source to its target") {
        ElemSet Sset{top};
        ElemSet M{e02};
        ElemSet P{e01, e12};
        std::sort(P.begin(), P.end());
        CHECK(moves(S.complex, Sset, M, P));
    }
    SUBCASE("composable chains are well formed") {
        CHECK(well_formed(S.complex, ElemSet{std::min(e01, e12), std::max(e01, e12)}));
        CHECK_FALSE(well_formed(S.complex, ElemSet{std::min(e01, e02), std::max(e01, e02)}));
        // at most one 0-dimensional element
        CHECK_FALSE(well_formed(S.complex, ElemSet{S.element({0}), S.element({1})}));
        CHECK(well_formed(S.complex, ElemSet{S.element({0})}));
    }
}

TEST_CASE("atoms") {
    SUBCASE("atom of a vertex") {
        SimplexParity S = simplex_parity(1);
        Cell c = atom(S.complex, S.element({0}));
        CHECK(c.m == ElemSet{S.element({0})});
        CHECK(c.p == c.m);
    }
    SUBCASE("atom of the 2-simplex matches the worked value") {
        SimplexParity S = simplex_parity(2);
        Cell c = atom(S.complex, S.element({0, 1, 2}));
        ElemSet m{S.element({0, 1, 2}), S.element({0, 2}), S.element({0})};
        ElemSet p{S.element({0, 1, 2}), S.element({0, 1}), S.element({1, 2}),
                  S.element({2})};
        std::sort(m.begin(), m.end());
        std::sort(p.begin(), p.end());
        CHECK(c.m == m);
        CHECK(c.p == p);
    }
    SUBCASE("atoms are cells everywhere at small n") {
        for (int n = 0; n <= 4; ++n) {
            SimplexParity S = simplex_parity(n);
            for (int x = 0; x < S.complex.size(); ++x)
                CHECK(is_cell(S.complex, atom(S.complex, x)));
        }
    }
    SUBCASE("the product atom of the square is a 2-cell") {
        SimplexParity S1 = simplex_parity(1);
        ParityProduct P = parity_product(S1.complex, S1.complex);
        int e = P.index.at({S1.element({0, 1}), S1.element({0, 1})});
        Cell c = atom(P.complex, e);
        CHECK(is_cell(P.complex, c));
        CHECK(cell_dim(P.complex, c) == 2);
    }
}

TEST_CASE("cell predicates") {
    SimplexParity S = simplex_parity(2);
    SUBCASE("empty pairs are not cells") {
        CHECK_FALSE(is_cell(S.complex, Cell{}));
        CHECK_FALSE(is_cell(S.complex, Cell{{S.element({0})}, {}}));
    }
    SUBCASE("fuzz: random pairs agree across both characterizations") {
        std::mt19937 rng(20240817);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int trial = 0; trial < 500; ++trial) {
            Cell c;
            for (int x = 0; x < S.complex.size(); ++x) {
                if (coin(rng)) c.m.push_back(x);
                if (coin(rng)) c.p.push_back(x);
            }
            // is_cell throws if the two characterizations ever disagree
            (void)is_cell(S.complex, c);
        }
    }
}

TEST_CASE("sources, targets, composition") {
    SimplexParity S = simplex_parity(2);
    Cell top = atom(S.complex, S.element({0, 1, 2}));
    SUBCASE("s_1 of the triangle atom") {
        Cell s1 = cell_source(S.complex, top, 1);
        ElemSet m{S.element({0}), S.element({0, 2})};
        std::sort(m.begin(), m.end());
        CHECK(s1.m == m);
        ElemSet p{S.element({0, 2}), S.element({2})};
        std::sort(p.begin(), p.end());
        CHECK(s1.p == p);
        CHECK(cell_source(S.complex, s1, 1) == s1);  // already a 1-cell
    }
    SUBCASE("identities compose trivially") {
        Cell v = atom(S.complex, S.element({0}));
        Cell e = atom(S.complex, S.element({0, 1}));
        CHECK(composable(S.complex, e, v, 0));
        CHECK(cell_compose(S.complex, e, v, 0) == e);
        CHECK_THROWS_AS(cell_compose(S.complex, v, e, 0), NotComposable);
    }
    SUBCASE("the path composite agrees with the set formula") {
        Cell e01 = atom(S.complex, S.element({0, 1}));
        Cell e12 = atom(S.complex, S.element({1, 2}));
        REQUIRE(composable(S.complex, e12, e01, 0));
        Cell path = cell_compose(S.complex, e12, e01, 0);
        ElemSet m{S.element({0}), S.element({0, 1}), S.element({1, 2})};
        std::sort(m.begin(), m.end());
        CHECK(path.m == m);
        CHECK(is_cell(S.complex, path));
        CHECK(cell_target(S.complex, top, 1) == path);
    }
}

TEST_CASE("parity morphisms") {
    SimplexParity S2 = simplex_parity(2);
    SimplexParity S1 = simplex_parity(1);
    SUBCASE("identity morphism and functor laws for operators") {
        ParityMorphism id2 = identity_morphism(S2.complex);
        id2.validate();
        ParityMorphism f = operator_morphism(face_op(2, 1), S1, S2);
        ParityMorphism g = operator_morphism(degeneracy_op(1, 0), S2, S1);
        ParityMorphism gf = compose(g, f);
        ParityMorphism direct =
            operator_morphism(compose(degeneracy_op(1, 0), face_op(2, 1)), S1, S1);
        CHECK(gf.images == direct.images);
    }
    SUBCASE("degeneracies kill top elements") {
        ParityMorphism g = operator_morphism(degeneracy_op(0, 0), S1, simplex_parity(0));
        CHECK(g.images[static_cast<std::size_t>(S1.element({0, 1}))].empty());
    }
    SUBCASE("atoms map to atoms along operator morphisms") {
        SimplexParity S3 = simplex_parity(3);
        for (int i = 0; i <= 3; ++i) {
            ParityMorphism f = operator_morphism(face_op(3, i), S2, S3);
            for (int x = 0; x < S2.complex.size(); ++x) {
                Cell image = apply_morphism(f, atom(S2.complex, x));
                // the image vertex set under the injection
                std::vector<int> w;
                for (int v : S2.verts[static_cast<std::size_t>(x)])
                    w.push_back(face_op(3, i)(v));
                CHECK(image == atom(S3.complex, S3.element(w)));
            }
        }
    }
    SUBCASE("identity on atoms") {
        ParityMorphism id2 = identity_morphism(S2.complex);
        for (int x = 0; x < S2.complex.size(); ++x)
            CHECK(apply_morphism(id2, atom(S2.complex, x)) == atom(S2.complex, x));
    }
}

TEST_CASE("products of parity complexes") {
    SimplexParity S1 = simplex_parity(1);
    SimplexParity S2 = simplex_parity(2);
    SUBCASE("element counts") {
        ParityProduct P = parity_product(S1.complex, S1.complex);
        CHECK(P.complex.size() == 9);  // 4 + 4 + 1
        CHECK(P.complex.elements_of_dim(1).size() == 4);
        ParityProduct Q = parity_product(S2.complex, S1.complex);
        CHECK(Q.complex.elements_of_dim(0).size() == 6);
        CHECK(Q.complex.elements_of_dim(1).size() == 9);
        CHECK(Q.complex.elements_of_dim(2).size() == 5);
        CHECK(Q.complex.elements_of_dim(3).size() == 1);
    }
    SUBCASE("axioms hold on products with n+m <= 4") {
        CHECK(verify_axioms(parity_product(S1.complex, S1.complex).complex).ok());
        CHECK(verify_axioms(parity_product(S2.complex, S1.complex).complex).ok());
        CHECK(verify_axioms(parity_product(S2.complex, S2.complex).complex).ok());
        SimplexParity S3 = simplex_parity(3);
        CHECK(verify_axioms(parity_product(S3.complex, S1.complex).complex).ok());
    }
    SUBCASE("product with a point is the factor") {
        SimplexParity S0 = simplex_parity(0);
        ParityProduct P = parity_product(S0.complex, S2.complex);
        CHECK(P.complex.size() == S2.complex.size());
        for (int e = 0; e < P.complex.size(); ++e) {
            auto [x, y] = P.coords[static_cast<std::size_t>(e)];
            CHECK(x == 0);
            CHECK(P.complex.dim(e) == S2.complex.dim(y));
        }
    }
    SUBCASE("the square's 2-element has the evaluated face sets") {
        ParityProduct P = parity_product(S1.complex, S1.complex);
        int e01 = S1.element({0, 1});
        int sq = P.index.at({e01, e01});
        // by the sign rule with p = 1 odd flipping the second factor
        ElemSet minus{P.index.at({S1.element({0}), e01}), P.index.at({e01, S1.element({1})})};
        ElemSet plus{P.index.at({S1.element({1}), e01}), P.index.at({e01, S1.element({0})})};
        std::sort(minus.begin(), minus.end());
        std::sort(plus.begin(), plus.end());
        CHECK(P.complex.minus(sq) == minus);
        CHECK(P.complex.plus(sq) == plus);
    }
    SUBCASE("morphism products respect the movement condition") {
        ParityProduct P11 = parity_product(S1.complex, S1.complex);
        ParityProduct P21 = parity_product(S2.complex, S1.complex);
        ParityMorphism f = operator_morphism(face_op(2, 0), S1, S2);
        ParityMorphism idm = identity_morphism(S1.complex);
        ParityMorphism fg = morphism_product(f, idm, P11, P21);  // validates
        CHECK(fg.images.size() == static_cast<std::size_t>(P11.complex.size()));
    }
    SUBCASE("generation by the top pair") {
        // face-closure of <01..n; 01..m> is everything
        ParityProduct P = parity_product(S2.complex, S1.complex);
        int top = P.index.at({S2.element({0, 1, 2}), S1.element({0, 1})});
        std::vector<char> seen(static_cast<std::size_t>(P.complex.size()), 0);
        std::vector<int> stack{top};
        seen[static_cast<std::size_t>(top)] = 1;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            for (int sg : {-1, +1})
                for (int y : P.complex.faces(e, sg))
                    if (!seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = 1;
                        stack.push_back(y);
                    }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; }));
    }
}

TEST_CASE("suspensions") {
    SimplexParity S1 = simplex_parity(1);
    SimplexParity S2 = simplex_parity(2);
    SUBCASE("zero-fold suspension is a point") {
        Suspension S = suspension(0, S1.complex);
        CHECK(S.complex.size() == 1);
        CHECK(S.complex.dim(0) == 0);
    }
    SUBCASE("the three-fold suspension of the interval") {
        Suspension S = suspension(3, S1.complex);
        CHECK(S.complex.elements_of_dim(0).size() == 4);
        CHECK(S.complex.elements_of_dim(1).size() == 6);
        CHECK(S.complex.elements_of_dim(2).size() == 3);
        CHECK(verify_axioms(S.complex).ok());
    }
    SUBCASE("axioms for k <= 3, n <= 2") {
        for (int k = 0; k <= 3; ++k)
            for (int n = 0; n <= 2; ++n) {
                SimplexParity Sn = simplex_parity(n);
                CHECK(verify_axioms(suspension(k, Sn.complex).complex).ok());
            }
    }
    SUBCASE("suspension of operators follows the interval formula") {
        Suspension Sa = suspension(1, S1.complex);
        Suspension Sb = suspension(2, S1.complex);
        ParityMorphism f = suspension_operator(face_op(2, 1), S1.complex, Sa, Sb);
        // <x;1> goes to {x} x (alpha(0), alpha(1)] = {x} x (0, 2]
        int e = Sa.index.at({S1.element({0, 1}), 1});
        ElemSet want{Sb.index.at({S1.element({0, 1}), 1}),
                     Sb.index.at({S1.element({0, 1}), 2})};
        std::sort(want.begin(), want.end());
        CHECK(f.images[static_cast<std::size_t>(e)] == want);
    }
    SUBCASE("suspension functoriality on operators") {
        Suspension S0 = suspension(1, S1.complex);
        Suspension Sb = suspension(2, S1.complex);
        Suspension Sc = suspension(3, S1.complex);
        ParityMorphism f = suspension_operator(face_op(2, 1), S1.complex, S0, Sb);
        ParityMorphism g = suspension_operator(face_op(3, 0), S1.complex, Sb, Sc);
        ParityMorphism gf = compose(g, f);
        ParityMorphism direct = suspension_operator(
            compose(face_op(3, 0), face_op(2, 1)), S1.complex, S0, Sc);
        CHECK(gf.images == direct.images);
    }
    SUBCASE("suspension of morphisms") {
        Suspension SnC = suspension(2, S1.complex);
        Suspension SnD = suspension(2, S2.complex);
        ParityMorphism f = operator_morphism(face_op(2, 2), S1, S2);
        ParityMorphism sf = suspension_morphism(2, f, SnC, SnD);
        CHECK(sf.images.size() == static_cast<std::size_t>(SnC.complex.size()));
    }
}

TEST_CASE("diag") {
    SUBCASE("vertices go to their doubled pairs") {
        SimplexParity S0 = simplex_parity(0);
        ParityProduct P = parity_product(S0.complex, S0.complex);
        ParityMorphism d = diag_morphism(S0, P);
        CHECK(d.images[0] == ElemSet{P.index.at({0, 0})});
    }
    SUBCASE("the interval splits at every vertex") {
        SimplexParity S1 = simplex_parity(1);
        ParityProduct P = parity_product(S1.complex, S1.complex);
        ParityMorphism d = diag_morphism(S1, P);
        int e01 = S1.element({0, 1});
        ElemSet want{P.index.at({S1.element({0}), e01}),
                     P.index.at({e01, S1.element({1})})};
        std::sort(want.begin(), want.end());
        CHECK(d.images[static_cast<std::size_t>(e01)] == want);
    }
    SUBCASE("naturality against operator morphisms") {
        SimplexParity S1 = simplex_parity(1);
        SimplexParity S2 = simplex_parity(2);
        ParityProduct P11 = parity_product(S1.complex, S1.complex);
        ParityProduct P22 = parity_product(S2.complex, S2.complex);
        ParityMorphism d1 = diag_morphism(S1, P11);
        ParityMorphism d2 = diag_morphism(S2, P22);
        for (int i = 0; i <= 2; ++i) {
            ParityMorphism a = operator_morphism(face_op(2, i), S1, S2);
            ParityMorphism aa = morphism_product(a, a, P11, P22);
            CHECK(compose(aa, d1).images == compose(d2, a).images);
        }
    }
}

TEST_CASE("the k comparison morphism") {
    SimplexParity S1 = simplex_parity(1);
    StratifiedParityComplex C = minimal_stratification(S1.complex);
    SimplexParity Sm = simplex_parity(1);
    ParityProduct prod = parity_product(C.base, Sm.complex);
    StratifiedParityComplex prodThin =
        parity_product_thin(C, th_parity(minimal_stratification(Sm.complex), 1));
    Suspension SmC = suspension(1, C.base);
    StratifiedParityComplex SmCThin = minimal_stratification(SmC.complex);
    // thin elements of the suspension mirror those of C (none here)
    StratifiedParityMorphism k =
        k_morphism(C, Sm, prod, prodThin, SmC, SmCThin);  // validates
    // <01; 01> |-> {<01; 1>}
    int e = prod.index.at({S1.element({0, 1}), Sm.element({0, 1})});
    CHECK(k.map.images[static_cast<std::size_t>(e)] ==
          ElemSet{SmC.index.at({S1.element({0, 1}), 1})});
    // <01; w0> |-> {} since the first coordinate has positive dimension
    int e2 = prod.index.at({S1.element({0, 1}), Sm.element({0})});
    CHECK(k.map.images[static_cast<std::size_t>(e2)].empty());
    // <v; w0> |-> {w0}
    int e3 = prod.index.at({S1.element({1}), Sm.element({0})});
    CHECK(k.map.images[static_cast<std::size_t>(e3)] == ElemSet{SmC.index.at({-1, 0})});
}

TEST_CASE("morphism application is functorial on cells") {
    SimplexParity S1 = simplex_parity(1), S2 = simplex_parity(2), S3 = simplex_parity(3);
    ParityMorphism f = operator_morphism(face_op(2, 1), S1, S2);
    ParityMorphism g = operator_morphism(face_op(3, 0), S2, S3);
    ParityMorphism gf = compose(g, f);
    for (int x = 0; x < S1.complex.size(); ++x) {
        Cell c = atom(S1.complex, x);
        CHECK(apply_morphism(gf, c) == apply_morphism(g, apply_morphism(f, c)));
    }
    // k and diag fixtures respect identities
    ParityProduct P22 = parity_product(S2.complex, S2.complex);
    ParityMorphism d2 = diag_morphism(S2, P22);
    ParityMorphism idp = identity_morphism(P22.complex);
    CHECK(compose(idp, d2).images == d2.images);
}

TEST_CASE("the top element generates the simplex complex") {
    for (int n = 0; n <= 4; ++n) {
        SimplexParity S = simplex_parity(n);
        std::vector<int> top(static_cast<std::size_t>(n + 1));
        std::iota(top.begin(), top.end(), 0);
        std::vector<char> seen(static_cast<std::size_t>(S.complex.size()), 0);
        std::vector<int> stack{S.element(top)};
        seen[static_cast<std::size_t>(stack[0])] = 1;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            for (int sg : {-1, +1})
                for (int y : S.complex.faces(e, sg))
                    if (!seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = 1;
                        stack.push_back(y);
                    }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; }));
    }
}

TEST_CASE("axiom violations are detected") {
    // a two-element loop: x < y < x breaks the antisymmetry of the
    // triangle order even though the graded structure is well formed
    ParityComplex C;
    int a = C.add_element("a", 0);
    int b = C.add_element("b", 0);
    int x = C.add_element("x", 1);
    int y = C.add_element("y", 1);
    C.set_faces(x, {a}, {b});
    C.set_faces(y, {b}, {a});
    C.validate();
    AxiomReport rep = verify_axioms(C);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.axiom3a.empty());
    CHECK_FALSE(rep.filledtri.empty());
}

TEST_CASE("validation catches malformed complexes") {
    ParityComplex C;
    int v = C.add_element("v", 0);
    int e = C.add_element("e", 1);
    C.set_faces(e, {v}, {v});
    CHECK_THROWS_AS(C.validate(), LawViolation);  // face sets must be disjoint
    ParityComplex D;
    D.add_element("v", 0);
    int f = D.add_element("f", 1);
    D.set_faces(f, {}, {0});
    CHECK_THROWS_AS(D.validate(), LawViolation);  // non-empty face sets
}
