#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "strata/simplex_ops.hpp"

using namespace strata;

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SimplicialOperator op(int dom, int cod, std::vector<int> v) {
    return SimplicialOperator(dom, cod, std::move(v));
}

} // namespace

TEST_CASE("composition basics") {
    CHECK(compose(degeneracy_op(0, 0), face_op(1, 0)) == SimplicialOperator::identity(0));
    // compose(id, alpha) = alpha
    SimplicialOperator a = op(2, 3, {0, 2, 2});
    CHECK(compose(SimplicialOperator::identity(3), a) == a);
    CHECK(compose(a, SimplicialOperator::identity(2)) == a);
    // evaluated by hand: delta^1_0 then delta^2_0 sends 0 to 2
    CHECK(compose(face_op(2, 0), face_op(1, 0)) == op(0, 2, {2}));
    CHECK_THROWS_AS(compose(face_op(1, 0), face_op(2, 0)), CompositionMismatch);
}

TEST_CASE("elementary operators follow the defining formulas") {
    CHECK(face_op(2, 1) == op(1, 2, {0, 2}));
    CHECK(vertex_op(3, 0) == op(0, 3, {0}));
    CHECK(degeneracy_op(2, 1) == op(3, 2, {0, 1, 1, 2}));
    CHECK(terminal_op(2) == op(2, 0, {0, 0, 0}));
    CHECK_THROWS_AS(face_op(2, 3), IndexError);
    CHECK_THROWS_AS(vertex_op(2, -1), IndexError);
}

TEST_CASE("associativity of composition") {
    // exhaustive on small ordinals
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int d = 0; d <= 2; ++d)
                    for (const auto& f : all_operators(a, b))
                        for (const auto& g : all_operators(b, c))
                            for (const auto& h : all_operators(c, d))
                                CHECK(compose(h, compose(g, f)) ==
                                      compose(compose(h, g), f));
    // deterministic sample over ordinals up to 5
    unsigned seed = 97u;
    auto next = [&seed](int mod) {
        seed = seed * 1103515245u + 12345u;
        return static_cast<int>((seed >> 16) % static_cast<unsigned>(mod));
    };
    for (int trial = 0; trial < 20000; ++trial) {
        int a = next(6), b = next(6), c = next(6), d = next(6);
        auto fs = all_operators(a, b);
        auto gs = all_operators(b, c);
        auto hs = all_operators(c, d);
        const auto& f = fs[static_cast<std::size_t>(next(static_cast<int>(fs.size())))];
        const auto& g = gs[static_cast<std::size_t>(next(static_cast<int>(gs.size())))];
        const auto& h = hs[static_cast<std::size_t>(next(static_cast<int>(hs.size())))];
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    }
}

TEST_CASE("simplicial identity audit") {
    IdentityReport rep1 = simplicial_identities_check(1);
    CHECK(rep1.ok());
    IdentityReport rep4 = simplicial_identities_check(4);
    CHECK(rep4.ok());
    IdentityReport rep6 = simplicial_identities_check(6);
    CHECK(rep6.ok());
    CHECK(rep6.instances >= 100);
}

TEST_CASE("EZ factorization") {
    SUBCASE("identity and pure degeneracy") {
        for (int n = 0; n <= 3; ++n) {
            EzFactorization ez = ez_factorize(SimplicialOperator::identity(n));
            CHECK(ez.face == SimplicialOperator::identity(n));
            CHECK(ez.degeneracy == SimplicialOperator::identity(n));
        }
        EzFactorization ez = ez_factorize(degeneracy_op(1, 0));
        CHECK(ez.face == SimplicialOperator::identity(1));
        CHECK(ez.degeneracy == degeneracy_op(1, 0));
    }
    SUBCASE("worked example [0,0,2]") {
        EzFactorization ez = ez_factorize(op(2, 2, {0, 0, 2}));
        CHECK(ez.face == op(1, 2, {0, 2}));
        CHECK(ez.degeneracy == op(2, 1, {0, 0, 1}));
    }
    SUBCASE("uniqueness by brute force up to ordinal 6") {
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                for (const auto& alpha : all_operators(a, b)) {
                    int count = 0;
                    EzFactorization ez = ez_factorize(alpha);
                    CHECK(compose(ez.face, ez.degeneracy) == alpha);
                    CHECK(ez.face.is_face());
                    CHECK(ez.degeneracy.is_degeneracy());
                    for (int k = 0; k <= std::max(a, b); ++k)
                        for (const auto& d : all_degeneracy_operators(a, k))
                            for (const auto& f : all_face_operators(k, b))
                                if (compose(f, d) == alpha) ++count;
                    CHECK(count == 1);
                }
    }
}

TEST_CASE("duals") {
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i <= n; ++i) {
            CHECK(dual(face_op(n, i)) == face_op(n, n - i));
            if (i <= n - 1) CHECK(dual(degeneracy_op(n - 1, i)) == degeneracy_op(n - 1, n - 1 - i));
        }
    // involution on everything small
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (const auto& f : all_operators(a, b)) CHECK(dual(dual(f)) == f);
    // partition operator duals
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            CHECK(dual(part_inj1(p, q)) == part_inj2(q, p));
            CHECK(dual(part_inj2(p, q)) == part_inj1(q, p));
            CHECK(dual(part_proj1(p, q)) == part_proj2(q, p));
            CHECK(dual(part_proj2(p, q)) == part_proj1(q, p));
        }
}

TEST_CASE("ordinal sum") {
    SimplicialOperator a = op(1, 2, {0, 2});
    SimplicialOperator empty = SimplicialOperator::identity(-1);
    CHECK(ordinal_sum(empty, a) == a);
    CHECK(ordinal_sum(a, empty) == a);
    // the low-block convention: delta^0_0 on the low block shifts everything up
    CHECK(ordinal_sum(SimplicialOperator(-1, 0, {}), SimplicialOperator::identity(0)) ==
          face_op(1, 0));
    CHECK(ordinal_sum(SimplicialOperator::identity(0), SimplicialOperator(-1, 0, {})) ==
          face_op(1, 1));
    // elementary operators as iterated sums
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i <= n; ++i) {
            SimplicialOperator d = ordinal_sum(
                ordinal_sum(SimplicialOperator::identity(i - 1), SimplicialOperator(-1, 0, {})),
                SimplicialOperator::identity(n - i - 1));
            CHECK(d == face_op(n, i));
        }
    for (int n = 0; n <= 3; ++n)
        for (int i = 0; i <= n; ++i) {
            SimplicialOperator s = ordinal_sum(
                ordinal_sum(SimplicialOperator::identity(i - 1), degeneracy_op(0, 0)),
                SimplicialOperator::identity(n - i - 1));
            CHECK(s == degeneracy_op(n, i));
        }
    // strict associativity and dual anti-homomorphism
    for (const auto& f : all_operators(1, 1))
        for (const auto& g : all_operators(0, 1))
            for (const auto& h : all_operators(1, 0)) {
                CHECK(ordinal_sum(ordinal_sum(f, g), h) ==
                      ordinal_sum(f, ordinal_sum(g, h)));
                CHECK(dual(ordinal_sum(f, g)) == ordinal_sum(dual(g), dual(f)));
            }
}

TEST_CASE("partition identities hold for all p,q,r <= 5") {
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q) {
            CHECK(compose(part_proj1(p, q), part_inj1(p, q)) ==
                  SimplicialOperator::identity(p));
            CHECK(compose(part_proj2(p, q), part_inj2(p, q)) ==
                  SimplicialOperator::identity(q));
            if (p == 0) CHECK(part_inj2(0, q) == SimplicialOperator::identity(q));
        }
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5 - p; ++q)
            for (int r = 0; r <= 5 - p - q; ++r) {
                CHECK(compose(part_inj1(p + q, r), part_inj1(p, q)) == part_inj1(p, q + r));
                CHECK(compose(part_inj1(p + q, r), part_inj2(p, q)) ==
                      compose(part_inj2(p, q + r), part_inj1(q, r)));
                CHECK(compose(part_inj2(p, q + r), part_inj2(q, r)) == part_inj2(p + q, r));
                CHECK(compose(part_proj1(p, q), part_proj1(p + q, r)) == part_proj1(p, q + r));
                CHECK(compose(part_proj2(p, q), part_proj1(p + q, r)) ==
                      compose(part_proj1(q, r), part_proj2(p, q + r)));
                CHECK(compose(part_proj2(q, r), part_proj2(p, q + r)) == part_proj2(p + q, r));
            }
}

TEST_CASE("adjoints") {
    SUBCASE("degeneracies have the classical adjoints") {
        for (int n = 1; n <= 4; ++n)
            for (int j = 0; j <= n - 1; ++j) {
                Adjoints adj = adjoints(degeneracy_op(n - 1, j));
                REQUIRE(adj.left.has_value());
                REQUIRE(adj.right.has_value());
                CHECK(*adj.left == face_op(n, j + 1));
                CHECK(*adj.right == face_op(n, j));
            }
    }
    SUBCASE("identity is self-adjoint") {
        Adjoints adj = adjoints(SimplicialOperator::identity(3));
        CHECK(*adj.left == SimplicialOperator::identity(3));
        CHECK(*adj.right == SimplicialOperator::identity(3));
    }
    SUBCASE("vertex operator away from the ends has neither adjoint") {
        Adjoints adj = adjoints(vertex_op(2, 1));
        CHECK_FALSE(adj.left.has_value());
        CHECK_FALSE(adj.right.has_value());
    }
    SUBCASE("the empty ordinal") {
        Adjoints adj = adjoints(SimplicialOperator::identity(-1));
        CHECK(adj.left == SimplicialOperator::identity(-1));
        CHECK(adj.right == SimplicialOperator::identity(-1));
        Adjoints none = adjoints(SimplicialOperator(-1, 2, {}));
        CHECK_FALSE(none.left.has_value());
        CHECK_FALSE(none.right.has_value());
    }
    SUBCASE("adjunction inequalities and dual swap") {
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                for (const auto& f : all_operators(a, b)) {
                    Adjoints adj = adjoints(f);
                    CHECK(adj.left.has_value() == (f(a) == b));
                    CHECK(adj.right.has_value() == (f(0) == 0));
                    if (adj.left) {
                        // id <= f . f^l and f^l . f <= id
                        for (int i = 0; i <= b; ++i) CHECK(f((*adj.left)(i)) >= i);
                        for (int i = 0; i <= a; ++i) CHECK((*adj.left)(f(i)) <= i);
                    }
                    if (adj.right) {
                        for (int i = 0; i <= b; ++i) CHECK(f((*adj.right)(i)) <= i);
                        for (int i = 0; i <= a; ++i) CHECK((*adj.right)(f(i)) >= i);
                    }
                    // (alpha dual)^r = (alpha^l) dual, when defined
                    Adjoints dadj = adjoints(dual(f));
                    CHECK(dadj.right.has_value() == adj.left.has_value());
                    if (adj.left) CHECK(*dadj.right == dual(*adj.left));
                    CHECK(dadj.left.has_value() == adj.right.has_value());
                    if (adj.right) CHECK(*dadj.left == dual(*adj.right));
                }
    }
}

TEST_CASE("shuffle enumeration counts and order") {
    CHECK(enumerate_shuffles(1, 1).size() == 2);
    CHECK(enumerate_shuffles(0, 4).size() == 1);
    CHECK(enumerate_shuffles(4, 0).size() == 1);
    CHECK(enumerate_shuffles(2, 2).size() == 6);
    // |shuffles(n,m)| = binomial(n+m, n) = #monotone surjections [n+m]->[n]
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m + n <= 8 && m <= 4; ++m) {
            std::vector<Shuffle> s = enumerate_shuffles(n, m);
            CHECK(static_cast<long long>(s.size()) == binomial(n + m, n));
            CHECK(s.size() == all_degeneracy_operators(n + m, n).size());
            for (const Shuffle& sh : s) {
                CHECK(sh.alpha.is_degeneracy());
                CHECK(sh.beta.is_degeneracy());
                for (int j = 0; j <= n + m; ++j) CHECK(sh.alpha(j) + sh.beta(j) == j);
            }
            // sorted by the lexicographic order on gamma value lists
            for (std::size_t i = 1; i < s.size(); ++i)
                CHECK(s[i - 1].gamma.values() < s[i].gamma.values());
        }
    // the minimal shuffle is the partition projection pair
    std::vector<Shuffle> s22 = enumerate_shuffles(2, 2);
    CHECK(s22.front().alpha == part_proj1(2, 2));
    CHECK(s22.front().beta == part_proj2(2, 2));
    CHECK(s22.back().alpha == part_proj2(2, 2));
    CHECK(s22.back().beta == part_proj1(2, 2));
}

TEST_CASE("gamma of a shuffle recovers itself") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (const Shuffle& sh : enumerate_shuffles(n, m))
                CHECK(max_operator_of_simplex(n, m, sh.alpha, sh.beta) == sh.gamma);
}

TEST_CASE("gamma identically zero gives the minimal shuffle") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            Shuffle s = shuffle_of_operator(
                n, m, SimplicialOperator(n - 1, m, std::vector<int>(n, 0)));
            CHECK(s.alpha == part_proj1(n, m));
            CHECK(s.beta == part_proj2(n, m));
        }
}

TEST_CASE("face membership inequality agrees with direct enumeration") {
    // brute-force face search: some operator rho into [n+m] restricts the
    // shuffle to the given pair
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; n + m <= 4; ++m) {
            std::vector<Shuffle> shuffles = enumerate_shuffles(n, m);
            for (int r = 0; r <= n + m; ++r) {
                std::vector<SimplicialOperator> rhos = all_operators(r, n + m);
                for (const auto& a : all_operators(r, n))
                    for (const auto& b : all_operators(r, m)) {
                        SimplicialOperator g = max_operator_of_simplex(n, m, a, b);
                        int hits = 0;
                        for (const Shuffle& sh : shuffles) {
                            bool direct = false;
                            for (const auto& rho : rhos)
                                if (compose(sh.alpha, rho) == a &&
                                    compose(sh.beta, rho) == b) {
                                    direct = true;
                                    break;
                                }
                            CHECK(is_face_of_shuffle(sh, a, b) == direct);
                            if (direct) ++hits;
                        }
                        CHECK(hits >= 1);  // every simplex is a face of some shuffle
                        // gamma is the pointwise-largest witness
                        Shuffle best = shuffle_of_operator(n, m, g);
                        CHECK(is_face_of_shuffle(best, a, b));
                    }
            }
        }
}

TEST_CASE("operator serialization round trip") {
    for (int a = -1; a <= 3; ++a)
        for (int b = a == -1 ? -1 : 0; b <= 3; ++b)
            for (const auto& f : all_operators(a, b))
                CHECK(parse_operator(f.str()) == f);
    CHECK_THROWS_AS(parse_operator("op 1 2 0 1"), ParseError);
}
