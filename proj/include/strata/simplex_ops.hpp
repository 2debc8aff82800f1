#ifndef STRATA_SIMPLEX_OPS_HPP
#define STRATA_SIMPLEX_OPS_HPP

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/errors.hpp"

namespace strata {

// A monotone map between finite ordinals [dom] -> [cod], stored as its full
// value list.  The empty ordinal [-1] is allowed; it is the unit for the
// ordinal sum.  Equality is structural.
class SimplicialOperator {
  public:
    SimplicialOperator() : dom_(-1), cod_(-1) {}
    SimplicialOperator(int dom, int cod, std::vector<int> values);

    static SimplicialOperator identity(int n);

    int dom() const { return dom_; }
    int cod() const { return cod_; }
    const std::vector<int>& values() const { return values_; }

    // value at i, 0 <= i <= dom
    int operator()(int i) const;

    bool is_identity() const;
    bool is_face() const;        // injective
    bool is_degeneracy() const;  // surjective
    bool in_image(int j) const;

    // x degenerate at k detection on operators: values_[k] == values_[k+1]
    bool collapses_at(int k) const;

    std::vector<int> image() const;  // sorted list of values hit

    auto operator<=>(const SimplicialOperator&) const = default;

    std::string str() const;  // "op <dom> <cod> : v0 v1 ..."

  private:
    int dom_;
    int cod_;
    std::vector<int> values_;
};

// g after f (pointwise g(f(i))); throws CompositionMismatch unless f.cod == g.dom.
SimplicialOperator compose(const SimplicialOperator& g, const SimplicialOperator& f);

// Elementary operators.
SimplicialOperator face_op(int n, int j);        // delta^n_j : [n-1] -> [n]
SimplicialOperator degeneracy_op(int n, int j);  // sigma^n_j : [n+1] -> [n]
SimplicialOperator vertex_op(int n, int i);      // epsilon^n_i : [0] -> [n]
SimplicialOperator terminal_op(int n);           // eta^n : [n] -> [0]

// Partition operators for p + q = n.
SimplicialOperator part_inj1(int p, int q);  // [p] -> [p+q], i |-> i
SimplicialOperator part_inj2(int p, int q);  // [q] -> [p+q], j |-> j+p
SimplicialOperator part_proj1(int p, int q); // [p+q] -> [p]
SimplicialOperator part_proj2(int p, int q); // [p+q] -> [q]

// Unique factorization alpha = face . degeneracy.
struct EzFactorization {
    SimplicialOperator face;        // injective
    SimplicialOperator degeneracy;  // surjective
};
EzFactorization ez_factorize(const SimplicialOperator& alpha);

// alpha°(i) = m - alpha(n - i); strictly involutive.
SimplicialOperator dual(const SimplicialOperator& alpha);

// Direct sum: the first argument acts on the low block, the second on the
// high block.  Unit is identity(-1); strictly associative.
SimplicialOperator ordinal_sum(const SimplicialOperator& low, const SimplicialOperator& high);

// Pointwise sum [r] -> [n+m] of a: [r]->[n], b: [r]->[m].
SimplicialOperator pointwise_sum(const SimplicialOperator& a, const SimplicialOperator& b);

struct Adjoints {
    std::optional<SimplicialOperator> left;   // exists iff alpha(n) = m
    std::optional<SimplicialOperator> right;  // exists iff alpha(0) = 0
};
Adjoints adjoints(const SimplicialOperator& alpha);

// A shuffle of Delta[n] x Delta[m]: a pair of degeneracy operators with
// alpha(j) + beta(j) = j, derived from its gamma operator [n-1] -> [m].
struct Shuffle {
    int n = 0;
    int m = 0;
    SimplicialOperator alpha;  // [n+m] -> [n]
    SimplicialOperator beta;   // [n+m] -> [m]
    SimplicialOperator gamma;  // [n-1] -> [m] (empty when n = 0)
};

// The shuffle determined by gamma: [n-1] -> [m] via the plateau formula.
Shuffle shuffle_of_operator(int n, int m, const SimplicialOperator& gamma);

// All shuffles sorted by the lexicographic order on gamma value lists.
std::vector<Shuffle> enumerate_shuffles(int n, int m);

// The pointwise-largest gamma whose shuffle has <a;b> as a face.
SimplicialOperator max_operator_of_simplex(int n, int m,
                                           const SimplicialOperator& a,
                                           const SimplicialOperator& b);

// Face membership by the plateau inequalities gamma(a(l)-1) <= b(l) <= gamma(a(l)).
bool is_face_of_shuffle(const Shuffle& s, const SimplicialOperator& a,
                        const SimplicialOperator& b);

// Exhaustive verification of the three elementary identity families for all
// valid indices with ambient ordinal <= n_max.  Returns violation messages
// (expected empty) and counts instances checked.
struct IdentityReport {
    long long instances = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
IdentityReport simplicial_identities_check(int n_max);

// All monotone maps [a] -> [b] in lexicographic order of value lists (a >= -1).
std::vector<SimplicialOperator> all_operators(int a, int b);
std::vector<SimplicialOperator> all_face_operators(int a, int b);
std::vector<SimplicialOperator> all_degeneracy_operators(int a, int b);

SimplicialOperator parse_operator(const std::string& line);

} // namespace strata

#endif
