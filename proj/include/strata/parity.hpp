#ifndef STRATA_PARITY_HPP
#define STRATA_PARITY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/simplex_ops.hpp"

namespace strata {

// Subsets of parity complex elements are kept as sorted id vectors.
using ElemSet = std::vector<int>;

ElemSet set_union(const ElemSet& a, const ElemSet& b);
ElemSet set_diff(const ElemSet& a, const ElemSet& b);
ElemSet set_intersect(const ElemSet& a, const ElemSet& b);
bool set_contains(const ElemSet& a, int x);

// A finite graded set with disjoint non-empty negative/positive face sets
// for every element of dimension >= 1.
class ParityComplex {
  public:
    int size() const { return static_cast<int>(dims_.size()); }
    int dim(int x) const { return dims_[static_cast<std::size_t>(x)]; }
    int top_dim() const;
    const std::string& name(int x) const { return names_[static_cast<std::size_t>(x)]; }
    std::optional<int> find(const std::string& name) const;
    const ElemSet& minus(int x) const { return minus_[static_cast<std::size_t>(x)]; }
    const ElemSet& plus(int x) const { return plus_[static_cast<std::size_t>(x)]; }
    const ElemSet& faces(int x, int sign) const { return sign < 0 ? minus(x) : plus(x); }

    std::vector<int> elements_of_dim(int d) const;

    int add_element(const std::string& name, int d);
    void set_faces(int x, ElemSet minus, ElemSet plus);
    void validate() const;  // grading and disjoint non-empty face sets

  private:
    std::vector<std::string> names_;
    std::vector<int> dims_;
    std::vector<ElemSet> minus_, plus_;
    std::map<std::string, int> by_name_;
};

struct StratifiedParityComplex {
    ParityComplex base;
    std::vector<char> thin;  // per element; only dims >= 1 may be thin
    void validate() const;
};

// S^sign over a subset; S-minus-plus is (S^- \ S^+, S^+ \ S^-).
ElemSet faces_of_set(const ParityComplex& C, const ElemSet& S, int sign);
std::pair<ElemSet, ElemSet> s_minus_plus(const ParityComplex& C, const ElemSet& S);

bool orthogonal(const ParityComplex& C, int x, int y);
bool well_formed(const ParityComplex& C, const ElemSet& S);

// S moves M to P:  P = (M u S+) \ S-  and  M = (P u S-) \ S+.
bool moves(const ParityComplex& C, const ElemSet& S, const ElemSet& M, const ElemSet& P);

struct AxiomReport {
    std::vector<std::string> axiom1, axiom2, axiom3a, axiom3b, filledtri, relevance;
    bool ok() const {
        return axiom1.empty() && axiom2.empty() && axiom3a.empty() && axiom3b.empty() &&
               filledtri.empty() && relevance.empty();
    }
};
AxiomReport verify_axioms(const ParityComplex& C);

// A cell <M; P> of the omega-category on C; sets are graded by the complex.
struct Cell {
    ElemSet m, p;
    auto operator<=>(const Cell&) const = default;
};

int cell_dim(const ParityComplex& C, const Cell& c);
Cell atom(const ParityComplex& C, int x);  // <mu(x); pi(x)>; throws NotRelevant
bool is_cell_direct(const ParityComplex& C, const Cell& c);
bool is_cell_inductive(const ParityComplex& C, const Cell& c);
bool is_cell(const ParityComplex& C, const Cell& c);  // both routes, must agree

Cell cell_source(const ParityComplex& C, const Cell& c, int n);
Cell cell_target(const ParityComplex& C, const Cell& c, int n);
bool composable(const ParityComplex& C, const Cell& a, const Cell& b, int n);
// a after b: requires t_n(b) = s_n(a).
Cell cell_compose(const ParityComplex& C, const Cell& a, const Cell& b, int n);

// Element-to-set morphisms respecting dimension, with the conditions of a
// parity complex morphism: singletons at dimension 0, and f(x) well formed
// moving f(x-) to f(x+).
struct ParityMorphism {
    const ParityComplex* source = nullptr;
    const ParityComplex* target = nullptr;
    std::vector<ElemSet> images;

    ElemSet apply(const ElemSet& S) const;
    void validate() const;
};

ParityMorphism identity_morphism(const ParityComplex& C);
ParityMorphism compose(const ParityMorphism& g, const ParityMorphism& f);
Cell apply_morphism(const ParityMorphism& f, const Cell& c);

// Stratified morphism: thin elements map to sets of thin elements.
struct StratifiedParityMorphism {
    ParityMorphism map;
    const StratifiedParityComplex* source = nullptr;
    const StratifiedParityComplex* target = nullptr;
    void validate() const;
};

// ---- standard complexes and morphisms ----

// The simplex parity complex Delta~[n]: elements are the non-empty subsets
// of [n]; the faces of parity + (resp. -) drop an even (resp. odd) vertex.
struct SimplexParity {
    ParityComplex complex;
    std::vector<std::vector<int>> verts;  // per element, its vertex list
    std::map<std::vector<int>, int> index;

    int element(const std::vector<int>& vertices) const;
};
SimplexParity simplex_parity(int n);
StratifiedParityComplex simplex_parity_thin(int n);  // top element thin

// Delta~(alpha): v |-> {alpha(v)} when dimension is preserved, else empty.
ParityMorphism operator_morphism(const SimplicialOperator& alpha,
                                 const SimplexParity& src, const SimplexParity& tgt);

struct ParityProduct {
    ParityComplex complex;
    std::vector<std::pair<int, int>> coords;  // per element, factor element ids
    std::map<std::pair<int, int>, int> index;
};
ParityProduct parity_product(const ParityComplex& C, const ParityComplex& D);
StratifiedParityComplex parity_product_thin(const StratifiedParityComplex& C,
                                            const StratifiedParityComplex& D);
// f x g on a product: <x;y> |-> f(x) x g(y).
ParityMorphism morphism_product(const ParityMorphism& f, const ParityMorphism& g,
                                const ParityProduct& sourceP, const ParityProduct& targetP);

// Thins every element of dimension > n.
StratifiedParityComplex th_parity(const StratifiedParityComplex& C, int n);
StratifiedParityComplex minimal_stratification(const ParityComplex& C);

struct Suspension {
    ParityComplex complex;
    // element of Sigma_n C: either a 0-element (pair {-1, i}) or <x; i>
    std::vector<std::pair<int, int>> coords;  // (source element or -1, weight)
    std::map<std::pair<int, int>, int> index;
};
Suspension suspension(int n, const ParityComplex& C);
// Sigma_alpha C : Sigma_n C -> Sigma_m C for alpha : [n] -> [m].
ParityMorphism suspension_operator(const SimplicialOperator& alpha, const ParityComplex& C,
                                   const Suspension& Sn, const Suspension& Sm);
// Sigma_n f for a morphism f.
ParityMorphism suspension_morphism(int n, const ParityMorphism& f, const Suspension& SnC,
                                   const Suspension& SnD);

// diag : Delta~[n] -> Delta~[n] x Delta~[n], v0..vr |-> {<v0..vs; vs..vr>}.
ParityMorphism diag_morphism(const SimplexParity& simplex, const ParityProduct& prod);

// k^{C,m} : C x Th_1(Delta~[m]) -> Sigma_m C, where prod is the product of
// C's underlying complex with simplex_parity(m) and simplex carries the
// second factor's vertex lists.
StratifiedParityMorphism k_morphism(const StratifiedParityComplex& C,
                                    const SimplexParity& simplex,
                                    const ParityProduct& prod,
                                    const StratifiedParityComplex& prodThin,
                                    const Suspension& SmC,
                                    const StratifiedParityComplex& SmCThin);

// ---- PCX text format ----
std::string write_pcx(const StratifiedParityComplex& C);
StratifiedParityComplex read_pcx(const std::string& text);

} // namespace strata

#endif
