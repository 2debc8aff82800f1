#ifndef STRATA_GRAY_TENSOR_HPP
#define STRATA_GRAY_TENSOR_HPP

#include <string>
#include <vector>

#include "strata/stratified.hpp"

namespace strata {

// Does the partition (p, q) of dim cleave the pair <sx; sy>?  "Thin" means
// thin-or-degenerate throughout.
bool cleaves(const StratifiedComplex& X, const StratifiedComplex& Y,
             const NormalSimplex& sx, const NormalSimplex& sy, int p, int q);

// Lax Gray tensor: the product complex rethinned so that a simplex is thin
// iff every partition of its dimension cleaves it.
ProductComplex tensor(const StratifiedComplex& X, const StratifiedComplex& Y);

// Pre-tensor: thin = degenerate, mediator, or crushed cylinder.
ProductComplex pretensor(const StratifiedComplex& X, const StratifiedComplex& Y);

// f (x) g between tensor (or pre-tensor) tables; src and dst must be built
// over the sources and targets of f and g respectively.
StratifiedMap tensor_map(const StratifiedMap& f, const StratifiedMap& g,
                         const ProductComplex& src, const ProductComplex& dst);

struct TensorSimplexClass {
    enum Tag { Degenerate, Mediator, CrushedCylinder, Cylinder, Other } tag = Other;
    int k = -1;  // mediator witness
    int p = -1, q = -1;  // cylinder witness partition
    bool operator==(const TensorSimplexClass&) const = default;
    std::string str() const;
};

// Deterministic classification with the smallest valid witness: degeneracy
// first, then the smallest mediator index, then the smallest cylinder
// partition (crushed when that partition also cleaves).
TensorSimplexClass classify(const StratifiedComplex& X, const StratifiedComplex& Y,
                            const NormalSimplex& sx, const NormalSimplex& sy);

// Witness-chain certification of a t-extension X sub_e Y (same underlying
// complex, tX subset tY).  On success the chain lists, in order, each newly
// thinned simplex with a witness that is k-admissible in the stratification
// current at that step and has thin delta_{k-1}, delta_{k+1} faces.
struct WitnessStep {
    int simplex;  // the simplex whose thinness is being extended
    int witness;  // non-degenerate witness, one dimension up
    int k;
};
struct WitnessChainResult {
    bool success = false;  // failure means "undecided", not "disproved"
    std::vector<WitnessStep> chain;
    std::vector<int> unreached;  // thin in Y, never derived
};
WitnessChainResult t_extension_witness_chain(const StratifiedComplex& X,
                                             const StratifiedComplex& Y);

// The Phi potential on simplices of Delta[n] x Delta[m] used to guide the
// pre-tensor witness chain: sum of alpha(i) + (m - beta(i)).
long long phi_potential(const SimplicialOperator& a, const SimplicialOperator& b);

// Th_{n+m}(X (x) Y) sub_e Th_n(X) (x) Th_m(Y) sub_e Th_{min(n,m)}(X (x) Y),
// with equality of the outer terms when n = m = 0.
struct ThTensorReport {
    bool first_inclusion = false;
    bool second_inclusion = false;
    bool zero_equality_checked = false;
    bool zero_equality = false;
    bool ok() const {
        return first_inclusion && second_inclusion &&
               (!zero_equality_checked || zero_equality);
    }
};
ThTensorReport th_tensor_laws_check(const StratifiedComplex& X,
                                    const StratifiedComplex& Y, int n, int m);

} // namespace strata

#endif
