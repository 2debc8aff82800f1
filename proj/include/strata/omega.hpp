#ifndef STRATA_OMEGA_HPP
#define STRATA_OMEGA_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "strata/cell_table.hpp"
#include "strata/gray_tensor.hpp"
#include "strata/stratified.hpp"

namespace strata {

// A finite omega-category given by explicit operation tables.
class FiniteOmegaCat {
  public:
    int size() const { return static_cast<int>(dims_.size()); }
    int max_dim() const { return max_dim_; }
    int dim(int c) const { return dims_[static_cast<std::size_t>(c)]; }
    int src(int n, int c) const;
    int tgt(int n, int c) const;
    bool composable(int a, int b, int n) const { return tgt(n, b) == src(n, a); }
    std::optional<int> compose(int a, int b, int n) const;  // a after b
    const std::string& label(int c) const { return labels_[static_cast<std::size_t>(c)]; }

    // Checks every omega-category law on the tables; throws LawViolation.
    // Associativity and interchange stop after triple_budget probes.
    void validate(long long triple_budget = 20000000) const;

    friend FiniteOmegaCat from_cell_table(const CellTable& table,
                                          const CollapseQuotient* quotient);
    friend FiniteOmegaCat sup_cat(const FiniteOmegaCat& C, int n);

  private:
    int max_dim_ = 0;
    std::vector<int> dims_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> src_, tgt_;       // [n][c] for n < max_dim_
    std::map<std::tuple<int, int, int>, int> comp_;  // (n, a, b) -> c
};

FiniteOmegaCat from_cell_table(const CellTable& table,
                               const CollapseQuotient* quotient = nullptr);

// Restriction to the n-cells.
FiniteOmegaCat sup_cat(const FiniteOmegaCat& C, int n);

// An omega-functor from an oriental's cell table into a finite target,
// described by its images on atoms.
struct OmegaFunctor {
    const CellTable* source = nullptr;
    const FiniteOmegaCat* target = nullptr;
    std::vector<int> atom_images;  // per source parity complex element

    int eval(int cell_id) const;  // through the witness tree
    bool operator==(const OmegaFunctor& o) const { return atom_images == o.atom_images; }
    bool operator<(const OmegaFunctor& o) const { return atom_images < o.atom_images; }
};

// All functors from the oriental on simplex_parity(n) (its table supplied)
// into C; when thin_top is set, the image of the top atom must be a cell of
// dimension < n.  Results sorted by atom-image vectors.
std::vector<OmegaFunctor> enumerate_functors(const CellTable& oriental,
                                             const FiniteOmegaCat& C, bool thin_top,
                                             std::size_t budget = 1000000);

// Street's stratified nerve, truncated at dimension d.
struct Nerve {
    StratifiedComplex complex;
    std::vector<const CellTable*> orientals;        // borrowed, per dimension
    std::vector<std::vector<OmegaFunctor>> levels;  // all functors per dim
    std::vector<OmegaFunctor> simplex_functor;      // per non-deg simplex id
};
Nerve nerve(const FiniteOmegaCat& C, int d, const std::vector<const CellTable*>& orientals,
            std::size_t budget = 1000000);

// Precomputes oriental cell tables 0..d.
std::vector<CellTable> oriental_tables(int d);

// The bridge between non-degenerate cylinders of Delta[n] (x) Delta[m] and
// the elements of the product parity complex, with the atom-image
// characterization through diag, and the thinness correspondence for
// stratified fixtures.
struct BridgeReport {
    struct Level {
        int r = 0;
        int cylinders = 0;
        int elements = 0;
        bool bijection = false;
    };
    std::vector<Level> levels;
    bool bijection_ok = false;
    bool relevance_ok = false;
    bool diag_ok = false;
    bool thinness_checked = false;
    bool thinness_ok = false;
    bool ok() const {
        return bijection_ok && relevance_ok && diag_ok &&
               (!thinness_checked || thinness_ok);
    }
};
// N and M must have standard simplices Delta[n], Delta[m] underneath
// (delta(), delta_t(), adm() and friends qualify).
BridgeReport tensor_bridge_check(const StratifiedComplex& N, const StratifiedComplex& M);

// Recovers the simplicial operator carried by a simplex of delta(n).
SimplicialOperator delta_face_operator(const StratifiedComplex& deltaN, int id);

// The stratified parity complex of a stratified standard simplex.
StratifiedParityComplex to_stratified_parity(const StratifiedComplex& N,
                                             const SimplexParity& S);

} // namespace strata

#endif
