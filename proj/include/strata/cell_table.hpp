#ifndef STRATA_CELL_TABLE_HPP
#define STRATA_CELL_TABLE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "strata/parity.hpp"

namespace strata {

// How a cell was first obtained: as an atom or as a composite of two earlier
// table entries (the "left" cell comes after the "right" one at level n).
struct CellWitness {
    enum Kind { AtomW, ComposeW } kind = AtomW;
    int elem = -1;   // AtomW
    int level = -1;  // ComposeW
    int left = -1;   // later cell
    int right = -1;  // earlier cell
};

// The enumerated cells of the freely generated omega-category on a parity
// complex: the closure of the atoms under all compositions.  Closure under
// sources and targets comes for free and is verified during the build.
class CellTable {
  public:
    const ParityComplex& complex() const { return complex_; }
    int size() const { return static_cast<int>(cells_.size()); }
    const Cell& cell(int id) const { return cells_[static_cast<std::size_t>(id)]; }
    int dim(int id) const { return dims_[static_cast<std::size_t>(id)]; }
    int top_dim() const { return top_dim_; }
    const CellWitness& witness(int id) const { return witness_[static_cast<std::size_t>(id)]; }
    std::optional<int> find(const Cell& c) const;
    int atom_id(int elem) const { return atom_ids_[static_cast<std::size_t>(elem)]; }

    // id of s_n / t_n; the cell itself when n >= dim(id)
    int src(int n, int id) const;
    int tgt(int n, int id) const;
    // composites looked up in the table; throws NotComposable
    bool composable_ids(int a, int b, int n) const;
    int compose_ids(int a, int b, int n) const;

    bool is_identity_at(int id, int n) const { return dim(id) <= n; }

    // Re-evaluates a witness tree by the composition formula.
    Cell eval_witness(int id) const;

    friend CellTable enumerate_cells(const ParityComplex& C, int dim_cap,
                                     std::size_t budget);

  private:
    ParityComplex complex_;  // owned: tables outlive their construction site
    std::vector<Cell> cells_;
    std::vector<int> dims_;
    std::vector<CellWitness> witness_;
    std::vector<int> atom_ids_;
    std::map<Cell, int> index_;
    std::vector<std::vector<int>> src_, tgt_;  // [n][id], n < top_dim_
    int top_dim_ = 0;
};

// Closure of the atoms under all binary compositions, with deterministic
// candidate ordering (composite dimension, level descending, operand ids).
CellTable enumerate_cells(const ParityComplex& C, int dim_cap = -1,
                          std::size_t budget = 1000000);

// The congruence generated by identifying the atom of every thin element
// with its codimension-one source, closed under sources, targets and
// composition on class members.
struct CollapseQuotient {
    std::vector<int> cls;  // cell id -> class id (class ids are dense, 0-based)
    int classes = 0;
    std::vector<std::vector<int>> members;  // per class
};
CollapseQuotient collapse(const StratifiedParityComplex& C, const CellTable& table);

} // namespace strata

#endif
