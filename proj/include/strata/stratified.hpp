#ifndef STRATA_STRATIFIED_HPP
#define STRATA_STRATIFIED_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/simplex_ops.hpp"

namespace strata {

// A simplex in Eilenberg-Zilber normal form: a non-degenerate base acted on
// by a degeneracy operator (identity for the non-degenerate simplices
// themselves).
struct NormalSimplex {
    int base = -1;
    SimplicialOperator degen;  // surjective, cod = dim(base)

    int dim() const { return degen.dom(); }
    bool is_degenerate() const { return !degen.is_identity(); }
    auto operator<=>(const NormalSimplex&) const = default;
};

// A finite truncated stratified simplicial set presented by its
// non-degenerate simplices, EZ-normal face assignments, and thinness flags.
// Simplices above dim_bound are implicitly degenerate.
class StratifiedComplex {
  public:
    struct Simplex {
        std::string name;
        int dim = 0;
        bool thin = false;
        // faces[i] = EZ pair for this . delta_i, i in [0, dim]; empty for dim 0
        std::vector<NormalSimplex> faces;
        bool operator==(const Simplex&) const = default;
    };

    StratifiedComplex() = default;

    int dim_bound() const { return dim_bound_; }
    int size() const { return static_cast<int>(simplices_.size()); }
    const Simplex& at(int id) const { return simplices_[static_cast<std::size_t>(id)]; }
    int dim(int id) const { return at(id).dim; }
    bool thin(int id) const { return at(id).thin; }
    const std::string& name(int id) const { return at(id).name; }
    std::optional<int> find(const std::string& name) const;

    std::vector<int> simplices_of_dim(int d) const;

    // Right action x . alpha in normal form; cod(alpha) must equal dim(x).
    NormalSimplex act(int base, const SimplicialOperator& alpha) const;
    NormalSimplex act(const NormalSimplex& s, const SimplicialOperator& alpha) const;

    // thin-or-degenerate, the sense of "thin" used by every tensor predicate
    bool thin_simplex(const NormalSimplex& s) const {
        return s.is_degenerate() || thin(s.base);
    }

    // All simplices of dimension d in EZ normal form (degenerate ones included).
    std::vector<NormalSimplex> normal_simplices_of_dim(int d) const;

    // Non-degenerate base ids of faces of x, x included.
    std::vector<int> face_closure(int base) const;

    bool operator==(const StratifiedComplex&) const = default;

    // ---- construction ----
    int add_simplex(const std::string& name, int d, bool thin);
    void set_face(int id, int i, NormalSimplex f);
    void set_thin(int id, bool t);
    void set_dim_bound(int d) { dim_bound_ = d; }
    // Checks the structural invariants: faces total, simplicial identities
    // after EZ normalization, no thin vertices.  Throws LawViolation.
    void validate() const;

  private:
    int dim_bound_ = 0;
    std::vector<Simplex> simplices_;
    std::map<std::string, int> by_name_;
};

// ---- standard stratified sets ----
StratifiedComplex delta(int n);                 // minimal stratification
StratifiedComplex delta_t(int n);               // top simplex thin
StratifiedComplex boundary(int n);              // boundary of delta(n)
StratifiedComplex horn(int n, int k);           // k-horn, 0 <= k <= n
StratifiedComplex adm(int n, int k);            // k-divided faces thin
StratifiedComplex adm_horn(int n, int k);       // admissible horn
StratifiedComplex adm_prime(int n, int k);      // + delta_{k-1}, delta_{k+1} thin
StratifiedComplex adm_dprime(int n, int k);     // + delta_k thin

// ---- operations ----
StratifiedComplex dual(const StratifiedComplex& X);
StratifiedComplex th(const StratifiedComplex& X, int n);   // thin everything above n
StratifiedComplex sup(const StratifiedComplex& X, int n);  // n-superstructure

// Connected components; component id = minimal member vertex id.
std::vector<int> pi0(const StratifiedComplex& X);

// Product substrate: non-degenerate simplices are pairs of normal simplices
// with no common degeneracy index; thin = both coordinates thin-or-degenerate.
struct ProductComplex {
    StratifiedComplex complex;
    // per product simplex id, the coordinate normal simplices
    std::vector<std::pair<NormalSimplex, NormalSimplex>> coords;
    // lookup of a coordinate pair among the non-degenerate product simplices
    std::map<std::pair<NormalSimplex, NormalSimplex>, int> index;

    // EZ normal form, inside the product, of an arbitrary coordinate pair
    NormalSimplex normalize(const NormalSimplex& sx, const NormalSimplex& sy) const;
};
ProductComplex product(const StratifiedComplex& X, const StratifiedComplex& Y);

// Classical decalage Dec(X)_n = X_{n+1}, minimally stratified, with its
// counit (restriction along the top face).
struct Decalage {
    StratifiedComplex complex;
    // per Dec-simplex id, the underlying simplex of X in normal form
    std::vector<NormalSimplex> underlying;
};
Decalage decalage(const StratifiedComplex& X);

// A stratified map, stored on non-degenerate simplices of the source.
struct StratifiedMap {
    const StratifiedComplex* source = nullptr;
    const StratifiedComplex* target = nullptr;
    std::vector<NormalSimplex> images;  // indexed by source simplex id

    NormalSimplex apply(const NormalSimplex& s) const;
    void validate() const;  // face commutation, dimensions, thinness
};

StratifiedMap dec_counit(const StratifiedComplex& X, const Decalage& D);

struct MapClassification {
    bool regular = false;
    bool entire = false;
    bool inclusion = false;
    bool iso() const { return regular && entire && inclusion; }
};
MapClassification classify_map(const StratifiedMap& f);

// The split-coequalizer reconstruction of X_n from Dec(X): components of the
// graph with vertices X_{n+1} and edges X_{n+2}.  Returns true when the
// quotient is in bijection with X_n via the top face.
bool decalage_reconstructs_level(const StratifiedComplex& X, int n);

// ---- SPC text format ----
std::string write_spc(const StratifiedComplex& X);
StratifiedComplex read_spc(const std::string& text);

} // namespace strata

#endif
