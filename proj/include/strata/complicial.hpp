#ifndef STRATA_COMPLICIAL_HPP
#define STRATA_COMPLICIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "strata/stratified.hpp"

namespace strata {

// Injective operators into [n] whose image contains k-1, k, k+1 (the
// k-divided faces, the identity included).
std::vector<SimplicialOperator> k_divided_face_operators(int n, int k);

// s is k-admissible iff s.alpha is thin-or-degenerate for every k-divided
// face operator alpha.  The mask variant evaluates thinness against an
// explicit flag vector instead of the complex's own stratification.
bool is_k_admissible(const StratifiedComplex& X, const NormalSimplex& s, int k);
bool is_k_admissible_under(const StratifiedComplex& X, const std::vector<char>& thin,
                           const NormalSimplex& s, int k);

struct PrecomplicialReport {
    // violating pairs: a k-admissible with thin delta_{k-1}, delta_{k+1}
    // faces whose delta_k face is not thin
    std::vector<std::pair<int, int>> violations;  // (simplex id, k)
    bool ok() const { return violations.empty(); }
};
PrecomplicialReport is_precomplicial(const StratifiedComplex& X);

// Least fixpoint of the thinning step of the pre-complicial reflector.
StratifiedComplex lp_reflect(const StratifiedComplex& X);

// An (n-1)-dimensional k-horn: faces indexed by [n] minus {k}.
struct HornInstance {
    int n = 0;
    int k = 0;
    std::map<int, NormalSimplex> faces;
};

// All admissible k-horns of the given shape, in lexicographic face order.
std::vector<HornInstance> admissible_horns(const StratifiedComplex& X, int n, int k);

struct FillerSets {
    std::vector<NormalSimplex> all;
    std::vector<NormalSimplex> thin;
    std::vector<NormalSimplex> admissible;  // k-admissible fillers
};
FillerSets fillers(const StratifiedComplex& X, const HornInstance& h);

struct ComplicialReport {
    bool precomplicial = false;
    int horns_checked = 0;
    int horns_skipped_at_bound = 0;  // fillers would live above dim_bound
    std::vector<std::string> failures;
    // horns where the thin-filler and admissible-filler readings disagree;
    // reported as a finding, not a failure
    std::vector<std::string> filler_disagreements;
    bool ok() const { return precomplicial && failures.empty(); }
};
// Compliciality within the truncation bound: pre-complicial, unique thin
// filler for every admissible horn whose filler dimension fits the bound,
// and every thin 1-simplex degenerate.  Horn shapes (n, k) may be fanned
// out across workers; reports are merged in canonical order either way.
ComplicialReport is_complicial(const StratifiedComplex& X, int bound = -1,
                               int workers = 1);

// x is pre-degenerate at k when x.alpha is thin for every face operator
// alpha whose image contains k and k+1.
bool is_pre_degenerate_at(const StratifiedComplex& X, const NormalSimplex& s, int k);

struct WellTemperedReport {
    std::vector<std::pair<NormalSimplex, int>> violations;  // (simplex, k)
    bool ok() const { return violations.empty(); }
};
WellTemperedReport is_well_tempered(const StratifiedComplex& X);

} // namespace strata

#endif
