#ifndef STRATA_GRAY_TENSOR_DETAIL_HPP
#define STRATA_GRAY_TENSOR_DETAIL_HPP

#include <functional>

#include "strata/gray_tensor.hpp"

namespace strata {

// Engine variant with a caller-supplied candidate ranking (lower ranks are
// tried first) and target ordering key.  Used by the pre-tensor chain, where
// the Phi potential and mediator preference guide the search.
using WitnessRank = std::function<long long(int simplex, int witness, int k)>;
using TargetKey = std::function<long long(int simplex)>;

WitnessChainResult t_extension_witness_chain_ranked(const StratifiedComplex& X,
                                                    const StratifiedComplex& Y,
                                                    const WitnessRank& rank,
                                                    const TargetKey& key);

// Chain for pretensor(X,Y) sub_e tensor(X,Y) over the same product table,
// with mediator witnesses preferred and targets in Phi order when both
// factors are standard simplices.
WitnessChainResult pretensor_witness_chain(const StratifiedComplex& X,
                                           const StratifiedComplex& Y,
                                           const ProductComplex& pre,
                                           const ProductComplex& tens);

} // namespace strata

#endif
