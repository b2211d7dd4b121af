#ifndef RAMSEARCH_CANONICAL_HPP
#define RAMSEARCH_CANONICAL_HPP

#include <functional>
#include <span>
#include <vector>

#include "ramsearch/permutation.hpp"

namespace ramsearch {

/// The fixed period-3 element (1,2,3)(4,5,6)...(n-2,n-1,n).
Permutation period3_element(int degree);

/// Streams canonical fixed-point-free involutions (a1,b1)...(ak,bk) on
/// {0,...,degree-1} relative to the fixed period-3 element above.  Writing
/// xi for the number of 3-blocks touched so far, the canonical conditions
/// are: a_{k+1} is the least unused point, and b_{k+1} either lies in an
/// already touched block or is the first point of the next untouched block.
/// Every orbit of the period-3 element's centralizer on the class 2^k is
/// represented by at least one emitted string.
///
/// accept is consulted after every placed pair; returning false prunes the
/// subtree below that prefix.  emit receives each complete involution.
void canonical_involutions(int degree, int pair_count,
                           const std::function<bool(std::span<const PointPair>)>& accept,
                           const std::function<void(std::span<const PointPair>)>& emit);

/// Convenience: collect the full stream (no pruning).
std::vector<std::vector<PointPair>> all_canonical_involutions(int degree);

}  // namespace ramsearch

#endif
