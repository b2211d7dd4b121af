#ifndef RAMSEARCH_TUPLE_SEARCH_HPP
#define RAMSEARCH_TUPLE_SEARCH_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsearch/block_system.hpp"
#include "ramsearch/partition.hpp"
#include "ramsearch/permutation.hpp"

namespace ramsearch {

enum class CaseId { E6, E7, E8 };

std::string case_name(CaseId id);
std::optional<CaseId> case_from_name(const std::string& name);

/// Class data for one of the three searches: degrees 24/48/120, generator
/// types (2^{n/2}, 3^{n/3}, g3 type, near-identity tails) and the list of
/// cycle types g1 g2 may take.
struct SearchCase {
  int degree = 0;
  Partition g1_type, g2_type, g3_type, tail_type;
  std::vector<Partition> allowed;

  static SearchCase for_case(CaseId id);
};

/// The cycle types g1 g2 can have, i.e. the types reachable as a product
/// of a g3-class element and two transpositions, as printed.
std::vector<Partition> allowed_product_types(CaseId id);

/// Component census of the partially defined map x -> g2(g1(x)) where g1
/// is known only on the placed pairs.  Path lengths are vertex counts and
/// include the terminal image vertex.
struct PartialGraph {
  std::vector<int> closed_cycles;  // descending
  std::vector<int> open_paths;     // descending, vertex counts
  int untouched = 0;
};

PartialGraph partial_components(std::span<const PointPair> prefix, const Permutation& g2);

/// Necessary-conditions test: true iff some allowed type could still arise
/// from this census.  Closed cycles must be a sub-multiset of the type and
/// the open paths must pack into the remaining parts (a part of size c
/// absorbs paths of total vertex count <= c).  Never rejects a completable
/// prefix.
bool feasible(const PartialGraph& pg, std::span<const Partition> allowed);

struct Completion {
  Permutation g3, g4, g5;
};

/// All (g3, g4, g5) with cycle_type(g3) the case's g3 type, g4 and g5
/// transpositions and g1 g2 g3 g4 = g5.  Empty when cycle_type(g1 g2) is
/// not an allowed product type.
std::vector<Completion> complete_pair(const Permutation& g1, const Permutation& g2,
                                      const SearchCase& sc);

/// One record per canonical g1 admitting a transitive completion.
struct Solution {
  std::string case_id;
  Permutation g1, g2, g3, g4, g5;
  Partition product_type;
  BlockSystem blocks;
  long long block_action_order = 0;
  bool transitive = true;
};

struct RunOptions {
  int workers = 0;   // 0: RAMSEARCH_WORKERS env, else hardware concurrency
  bool prune = true; // false: the oracle pipeline (public canonical stream, no pruning)
};

/// Streams canonical g1 candidates, prunes by component feasibility,
/// completes, keeps the transitive ones, and attaches the pair block
/// system and its action order.  Output is sorted by g1's pair sequence.
std::vector<Solution> run_case(CaseId id, const RunOptions& options = {});

enum class XReading { Two, Trivial };

/// Exhaustive search for 5-tuples in S_10 of types 1^8 x, 1^6 2^2, 2^5,
/// 2^5, 2^5 multiplying to 1 (x = 2 or the trivial reading per reading),
/// with the first element pinned to its class representative.  Expected
/// empty when transitivity is required.
std::vector<std::array<Permutation, 5>> s10_search(XReading reading,
                                                   bool require_transitive = true,
                                                   int workers = 0);

/// Transitive witness tuples (g1, g2, g3, g4) of types 2^{2n}, 2^{2n},
/// n^4, 1^{4n-2}2 with g1 g2 g3 g4 a transposition, for n in {2, 3}.
/// g3 is pinned to (1,...,n)(n+1,...,2n)...; for n = 3 the canonical
/// involution stream supplies g1.
std::vector<std::array<Permutation, 4>> dn_witness_search(int n);

}  // namespace ramsearch

#endif
