#ifndef RAMSEARCH_BLOCK_SYSTEM_HPP
#define RAMSEARCH_BLOCK_SYSTEM_HPP

#include <optional>
#include <span>
#include <vector>

#include "ramsearch/permutation.hpp"

namespace ramsearch {

/// Partition of {0,...,n-1} into equal-size blocks preserved by a
/// generator set.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // sorted by least element, each sorted
  std::vector<int> block_of;             // point -> block index

  static BlockSystem from_blocks(int degree, std::vector<std::vector<int>> blocks);

  int degree() const { return static_cast<int>(block_of.size()); }
  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }

  /// True iff g maps every block onto a block.
  bool preserved_by(const Permutation& g) const;
};

/// Smallest-beta block system with blocks of size 2, if one exists.
/// Candidates beta are tried in ascending order; for each, the minimal
/// block containing {0, beta} is computed by union-find refinement under
/// the generators.  Throws if the generators are not transitive.
std::optional<BlockSystem> pair_block_system(std::span<const Permutation> gens);

/// Induced permutations of the block indices.  Throws if some generator
/// does not preserve the system.
std::vector<Permutation> block_action(std::span<const Permutation> gens, const BlockSystem& bs);

/// Order of the generated group by breadth-first closure, or nullopt once
/// more than cap elements are seen.
std::optional<long long> group_order_small(std::span<const Permutation> gens,
                                           long long cap = 10000);

/// The Y | Z split of a D_n witness tuple: g1(Y) = g2(Y) = Z and
/// g3(Z) = g4(Z) = Z.  Throws std::invalid_argument naming the first
/// violated hypothesis (degree, cycle types, tail transpositions,
/// transitivity).  When the hypotheses hold a split always exists.
struct DnSplit {
  std::vector<int> y, z;
};
std::optional<DnSplit> verify_dn_partition(const Permutation& g1, const Permutation& g2,
                                           const Permutation& g3, const Permutation& g4, int n);

}  // namespace ramsearch

#endif
