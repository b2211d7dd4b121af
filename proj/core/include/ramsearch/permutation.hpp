#ifndef RAMSEARCH_PERMUTATION_HPP
#define RAMSEARCH_PERMUTATION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramsearch/partition.hpp"

namespace ramsearch {

/// A pair of points, 0-based.
using PointPair = std::pair<int, int>;

/// Bijection of {0,...,n-1}.  Points are 0-based internally; all string
/// I/O uses 1-based cycle notation.  Products compose left to right:
/// (g h)(x) = h(g(x)), so that g5 = g1 g2 g3 g4 means "apply g1 first".
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Involution from disjoint 0-based point pairs; unlisted points are fixed.
  static Permutation from_pairs(int degree, std::span<const PointPair> pairs);
  /// Parses 1-based cycle notation, e.g. "(1,4)(2,7)".  "()" is the identity.
  static Permutation parse(const std::string& cycles, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// 1-based cycle notation, fixed points omitted, cycles sorted by least
  /// moved point and written starting from it.
  std::string to_cycle_string() const;

  bool operator==(const Permutation& other) const = default;

private:
  std::vector<int> images_;
};

/// Left-to-right composition: result(x) = h(g(x)).
Permutation product(const Permutation& g, const Permutation& h);
Permutation product(const Permutation& a, const Permutation& b, const Permutation& c);
Permutation product(const Permutation& a, const Permutation& b, const Permutation& c,
                    const Permutation& d);

/// Multiset of cycle lengths, fixed points included.
Partition cycle_type(const Permutation& g);

/// Orbits of the group generated by gens, each sorted, ordered by least element.
std::vector<std::vector<int>> orbits(std::span<const Permutation> gens);

bool is_transitive(std::span<const Permutation> gens);

}  // namespace ramsearch

#endif
