#ifndef RAMSEARCH_PARTITION_HPP
#define RAMSEARCH_PARTITION_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace ramsearch {

/// Integer partition, parts stored weakly decreasing.  Doubles as a
/// ramification type (parts = ramification indices over one branch point)
/// and as a permutation cycle type.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// r^k, e.g. repeated(3, 8) is 3^8.
  static Partition repeated(int part, int count);

  /// Accepts exponent notation ("1^4 2", "3^4 6^2") and comma form
  /// ("2,1,1,1,1", optionally parenthesized).
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Exponent notation with parts ascending: "1^4 2".
  std::string to_string() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

  /// Total order: by degree, then lexicographic on the weakly decreasing
  /// part vectors.  Within one degree this makes 1^n least and (n) greatest.
  std::strong_ordering operator<=>(const Partition& other) const;

private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// All partitions of n (at most max_parts parts if given), each exactly
/// once, largest first in the order above.
std::vector<Partition> partitions_of(int n, std::optional<int> max_parts = std::nullopt);

/// degree - number of parts, i.e. the sum of (part - 1) over all parts.
int ram_degree(const Partition& p);

/// Number of parts equal to 1.
int fixed_count(const Partition& p);

/// The common value of all parts, or nullopt if the parts differ.
std::optional<int> homogeneity_index(const Partition& p);

}  // namespace ramsearch

#endif
