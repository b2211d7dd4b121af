#ifndef RAMSEARCH_RAMIFICATION_HPP
#define RAMSEARCH_RAMIFICATION_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "ramsearch/partition.hpp"

namespace ramsearch {

/// One partition per branch point, all of the same degree.  Unramified
/// points (type 1^degree) are legal entries and are preserved.
struct RamificationProfile {
  int degree = 0;
  std::vector<Partition> branch_types;

  RamificationProfile() = default;
  RamificationProfile(int degree, std::vector<Partition> branch_types);

  bool operator==(const RamificationProfile&) const = default;
};

/// (E, F) for a pair of branch types: E sums gcd(e,f) * (lcm(e,f)/e - 1)
/// over all part pairs, F the same with f in the denominator.  The degrees
/// of the two partitions may differ.
std::pair<long long, long long> pair_ram_degrees(const Partition& pl, const Partition& pm);

/// True iff the profile's ramification degrees sum to 2*degree - 2.
bool check_riemann_hurwitz(const RamificationProfile& profile);

/// True iff the pair satisfies the inhomogeneity bound: either both types
/// are homogeneous of the same index, or max(E,F) >= 2 (>= 3 once both
/// degrees are >= 7).  Requires both degrees >= 4.
bool check_inhomo_bound(const Partition& pl, const Partition& pm);

/// The numeric scan record (l, m, R1, R2, S1, S2, a1, a2, b1, b2).
struct ConstraintTuple {
  int l, m, r1, r2, s1, s2, a1, a2, b1, b2;

  std::array<int, 10> as_array() const { return {l, m, r1, r2, s1, s2, a1, a2, b1, b2}; }
  bool operator==(const ConstraintTuple&) const = default;
  std::strong_ordering operator<=>(const ConstraintTuple& o) const {
    return as_array() <=> o.as_array();
  }
};

/// Scans the degree-7..31 constraint box and returns the tuples that do
/// NOT satisfy (R2 = 1 and m <= l+1 and 1 <= S1+S2 <= 2), sorted
/// lexicographically.  There are exactly nine.
std::vector<ConstraintTuple> enumerate_exceptional_tuples();

/// Ordered pairs of 5-tuples of partitions of 6: the first tuple weakly
/// increasing with every entry ramified (at most 5 parts), both sides with
/// total ramification <= 10, and sum E_i <= 10, sum F_i <= 10.
std::vector<std::pair<RamificationProfile, RamificationProfile>> enumerate_degree6_pairs();

/// All 2 <= r3 <= r4 <= r5 <= n_max with 1/r3 + 1/r4 + 1/r5 > 1.
std::vector<std::array<int, 3>> solve_trivalent_dynkin(int n_max);

enum class Family { Dn, E6, E7, E8 };

/// The (pi_L, pi_M) pair for the named family; n is the D_n parameter
/// (>= 2) and is ignored for E6/E7/E8.
std::pair<RamificationProfile, RamificationProfile> family_profile(Family family, int n = 0);

}  // namespace ramsearch

#endif
