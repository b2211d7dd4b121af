#include "ramsearch/ramification.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ramsearch {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

RamificationProfile::RamificationProfile(int degree_in, std::vector<Partition> branch_types_in)
    : degree(degree_in), branch_types(std::move(branch_types_in)) {
  if (degree < 1) throw std::invalid_argument("RamificationProfile: degree must be >= 1");
  for (const auto& p : branch_types) {
    if (p.degree() != degree) {
      throw std::invalid_argument("RamificationProfile: branch type degree mismatch");
    }
  }
}

std::pair<long long, long long> pair_ram_degrees(const Partition& pl, const Partition& pm) {
  long long e_total = 0;
  long long f_total = 0;
  for (int e : pl.parts()) {
    for (int f : pm.parts()) {
      long long g = gcd_ll(e, f);
      long long lcm = static_cast<long long>(e) / g * f;
      e_total += g * (lcm / e - 1);
      f_total += g * (lcm / f - 1);
    }
  }
  return {e_total, f_total};
}

bool check_riemann_hurwitz(const RamificationProfile& profile) {
  long long total = 0;
  for (const auto& p : profile.branch_types) total += ram_degree(p);
  return total == 2LL * profile.degree - 2;
}

bool check_inhomo_bound(const Partition& pl, const Partition& pm) {
  if (pl.degree() < 4 || pm.degree() < 4) {
    throw std::invalid_argument("check_inhomo_bound: degrees must be >= 4");
  }
  auto rl = homogeneity_index(pl);
  auto rm = homogeneity_index(pm);
  if (rl && rm && *rl == *rm) return true;
  auto [e, f] = pair_ram_degrees(pl, pm);
  long long needed = (pl.degree() >= 7 && pm.degree() >= 7) ? 3 : 2;
  return e >= needed || f >= needed;
}

std::vector<ConstraintTuple> enumerate_exceptional_tuples() {
  // The L-side inequalities a_i + R_i <= l <= a_i + 2 R_i are applied with
  // the strict left-hand form (a_i + R_i < l when R_i >= 1): equality with
  // R_i >= 1 corresponds to no actual partition.  The M-side is applied as
  // displayed (non-strict); the printed list depends on that reading.
  std::vector<ConstraintTuple> out;
  for (int m = 7; m <= 31; ++m) {
    for (int l = (m + 7) / 2; l <= m; ++l) {
      const int r1 = 1;
      const int a1 = l - 2;  // a1 + 1 < l <= a1 + 2 pins a1
      for (int s1 = 0; a1 * s1 <= 2 * m - 2; ++s1) {
        int b1_lo = s1 == 0 ? m : std::max(0, m - 2 * s1);
        int b1_hi = s1 == 0 ? m : m - s1;
        for (int b1 = b1_lo; b1 <= b1_hi; ++b1) {
          if (b1 * r1 > 2 * l - 2) continue;
          for (int s2 = 0; 3 * s2 < m; ++s2) {
            int b2_lo = s2 == 0 ? m : std::max(0, m - 2 * s2);
            int b2_hi = s2 == 0 ? m : m - s2;
            for (int b2 = b2_lo; b2 <= b2_hi; ++b2) {
              if (b1 * r1 + b2 > 2 * l - 2) continue;  // R2 >= 1
              for (int r2 = 1; b1 * r1 + static_cast<long long>(b2) * r2 <= 2 * l - 2; ++r2) {
                for (int a2 = std::max(0, l - 2 * r2); a2 + r2 < l; ++a2) {
                  if (a1 * s1 + a2 * s2 > 2 * m - 2) continue;
                  bool regular = r2 == 1 && m <= l + 1 && s1 + s2 >= 1 && s1 + s2 <= 2;
                  if (!regular) {
                    out.push_back({l, m, r1, r2, s1, s2, a1, a2, b1, b2});
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<RamificationProfile, RamificationProfile>> enumerate_degree6_pairs() {
  const auto descending = partitions_of(6);
  std::vector<Partition> asc(descending.rbegin(), descending.rend());
  const int count = static_cast<int>(asc.size());  // 11

  std::vector<int> r(count), s(count);
  std::vector<std::vector<long long>> e_table(count, std::vector<long long>(count));
  std::vector<std::vector<long long>> f_table(count, std::vector<long long>(count));
  for (int i = 0; i < count; ++i) {
    r[i] = ram_degree(asc[i]);
    s[i] = r[i];
    for (int j = 0; j < count; ++j) {
      auto [e, f] = pair_ram_degrees(asc[i], asc[j]);
      e_table[i][j] = e;
      f_table[i][j] = f;
    }
  }

  std::vector<std::pair<RamificationProfile, RamificationProfile>> out;
  std::vector<int> left(5), right(5);

  auto emit = [&] {
    std::vector<Partition> pl_types, pm_types;
    for (int i : left) pl_types.push_back(asc[i]);
    for (int j : right) pm_types.push_back(asc[j]);
    out.emplace_back(RamificationProfile(6, std::move(pl_types)),
                     RamificationProfile(6, std::move(pm_types)));
  };

  std::function<void(int, int, long long, long long)> fill_right = [&](int pos, int s_sum,
                                                                        long long e_sum,
                                                                        long long f_sum) {
    if (pos == 5) {
      emit();
      return;
    }
    for (int j = 0; j < count; ++j) {
      int ns = s_sum + s[j];
      if (ns > 10) continue;
      long long ne = e_sum + e_table[left[pos]][j];
      long long nf = f_sum + f_table[left[pos]][j];
      if (ne > 10 || nf > 10) continue;
      right[pos] = j;
      fill_right(pos + 1, ns, ne, nf);
    }
  };

  std::function<void(int, int, int)> fill_left = [&](int pos, int min_index, int r_sum) {
    if (pos == 5) {
      fill_right(0, 0, 0, 0);
      return;
    }
    for (int i = min_index; i < count; ++i) {
      if (r[i] < 1) continue;  // every L branch point ramified (<= 5 parts)
      int nr = r_sum + r[i];
      if (nr > 10) continue;
      left[pos] = i;
      fill_left(pos + 1, i, nr);
    }
  };

  fill_left(0, 0, 0);
  return out;
}

std::vector<std::array<int, 3>> solve_trivalent_dynkin(int n_max) {
  if (n_max < 2) throw std::invalid_argument("solve_trivalent_dynkin: n_max must be >= 2");
  std::vector<std::array<int, 3>> out;
  for (int r3 = 2; r3 <= n_max; ++r3) {
    for (int r4 = r3; r4 <= n_max; ++r4) {
      for (int r5 = r4; r5 <= n_max; ++r5) {
        long long lhs = static_cast<long long>(r4) * r5 + static_cast<long long>(r3) * r5 +
                        static_cast<long long>(r3) * r4;
        long long rhs = static_cast<long long>(r3) * r4 * r5;
        if (lhs > rhs) out.push_back({r3, r4, r5});
      }
    }
  }
  return out;
}

namespace {

Partition ones_and_two(int ones) {
  std::vector<int> parts(static_cast<size_t>(ones), 1);
  parts.push_back(2);
  return Partition(std::move(parts));
}

}  // namespace

std::pair<RamificationProfile, RamificationProfile> family_profile(Family family, int n) {
  switch (family) {
    case Family::Dn: {
      if (n < 2) throw std::invalid_argument("family_profile: Dn needs n >= 2");
      int degree = 4 * n;
      Partition near_id = ones_and_two(degree - 2);
      Partition twos = Partition::repeated(2, 2 * n);
      Partition quads = Partition::repeated(n, 4);
      Partition trivial = Partition::repeated(1, degree);
      RamificationProfile pl(degree, {near_id, near_id, twos, twos, quads, trivial});
      RamificationProfile pm(degree, {near_id, trivial, twos, twos, quads, near_id});
      return {pl, pm};
    }
    case Family::E6: {
      Partition near_id = ones_and_two(22);
      Partition trivial = Partition::repeated(1, 24);
      Partition twos = Partition::repeated(2, 12);
      Partition threes = Partition::repeated(3, 8);
      RamificationProfile pl(24, {near_id, near_id, twos, threes, threes, trivial});
      RamificationProfile pm(24, {near_id, trivial, twos, threes, threes, near_id});
      return {pl, pm};
    }
    case Family::E7: {
      Partition near_id = ones_and_two(46);
      Partition trivial = Partition::repeated(1, 48);
      Partition twos = Partition::repeated(2, 24);
      Partition threes = Partition::repeated(3, 16);
      Partition fours = Partition::repeated(4, 12);
      RamificationProfile pl(48, {near_id, near_id, twos, threes, fours, trivial});
      RamificationProfile pm(48, {near_id, trivial, twos, threes, fours, near_id});
      return {pl, pm};
    }
    case Family::E8: {
      Partition near_id = ones_and_two(118);
      Partition trivial = Partition::repeated(1, 120);
      Partition twos = Partition::repeated(2, 60);
      Partition threes = Partition::repeated(3, 40);
      Partition fives = Partition::repeated(5, 24);
      RamificationProfile pl(120, {near_id, near_id, twos, threes, fives, trivial});
      RamificationProfile pm(120, {near_id, trivial, twos, threes, fives, near_id});
      return {pl, pm};
    }
  }
  throw std::invalid_argument("family_profile: unknown family");
}

}  // namespace ramsearch
