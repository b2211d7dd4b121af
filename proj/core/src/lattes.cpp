#include "ramsearch/lattes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsearch {

namespace {

int mod(long long value, int modulus) {
  long long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

}  // namespace

TorsionPoint::TorsionPoint(int a_in, int b_in, int modulus_in) : modulus(modulus_in) {
  if (modulus < 1) throw std::invalid_argument("TorsionPoint: modulus must be >= 1");
  a = mod(a_in, modulus);
  b = mod(b_in, modulus);
}

TorsionPoint TorsionPoint::negated() const { return TorsionPoint(-a, -b, modulus); }

TorsionPoint TorsionPoint::scaled(int k) const {
  return TorsionPoint(mod(static_cast<long long>(k) * a, modulus),
                      mod(static_cast<long long>(k) * b, modulus), modulus);
}

TorsionPoint TorsionPoint::plus(const TorsionPoint& other) const {
  if (other.modulus != modulus) throw std::invalid_argument("TorsionPoint: modulus mismatch");
  return TorsionPoint(a + other.a, b + other.b, modulus);
}

bool TorsionPoint::is_two_torsion() const { return scaled(2).is_zero(); }

TorsionPoint point_class(const TorsionPoint& p) {
  TorsionPoint neg = p.negated();
  if (neg.a < p.a || (neg.a == p.a && neg.b < p.b)) return neg;
  return p;
}

RamificationProfile lattes_profile(int n) {
  if (n < 2) throw std::invalid_argument("lattes_profile: n must be >= 2");
  const int big = 2 * n;  // the fibers over E[2] live in E[2n]
  const TorsionPoint branch_points[4] = {
      TorsionPoint(0, 0, big), TorsionPoint(n, 0, big), TorsionPoint(0, n, big),
      TorsionPoint(n, n, big)};

  std::vector<Partition> branch_types;
  for (const TorsionPoint& p : branch_points) {
    std::vector<int> indices;
    for (int qa = 0; qa < big; ++qa) {
      for (int qb = 0; qb < big; ++qb) {
        TorsionPoint q(qa, qb, big);
        if (!(q.scaled(n) == p)) continue;
        if (!(point_class(q) == q)) continue;  // one representative per +- class
        indices.push_back(q.is_two_torsion() ? 1 : 2);
      }
    }
    branch_types.emplace_back(std::move(indices));
  }
  return RamificationProfile(n * n, std::move(branch_types));
}

bool verify_rh_accounting(int n) {
  if (n < 2) throw std::invalid_argument("verify_rh_accounting: n must be >= 2");
  RamificationProfile profile = lattes_profile(n);
  long long total = 0;
  for (const auto& type : profile.branch_types) total += ram_degree(type);
  return total == 2LL * n * n - 2;
}

namespace {

// One coordinate of the lifting equation: some r (mod l^2 m^2) with
// l r = lm p and m r = lm q.  Solutions of the first congruence are
// r = m p + t l m^2 for t in [0, l).
bool coordinate_lifts(int l, int m, int p, int q) {
  const long long big = static_cast<long long>(l) * l * m * m;
  const long long want = static_cast<long long>(l) * m * q;
  for (int t = 0; t < l; ++t) {
    long long r = static_cast<long long>(m) * p + static_cast<long long>(t) * l * m * m;
    if ((static_cast<long long>(m) * r - want) % big == 0) return true;
  }
  return false;
}

bool pair_lifts(int l, int m, int p1, int p2, int q1, int q2) {
  const int small = l * m;
  bool direct = coordinate_lifts(l, m, p1, q1) && coordinate_lifts(l, m, p2, q2);
  if (direct) return true;
  int nq1 = mod(-q1, small);
  int nq2 = mod(-q2, small);
  return coordinate_lifts(l, m, p1, nq1) && coordinate_lifts(l, m, p2, nq2);
}

}  // namespace

bool verify_sharpness(int l, int m) {
  if (l < 3 || m < 3) throw std::invalid_argument("verify_sharpness: l, m must be >= 3");
  const int small = l * m;
  for (int p1 = 0; p1 < small; ++p1) {
    std::vector<int> q1s;
    for (int q = 0; q < small; ++q) {
      if (mod(static_cast<long long>(l) * q - static_cast<long long>(m) * p1, small) == 0) {
        q1s.push_back(q);
      }
    }
    if (q1s.empty()) continue;
    for (int p2 = 0; p2 < small; ++p2) {
      std::vector<int> q2s;
      for (int q = 0; q < small; ++q) {
        if (mod(static_cast<long long>(l) * q - static_cast<long long>(m) * p2, small) == 0) {
          q2s.push_back(q);
        }
      }
      for (int q1 : q1s) {
        for (int q2 : q2s) {
          if (!pair_lifts(l, m, p1, p2, q1, q2)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ramsearch
