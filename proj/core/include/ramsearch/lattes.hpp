#ifndef RAMSEARCH_LATTES_HPP
#define RAMSEARCH_LATTES_HPP

#include "ramsearch/ramification.hpp"

namespace ramsearch {

/// Point of the N-torsion model (Z/N)^2.
struct TorsionPoint {
  int a = 0;
  int b = 0;
  int modulus = 1;

  TorsionPoint() = default;
  TorsionPoint(int a_in, int b_in, int modulus_in);

  TorsionPoint negated() const;
  TorsionPoint scaled(int k) const;
  TorsionPoint plus(const TorsionPoint& other) const;
  bool is_zero() const { return a == 0 && b == 0; }
  bool is_two_torsion() const;

  bool operator==(const TorsionPoint&) const = default;
};

/// Canonical representative of the class {P, -P}: the lexicographically
/// smaller coordinate pair.
TorsionPoint point_class(const TorsionPoint& p);

/// Ramification profile of the degree-n^2 map induced by multiplication
/// by n on the +-1 quotient.  Four branch classes, ordered 0, (n,0),
/// (0,n), (n,n) in the 2n-torsion model; fiber points in E[2] get index 1,
/// all other classes index 2.
RamificationProfile lattes_profile(int n);

/// True iff the profile's total ramification equals 2 n^2 - 2, so the map
/// is unramified away from the four branch classes.
bool verify_rh_accounting(int n);

/// Torsion model of the fiber-product lifting: for every P, Q in the
/// (l*m)-torsion model with m P = l Q, some R in the (l*m)^2-torsion model
/// satisfies l R = P and m R = Q (allowing Q replaced by -Q).  True for
/// coprime l, m; reports the failure otherwise.
bool verify_sharpness(int l, int m);

}  // namespace ramsearch

#endif
