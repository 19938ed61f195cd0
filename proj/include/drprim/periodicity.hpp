#pragma once

// Periodicity invariants of an orbit closure: Sigma_U, Sigma, its minimal
// generators, the lattice H(x) and the periodic core Y(x).

#include "drprim/groupoid.hpp"

#include <map>
#include <utility>

namespace drprim {

using IndexPair = std::pair<MultiIndex, MultiIndex>;

struct IndexPairLess {
  bool operator()(const IndexPair& a, const IndexPair& b) const {
    ZVectorLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

struct PeriodicityProfile {
  Point quasi_orbit = 0;  // canonical representative
  PointSet orbit;         // = closure[x]
  Lattice H;
  PointSet Y;
  std::vector<IndexPair> sigma_min;  // sorted by IndexPairLess
  std::map<Point, Lattice> per_point;
};

struct PeriodicityOptions {
  std::size_t sigma_bound_retries = 4;
  /// Overrides the default search bound |orbit| * max(a_i + c_i) when positive.
  std::int64_t sigma_bound = 0;
};

/// T^m y = T^n y for every y in U; throws EmptySet.
bool sigma_u_member(const FiniteSystem& sys, const PointSet& u, const MultiIndex& m, const MultiIndex& n);

PeriodicityProfile profile(const FiniteSystem& sys, Point x, const PeriodicityOptions& options = {});

/// m - n in H, which is membership in Sigma(x).
bool sigma_member(const PeriodicityProfile& p, const MultiIndex& m, const MultiIndex& n);

/// Minimal nonzero elements of Sigma(x), searching H in [-bound, bound]^k;
/// throws BoundTooSmall when a Graver element of H lies outside that box.
std::vector<IndexPair> sigma_min(const FiniteSystem& sys, const PeriodicityProfile& p, std::int64_t bound);

/// Default search bound for sigma_min.
std::int64_t default_sigma_bound(const FiniteSystem& sys, const PointSet& orbit);

/// On [0, B]^{2k}: m - n in H agrees with "T^m y = T^n y for some y in the
/// orbit" and with "T^m y = T^n y for all y in Y".
bool check_sigma_group_property(const FiniteSystem& sys, const PeriodicityProfile& p, std::int64_t bound);

/// Profiles of all quasi-orbits of a system.
struct SystemProfiles {
  QuasiOrbitPartition partition;
  std::vector<PeriodicityProfile> profiles;  // parallel to partition.classes

  const PeriodicityProfile& of(Point x) const { return profiles[partition.class_of.at(x)]; }
};

SystemProfiles analyze_profiles(const FiniteSystem& sys, const PeriodicityOptions& options = {},
                                std::size_t max_enumerated_points = 8);

}  // namespace drprim
