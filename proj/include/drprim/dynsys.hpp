#pragma once

// Finite discrete N^k dynamical systems: k commuting self-maps of a finite
// point set, with orbits, quasi-orbits and eventual periodicity.

#include "drprim/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drprim {

/// Unvalidated description as read from a file: map targets are indices
/// into points.
struct RawSystem {
  std::size_t k = 0;
  std::vector<std::string> points;
  std::vector<std::vector<std::int64_t>> maps;
};

class FiniteSystem {
 public:
  /// Validates totality and pairwise commutation; throws BadIndex or
  /// NonCommuting (maps numbered from 1).
  static FiniteSystem validate(const RawSystem& raw);

  std::size_t k() const { return maps_.size(); }
  std::size_t size() const { return names_.size(); }
  const std::string& name(Point p) const;
  const std::vector<std::string>& names() const { return names_; }
  Point index_of(const std::string& name) const;
  void check_point(Point p) const;

  /// T_i(x), i zero-based.
  Point image(std::size_t i, Point x) const { return maps_[i][x]; }
  const std::vector<Point>& map(std::size_t i) const { return maps_[i]; }

  /// T^n x = T_1^{n_1} ... T_k^{n_k} x.
  Point apply(const MultiIndex& n, Point x) const;

  RawSystem raw() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Point>> maps_;
};

/// Per-coordinate preperiod a_i and period c_i of T_i on the reachable set
/// of a point: T_i^{a_i + c_i} = T_i^{a_i} there, both least possible.
struct EventualData {
  ZVector preperiod;
  ZVector period;

  /// Replaces m_i >= a_i by a_i + ((m_i - a_i) mod c_i); T^m x depends on m
  /// only through clamp(m).
  MultiIndex clamp(const MultiIndex& m) const;
  /// a_i + c_i, the number of distinct clamped values per coordinate.
  ZVector box() const { return preperiod + period; }
};

/// Points reachable from x under N^k, in declaration order.
PointSet reachable_set(const FiniteSystem& sys, Point x);

EventualData eventual_data(const FiniteSystem& sys, Point x);

/// The orbit [x] = {y : T^m x = T^n y for some m, n}, which on a finite
/// discrete space is also the orbit closure. Sorted by declaration order.
PointSet orbit(const FiniteSystem& sys, Point x);

struct QuasiOrbit {
  Point representative;  // lexicographically least point name
  PointSet points;       // declaration order
  bool irreducible = true;
};

struct QuasiOrbitPartition {
  std::vector<QuasiOrbit> classes;  // sorted by representative name
  std::vector<std::size_t> class_of;  // point -> index into classes
  /// Present when the system has at most the configured number of points.
  std::optional<std::vector<PointSet>> closed_invariant_subsets;
  std::optional<std::vector<PointSet>> irreducible_subsets;
};

QuasiOrbitPartition quasi_orbits(const FiniteSystem& sys, std::size_t max_enumerated_points = 8);

/// All nonempty G-invariant subsets (closed under T_i and under preimages),
/// by enumeration of the 2^|X| subsets, and those among them that are not a
/// union of two proper closed invariant subsets.
std::vector<PointSet> enumerate_invariant_subsets(const FiniteSystem& sys);
std::vector<PointSet> irreducible_invariant_subsets(const FiniteSystem& sys);

/// Subsystem on a forward-invariant subset; throws NotInvariant(point, i)
/// with i one-based.
FiniteSystem restrict(const FiniteSystem& sys, const PointSet& subset);

}  // namespace drprim
