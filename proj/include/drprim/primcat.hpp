#pragma once

// Primitive ideals of C*(G_T) as (quasi-orbit, character of H(x)) labels,
// with certificates for equal and unequal kernels.

#include "drprim/repr.hpp"

namespace drprim {

struct PrimIdealLabel {
  Point quasi_orbit = 0;
  CharacterLabel character;
  friend bool operator==(const PrimIdealLabel&, const PrimIdealLabel&) = default;
};

/// A point x with an angle theta, standing for pi_{x, exp(2 pi i theta)}.
struct LabelledPoint {
  Point point = 0;
  RationalAngle angle;
};

PrimIdealLabel classify(const FiniteSystem& sys, const SystemProfiles& profiles, const LabelledPoint& p);
std::string label_to_string(const FiniteSystem& sys, const PrimIdealLabel& label);

enum class EquivalenceClause { Holds, Closure, Character };

struct EquivalenceVerdict {
  bool equivalent = false;
  EquivalenceClause clause = EquivalenceClause::Holds;
  std::string reason;
};

EquivalenceVerdict equivalent(const FiniteSystem& sys, const SystemProfiles& profiles, const LabelledPoint& a,
                              const LabelledPoint& b);

struct CatalogueEntry {
  Point quasi_orbit = 0;
  PointSet orbit;
  Lattice H;
  SmithInvariants smith;
  PointSet Y;
  std::string dual;
};

std::vector<CatalogueEntry> catalogue(const FiniteSystem& sys, const SystemProfiles& profiles);

/// An element of C_c(G_T) in ker pi_{b} but not in ker pi_{a}.
struct SeparatingWitness {
  CcFunction h;
  bool closures_differ = false;
  ZVector n;  // lattice element used when closures agree
  double killed_norm = 0.0;     // ||pi_b(h)||
  double surviving_norm = 0.0;  // ||pi_a(h)||
};

inline constexpr double kKilledTolerance = 1e-9;
inline constexpr double kSurvivingFloor = 1e-3;

/// Throws NotSeparable on equivalent labels and VerificationFailure when the
/// norms miss the tolerances.
SeparatingWitness separating_witness(const FiniteSystem& sys, const SystemProfiles& profiles,
                                     const LabelledPoint& a, const LabelledPoint& b);

struct ComponentTopology {
  Point quasi_orbit = 0;
  /// Sigma of every orbit closure equals Sigma, on closure[x] itself.
  bool hypothesis_on_closure = false;
  /// The same condition for the restriction to Y(x).
  bool hypothesis_on_core = false;
  bool determined = false;
  std::string statement;
};

struct TopologyReport {
  bool irreducible = false;
  bool determined = false;  // every component determined
  std::vector<ComponentTopology> components;
  std::string summary;
};

TopologyReport jacobson_topology(const FiniteSystem& sys, const SystemProfiles& profiles);

enum class KernelOrder { Equal, FirstBelowSecond, SecondBelowFirst, Incomparable };

/// Compares ker pi_a cap C_0(X) with ker pi_b cap C_0(X) through the
/// inclusion of orbit closures: FirstBelowSecond means ker_a cap C_0 is
/// strictly contained in ker_b cap C_0.
KernelOrder c0_kernel_order(const FiniteSystem& sys, const LabelledPoint& a, const LabelledPoint& b);
std::string to_string(KernelOrder order);

}  // namespace drprim
