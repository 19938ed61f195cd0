#pragma once

// C_c(G_T) as a convolution *-algebra of finitely supported functions, the
// gauge action, the fibre-summing map kappa onto the quotient groupoid, and
// the orbit representations pi_{x,z}.

#include "drprim/periodicity.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>

namespace drprim {

using Complex = std::complex<double>;
using OrbitMatrix = Eigen::MatrixXcd;

inline constexpr double kPruneThreshold = 1e-12;

/// Finitely supported function on G_T. Support elements are trusted to lie in
/// G_T; build through make_element when validity is not already known.
class CcFunction {
 public:
  using Storage = std::map<GroupoidElement, Complex>;

  CcFunction() = default;
  static CcFunction indicator(const GroupoidElement& g, Complex value = 1.0);

  void add(const GroupoidElement& g, Complex value);
  Complex at(const GroupoidElement& g) const;
  const Storage& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void prune(double threshold = kPruneThreshold);

  CcFunction& operator+=(const CcFunction& other);
  friend CcFunction operator+(CcFunction a, const CcFunction& b) { return a += b; }
  friend CcFunction operator-(CcFunction a, const CcFunction& b);
  friend CcFunction operator*(Complex c, const CcFunction& f);

 private:
  Storage terms_;
};

/// Largest |f(g) - h(g)| over the union of supports.
double max_difference(const CcFunction& f, const CcFunction& h);

CcFunction convolve(const CcFunction& f, const CcFunction& g);
CcFunction involution(const CcFunction& f);
double i_norm(const CcFunction& f);
CcFunction gauge_act(const RationalAngle& theta, const CcFunction& f);
CcFunction conditional_expectation(const CcFunction& f);

/// Finitely supported function on G_T / Iso°, i.e. on triples (x, [g], y)
/// with [g] a coset of the lattice.
class QcFunction {
 public:
  explicit QcFunction(Lattice h) : lattice_(std::move(h)) {}

  const Lattice& lattice() const { return lattice_; }
  /// Keys carry the canonical coset representative.
  const std::map<GroupoidElement, Complex>& terms() const { return terms_; }
  void add(const QuotientElement& q, Complex value);
  void add_reduced(const GroupoidElement& key, Complex value);
  Complex at(const QuotientElement& q) const;
  void prune(double threshold = kPruneThreshold);

 private:
  Lattice lattice_;
  std::map<GroupoidElement, Complex> terms_;
};

double max_difference(const QcFunction& a, const QcFunction& b);

/// kappa(f)(b) = sum of f over the coset fibre of b.
QcFunction kappa(const CcFunction& f, const Lattice& h);
/// kappa relative to the lattice of the quasi-orbit carrying supp f; throws
/// MixedQuasiOrbits when the support meets quasi-orbits with different lattices.
QcFunction kappa(const SystemProfiles& profiles, const CcFunction& f);

QcFunction quotient_convolve(const QcFunction& a, const QcFunction& b);
QcFunction quotient_involution(const QcFunction& a);
/// The induced action on the quotient, evaluated on canonical representatives;
/// well defined for theta in H^perp.
QcFunction twisted_gauge(const RationalAngle& theta, const QcFunction& a);
QcFunction scale(Complex c, const QcFunction& a);

/// Matrix of pi_{x,theta}(f) on l^2([x]) in the sorted orbit basis.
OrbitMatrix pi_matrix(const FiniteSystem& sys, Point x, const RationalAngle& theta, const CcFunction& f);
OrbitMatrix omega_matrix(const FiniteSystem& sys, Point x, const CcFunction& f);
double operator_norm(const OrbitMatrix& m);

/// Regular representation L^x on finitely supported vectors of l^2(G_x);
/// throws SourceMismatch when a basis element does not have source x.
CcFunction regular_apply(Point x, const CcFunction& f, const CcFunction& v);

/// Finitely supported function on a lattice H; throws SupportNotInLattice.
class FinSuppHFun {
 public:
  explicit FinSuppHFun(Lattice h) : lattice_(std::move(h)) {}
  void add(const ZVector& n, Complex value);
  const Lattice& lattice() const { return lattice_; }
  const std::map<ZVector, Complex, ZVectorLess>& terms() const { return terms_; }

 private:
  Lattice lattice_;
  std::map<ZVector, Complex, ZVectorLess> terms_;
};

/// (phi . f)(x, g, y) = sum_n phi(n) f(x, g - n, y).
CcFunction phi_dot(const FinSuppHFun& phi, const CcFunction& f);
/// phi^(z) = sum_n phi(n) z^n at z = exp(2 pi i theta).
Complex fourier(const FinSuppHFun& phi, const RationalAngle& theta);

struct BatteryOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  /// Replaces the lattice used by kappa; a wrong lattice is a negative control.
  std::optional<Lattice> kappa_lattice;
};

struct IdentityResult {
  int identity = 0;  // 1..7
  std::string name;
  double max_residual = 0.0;
  bool passed = true;
  std::string first_failure;  // inputs of the first failing trial
};

struct BatteryReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  double tolerance = 0.0;
  std::vector<IdentityResult> identities;  // identities 1..7 in order
  bool passed() const;
  double max_residual() const;
};

class BatteryFailure : public Error {
 public:
  BatteryFailure(const std::string& detail, BatteryReport report)
      : Error(ErrorCode::BatteryFailure, detail), report_(std::move(report)) {}
  const BatteryReport& report() const { return report_; }

 private:
  BatteryReport report_;
};

/// Runs seeded random trials of the operator identities; returns the report
/// or throws BatteryFailure naming the first failing identity.
BatteryReport identity_battery(const FiniteSystem& sys, const SystemProfiles& profiles,
                               const BatteryOptions& options = {});

struct IntertwinerResult {
  OrbitMatrix U;
  double residual = 0.0;
};

/// Diagonal unitary U with U pi_{x,theta}(f) = pi_{x,omega}(f) U, or nullopt
/// when omega - theta does not annihilate H(x). Throws VerificationFailure
/// when the constructed U fails the generator check.
std::optional<IntertwinerResult> intertwiner(const FiniteSystem& sys, const PeriodicityProfile& p, Point x,
                                             const RationalAngle& theta, const RationalAngle& omega,
                                             double tolerance = 1e-9);

/// Indicators of units, of (y, e_i, T_i y) and their inverses, and of
/// (y, b, y) for Hermite rows b of each L_y, over the orbit of x.
std::vector<CcFunction> generator_battery(const FiniteSystem& sys, const PeriodicityProfile& p);

}  // namespace drprim
