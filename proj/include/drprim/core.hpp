#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace drprim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Index of a point in the declaration order of a system.
using Point = std::size_t;
using PointSet = std::vector<Point>;

/// Integer vector in Z^k: displacements, multi-indices and lattice members.
using ZVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Entries of a multi-index are nonnegative; the type is shared with
/// displacements so that m - n is an ordinary vector subtraction.
using MultiIndex = ZVector;

enum class ErrorCode {
  Parse,
  NonCommuting,
  BadIndex,
  NotInvariant,
  InvalidElement,
  NotComposable,
  LatticeMismatch,
  DimensionMismatch,
  EmptySet,
  BoundTooSmall,
  NotSeparable,
  MixedQuasiOrbits,
  SupportNotInLattice,
  SourceMismatch,
  BatteryFailure,
  VerificationFailure,
  SourcelessVertex,
  DuplicateQuasiOrbit,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + "(" + detail + ")"),
        code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline ZVector zvector(std::initializer_list<std::int64_t> values) {
  ZVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (auto x : values) v(i++) = x;
  return v;
}

inline ZVector unit_vector(Eigen::Index k, Eigen::Index i) {
  ZVector v = ZVector::Zero(k);
  v(i) = 1;
  return v;
}

inline ZVector positive_part(const ZVector& g) { return g.cwiseMax(0); }
inline ZVector negative_part(const ZVector& g) { return (-g).cwiseMax(0); }

/// Lexicographic order, shorter vectors first; used for map keys.
struct ZVectorLess {
  bool operator()(const ZVector& a, const ZVector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  }
};

inline bool equal_vectors(const ZVector& a, const ZVector& b) {
  return a.size() == b.size() && (a.size() == 0 || a == b);
}

std::string to_string(const ZVector& v);

/// Fractional part in [0, 1).
Rational frac(const Rational& q);

/// Canonical "p/q" form ("0" and integers without denominator).
std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace drprim
