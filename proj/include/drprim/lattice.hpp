#pragma once

// Subgroups of Z^k in row Hermite normal form, Smith invariants, and exact
// character arithmetic on the k-torus with rational angles.

#include "drprim/core.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace drprim {

namespace detail {

template <typename Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Int>
Int abs_value(const Int& a) {
  return a < 0 ? Int(-a) : a;
}

template <typename Int>
std::int64_t to_int64(const Int& x) {
  if (x > Int(std::numeric_limits<std::int64_t>::max()) ||
      x < Int(std::numeric_limits<std::int64_t>::min()))
    throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

template <typename Matrix>
void add_row_multiple(Matrix& a, Eigen::Index dst, Eigen::Index src,
                      const typename Matrix::Scalar& factor) {
  if (factor == 0) return;
  for (Eigen::Index j = 0; j < a.cols(); ++j) a(dst, j) += factor * a(src, j);
}

template <typename Matrix>
void add_col_multiple(Matrix& a, Eigen::Index dst, Eigen::Index src,
                      const typename Matrix::Scalar& factor) {
  if (factor == 0) return;
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, dst) += factor * a(i, src);
}

template <typename Matrix>
void negate_row(Matrix& a, Eigen::Index row) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) a(row, j) = -a(row, j);
}

}  // namespace detail

/// A subgroup of Z^k stored as the rows of its row-style Hermite normal form:
/// pivots strictly increase, pivots are positive, and entries above a pivot lie
/// in [0, pivot).
template <typename Int>
class BasicLattice {
 public:
  using Scalar = Int;
  using Matrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

  explicit BasicLattice(Eigen::Index ambient = 0) : basis_(0, ambient) {}

  static BasicLattice generated_by(Eigen::Index ambient, const std::vector<ZVector>& generators) {
    Matrix rows(static_cast<Eigen::Index>(generators.size()), ambient);
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].size() != ambient)
        throw Error(ErrorCode::DimensionMismatch,
                    "generator " + to_string(generators[i]) + " not in Z^" + std::to_string(ambient));
      for (Eigen::Index j = 0; j < ambient; ++j)
        rows(static_cast<Eigen::Index>(i), j) = Int(generators[i](j));
    }
    return from_rows(std::move(rows));
  }

  /// Hermite normal form of the row span of an arbitrary integer matrix.
  static BasicLattice from_rows(Matrix a) {
    const Eigen::Index m = a.rows();
    const Eigen::Index k = a.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < k && r < m; ++c) {
      for (;;) {
        Eigen::Index best = -1;
        for (Eigen::Index i = r; i < m; ++i)
          if (a(i, c) != 0 &&
              (best < 0 || detail::abs_value(a(i, c)) < detail::abs_value(a(best, c))))
            best = i;
        if (best < 0) break;
        if (best != r) a.row(best).swap(a.row(r));
        bool clear = true;
        for (Eigen::Index i = r + 1; i < m; ++i) {
          if (a(i, c) == 0) continue;
          Int q = a(i, c) / a(r, c);
          detail::add_row_multiple(a, i, r, Int(-q));
          if (a(i, c) != 0) clear = false;
        }
        if (clear) break;
      }
      if (a(r, c) == 0) continue;
      if (a(r, c) < 0) detail::negate_row(a, r);
      for (Eigen::Index i = 0; i < r; ++i) {
        Int q = detail::floor_div(a(i, c), a(r, c));
        detail::add_row_multiple(a, i, r, Int(-q));
      }
      ++r;
    }
    BasicLattice out(k);
    out.basis_ = a.topRows(r);
    return out;
  }

  Eigen::Index ambient_rank() const { return basis_.cols(); }
  Eigen::Index rank() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  Eigen::Index pivot(Eigen::Index row) const {
    for (Eigen::Index j = 0; j < basis_.cols(); ++j)
      if (basis_(row, j) != 0) return j;
    throw std::logic_error("zero row in Hermite basis");
  }

  ZVector row(Eigen::Index i) const {
    ZVector v(basis_.cols());
    for (Eigen::Index j = 0; j < basis_.cols(); ++j) v(j) = detail::to_int64(basis_(i, j));
    return v;
  }

  std::vector<ZVector> rows() const {
    std::vector<ZVector> out;
    for (Eigen::Index i = 0; i < rank(); ++i) out.push_back(row(i));
    return out;
  }

  /// Canonical representative of g + H: each pivot coordinate in [0, pivot).
  ZVector reduce(const ZVector& g) const {
    check_dimension(g);
    std::vector<Int> v(static_cast<std::size_t>(g.size()));
    for (Eigen::Index j = 0; j < g.size(); ++j) v[static_cast<std::size_t>(j)] = Int(g(j));
    for (Eigen::Index i = 0; i < rank(); ++i) {
      const Eigen::Index c = pivot(i);
      Int q = detail::floor_div(v[static_cast<std::size_t>(c)], basis_(i, c));
      if (q == 0) continue;
      for (Eigen::Index j = c; j < basis_.cols(); ++j)
        v[static_cast<std::size_t>(j)] -= q * basis_(i, j);
    }
    ZVector out(g.size());
    for (Eigen::Index j = 0; j < g.size(); ++j)
      out(j) = detail::to_int64(v[static_cast<std::size_t>(j)]);
    return out;
  }

  bool contains(const ZVector& g) const {
    const ZVector r = reduce(g);
    return r.size() == 0 || r.isZero();
  }

  bool contains(const BasicLattice& other) const {
    if (other.ambient_rank() != ambient_rank())
      throw Error(ErrorCode::DimensionMismatch, "lattices in different ambient ranks");
    for (Eigen::Index i = 0; i < other.rank(); ++i)
      if (!contains(other.row(i))) return false;
    return true;
  }

  friend bool operator==(const BasicLattice& a, const BasicLattice& b) {
    if (a.ambient_rank() != b.ambient_rank() || a.rank() != b.rank()) return false;
    for (Eigen::Index i = 0; i < a.rank(); ++i)
      for (Eigen::Index j = 0; j < a.ambient_rank(); ++j)
        if (a.basis_(i, j) != b.basis_(i, j)) return false;
    return true;
  }
  friend bool operator!=(const BasicLattice& a, const BasicLattice& b) { return !(a == b); }

  void check_dimension(const ZVector& g) const {
    if (g.size() != ambient_rank())
      throw Error(ErrorCode::DimensionMismatch,
                  "vector " + to_string(g) + " not in Z^" + std::to_string(ambient_rank()));
  }

  /// Calls visit(v) for every lattice vector v with |v_j| <= bound in every
  /// coordinate. Coefficients are fixed pivot by pivot, so only lattice points
  /// are visited.
  template <typename Visitor>
  void for_each_in_box(std::int64_t bound, Visitor&& visit) const {
    const Eigen::Index k = ambient_rank();
    std::vector<Int> partial(static_cast<std::size_t>(k), Int(0));
    enumerate(0, bound, partial, visit);
  }

 private:
  template <typename Visitor>
  void enumerate(Eigen::Index row, std::int64_t bound, std::vector<Int>& partial,
                 Visitor& visit) const {
    const Eigen::Index k = ambient_rank();
    const Int b(bound);
    // Columns before the next pivot are final once rows < row are fixed.
    const Eigen::Index next_pivot = row < rank() ? pivot(row) : k;
    const Eigen::Index first_open = row == 0 ? 0 : pivot(row - 1) + 1;
    for (Eigen::Index j = first_open; j < next_pivot; ++j)
      if (detail::abs_value(partial[static_cast<std::size_t>(j)]) > b) return;
    if (row == rank()) {
      ZVector v(k);
      for (Eigen::Index j = 0; j < k; ++j) v(j) = detail::to_int64(partial[static_cast<std::size_t>(j)]);
      visit(static_cast<const ZVector&>(v));
      return;
    }
    const Int& p = basis_(row, next_pivot);
    const Int& base = partial[static_cast<std::size_t>(next_pivot)];
    // Need |base + t*p| <= bound.
    Int lo = -detail::floor_div(Int(b + base), p);
    Int hi = detail::floor_div(Int(b - base), p);
    for (Int t = lo; t <= hi; ++t) {
      for (Eigen::Index j = next_pivot; j < k; ++j)
        partial[static_cast<std::size_t>(j)] += t * basis_(row, j);
      enumerate(row + 1, bound, partial, visit);
      for (Eigen::Index j = next_pivot; j < k; ++j)
        partial[static_cast<std::size_t>(j)] -= t * basis_(row, j);
    }
  }

  Matrix basis_;
};

using Lattice = BasicLattice<BigInt>;

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
template <typename Int>
struct SmithDecomposition {
  using Matrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix U;
  Matrix D;
  Matrix V;
  std::vector<Int> factors;  // nonzero diagonal entries of D
};

template <typename Int>
SmithDecomposition<Int> smith_decomposition(
    const Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>& a) {
  using Matrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  Matrix d = a;
  Matrix u = Matrix::Identity(m, m);
  Matrix v = Matrix::Identity(n, n);

  auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    d.row(i).swap(d.row(j));
    u.row(i).swap(u.row(j));
  };
  auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    d.col(i).swap(d.col(j));
    v.col(i).swap(v.col(j));
  };

  std::vector<Int> factors;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    Eigen::Index bi = -1, bj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j)
        if (d(i, j) != 0 && (bi < 0 || detail::abs_value(d(i, j)) < detail::abs_value(d(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    for (;;) {
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        detail::add_row_multiple(d, i, t, Int(-q));
        detail::add_row_multiple(u, i, t, Int(-q));
        if (d(i, t) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        detail::add_col_multiple(d, j, t, Int(-q));
        detail::add_col_multiple(v, j, t, Int(-q));
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) {
        Eigen::Index ri = t, cj = t;
        Int best = detail::abs_value(d(t, t));
        for (Eigen::Index i = t + 1; i < m; ++i)
          if (d(i, t) != 0 && detail::abs_value(d(i, t)) < best) {
            best = detail::abs_value(d(i, t));
            ri = i;
            cj = t;
          }
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (d(t, j) != 0 && detail::abs_value(d(t, j)) < best) {
            best = detail::abs_value(d(t, j));
            ri = t;
            cj = j;
          }
        swap_rows(t, ri);
        swap_cols(t, cj);
        continue;
      }
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = t + 1; i < m && bad_row < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      detail::add_row_multiple(d, t, bad_row, Int(1));
      detail::add_row_multiple(u, t, bad_row, Int(1));
    }
    if (d(t, t) < 0) {
      detail::negate_row(d, t);
      detail::negate_row(u, t);
    }
    factors.push_back(d(t, t));
  }
  return {std::move(u), std::move(d), std::move(v), std::move(factors)};
}

struct SmithInvariants {
  std::vector<BigInt> factors;  // d_1 | d_2 | ... including unit factors
  Eigen::Index free_rank = 0;   // rank of Z^k / H minus its torsion
  friend bool operator==(const SmithInvariants&, const SmithInvariants&) = default;
};

inline SmithInvariants smith_invariants(const Lattice& h) {
  SmithInvariants out;
  out.free_rank = h.ambient_rank() - h.rank();
  if (h.rank() == 0) return out;
  out.factors = smith_decomposition(h.basis()).factors;
  return out;
}

/// A point exp(2 pi i theta) of the k-torus with theta in [0,1)^k rational.
class RationalAngle {
 public:
  RationalAngle() = default;
  explicit RationalAngle(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) c = frac(c);
  }
  static RationalAngle zero(std::size_t k) { return RationalAngle(std::vector<Rational>(k)); }

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
    check_same(a, b);
    std::vector<Rational> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return RationalAngle(std::move(c));
  }
  friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
    check_same(a, b);
    std::vector<Rational> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return RationalAngle(std::move(c));
  }
  friend RationalAngle operator-(const RationalAngle& a) { return RationalAngle::zero(a.size()) - a; }
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

  std::string to_string() const;
  static RationalAngle parse(const std::string& text);

 private:
  static void check_same(const RationalAngle& a, const RationalAngle& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "angles of different length");
  }
  std::vector<Rational> coords_;
};

/// A character of a lattice H, stored as its values theta . b_j mod 1 on the
/// Hermite basis rows b_j of H.
class CharacterLabel {
 public:
  CharacterLabel() = default;
  explicit CharacterLabel(std::vector<Rational> values) : values_(std::move(values)) {
    for (auto& v : values_) v = frac(v);
  }
  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
  std::string to_string() const;

 private:
  std::vector<Rational> values_;
};

/// theta . g, exact.
Rational pairing(const RationalAngle& theta, const ZVector& g);

/// z^g for z = exp(2 pi i theta); the phase is reduced mod 1 exactly before
/// the exponential is taken.
std::complex<double> character_value(const RationalAngle& theta, const ZVector& g);

bool annihilator_member(const Lattice& h, const RationalAngle& theta);
CharacterLabel restrict_character(const Lattice& h, const RationalAngle& theta);

/// A point of the annihilator H^perp parametrized by coords in [0,1)^k: with
/// U B V = D the Smith form of the basis B, psi_i is coords_i snapped to
/// (1/d_i)Z for i < rank and coords_i otherwise, and theta = V psi mod 1.
RationalAngle annihilator_element(const Lattice& h, const std::vector<Rational>& coords);

/// Conformally minimal nonzero elements of H (g below h when g_i h_i >= 0 and
/// |g_i| <= |h_i| for every i), by completion from the Hermite rows.
std::vector<ZVector> graver_basis(const Lattice& h);

/// Human-readable shape of the dual group of H and of H^perp.
std::string dual_description(const Lattice& h);

}  // namespace drprim
