#include "drprim/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace drprim {

std::string RationalAngle::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += rational_to_string(coords_[i]);
  }
  return out;
}

RationalAngle RationalAngle::parse(const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) coords.push_back(parse_rational(part));
  if (coords.empty()) throw Error(ErrorCode::Parse, "empty angle");
  return RationalAngle(std::move(coords));
}

std::string CharacterLabel::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += rational_to_string(values_[i]);
  }
  return out + ")";
}

Rational pairing(const RationalAngle& theta, const ZVector& g) {
  if (static_cast<Eigen::Index>(theta.size()) != g.size())
    throw Error(ErrorCode::DimensionMismatch, "angle and vector of different length");
  Rational sum = 0;
  for (Eigen::Index i = 0; i < g.size(); ++i)
    if (g(i) != 0) sum += theta[static_cast<std::size_t>(i)] * g(i);
  return sum;
}

std::complex<double> character_value(const RationalAngle& theta, const ZVector& g) {
  const Rational phase = frac(pairing(theta, g));
  if (phase == 0) return {1.0, 0.0};
  if (phase == Rational(1, 2)) return {-1.0, 0.0};
  if (phase == Rational(1, 4)) return {0.0, 1.0};
  if (phase == Rational(3, 4)) return {0.0, -1.0};
  const double t = phase.convert_to<double>();
  return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

namespace {

Rational row_pairing(const Lattice& h, Eigen::Index row, const RationalAngle& theta) {
  Rational sum = 0;
  for (Eigen::Index j = 0; j < h.ambient_rank(); ++j)
    if (h.basis()(row, j) != 0) sum += theta[static_cast<std::size_t>(j)] * Rational(h.basis()(row, j));
  return sum;
}

void check_angle(const Lattice& h, const RationalAngle& theta) {
  if (static_cast<Eigen::Index>(theta.size()) != h.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "angle of length " + std::to_string(theta.size()) +
                                                  " for lattice in Z^" + std::to_string(h.ambient_rank()));
}

}  // namespace

bool annihilator_member(const Lattice& h, const RationalAngle& theta) {
  check_angle(h, theta);
  for (Eigen::Index i = 0; i < h.rank(); ++i)
    if (frac(row_pairing(h, i, theta)) != 0) return false;
  return true;
}

CharacterLabel restrict_character(const Lattice& h, const RationalAngle& theta) {
  check_angle(h, theta);
  std::vector<Rational> values;
  for (Eigen::Index i = 0; i < h.rank(); ++i) values.push_back(row_pairing(h, i, theta));
  return CharacterLabel(std::move(values));
}

RationalAngle annihilator_element(const Lattice& h, const std::vector<Rational>& coords) {
  const auto k = h.ambient_rank();
  if (static_cast<Eigen::Index>(coords.size()) != k)
    throw Error(ErrorCode::DimensionMismatch, "annihilator coordinates of wrong length");
  std::vector<Rational> psi(coords.size());
  Lattice::Matrix v = Lattice::Matrix::Identity(k, k);
  std::vector<BigInt> factors;
  if (h.rank() > 0) {
    auto snf = smith_decomposition(h.basis());
    v = snf.V;
    factors = snf.factors;
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Rational c = frac(coords[i]);
    if (i < factors.size()) {
      const BigInt& d = factors[i];
      const Rational scaled = c * Rational(d);
      BigInt t = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
      psi[i] = Rational(t, d);
    } else {
      psi[i] = c;
    }
  }
  std::vector<Rational> theta(coords.size());
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      if (v(i, j) != 0) theta[static_cast<std::size_t>(i)] += Rational(v(i, j)) * psi[static_cast<std::size_t>(j)];
  return RationalAngle(std::move(theta));
}

namespace {

bool conformal_below(const ZVector& g, const ZVector& h) {
  for (Eigen::Index i = 0; i < g.size(); ++i)
    if (g(i) * h(i) < 0 || std::abs(g(i)) > std::abs(h(i))) return false;
  return true;
}

ZVector normal_form(ZVector s, const std::vector<ZVector>& basis) {
  for (bool reduced = true; reduced && !s.isZero();) {
    reduced = false;
    for (const auto& g : basis)
      if (conformal_below(g, s)) {
        s -= g;
        reduced = true;
        break;
      }
  }
  return s;
}

}  // namespace

std::vector<ZVector> graver_basis(const Lattice& h) {
  std::vector<ZVector> g;
  for (const auto& r : h.rows()) {
    g.push_back(r);
    g.push_back(-r);
  }
  std::vector<ZVector> pending;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pending.push_back(g[i] + g[j]);
  while (!pending.empty()) {
    const ZVector f = normal_form(pending.back(), g);
    pending.pop_back();
    if (f.isZero()) continue;
    for (const auto& e : g) pending.push_back(f + e);
    g.push_back(f);
  }
  std::vector<ZVector> out;
  for (const auto& c : g) {
    if (c.isZero()) continue;
    const bool beaten = std::any_of(g.begin(), g.end(), [&](const ZVector& d) {
      return !d.isZero() && !equal_vectors(c, d) && conformal_below(d, c);
    });
    if (!beaten && std::none_of(out.begin(), out.end(), [&](const ZVector& d) { return equal_vectors(c, d); }))
      out.push_back(c);
  }
  std::sort(out.begin(), out.end(), ZVectorLess{});
  return out;
}

std::string dual_description(const Lattice& h) {
  const auto inv = smith_invariants(h);
  std::ostringstream out;
  out << "dual(H) = T^" << h.rank() << "; H^perp = ";
  bool first = true;
  for (const auto& d : inv.factors) {
    if (d == 1) continue;
    out << (first ? "" : " x ") << "Z/" << d;
    first = false;
  }
  if (inv.free_rank > 0) {
    out << (first ? "" : " x ") << "T^" << inv.free_rank;
    first = false;
  }
  if (first) out << "trivial";
  return out.str();
}

}  // namespace drprim
