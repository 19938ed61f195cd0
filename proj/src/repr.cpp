#include "drprim/repr.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <sstream>

namespace drprim {

CcFunction CcFunction::indicator(const GroupoidElement& g, Complex value) {
  CcFunction f;
  f.add(g, value);
  return f;
}

void CcFunction::add(const GroupoidElement& g, Complex value) {
  auto [it, inserted] = terms_.try_emplace(g, value);
  if (!inserted) it->second += value;
}

Complex CcFunction::at(const GroupoidElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Complex{} : it->second;
}

void CcFunction::prune(double threshold) {
  std::erase_if(terms_, [&](const auto& t) { return std::abs(t.second) < threshold; });
}

CcFunction& CcFunction::operator+=(const CcFunction& other) {
  for (const auto& [g, v] : other.terms_) add(g, v);
  prune();
  return *this;
}

CcFunction operator-(CcFunction a, const CcFunction& b) {
  for (const auto& [g, v] : b.terms_) a.add(g, -v);
  a.prune();
  return a;
}

CcFunction operator*(Complex c, const CcFunction& f) {
  CcFunction out;
  for (const auto& [g, v] : f.terms_) out.add(g, c * v);
  out.prune();
  return out;
}

double max_difference(const CcFunction& f, const CcFunction& h) {
  double worst = 0.0;
  for (const auto& [g, v] : f.terms()) worst = std::max(worst, std::abs(v - h.at(g)));
  for (const auto& [g, v] : h.terms()) worst = std::max(worst, std::abs(v - f.at(g)));
  return worst;
}

CcFunction convolve(const CcFunction& f, const CcFunction& g) {
  std::multimap<Point, std::pair<const GroupoidElement*, Complex>> by_range;
  for (const auto& [e, v] : g.terms()) by_range.emplace(e.range, std::make_pair(&e, v));
  CcFunction out;
  for (const auto& [a, fa] : f.terms()) {
    auto [lo, hi] = by_range.equal_range(a.source);
    for (auto it = lo; it != hi; ++it) out.add(compose(a, *it->second.first), fa * it->second.second);
  }
  out.prune();
  return out;
}

CcFunction involution(const CcFunction& f) {
  CcFunction out;
  for (const auto& [g, v] : f.terms()) out.add(inverse(g), std::conj(v));
  return out;
}

double i_norm(const CcFunction& f) {
  std::map<Point, double> by_range, by_source;
  for (const auto& [g, v] : f.terms()) {
    by_range[g.range] += std::abs(v);
    by_source[g.source] += std::abs(v);
  }
  double out = 0.0;
  for (const auto& [p, s] : by_range) out = std::max(out, s);
  for (const auto& [p, s] : by_source) out = std::max(out, s);
  return out;
}

CcFunction gauge_act(const RationalAngle& theta, const CcFunction& f) {
  CcFunction out;
  for (const auto& [g, v] : f.terms()) out.add(g, character_value(theta, g.displacement) * v);
  return out;
}

CcFunction conditional_expectation(const CcFunction& f) {
  CcFunction out;
  for (const auto& [g, v] : f.terms())
    if (g.displacement.isZero()) out.add(g, v);
  return out;
}

void QcFunction::add(const QuotientElement& q, Complex value) {
  if (q.lattice != lattice_) throw Error(ErrorCode::LatticeMismatch, "quotient element over another lattice");
  add_reduced({q.range, q.displacement, q.source}, value);
}

void QcFunction::add_reduced(const GroupoidElement& key, Complex value) {
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) it->second += value;
}

Complex QcFunction::at(const QuotientElement& q) const {
  auto it = terms_.find({q.range, q.displacement, q.source});
  return it == terms_.end() ? Complex{} : it->second;
}

void QcFunction::prune(double threshold) {
  std::erase_if(terms_, [&](const auto& t) { return std::abs(t.second) < threshold; });
}

double max_difference(const QcFunction& a, const QcFunction& b) {
  if (a.lattice() != b.lattice()) throw Error(ErrorCode::LatticeMismatch, "comparing over different lattices");
  auto lookup = [](const QcFunction& f, const GroupoidElement& g) {
    auto it = f.terms().find(g);
    return it == f.terms().end() ? Complex{} : it->second;
  };
  double worst = 0.0;
  for (const auto& [g, v] : a.terms()) worst = std::max(worst, std::abs(v - lookup(b, g)));
  for (const auto& [g, v] : b.terms()) worst = std::max(worst, std::abs(v - lookup(a, g)));
  return worst;
}

QcFunction kappa(const CcFunction& f, const Lattice& h) {
  QcFunction out(h);
  for (const auto& [g, v] : f.terms()) out.add_reduced({g.range, h.reduce(g.displacement), g.source}, v);
  out.prune();
  return out;
}

QcFunction kappa(const SystemProfiles& profiles, const CcFunction& f) {
  if (f.empty()) {
    const auto k = profiles.profiles.empty() ? 0 : profiles.profiles.front().H.ambient_rank();
    return QcFunction(Lattice(k));
  }
  const Lattice& h = profiles.of(f.terms().begin()->first.range).H;
  for (const auto& [g, v] : f.terms())
    if (profiles.of(g.range).H != h)
      throw Error(ErrorCode::MixedQuasiOrbits, "support meets quasi-orbits with different lattices");
  return kappa(f, h);
}

QcFunction quotient_convolve(const QcFunction& a, const QcFunction& b) {
  if (a.lattice() != b.lattice()) throw Error(ErrorCode::LatticeMismatch, "convolving over different lattices");
  QcFunction out(a.lattice());
  for (const auto& [x, va] : a.terms())
    for (const auto& [y, vb] : b.terms())
      if (x.source == y.range)
        out.add_reduced({x.range, a.lattice().reduce(x.displacement + y.displacement), y.source}, va * vb);
  out.prune();
  return out;
}

QcFunction quotient_involution(const QcFunction& a) {
  QcFunction out(a.lattice());
  for (const auto& [x, v] : a.terms())
    out.add_reduced({x.source, a.lattice().reduce(-x.displacement), x.range}, std::conj(v));
  return out;
}

QcFunction twisted_gauge(const RationalAngle& theta, const QcFunction& a) {
  QcFunction out(a.lattice());
  for (const auto& [x, v] : a.terms()) out.add_reduced(x, character_value(theta, x.displacement) * v);
  return out;
}

QcFunction scale(Complex c, const QcFunction& a) {
  QcFunction out(a.lattice());
  for (const auto& [x, v] : a.terms()) out.add_reduced(x, c * v);
  out.prune();
  return out;
}

OrbitMatrix pi_matrix(const FiniteSystem& sys, Point x, const RationalAngle& theta, const CcFunction& f) {
  const PointSet basis = orbit(sys, x);
  if (theta.size() != sys.k())
    throw Error(ErrorCode::DimensionMismatch, "angle of length " + std::to_string(theta.size()));
  std::vector<std::int64_t> slot(sys.size(), -1);
  for (std::size_t i = 0; i < basis.size(); ++i) slot[basis[i]] = static_cast<std::int64_t>(i);
  const auto n = static_cast<Eigen::Index>(basis.size());
  OrbitMatrix m = OrbitMatrix::Zero(n, n);
  for (const auto& [g, v] : f.terms()) {
    if (g.range >= sys.size() || g.source >= sys.size()) throw Error(ErrorCode::BadIndex, "support point");
    if (slot[g.range] < 0 || slot[g.source] < 0) continue;
    m(slot[g.range], slot[g.source]) += character_value(theta, g.displacement) * v;
  }
  return m;
}

OrbitMatrix omega_matrix(const FiniteSystem& sys, Point x, const CcFunction& f) {
  return pi_matrix(sys, x, RationalAngle::zero(sys.k()), f);
}

double operator_norm(const OrbitMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<OrbitMatrix> svd(m);
  return svd.singularValues()(0);
}

CcFunction regular_apply(Point x, const CcFunction& f, const CcFunction& v) {
  for (const auto& [g, c] : v.terms())
    if (g.source != x)
      throw Error(ErrorCode::SourceMismatch, "basis element with source " + std::to_string(g.source) +
                                                 " in l^2(G_" + std::to_string(x) + ")");
  return convolve(f, v);
}

void FinSuppHFun::add(const ZVector& n, Complex value) {
  if (!lattice_.contains(n)) throw Error(ErrorCode::SupportNotInLattice, to_string(n));
  auto [it, inserted] = terms_.try_emplace(n, value);
  if (!inserted) it->second += value;
}

CcFunction phi_dot(const FinSuppHFun& phi, const CcFunction& f) {
  CcFunction out;
  for (const auto& [g, v] : f.terms())
    for (const auto& [n, c] : phi.terms()) out.add({g.range, g.displacement + n, g.source}, c * v);
  out.prune();
  return out;
}

Complex fourier(const FinSuppHFun& phi, const RationalAngle& theta) {
  Complex sum = 0.0;
  for (const auto& [n, c] : phi.terms()) sum += c * character_value(theta, n);
  return sum;
}

bool BatteryReport::passed() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityResult& r) { return r.passed; });
}

double BatteryReport::max_residual() const {
  double out = 0.0;
  for (const auto& r : identities) out = std::max(out, r.max_residual);
  return out;
}

namespace {

constexpr std::int64_t kDisplacementBound = 4;
constexpr int kMaxDenominator = 12;

class TrialGenerator {
 public:
  TrialGenerator(const FiniteSystem& sys, std::uint64_t seed) : sys_(sys), rng_(seed) {}

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Complex value() {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double re = unit(rng_);
    return {re, unit(rng_)};
  }

  Rational rational() {
    const int q = std::uniform_int_distribution<int>(1, kMaxDenominator)(rng_);
    const int p = std::uniform_int_distribution<int>(0, q - 1)(rng_);
    return Rational(p, q);
  }

  RationalAngle angle() {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < sys_.k(); ++i) c.push_back(rational());
    return RationalAngle(std::move(c));
  }

  RationalAngle annihilator(const Lattice& h) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < sys_.k(); ++i) c.push_back(rational());
    return annihilator_element(h, c);
  }

  /// Valid displacements g with |g_i| <= 4 and (u, g, y) in G_T.
  const std::vector<ZVector>& displacements(Point u, Point y) {
    auto key = std::make_pair(u, y);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<ZVector> found;
    const auto k = static_cast<Eigen::Index>(sys_.k());
    ZVector g = ZVector::Constant(k, -kDisplacementBound);
    for (;;) {
      if (contains(sys_, u, g, y)) found.push_back(g);
      Eigen::Index i = 0;
      while (i < k && ++g(i) > kDisplacementBound) g(i++) = -kDisplacementBound;
      if (i == k) break;
    }
    return cache_.emplace(key, std::move(found)).first->second;
  }

  CcFunction function(const PointSet& orbit) {
    CcFunction f;
    const std::size_t terms = 1 + index(4);
    for (std::size_t t = 0; t < terms; ++t) {
      const Point u = orbit[index(orbit.size())];
      const Point y = orbit[index(orbit.size())];
      const auto& choices = displacements(u, y);
      if (choices.empty()) continue;
      f.add({u, choices[index(choices.size())], y}, value());
    }
    if (f.empty()) f.add({orbit.front(), ZVector::Zero(static_cast<Eigen::Index>(sys_.k())), orbit.front()}, value());
    return f;
  }

  FinSuppHFun phi(const Lattice& h) {
    std::vector<ZVector> members;
    h.for_each_in_box(kDisplacementBound, [&](const ZVector& n) { members.push_back(n); });
    FinSuppHFun out(h);
    const std::size_t terms = 1 + index(3);
    for (std::size_t t = 0; t < terms; ++t) out.add(members[index(members.size())], value());
    return out;
  }

 private:
  const FiniteSystem& sys_;
  std::mt19937_64 rng_;
  std::map<std::pair<Point, Point>, std::vector<ZVector>> cache_;
};

std::string describe(const FiniteSystem& sys, const CcFunction& f) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [g, v] : f.terms()) {
    out << (first ? "" : ", ") << '(' << sys.name(g.range) << ',' << to_string(g.displacement) << ','
        << sys.name(g.source) << ")=" << v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

BatteryReport identity_battery(const FiniteSystem& sys, const SystemProfiles& profiles, const BatteryOptions& options) {
  if (options.trials == 0) throw Error(ErrorCode::Parse, "trials must be at least 1");
  BatteryReport report;
  report.seed = options.seed;
  report.trials = options.trials;
  report.tolerance = options.tolerance;
  const char* names[] = {"kappa is a *-homomorphism",
                         "kappa intertwines the gauge actions on H^perp",
                         "kappa(alpha(phi.f)) = phi^ kappa(alpha(f))",
                         "Phi equivariance",
                         "pi is a *-representation",
                         "pi = omega o alpha",
                         "pi is bounded by the I-norm"};
  for (int i = 0; i < 7; ++i) report.identities.push_back({i + 1, names[i], 0.0, true, {}});

  TrialGenerator gen(sys, options.seed);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const auto& p = profiles.profiles[gen.index(profiles.profiles.size())];
    const Lattice& h = options.kappa_lattice ? *options.kappa_lattice : p.H;
    const CcFunction f = gen.function(p.orbit);
    const CcFunction g = gen.function(p.orbit);
    const RationalAngle theta = gen.angle();
    const RationalAngle eta = gen.annihilator(p.H);
    const FinSuppHFun phi = gen.phi(p.H);
    const Point x = p.orbit[gen.index(p.orbit.size())];

    std::ostringstream inputs;
    inputs << "trial " << trial << " f=" << describe(sys, f) << " g=" << describe(sys, g)
           << " theta=" << theta.to_string() << " eta=" << eta.to_string() << " x=" << sys.name(x);
    auto record = [&](int id, double residual) {
      auto& r = report.identities[static_cast<std::size_t>(id - 1)];
      r.max_residual = std::max(r.max_residual, residual);
      if (residual > options.tolerance && r.passed) {
        r.passed = false;
        r.first_failure = inputs.str() + " residual=" + std::to_string(residual);
      }
    };

    const QcFunction kf = kappa(f, h);
    record(1, std::max(max_difference(kappa(convolve(f, g), h), quotient_convolve(kf, kappa(g, h))),
                       max_difference(kappa(involution(f), h), quotient_involution(kf))));

    record(2, max_difference(kappa(gauge_act(eta, f), h), twisted_gauge(eta, kf)));

    const QcFunction alpha_f = kappa(gauge_act(theta, f), h);
    record(3, max_difference(kappa(gauge_act(theta, phi_dot(phi, f)), h), scale(fourier(phi, theta), alpha_f)));

    record(4, max_difference(kappa(gauge_act(theta + eta, f), h), twisted_gauge(eta, alpha_f)));

    const OrbitMatrix pf = pi_matrix(sys, x, theta, f);
    const OrbitMatrix pg = pi_matrix(sys, x, theta, g);
    const double mult = (pi_matrix(sys, x, theta, convolve(f, g)) - pf * pg).cwiseAbs().maxCoeff();
    const double adj = (pi_matrix(sys, x, theta, involution(f)) - pf.adjoint()).cwiseAbs().maxCoeff();
    record(5, std::max(mult, adj));

    record(6, (pf - omega_matrix(sys, x, gauge_act(theta, f))).cwiseAbs().maxCoeff());

    record(7, std::max(0.0, operator_norm(pf) - i_norm(f)));
  }
  for (const auto& r : report.identities)
    if (!r.passed)
      throw BatteryFailure("identity (" + std::to_string(r.identity) + ") " + r.name + ": " + r.first_failure,
                           report);
  return report;
}

std::vector<CcFunction> generator_battery(const FiniteSystem& sys, const PeriodicityProfile& p) {
  std::vector<CcFunction> out;
  const auto k = static_cast<Eigen::Index>(sys.k());
  for (Point y : p.orbit) {
    out.push_back(CcFunction::indicator(unit(sys, y)));
    for (Eigen::Index i = 0; i < k; ++i) {
      const GroupoidElement step{y, unit_vector(k, i), sys.image(static_cast<std::size_t>(i), y)};
      out.push_back(CcFunction::indicator(step));
      out.push_back(CcFunction::indicator(inverse(step)));
    }
    for (const auto& b : p.per_point.at(y).rows()) out.push_back(CcFunction::indicator({y, b, y}));
  }
  return out;
}

std::optional<IntertwinerResult> intertwiner(const FiniteSystem& sys, const PeriodicityProfile& p, Point x,
                                             const RationalAngle& theta, const RationalAngle& omega,
                                             double tolerance) {
  const RationalAngle delta = omega - theta;
  if (!annihilator_member(p.H, delta)) return std::nullopt;
  const auto k = static_cast<Eigen::Index>(sys.k());
  const PointSet basis = orbit(sys, x);

  // g_y with (x, g_y, y) in G_T: y -> T_i y adds e_i, the reverse edge subtracts it.
  std::map<Point, ZVector> reach;
  reach.emplace(x, ZVector::Zero(k));
  std::queue<Point> todo;
  todo.push(x);
  while (!todo.empty()) {
    const Point y = todo.front();
    todo.pop();
    const ZVector gy = reach.at(y);
    for (Eigen::Index i = 0; i < k; ++i) {
      const Point fwd = sys.image(static_cast<std::size_t>(i), y);
      if (reach.emplace(fwd, gy + unit_vector(k, i)).second) todo.push(fwd);
    }
    for (Point z : basis)
      for (Eigen::Index i = 0; i < k; ++i)
        if (sys.image(static_cast<std::size_t>(i), z) == y && reach.emplace(z, gy - unit_vector(k, i)).second)
          todo.push(z);
  }

  const auto n = static_cast<Eigen::Index>(basis.size());
  OrbitMatrix u = OrbitMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    u(i, i) = std::conj(character_value(delta, reach.at(basis[static_cast<std::size_t>(i)])));

  double residual = 0.0;
  for (const auto& f : generator_battery(sys, p)) {
    const OrbitMatrix lhs = u * pi_matrix(sys, x, theta, f);
    const OrbitMatrix rhs = pi_matrix(sys, x, omega, f) * u;
    residual = std::max(residual, operator_norm(lhs - rhs));
  }
  if (residual > tolerance)
    throw Error(ErrorCode::VerificationFailure, "intertwiner residual " + std::to_string(residual));
  return IntertwinerResult{std::move(u), residual};
}

}  // namespace drprim
