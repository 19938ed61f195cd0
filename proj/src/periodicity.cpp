#include "drprim/periodicity.hpp"

#include <algorithm>
#include <stdexcept>

namespace drprim {

namespace {

bool dominates(const IndexPair& big, const IndexPair& small) {
  return (big.first.array() >= small.first.array()).all() && (big.second.array() >= small.second.array()).all();
}

IndexPair split(const ZVector& g) { return {positive_part(g), negative_part(g)}; }

template <typename Visitor>
void for_each_index_pair(Eigen::Index k, std::int64_t bound, Visitor&& visit) {
  MultiIndex v = MultiIndex::Zero(2 * k);
  for (;;) {
    visit(static_cast<const MultiIndex&>(v.head(k)), static_cast<const MultiIndex&>(v.tail(k)));
    Eigen::Index i = 0;
    while (i < 2 * k && ++v(i) > bound) v(i++) = 0;
    if (i == 2 * k) return;
  }
}

}  // namespace

bool sigma_u_member(const FiniteSystem& sys, const PointSet& u, const MultiIndex& m, const MultiIndex& n) {
  if (u.empty()) throw Error(ErrorCode::EmptySet, "Sigma_U of the empty set");
  for (Point y : u)
    if (sys.apply(eventual_data(sys, y).clamp(m), y) != sys.apply(eventual_data(sys, y).clamp(n), y)) return false;
  return true;
}

std::int64_t default_sigma_bound(const FiniteSystem& sys, const PointSet& orbit) {
  std::int64_t widest = 1;
  for (Point y : orbit) widest = std::max(widest, eventual_data(sys, y).box().maxCoeff());
  return static_cast<std::int64_t>(orbit.size()) * widest;
}

PeriodicityProfile profile(const FiniteSystem& sys, Point x, const PeriodicityOptions& options) {
  PeriodicityProfile out;
  const auto k = static_cast<Eigen::Index>(sys.k());
  out.orbit = orbit(sys, x);
  out.quasi_orbit = *std::min_element(out.orbit.begin(), out.orbit.end(),
                                      [&](Point a, Point b) { return sys.name(a) < sys.name(b); });
  std::vector<ZVector> gens;
  std::int64_t widest = 1;
  for (Point y : out.orbit) {
    auto l = isotropy_group(sys, y);
    for (const auto& r : l.rows()) gens.push_back(r);
    out.per_point.emplace(y, std::move(l));
    widest = std::max(widest, eventual_data(sys, y).box().maxCoeff());
  }
  out.H = Lattice::generated_by(k, gens);
  const bool attained = std::any_of(out.per_point.begin(), out.per_point.end(),
                                    [&](const auto& entry) { return entry.second == out.H; });
  if (!attained) throw std::logic_error("union of isotropy lattices is not a group");

  // y is in Y when T^{g+} y = T^{g-} y for all g in H; since c_i e_i lies in
  // H, coordinates beyond a_i + c_i add nothing.
  std::vector<ZVector> window;
  out.H.for_each_in_box(widest, [&](const ZVector& g) { window.push_back(g); });
  for (Point y : out.orbit) {
    const bool periodic = std::all_of(window.begin(), window.end(), [&](const ZVector& g) {
      return sys.apply(positive_part(g), y) == sys.apply(negative_part(g), y);
    });
    if (periodic) out.Y.push_back(y);
  }
  if (out.Y.empty()) throw std::logic_error("empty periodic core");

  std::int64_t bound = options.sigma_bound > 0 ? options.sigma_bound : default_sigma_bound(sys, out.orbit);
  for (std::size_t attempt = 0;; ++attempt) {
    try {
      out.sigma_min = sigma_min(sys, out, bound);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundTooSmall || attempt >= options.sigma_bound_retries) throw;
      bound *= 2;
    }
  }
  return out;
}

bool sigma_member(const PeriodicityProfile& p, const MultiIndex& m, const MultiIndex& n) {
  p.H.check_dimension(m);
  p.H.check_dimension(n);
  return p.H.contains(m - n);
}

std::vector<IndexPair> sigma_min(const FiniteSystem& sys, const PeriodicityProfile& p, std::int64_t bound) {
  const auto k = static_cast<Eigen::Index>(sys.k());
  std::vector<IndexPair> candidates;
  for (Eigen::Index i = 0; i < k; ++i) candidates.emplace_back(unit_vector(k, i), unit_vector(k, i));
  p.H.for_each_in_box(bound, [&](const ZVector& g) {
    if (!g.isZero()) candidates.push_back(split(g));
  });
  std::vector<IndexPair> minimal;
  for (const auto& c : candidates) {
    const bool beaten = std::any_of(candidates.begin(), candidates.end(), [&](const IndexPair& d) {
      return dominates(c, d) && !(equal_vectors(c.first, d.first) && equal_vectors(c.second, d.second));
    });
    if (!beaten) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), IndexPairLess{});
  minimal.erase(std::unique(minimal.begin(), minimal.end(),
                            [](const IndexPair& a, const IndexPair& b) {
                              return equal_vectors(a.first, b.first) && equal_vectors(a.second, b.second);
                            }),
                minimal.end());

  // Minimal elements off the diagonal units are the splits of Graver elements.
  for (const auto& g : graver_basis(p.H))
    if (g.cwiseAbs().maxCoeff() > bound)
      throw Error(ErrorCode::BoundTooSmall, "sigma_min search bound " + std::to_string(bound));
  return minimal;
}

bool check_sigma_group_property(const FiniteSystem& sys, const PeriodicityProfile& p, std::int64_t bound) {
  bool ok = true;
  for_each_index_pair(static_cast<Eigen::Index>(sys.k()), bound, [&](const MultiIndex& m, const MultiIndex& n) {
    if (!ok) return;
    const bool lattice = sigma_member(p, m, n);
    const bool some = std::any_of(p.orbit.begin(), p.orbit.end(),
                                  [&](Point y) { return sys.apply(m, y) == sys.apply(n, y); });
    const bool core = sigma_u_member(sys, p.Y, m, n);
    ok = lattice == some && lattice == core;
  });
  return ok;
}

SystemProfiles analyze_profiles(const FiniteSystem& sys, const PeriodicityOptions& options,
                                std::size_t max_enumerated_points) {
  SystemProfiles out;
  out.partition = quasi_orbits(sys, max_enumerated_points);
  for (const auto& q : out.partition.classes) out.profiles.push_back(profile(sys, q.representative, options));
  return out;
}

}  // namespace drprim
