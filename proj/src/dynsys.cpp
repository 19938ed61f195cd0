#include "drprim/dynsys.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace drprim {

FiniteSystem FiniteSystem::validate(const RawSystem& raw) {
  if (raw.k == 0) throw Error(ErrorCode::Parse, "k must be positive");
  if (raw.points.empty()) throw Error(ErrorCode::Parse, "system has no points");
  if (raw.maps.size() != raw.k)
    throw Error(ErrorCode::Parse, "expected " + std::to_string(raw.k) + " maps, got " +
                                      std::to_string(raw.maps.size()));
  for (std::size_t a = 0; a < raw.points.size(); ++a)
    for (std::size_t b = a + 1; b < raw.points.size(); ++b)
      if (raw.points[a] == raw.points[b])
        throw Error(ErrorCode::Parse, "duplicate point name '" + raw.points[a] + "'");

  FiniteSystem sys;
  sys.names_ = raw.points;
  const auto n = static_cast<std::int64_t>(raw.points.size());
  for (std::size_t i = 0; i < raw.k; ++i) {
    if (raw.maps[i].size() != raw.points.size())
      throw Error(ErrorCode::BadIndex, "map " + std::to_string(i + 1) + " has " +
                                           std::to_string(raw.maps[i].size()) + " entries for " +
                                           std::to_string(n) + " points");
    std::vector<Point> m;
    for (std::size_t x = 0; x < raw.maps[i].size(); ++x) {
      const auto t = raw.maps[i][x];
      if (t < 0 || t >= n)
        throw Error(ErrorCode::BadIndex, "map " + std::to_string(i + 1) + " sends " + raw.points[x] +
                                             " to unknown index " + std::to_string(t));
      m.push_back(static_cast<Point>(t));
    }
    sys.maps_.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < sys.k(); ++i)
    for (std::size_t j = i + 1; j < sys.k(); ++j)
      for (Point x = 0; x < sys.size(); ++x)
        if (sys.image(i, sys.image(j, x)) != sys.image(j, sys.image(i, x)))
          throw Error(ErrorCode::NonCommuting,
                      std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + sys.names_[x]);
  return sys;
}

const std::string& FiniteSystem::name(Point p) const {
  check_point(p);
  return names_[p];
}

Point FiniteSystem::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorCode::BadIndex, "unknown point '" + name + "'");
  return static_cast<Point>(it - names_.begin());
}

void FiniteSystem::check_point(Point p) const {
  if (p >= names_.size()) throw Error(ErrorCode::BadIndex, "point index " + std::to_string(p));
}

Point FiniteSystem::apply(const MultiIndex& n, Point x) const {
  check_point(x);
  if (static_cast<std::size_t>(n.size()) != k())
    throw Error(ErrorCode::DimensionMismatch, "multi-index " + to_string(n) + " for k=" + std::to_string(k()));
  for (std::size_t i = 0; i < k(); ++i) {
    const auto steps = n(static_cast<Eigen::Index>(i));
    if (steps < 0) throw Error(ErrorCode::DimensionMismatch, "negative multi-index " + to_string(n));
    for (std::int64_t s = 0; s < steps; ++s) x = maps_[i][x];
  }
  return x;
}

RawSystem FiniteSystem::raw() const {
  RawSystem out;
  out.k = k();
  out.points = names_;
  for (const auto& m : maps_) out.maps.emplace_back(m.begin(), m.end());
  return out;
}

MultiIndex EventualData::clamp(const MultiIndex& m) const {
  MultiIndex out = m;
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (m(i) >= preperiod(i)) out(i) = preperiod(i) + (m(i) - preperiod(i)) % period(i);
  return out;
}

PointSet reachable_set(const FiniteSystem& sys, Point x) {
  sys.check_point(x);
  std::vector<bool> seen(sys.size(), false);
  std::queue<Point> todo;
  seen[x] = true;
  todo.push(x);
  while (!todo.empty()) {
    Point p = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < sys.k(); ++i) {
      Point q = sys.image(i, p);
      if (!seen[q]) {
        seen[q] = true;
        todo.push(q);
      }
    }
  }
  PointSet out;
  for (Point p = 0; p < sys.size(); ++p)
    if (seen[p]) out.push_back(p);
  return out;
}

EventualData eventual_data(const FiniteSystem& sys, Point x) {
  const PointSet reach = reachable_set(sys, x);
  const auto n = reach.size();
  const auto k = static_cast<Eigen::Index>(sys.k());
  EventualData out{ZVector::Zero(k), ZVector::Ones(k)};
  for (std::size_t i = 0; i < sys.k(); ++i) {
    // powers[j][r] = T_i^j(reach[r]); j up to 2n covers every (a, c) <= n.
    std::vector<std::vector<Point>> powers{reach};
    for (std::size_t j = 1; j <= 2 * n; ++j) {
      std::vector<Point> next;
      for (Point p : powers.back()) next.push_back(sys.image(i, p));
      powers.push_back(std::move(next));
    }
    bool found = false;
    for (std::size_t a = 0; a <= n && !found; ++a)
      for (std::size_t c = 1; c <= n && !found; ++c)
        if (powers[a + c] == powers[a]) {
          out.preperiod(static_cast<Eigen::Index>(i)) = static_cast<std::int64_t>(a);
          out.period(static_cast<Eigen::Index>(i)) = static_cast<std::int64_t>(c);
          found = true;
        }
    if (!found) throw std::logic_error("eventual period not found on a finite set");
  }
  return out;
}

namespace {

std::vector<Point> component_labels(const FiniteSystem& sys) {
  std::vector<Point> parent(sys.size());
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point p) {
    while (parent[p] != p) p = parent[p] = parent[parent[p]];
    return p;
  };
  for (std::size_t i = 0; i < sys.k(); ++i)
    for (Point x = 0; x < sys.size(); ++x) {
      Point a = find(x), b = find(sys.image(i, x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<Point> label(sys.size());
  for (Point x = 0; x < sys.size(); ++x) label[x] = find(x);
  return label;
}

}  // namespace

PointSet orbit(const FiniteSystem& sys, Point x) {
  sys.check_point(x);
  const auto label = component_labels(sys);
  PointSet out;
  for (Point y = 0; y < sys.size(); ++y)
    if (label[y] == label[x]) out.push_back(y);
  return out;
}

std::vector<PointSet> enumerate_invariant_subsets(const FiniteSystem& sys) {
  const auto n = sys.size();
  if (n > 20) throw std::length_error("invariant-subset enumeration limited to 20 points");
  std::vector<PointSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [&](Point p) { return ((mask >> p) & 1U) != 0; };
    bool invariant = true;
    for (std::size_t i = 0; i < sys.k() && invariant; ++i)
      for (Point x = 0; x < n && invariant; ++x)
        // forward and backward closure under each T_i
        if (in(x) != in(sys.image(i, x))) invariant = false;
    if (!invariant) continue;
    PointSet s;
    for (Point p = 0; p < n; ++p)
      if (in(p)) s.push_back(p);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PointSet> irreducible_invariant_subsets(const FiniteSystem& sys) {
  const auto all = enumerate_invariant_subsets(sys);
  auto is_proper_subset = [](const PointSet& a, const PointSet& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<PointSet> out;
  for (const auto& c : all) {
    std::vector<const PointSet*> proper;
    for (const auto& d : all)
      if (is_proper_subset(d, c)) proper.push_back(&d);
    bool splits = false;
    for (std::size_t a = 0; a < proper.size() && !splits; ++a)
      for (std::size_t b = a; b < proper.size() && !splits; ++b) {
        PointSet u;
        std::set_union(proper[a]->begin(), proper[a]->end(), proper[b]->begin(), proper[b]->end(),
                       std::back_inserter(u));
        if (u == c) splits = true;
      }
    if (!splits) out.push_back(c);
  }
  return out;
}

QuasiOrbitPartition quasi_orbits(const FiniteSystem& sys, std::size_t max_enumerated_points) {
  QuasiOrbitPartition out;
  const auto label = component_labels(sys);
  std::vector<Point> roots;
  for (Point x = 0; x < sys.size(); ++x)
    if (label[x] == x) roots.push_back(x);
  for (Point root : roots) {
    QuasiOrbit q;
    for (Point y = 0; y < sys.size(); ++y)
      if (label[y] == root) q.points.push_back(y);
    q.representative = *std::min_element(q.points.begin(), q.points.end(), [&](Point a, Point b) {
      return sys.name(a) < sys.name(b);
    });
    out.classes.push_back(std::move(q));
  }
  std::sort(out.classes.begin(), out.classes.end(), [&](const QuasiOrbit& a, const QuasiOrbit& b) {
    return sys.name(a.representative) < sys.name(b.representative);
  });
  out.class_of.resize(sys.size());
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    for (Point p : out.classes[c].points) out.class_of[p] = c;
  if (sys.size() <= max_enumerated_points) {
    out.closed_invariant_subsets = enumerate_invariant_subsets(sys);
    out.irreducible_subsets = irreducible_invariant_subsets(sys);
  }
  return out;
}

FiniteSystem restrict(const FiniteSystem& sys, const PointSet& subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySet, "restriction to the empty set");
  std::vector<std::int64_t> position(sys.size(), -1);
  PointSet sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t r = 0; r < sorted.size(); ++r) {
    sys.check_point(sorted[r]);
    position[sorted[r]] = static_cast<std::int64_t>(r);
  }
  RawSystem raw;
  raw.k = sys.k();
  for (Point p : sorted) raw.points.push_back(sys.name(p));
  for (std::size_t i = 0; i < sys.k(); ++i) {
    std::vector<std::int64_t> m;
    for (Point p : sorted) {
      const auto t = position[sys.image(i, p)];
      if (t < 0) throw Error(ErrorCode::NotInvariant, sys.name(p) + "," + std::to_string(i + 1));
      m.push_back(t);
    }
    raw.maps.push_back(std::move(m));
  }
  return FiniteSystem::validate(raw);
}

}  // namespace drprim
