#include "drprim/groupoid.hpp"

#include <queue>

namespace drprim {

namespace {

void check_length(const FiniteSystem& sys, const ZVector& g) {
  if (static_cast<std::size_t>(g.size()) != sys.k())
    throw Error(ErrorCode::DimensionMismatch, "displacement " + to_string(g) + " for k=" + std::to_string(sys.k()));
}

/// Calls visit(m) for every m with 0 <= m_i < box_i.
template <typename Visitor>
void for_each_in_box(const ZVector& box, Visitor&& visit) {
  MultiIndex m = MultiIndex::Zero(box.size());
  for (;;) {
    visit(static_cast<const MultiIndex&>(m));
    Eigen::Index i = 0;
    while (i < box.size() && ++m(i) == box(i)) m(i++) = 0;
    if (i == box.size()) return;
  }
}

}  // namespace

bool contains(const FiniteSystem& sys, Point x, const ZVector& g, Point y) {
  sys.check_point(x);
  sys.check_point(y);
  check_length(sys, g);
  const auto n = sys.size();
  const Point u0 = sys.apply(positive_part(g), x);
  const Point v0 = sys.apply(negative_part(g), y);
  std::vector<bool> seen(n * n, false);
  std::queue<std::pair<Point, Point>> todo;
  seen[u0 * n + v0] = true;
  todo.emplace(u0, v0);
  while (!todo.empty()) {
    auto [u, v] = todo.front();
    todo.pop();
    if (u == v) return true;
    for (std::size_t i = 0; i < sys.k(); ++i) {
      const Point a = sys.image(i, u), b = sys.image(i, v);
      if (!seen[a * n + b]) {
        seen[a * n + b] = true;
        todo.emplace(a, b);
      }
    }
  }
  return false;
}

GroupoidElement make_element(const FiniteSystem& sys, Point x, const ZVector& g, Point y) {
  if (!contains(sys, x, g, y))
    throw Error(ErrorCode::InvalidElement, "(" + sys.name(x) + "," + to_string(g) + "," + sys.name(y) + ")");
  return {x, g, y};
}

GroupoidElement unit(const FiniteSystem& sys, Point x) {
  sys.check_point(x);
  return {x, ZVector::Zero(static_cast<Eigen::Index>(sys.k())), x};
}

GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b) {
  if (a.source != b.range)
    throw Error(ErrorCode::NotComposable,
                "source " + std::to_string(a.source) + " != range " + std::to_string(b.range));
  if (a.displacement.size() != b.displacement.size())
    throw Error(ErrorCode::DimensionMismatch, "displacements of different length");
  return {a.range, a.displacement + b.displacement, b.source};
}

GroupoidElement inverse(const GroupoidElement& a) { return {a.source, -a.displacement, a.range}; }

Lattice isotropy_group(const FiniteSystem& sys, Point y) {
  const auto data = eventual_data(sys, y);
  const auto k = static_cast<Eigen::Index>(sys.k());
  std::vector<ZVector> gens;
  for (Eigen::Index i = 0; i < k; ++i) gens.push_back(data.period(i) * unit_vector(k, i));
  const ZVector box = data.box();
  std::vector<std::pair<MultiIndex, Point>> images;
  for_each_in_box(box, [&](const MultiIndex& m) { images.emplace_back(m, sys.apply(m, y)); });
  for (const auto& [m, pm] : images)
    for (const auto& [n, pn] : images)
      if (pm == pn && !equal_vectors(m, n)) gens.push_back(m - n);
  return Lattice::generated_by(k, gens);
}

QuotientElement quotient_element(const GroupoidElement& g, const Lattice& h) {
  return {g.range, h.reduce(g.displacement), g.source, h};
}

QuotientElement quotient_compose(const QuotientElement& a, const QuotientElement& b) {
  if (a.lattice != b.lattice) throw Error(ErrorCode::LatticeMismatch, "quotient elements over different lattices");
  if (a.source != b.range)
    throw Error(ErrorCode::NotComposable,
                "source " + std::to_string(a.source) + " != range " + std::to_string(b.range));
  return {a.range, a.lattice.reduce(a.displacement + b.displacement), b.source, a.lattice};
}

QuotientElement quotient_inverse(const QuotientElement& a) {
  return {a.source, a.lattice.reduce(-a.displacement), a.range, a.lattice};
}

bool quotient_isotropy_is_trivial(const FiniteSystem& sys, const PointSet& y, const Lattice& h) {
  for (Point p : y)
    if (isotropy_group(sys, p) != h) return false;
  return true;
}

}  // namespace drprim
