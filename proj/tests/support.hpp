#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance tests.
// The oracles search boxes of multi-indices directly and never call the
// library routines they are used to check.

#include "drprim/io.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace drprim::testing {

inline FiniteSystem make_system(std::size_t k, std::vector<std::string> points,
                                std::vector<std::vector<std::int64_t>> maps) {
  RawSystem raw;
  raw.k = k;
  raw.points = std::move(points);
  raw.maps = std::move(maps);
  return FiniteSystem::validate(raw);
}

inline FiniteSystem cycle3() { return make_system(1, {"p0", "p1", "p2"}, {{1, 2, 0}}); }
inline FiniteSystem swap2() { return make_system(2, {"a", "b"}, {{1, 0}, {0, 1}}); }
inline FiniteSystem collapse() { return make_system(1, {"a", "b"}, {{1, 1}}); }
inline FiniteSystem two_cycles() { return make_system(1, {"a", "b", "c", "d"}, {{1, 0, 3, 2}}); }

struct NamedSystem {
  std::string name;
  FiniteSystem sys;
};

inline std::vector<NamedSystem> fixtures() {
  return {{"SYS-CYCLE3", cycle3()}, {"SYS-COLLAPSE", collapse()}, {"SYS-2CYCLES", two_cycles()}, {"SYS-SWAP2", swap2()}};
}

inline Graph graph_hs() {
  RawGraph raw;
  raw.vertices = {"v", "w"};
  raw.edges = {{"e", "v", "v"}, {"f", "w", "v"}, {"g", "w", "w"}};
  return Graph::validate(raw);
}

inline RationalAngle angle(std::initializer_list<Rational> coords) { return RationalAngle(std::vector<Rational>(coords)); }
inline RationalAngle angle(const std::string& text) { return RationalAngle::parse(text); }

// ---------------------------------------------------------------------------
// Oracles

inline Point naive_apply(const FiniteSystem& sys, const std::vector<std::int64_t>& m, Point x) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::int64_t s = 0; s < m[i]; ++s) x = sys.map(i)[x];
  return x;
}

/// Visits every m in [0, bound]^k.
inline void for_each_multi_index(std::size_t k, std::int64_t bound,
                                 const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> m(k, 0);
  for (;;) {
    visit(m);
    std::size_t i = 0;
    while (i < k && ++m[i] > bound) m[i++] = 0;
    if (i == k) return;
  }
}

inline std::int64_t oracle_bound(const FiniteSystem& sys) { return 2 * static_cast<std::int64_t>(sys.size()); }

inline ZVector to_z(const std::vector<std::int64_t>& v) {
  ZVector z(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) z(static_cast<Eigen::Index>(i)) = v[i];
  return z;
}

/// {y : T^m x = T^n y for some m, n in [0, 2|X|]^k}.
inline PointSet oracle_orbit(const FiniteSystem& sys, Point x) {
  std::set<Point> forward_x, found;
  for_each_multi_index(sys.k(), oracle_bound(sys), [&](const auto& m) { forward_x.insert(naive_apply(sys, m, x)); });
  for (Point y = 0; y < sys.size(); ++y)
    for_each_multi_index(sys.k(), oracle_bound(sys), [&](const auto& n) {
      if (forward_x.count(naive_apply(sys, n, y))) found.insert(y);
    });
  return {found.begin(), found.end()};
}

/// (y, g, y) in G_T by searching m - n = g with m, n in a box.
inline bool oracle_isotropy_member(const FiniteSystem& sys, Point y, const ZVector& g) {
  bool hit = false;
  const std::int64_t b = oracle_bound(sys) + g.cwiseAbs().maxCoeff();
  for_each_multi_index(sys.k(), b, [&](const auto& n) {
    if (hit) return;
    std::vector<std::int64_t> m(n);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += g(static_cast<Eigen::Index>(i));
    if (std::any_of(m.begin(), m.end(), [](std::int64_t v) { return v < 0; })) return;
    hit = naive_apply(sys, m, y) == naive_apply(sys, n, y);
  });
  return hit;
}

using Pair = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;

/// Sigma restricted to [0, B]^{2k}: pairs with T^m y = T^n y for some y in the orbit.
inline std::vector<Pair> oracle_sigma_box(const FiniteSystem& sys, const PointSet& orbit, std::int64_t bound) {
  std::vector<Pair> out;
  for_each_multi_index(sys.k(), bound, [&](const auto& m) {
    for_each_multi_index(sys.k(), bound, [&](const auto& n) {
      for (Point y : orbit)
        if (naive_apply(sys, m, y) == naive_apply(sys, n, y)) {
          out.emplace_back(m, n);
          return;
        }
    });
  });
  return out;
}

inline bool pair_leq(const Pair& a, const Pair& b) {
  for (std::size_t i = 0; i < a.first.size(); ++i)
    if (a.first[i] > b.first[i] || a.second[i] > b.second[i]) return false;
  return true;
}

inline bool is_zero_pair(const Pair& p) {
  return std::all_of(p.first.begin(), p.first.end(), [](auto v) { return v == 0; }) &&
         std::all_of(p.second.begin(), p.second.end(), [](auto v) { return v == 0; });
}

/// Minimal nonzero elements of Sigma found in the box.
inline std::set<Pair> oracle_sigma_min(const FiniteSystem& sys, const PointSet& orbit, std::int64_t bound) {
  const auto box = oracle_sigma_box(sys, orbit, bound);
  std::set<Pair> out;
  for (const auto& p : box) {
    if (is_zero_pair(p)) continue;
    const bool beaten = std::any_of(box.begin(), box.end(),
                                    [&](const Pair& q) { return !is_zero_pair(q) && q != p && pair_leq(q, p); });
    if (!beaten) out.insert(p);
  }
  return out;
}

/// Y(x) from its definition: y with T^m y = T^n y for every Sigma pair in the box.
inline PointSet oracle_core(const FiniteSystem& sys, const PointSet& orbit, std::int64_t bound) {
  const auto box = oracle_sigma_box(sys, orbit, bound);
  PointSet out;
  for (Point y : orbit)
    if (std::all_of(box.begin(), box.end(),
                    [&](const Pair& p) { return naive_apply(sys, p.first, y) == naive_apply(sys, p.second, y); }))
      out.push_back(y);
  return out;
}

/// Closed invariant subsets by enumeration: S with x in S iff T_i x in S.
inline std::vector<std::set<Point>> oracle_invariant_subsets(const FiniteSystem& sys) {
  std::vector<std::set<Point>> out;
  const std::size_t n = sys.size();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::set<Point> s;
    for (Point p = 0; p < n; ++p)
      if (mask & (1U << p)) s.insert(p);
    bool ok = true;
    for (std::size_t i = 0; i < sys.k(); ++i)
      for (Point p = 0; p < n; ++p) {
        const bool in = s.count(p) > 0, image_in = s.count(sys.map(i)[p]) > 0;
        if (in && !image_in) ok = false;   // forward
        if (!in && image_in) ok = false;   // preimage
      }
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::vector<std::set<Point>> oracle_irreducible_subsets(const FiniteSystem& sys) {
  const auto all = oracle_invariant_subsets(sys);
  std::vector<std::set<Point>> out;
  for (const auto& c : all) {
    bool split = false;
    for (const auto& a : all)
      for (const auto& b : all) {
        if (a == c || b == c) continue;
        if (!std::includes(c.begin(), c.end(), a.begin(), a.end())) continue;
        if (!std::includes(c.begin(), c.end(), b.begin(), b.end())) continue;
        std::set<Point> u = a;
        u.insert(b.begin(), b.end());
        if (u == c) split = true;
      }
    if (!split) out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random systems

/// All self-maps of {0..n-1} commuting with t.
inline std::vector<std::vector<std::int64_t>> commuting_maps(const std::vector<std::int64_t>& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> f(n, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = f[static_cast<std::size_t>(t[x])] == t[static_cast<std::size_t>(f[x])];
    if (ok) out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == static_cast<std::int64_t>(n)) f[i++] = 0;
    if (i == n) return out;
  }
}

/// Random system with |X| <= max_points and k <= max_k; the second map is
/// uniform among maps commuting with the first.
inline FiniteSystem random_system(std::mt19937_64& rng, std::size_t max_points, std::size_t max_k) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_points)(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_k)(rng);
  std::uniform_int_distribution<std::int64_t> target(0, static_cast<std::int64_t>(n) - 1);
  std::vector<std::vector<std::int64_t>> maps(1);
  for (std::size_t x = 0; x < n; ++x) maps[0].push_back(target(rng));
  if (k == 2) {
    const auto options = commuting_maps(maps[0]);
    maps.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
  }
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) names.push_back("x" + std::to_string(x));
  return make_system(k, names, maps);
}

inline RationalAngle random_angle(std::mt19937_64& rng, std::size_t k, int max_denominator = 12) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < k; ++i) {
    const int q = std::uniform_int_distribution<int>(1, max_denominator)(rng);
    c.emplace_back(std::uniform_int_distribution<int>(0, q - 1)(rng), q);
  }
  return RationalAngle(std::move(c));
}

}  // namespace drprim::testing
