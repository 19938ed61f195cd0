#include "support.hpp"

#include <doctest.h>

using namespace drprim;
using namespace drprim::testing;

namespace {

std::set<Pair> as_pairs(const std::vector<IndexPair>& v) {
  std::set<Pair> out;
  for (const auto& [m, n] : v) out.emplace(std::vector<std::int64_t>(m.data(), m.data() + m.size()),
                                           std::vector<std::int64_t>(n.data(), n.data() + n.size()));
  return out;
}

Pair pair(std::vector<std::int64_t> m, std::vector<std::int64_t> n) { return {std::move(m), std::move(n)}; }

// Sums of sigma_min elements (with repetition) that land in [0,b]^{2k}.
std::set<Pair> monoid_in_box(const std::vector<Pair>& gens, std::size_t k, std::int64_t b) {
  std::set<Pair> seen{pair(std::vector<std::int64_t>(k, 0), std::vector<std::int64_t>(k, 0))};
  std::vector<Pair> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Pair> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Pair q = p;
        bool inside = true;
        for (std::size_t i = 0; i < k; ++i) {
          q.first[i] += g.first[i];
          q.second[i] += g.second[i];
          inside = inside && q.first[i] <= b && q.second[i] <= b;
        }
        if (inside && seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_SUITE("periodicity") {
  TEST_CASE("fixture profiles") {
    const auto c = profile(cycle3(), 0);
    CHECK(c.H == Lattice::generated_by(1, {zvector({3})}));
    CHECK(c.Y == PointSet{0, 1, 2});
    CHECK(as_pairs(c.sigma_min) == std::set<Pair>{pair({0}, {3}), pair({1}, {1}), pair({3}, {0})});

    const auto k = profile(collapse(), 0);
    CHECK(k.H == Lattice::generated_by(1, {zvector({1})}));
    CHECK(k.Y == PointSet{1});
    CHECK(as_pairs(k.sigma_min) == std::set<Pair>{pair({0}, {1}), pair({1}, {0})});
    CHECK(k.per_point.at(0) == k.H);

    const auto s = profile(swap2(), 0);
    CHECK(s.H == Lattice::generated_by(2, {zvector({2, 0}), zvector({0, 1})}));
    CHECK(as_pairs(s.sigma_min) == std::set<Pair>{pair({0, 0}, {0, 1}), pair({0, 0}, {2, 0}), pair({0, 1}, {0, 0}),
                                                  pair({1, 0}, {1, 0}), pair({2, 0}, {0, 0})});

    const auto t = profile(two_cycles(), 3);
    CHECK(t.quasi_orbit == 2);
    CHECK(t.H == Lattice::generated_by(1, {zvector({2})}));
  }

  TEST_CASE("sigma_u membership") {
    const auto sys = collapse();
    CHECK(sigma_u_member(sys, {1}, zvector({0}), zvector({4})));
    CHECK_FALSE(sigma_u_member(sys, {0, 1}, zvector({0}), zvector({4})));
    CHECK(sigma_u_member(sys, {0, 1}, zvector({1}), zvector({4})));
    CHECK_THROWS_AS(sigma_u_member(sys, {}, zvector({0}), zvector({0})), Error);
  }

  TEST_CASE("a too small bound is reported") {
    const auto c = profile(cycle3(), 0);
    CHECK_THROWS_AS(sigma_min(cycle3(), c, 1), Error);
    PeriodicityOptions o;
    o.sigma_bound = 1;
    o.sigma_bound_retries = 0;
    CHECK_THROWS_AS(profile(cycle3(), 0, o), Error);
    o.sigma_bound_retries = 2;
    CHECK(profile(cycle3(), 0, o).sigma_min.size() == 3);
  }

  TEST_CASE("random systems agree with the brute-force oracles") {
    std::mt19937_64 rng(77);
    int strict_core = 0, varying_isotropy = 0;
    for (int t = 0; t < 80; ++t) {
      const auto sys = random_system(rng, 5, 2);
      const auto all = analyze_profiles(sys);
      for (const auto& p : all.profiles) {
        const auto b = 6;
        CHECK(p.orbit == oracle_orbit(sys, p.quasi_orbit));
        CHECK(p.Y == oracle_core(sys, p.orbit, 2 * oracle_bound(sys)));
        CHECK(check_sigma_group_property(sys, p, b));
        if (p.Y.size() < p.orbit.size()) ++strict_core;

        const auto box = oracle_sigma_box(sys, p.orbit, b);
        for (const auto& q : box) CHECK(sigma_member(p, to_z(q.first), to_z(q.second)));

        const auto mins = as_pairs(p.sigma_min);
        for (const auto& q : mins) {
          bool fits = true;
          for (std::size_t i = 0; i < sys.k(); ++i) fits = fits && q.first[i] <= b && q.second[i] <= b;
          if (fits) CHECK(std::find(box.begin(), box.end(), q) != box.end());
          for (const auto& r : mins)
            if (r != q) CHECK_FALSE(pair_leq(r, q));
        }
        const auto oracle_mins = oracle_sigma_min(sys, p.orbit, b);
        for (const auto& q : oracle_mins) CHECK(mins.count(q) == 1);
        const auto gen = monoid_in_box({mins.begin(), mins.end()}, sys.k(), b);
        CHECK(gen == std::set<Pair>(box.begin(), box.end()));

        for (const auto& [y, l] : p.per_point) CHECK(p.H.contains(l));
        for (const auto& [y, l] : p.per_point)
          if (l != p.per_point.begin()->second) {
            ++varying_isotropy;
            break;
          }
        bool some_equal = false;
        for (const auto& [y, l] : p.per_point) some_equal = some_equal || l == p.H;
        CHECK(some_equal);
      }
    }
    // Cores strictly inside the orbit closure occur among random systems.
    MESSAGE("strict cores: " << strict_core << ", orbits with varying L_y: " << varying_isotropy);
    CHECK(strict_core > 0);
  }

  TEST_CASE("profiles are shared across a quasi-orbit") {
    const auto all = analyze_profiles(two_cycles());
    CHECK(&all.of(0) == &all.of(1));
    CHECK(&all.of(2) == &all.of(3));
    CHECK(&all.of(0) != &all.of(2));
  }
}
