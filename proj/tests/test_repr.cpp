#include "support.hpp"

#include <doctest.h>

using namespace drprim;
using namespace drprim::testing;

namespace {

CcFunction random_function(std::mt19937_64& rng, const FiniteSystem& sys, std::size_t terms) {
  std::uniform_int_distribution<Point> pt(0, sys.size() - 1);
  std::uniform_int_distribution<std::int64_t> step(-3, 3);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  CcFunction f;
  std::size_t added = 0;
  for (int guard = 0; added < terms && guard < 1000; ++guard) {
    const Point x = pt(rng), y = pt(rng);
    ZVector g(static_cast<Eigen::Index>(sys.k()));
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = step(rng);
    if (!contains(sys, x, g, y)) continue;
    f.add(make_element(sys, x, g, y), Complex(val(rng), val(rng)));
    ++added;
  }
  return f;
}

}  // namespace

TEST_SUITE("repr") {
  TEST_CASE("algebra basics") {
    const auto sys = cycle3();
    const auto a = make_element(sys, 0, zvector({1}), 1);
    const auto f = CcFunction::indicator(a, 2.0);
    CHECK(f.at(a) == Complex(2.0));
    CHECK(f.at(unit(sys, 0)) == Complex(0.0));
    const auto ff = involution(f);
    CHECK(ff.at(inverse(a)) == Complex(2.0));
    const auto p = convolve(f, ff);
    CHECK(p.at(unit(sys, 0)) == Complex(4.0));
    CHECK(p.size() == 1);
    CcFunction zero = f - f;
    zero.prune();
    CHECK(zero.empty());
    CHECK(i_norm(f) == doctest::Approx(2.0));
  }

  TEST_CASE("convolution is associative and * is an anti-involution") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
      const auto sys = random_system(rng, 5, 2);
      const auto f = random_function(rng, sys, 4), g = random_function(rng, sys, 4), h = random_function(rng, sys, 4);
      CHECK(max_difference(convolve(convolve(f, g), h), convolve(f, convolve(g, h))) < 1e-12);
      CHECK(max_difference(involution(convolve(f, g)), convolve(involution(g), involution(f))) < 1e-12);
      CHECK(max_difference(involution(involution(f)), f) < 1e-15);
    }
  }

  TEST_CASE("pi is a *-homomorphism into orbit matrices") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 30; ++t) {
      const auto sys = random_system(rng, 5, 2);
      const auto f = random_function(rng, sys, 4), g = random_function(rng, sys, 4);
      const Point x = std::uniform_int_distribution<Point>(0, sys.size() - 1)(rng);
      const auto theta = random_angle(rng, sys.k());
      const auto pf = pi_matrix(sys, x, theta, f), pg = pi_matrix(sys, x, theta, g);
      CHECK(operator_norm(pi_matrix(sys, x, theta, convolve(f, g)) - pf * pg) < 1e-12);
      CHECK(operator_norm(pi_matrix(sys, x, theta, involution(f)) - pf.adjoint()) < 1e-12);
      CHECK(operator_norm(pf) <= i_norm(f) + 1e-12);
    }
  }

  TEST_CASE("unit indicators act as diagonal projections") {
    const auto sys = cycle3();
    const auto m = pi_matrix(sys, 0, angle("1/6"), CcFunction::indicator(unit(sys, 1)));
    CHECK(m.rows() == 3);
    CHECK(std::abs(m(1, 1) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(m.sum() - Complex(1.0)) < 1e-15);
    const auto iso = pi_matrix(sys, 0, angle("1/6"), CcFunction::indicator(make_element(sys, 0, zvector({3}), 0)));
    CHECK(std::abs(iso(0, 0) - Complex(-1.0)) < 1e-12);
  }

  TEST_CASE("gauge action and conditional expectation") {
    const auto sys = cycle3();
    const auto a = make_element(sys, 0, zvector({3}), 0);
    const auto f = CcFunction::indicator(a) + CcFunction::indicator(unit(sys, 0));
    const auto g = gauge_act(angle("1/6"), f);
    CHECK(std::abs(g.at(a) - Complex(-1.0)) < 1e-12);
    const auto e = conditional_expectation(f);
    CHECK(e.size() == 1);
    CHECK(e.at(unit(sys, 0)) == Complex(1.0));
  }

  TEST_CASE("kappa sums coset fibres") {
    const auto sys = cycle3();
    const auto h = Lattice::generated_by(1, {zvector({3})});
    CcFunction f = CcFunction::indicator(unit(sys, 0), 1.0);
    f.add(make_element(sys, 0, zvector({3}), 0), 2.0);
    f.add(make_element(sys, 0, zvector({-3}), 0), 0.5);
    const auto q = kappa(f, h);
    CHECK(q.terms().size() == 1);
    CHECK(q.at(quotient_element(unit(sys, 0), h)) == Complex(3.5));
    const auto prof = analyze_profiles(two_cycles());
    const auto mixed = CcFunction::indicator(unit(two_cycles(), 0)) + CcFunction::indicator(unit(two_cycles(), 2));
    CHECK_NOTHROW(kappa(prof, mixed));
    const auto cprof = analyze_profiles(collapse());
    CHECK_NOTHROW(kappa(cprof, CcFunction::indicator(unit(collapse(), 0))));
  }

  TEST_CASE("regular representation") {
    const auto sys = cycle3();
    const auto f = CcFunction::indicator(make_element(sys, 1, zvector({-1}), 0));
    const auto v = CcFunction::indicator(unit(sys, 0));
    const auto w = regular_apply(0, f, v);
    CHECK(w.at(make_element(sys, 1, zvector({-1}), 0)) == Complex(1.0));
    CHECK_THROWS_AS(regular_apply(1, f, v), Error);
  }

  TEST_CASE("functions on the lattice") {
    const auto h = Lattice::generated_by(1, {zvector({3})});
    FinSuppHFun phi(h);
    phi.add(zvector({3}), 1.0);
    phi.add(zvector({0}), 1.0);
    CHECK_THROWS_AS(phi.add(zvector({1}), 1.0), Error);
    CHECK(std::abs(fourier(phi, angle("1/6"))) < 1e-12);
    CHECK(std::abs(fourier(phi, angle("1/3")) - Complex(2.0)) < 1e-12);

    const auto sys = cycle3();
    const auto f = CcFunction::indicator(unit(sys, 0));
    const auto pf = phi_dot(phi, f);
    CHECK(pf.at(make_element(sys, 0, zvector({3}), 0)) == Complex(1.0));
    CHECK(pf.at(unit(sys, 0)) == Complex(1.0));
    // pi(phi . f) = phi^(z) pi(f)
    const auto theta = angle("1/9");
    CHECK(operator_norm(pi_matrix(sys, 0, theta, pf) - fourier(phi, theta) * pi_matrix(sys, 0, theta, f)) < 1e-12);
  }

  TEST_CASE("battery passes on fixtures and a wrong kappa lattice is caught") {
    for (const auto& [name, sys] : fixtures()) {
      CAPTURE(name);
      const auto report = identity_battery(sys, analyze_profiles(sys), {});
      CHECK(report.passed());
      CHECK(report.identities.size() == 7);
      CHECK(report.max_residual() <= 1e-9);
    }
    BatteryOptions bad;
    bad.kappa_lattice = Lattice::generated_by(1, {zvector({1})});
    bool caught = false;
    try {
      identity_battery(cycle3(), analyze_profiles(cycle3()), bad);
    } catch (const BatteryFailure& f) {
      caught = true;
      CHECK_FALSE(f.report().passed());
      CHECK(std::string(f.what()).find("2") != std::string::npos);
    }
    CHECK(caught);
  }

  TEST_CASE("battery is reproducible from the seed") {
    BatteryOptions o;
    o.trials = 20;
    o.seed = 123;
    const auto sys = swap2();
    const auto a = identity_battery(sys, analyze_profiles(sys), o);
    const auto b = identity_battery(sys, analyze_profiles(sys), o);
    for (std::size_t i = 0; i < a.identities.size(); ++i)
      CHECK(a.identities[i].max_residual == b.identities[i].max_residual);
  }

  TEST_CASE("intertwiners") {
    const auto sys = cycle3();
    const auto p = profile(sys, 0);
    const auto u = intertwiner(sys, p, 0, angle("1/3"), angle("0"));
    REQUIRE(u);
    CHECK(u->residual <= 1e-9);
    CHECK(operator_norm(u->U * u->U.adjoint() - OrbitMatrix::Identity(3, 3)) < 1e-12);
    CHECK_FALSE(intertwiner(sys, p, 0, angle("1/6"), angle("0")));
    CHECK(generator_battery(sys, p).size() >= 9);
  }
}
