#include "drprim/cli.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace drprim;
using namespace drprim::testing;

namespace {

std::string fixture(const std::string& name) { return std::string(DRPRIM_FIXTURE_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Run run(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    CliOptions o;
    auto ok = run([&](auto& out, auto& err) { return cmd_validate(fixture("cycle3.json"), o, out, err); });
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out)["valid"] == true);
    auto bad = run([&](auto& out, auto& err) { return cmd_validate(fixture("noncommuting.json"), o, out, err); });
    CHECK(bad.code == 2);
    CHECK(bad.err.find("NonCommuting(1,2,a)") != std::string::npos);
    auto missing = run([&](auto& out, auto& err) { return cmd_validate(fixture("nope.json"), o, out, err); });
    CHECK(missing.code == 2);
  }

  TEST_CASE("analyze is deterministic and complete") {
    CliOptions o;
    for (const auto* name : {"cycle3.json", "collapse.json", "two_cycles.json", "swap2.json"}) {
      CAPTURE(name);
      auto a = run([&](auto& out, auto& err) { return cmd_analyze(fixture(name), o, out, err); });
      auto b = run([&](auto& out, auto& err) { return cmd_analyze(fixture(name), o, out, err); });
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      const auto doc = Json::parse(a.out);
      for (const auto* key : {"system", "quasi_orbits", "profiles", "catalogue", "topology", "battery"})
        CHECK(doc.contains(key));
      CHECK(doc["battery"]["passed"] == true);
    }
  }

  TEST_CASE("classify, equiv and witness") {
    CliOptions o;
    auto c = run([&](auto& out, auto& err) { return cmd_classify(fixture("cycle3.json"), "p0", "1/6", o, out, err); });
    CHECK(c.code == 0);
    CHECK(Json::parse(c.out)["text"] == "(p0, phi=(1/2))");
    auto e = run([&](auto& out, auto& err) { return cmd_equiv(fixture("cycle3.json"), "p0:1/3", "p1:2/3", o, out, err); });
    CHECK(Json::parse(e.out)["verdict"] == "equivalent");
    auto w = run([&](auto& out, auto& err) { return cmd_witness(fixture("cycle3.json"), "p0:1/6", "p0:0", o, out, err); });
    CHECK(w.code == 0);
    const auto doc = Json::parse(w.out);
    CHECK(doc["killed_norm"].get<double>() <= 1e-9);
    // the function round-trips through the file format
    const auto sys = cycle3();
    const auto h = parse_function(sys, doc["function"]);
    CHECK(function_to_json(sys, h) == doc["function"]);
    auto same = run([&](auto& out, auto& err) { return cmd_witness(fixture("cycle3.json"), "p0:1/3", "p1:0", o, out, err); });
    CHECK(same.code == 2);
    auto badpt = run([&](auto& out, auto& err) { return cmd_classify(fixture("cycle3.json"), "zz", "0", o, out, err); });
    CHECK(badpt.code == 2);
  }

  TEST_CASE("battery and graph commands") {
    CliOptions o;
    o.trials = 10;
    auto b = run([&](auto& out, auto& err) { return cmd_battery(fixture("swap2.json"), o, out, err); });
    CHECK(b.code == 0);
    CHECK(Json::parse(b.out)["identities"].size() == 7);
    auto g = run([&](auto& out, auto& err) { return cmd_graph(fixture("graph_hs.json"), {}, out, err); });
    CHECK(g.code == 0);
    const auto doc = Json::parse(g.out);
    CHECK(doc["quasi_orbit_count"] == 2);
    CHECK(doc["notes"].size() == 1);
    auto dup = run([&](auto& out, auto& err) { return cmd_graph(fixture("graph_hs.json"), {":e", "f:e"}, out, err); });
    CHECK(dup.code == 2);
  }

  TEST_CASE("file formats round-trip") {
    for (const auto& [name, sys] : fixtures()) {
      const auto again = FiniteSystem::validate(parse_system(system_to_json(sys)));
      CHECK(system_to_json(again) == system_to_json(sys));
    }
    const auto sys = swap2();
    const auto prof = analyze_profiles(sys);
    const auto label = classify(sys, prof, parse_labelled_point(sys, "a:1/4,1/3"));
    CHECK(parse_label(sys, label_to_json(sys, label)) == label);
    CHECK_THROWS_AS(parse_system(Json::parse(R"({"k": 1, "points": ["a"]})")), Error);
    CHECK_THROWS_AS(parse_function(cycle3(), Json::parse(
                        R"([{"range": "p0", "displacement": [1], "source": "p0", "re": 1, "im": 0}])")),
                    Error);
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
  }
}
