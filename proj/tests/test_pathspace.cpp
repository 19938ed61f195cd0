#include "support.hpp"

#include <doctest.h>

using namespace drprim;
using namespace drprim::testing;

TEST_SUITE("pathspace") {
  TEST_CASE("validation") {
    RawGraph sink;
    sink.vertices = {"v", "w"};
    sink.edges = {{"e", "v", "w"}};
    CHECK_THROWS_AS(Graph::validate(sink), Error);
    RawGraph unknown;
    unknown.vertices = {"v"};
    unknown.edges = {{"e", "v", "u"}};
    CHECK_THROWS_AS(Graph::validate(unknown), Error);
  }

  TEST_CASE("canonical paths") {
    const auto g = graph_hs();
    const auto e = g.edge_index("e"), f = g.edge_index("f"), gg = g.edge_index("g");
    CHECK(EvPath::make(g, {}, {e, e}) == EvPath::make(g, {}, {e}));
    CHECK(EvPath::make(g, {e, e}, {e}) == EvPath::make(g, {}, {e}));
    CHECK(EvPath::make(g, {gg, f}, {e}).to_string(g) == "g,f:e");
    CHECK_THROWS_AS(EvPath::make(g, {f}, {gg}), Error);
    CHECK_THROWS_AS(EvPath::make(g, {}, {}), Error);
    CHECK(EvPath::parse(g, "g,f:e") == EvPath::make(g, {gg, f}, {e}));
    CHECK(EvPath::parse(g, "g") == EvPath::make(g, {}, {gg}));
  }

  TEST_CASE("shift and tail equivalence") {
    const auto g = graph_hs();
    const auto p = EvPath::parse(g, "g,f:e");
    CHECK(shift(p, 1) == EvPath::parse(g, "f:e"));
    CHECK(shift(p, 5) == EvPath::parse(g, ":e"));
    CHECK(tail_equiv(p, EvPath::parse(g, ":e")));
    CHECK_FALSE(tail_equiv(p, EvPath::parse(g, ":g")));
  }

  TEST_CASE("rotated cycles are tail equivalent") {
    RawGraph raw;
    raw.vertices = {"u", "v"};
    raw.edges = {{"a", "u", "v"}, {"b", "v", "u"}};
    const auto g = Graph::validate(raw);
    const auto p = EvPath::parse(g, ":a,b"), q = EvPath::parse(g, ":b,a");
    CHECK(tail_equiv(p, q));
    CHECK(p.tail_key() == q.tail_key());
    CHECK(shift(p, 1) == q);
    CHECK(EvPath::parse(g, "a:b,a") == p);
    CHECK(graph_H(g, p).criterion == 2);
    CHECK(graph_H(g, p).agrees);
  }

  TEST_CASE("closures and lattices on the example graph") {
    const auto g = graph_hs();
    const auto e = EvPath::parse(g, ":e"), gg = EvPath::parse(g, ":g");
    CHECK(closure_is_everything(g, e));
    CHECK_FALSE(closure_is_everything(g, gg));
    CHECK(closure_contains(g, e, gg));
    CHECK_FALSE(closure_contains(g, gg, e));
    const auto he = graph_H(g, e), hg = graph_H(g, gg);
    CHECK(he.oracle == 1);
    CHECK(hg.oracle == 1);
    CHECK(he.agrees);
    CHECK(hg.agrees);
  }

  TEST_CASE("branching cycle has trivial lattice") {
    RawGraph raw;
    raw.vertices = {"v"};
    raw.edges = {{"a", "v", "v"}, {"b", "v", "v"}};
    const auto g = Graph::validate(raw);
    const auto h = graph_H(g, EvPath::parse(g, ":a"));
    CHECK(h.criterion == 0);
    CHECK(h.oracle == 0);
    CHECK(h.H.rank() == 0);
  }

  TEST_CASE("catalogue") {
    const auto g = graph_hs();
    const auto cat = graph_catalogue(g, {EvPath::parse(g, ":e"), EvPath::parse(g, ":g")});
    REQUIRE(cat.entries.size() == 2);
    REQUIRE(cat.order.size() == 1);
    CHECK(cat.order[0].smaller == 1);
    CHECK(cat.order[0].larger == 0);
    CHECK(cat.incomparable.empty());
    CHECK(cat.notes.size() == 1);
    CHECK_THROWS_AS(graph_catalogue(g, {EvPath::parse(g, ":e"), EvPath::parse(g, "f:e")}), Error);
  }
}
