#pragma once

// Finite directed graphs and their infinite path spaces under the shift:
// eventually periodic paths, orbit closures and per-orbit lattices H.

#include "drprim/lattice.hpp"

#include <string>
#include <vector>

namespace drprim {

struct RawEdge {
  std::string name;
  std::string start;
  std::string end;
};

struct RawGraph {
  std::vector<std::string> vertices;
  std::vector<RawEdge> edges;
};

using Vertex = std::size_t;
using EdgeId = std::size_t;

class Graph {
 public:
  /// Throws SourcelessVertex, or Parse on unknown or duplicate names.
  static Graph validate(const RawGraph& raw);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_names_.size(); }
  const std::string& vertex_name(Vertex v) const { return vertices_.at(v); }
  const std::string& edge_name(EdgeId e) const { return edge_names_.at(e); }
  Vertex start(EdgeId e) const { return start_.at(e); }
  Vertex end(EdgeId e) const { return end_.at(e); }
  EdgeId edge_index(const std::string& name) const;
  RawGraph raw() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> edge_names_;
  std::vector<Vertex> start_;
  std::vector<Vertex> end_;
};

/// prefix . cycle^inf, edges composable as end(e_i) = start(e_{i+1}). Stored
/// with the shortest prefix and a primitive cycle, so equal paths compare
/// equal.
class EvPath {
 public:
  /// Throws NotComposable or EmptySet (empty cycle).
  static EvPath make(const Graph& g, std::vector<EdgeId> prefix, std::vector<EdgeId> cycle);
  /// "p1,p2:c1,c2" with edge names; the prefix may be empty (":e").
  static EvPath parse(const Graph& g, const std::string& text);

  const std::vector<EdgeId>& prefix() const { return prefix_; }
  const std::vector<EdgeId>& cycle() const { return cycle_; }
  /// Least rotation of the cycle, identifying the tail class.
  std::vector<EdgeId> tail_key() const;
  std::string to_string(const Graph& g) const;

  friend bool operator==(const EvPath&, const EvPath&) = default;
  friend EvPath shift(const EvPath& p, std::size_t m);

 private:
  EvPath() = default;
  EvPath(std::vector<EdgeId> prefix, std::vector<EdgeId> cycle)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {}

  std::vector<EdgeId> prefix_;
  std::vector<EdgeId> cycle_;
};

EvPath shift(const EvPath& p, std::size_t m);
bool tail_equiv(const EvPath& p, const EvPath& q);

/// Vertices that reach the cycle of p; closure[p] is the set of paths that
/// never leave them.
std::vector<bool> closure_vertices(const Graph& g, const EvPath& p);
bool closure_contains(const Graph& g, const EvPath& p, const EvPath& q);
/// closure[p] is the whole path space.
bool closure_is_everything(const Graph& g, const EvPath& p);

struct GraphLattice {
  Lattice H;                 // the oracle value when the two disagree
  std::int64_t criterion = 0;  // d from the deterministic-cycle test, 0 for {0}
  std::int64_t oracle = 0;     // d from enumerating admissible paths
  bool agrees = true;
};

/// H(p) = dZ: d is the cycle length of p when every vertex on it has a
/// single admissible out-edge, else 0; cross-checked by counting admissible
/// paths of length oracle_length (default 3 |E|).
GraphLattice graph_H(const Graph& g, const EvPath& p, std::size_t oracle_length = 0);

struct GraphEntry {
  EvPath representative;
  GraphLattice lattice;
  std::string dual;
  bool dense = false;  // closure is the whole path space
  std::vector<Vertex> closure_vertices;
};

struct GraphOrder {
  std::size_t smaller = 0;  // closure[smaller] strictly inside closure[larger]
  std::size_t larger = 0;
};

struct GraphCatalogue {
  std::vector<GraphEntry> entries;
  std::vector<GraphOrder> order;
  std::vector<std::pair<std::size_t, std::size_t>> incomparable;
  std::vector<std::string> notes;
};

/// Throws DuplicateQuasiOrbit when two representatives share a closure.
GraphCatalogue graph_catalogue(const Graph& g, const std::vector<EvPath>& representatives);

}  // namespace drprim
