#include "drprim/pathspace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace drprim {

Graph Graph::validate(const RawGraph& raw) {
  Graph g;
  std::map<std::string, Vertex> index;
  for (const auto& v : raw.vertices) {
    if (!index.emplace(v, g.vertices_.size()).second) throw Error(ErrorCode::Parse, "duplicate vertex '" + v + "'");
    g.vertices_.push_back(v);
  }
  std::set<std::string> names;
  auto lookup = [&](const std::string& v, const std::string& edge) {
    auto it = index.find(v);
    if (it == index.end()) throw Error(ErrorCode::Parse, "edge '" + edge + "' uses unknown vertex '" + v + "'");
    return it->second;
  };
  for (const auto& e : raw.edges) {
    if (!names.insert(e.name).second) throw Error(ErrorCode::Parse, "duplicate edge '" + e.name + "'");
    g.edge_names_.push_back(e.name);
    g.start_.push_back(lookup(e.start, e.name));
    g.end_.push_back(lookup(e.end, e.name));
  }
  for (Vertex v = 0; v < g.vertices_.size(); ++v)
    if (std::find(g.start_.begin(), g.start_.end(), v) == g.start_.end())
      throw Error(ErrorCode::SourcelessVertex, g.vertices_[v]);
  return g;
}

EdgeId Graph::edge_index(const std::string& name) const {
  auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
  if (it == edge_names_.end()) throw Error(ErrorCode::Parse, "unknown edge '" + name + "'");
  return static_cast<EdgeId>(it - edge_names_.begin());
}

RawGraph Graph::raw() const {
  RawGraph out;
  out.vertices = vertices_;
  for (EdgeId e = 0; e < edge_count(); ++e) out.edges.push_back({edge_names_[e], vertices_[start_[e]], vertices_[end_[e]]});
  return out;
}

EvPath EvPath::make(const Graph& g, std::vector<EdgeId> prefix, std::vector<EdgeId> cycle) {
  if (cycle.empty()) throw Error(ErrorCode::EmptySet, "eventually periodic path with an empty cycle");
  for (EdgeId e : prefix) g.edge_name(e);
  for (EdgeId e : cycle) g.edge_name(e);
  std::vector<EdgeId> walk = prefix;
  walk.insert(walk.end(), cycle.begin(), cycle.end());
  walk.push_back(cycle.front());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (g.end(walk[i]) != g.start(walk[i + 1]))
      throw Error(ErrorCode::NotComposable, g.edge_name(walk[i]) + " then " + g.edge_name(walk[i + 1]));

  const std::size_t n = cycle.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = cycle[i] == cycle[i - d];
    if (periodic) {
      cycle.resize(d);
      break;
    }
  }
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }
  return EvPath(std::move(prefix), std::move(cycle));
}

EvPath EvPath::parse(const Graph& g, const std::string& text) {
  auto split = [&](const std::string& part) {
    std::vector<EdgeId> out;
    std::stringstream in(part);
    std::string name;
    while (std::getline(in, name, ','))
      if (!name.empty()) out.push_back(g.edge_index(name));
    return out;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) return make(g, {}, split(text));
  return make(g, split(text.substr(0, colon)), split(text.substr(colon + 1)));
}

std::vector<EdgeId> EvPath::tail_key() const {
  std::vector<EdgeId> best = cycle_;
  std::vector<EdgeId> r = cycle_;
  for (std::size_t i = 1; i < r.size(); ++i) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    best = std::min(best, r);
  }
  return best;
}

std::string EvPath::to_string(const Graph& g) const {
  std::string out;
  for (std::size_t i = 0; i < prefix_.size(); ++i) out += (i ? "," : "") + g.edge_name(prefix_[i]);
  out += ':';
  for (std::size_t i = 0; i < cycle_.size(); ++i) out += (i ? "," : "") + g.edge_name(cycle_[i]);
  return out;
}

EvPath shift(const EvPath& p, std::size_t m) {
  std::vector<EdgeId> prefix = p.prefix();
  std::vector<EdgeId> cycle = p.cycle();
  const std::size_t dropped = std::min(m, prefix.size());
  prefix.erase(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(dropped));
  const std::size_t turn = (m - dropped) % cycle.size();
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(turn), cycle.end());
  // Dropping leading edges keeps the prefix minimal and the cycle primitive.
  return EvPath(std::move(prefix), std::move(cycle));
}

bool tail_equiv(const EvPath& p, const EvPath& q) { return p.tail_key() == q.tail_key(); }

namespace {

std::vector<Vertex> path_vertices(const Graph& g, const EvPath& p) {
  std::vector<Vertex> out;
  for (EdgeId e : p.prefix()) out.push_back(g.start(e));
  for (EdgeId e : p.cycle()) out.push_back(g.start(e));
  return out;
}

std::string lattice_name(std::int64_t d) {
  if (d == 0) return "{0}";
  if (d == 1) return "Z";
  return std::to_string(d) + "Z";
}

}  // namespace

std::vector<bool> closure_vertices(const Graph& g, const EvPath& p) {
  std::vector<bool> reach(g.vertex_count(), false);
  std::queue<Vertex> todo;
  for (EdgeId e : p.cycle())
    if (!reach[g.start(e)]) {
      reach[g.start(e)] = true;
      todo.push(g.start(e));
    }
  while (!todo.empty()) {
    const Vertex v = todo.front();
    todo.pop();
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (g.end(e) == v && !reach[g.start(e)]) {
        reach[g.start(e)] = true;
        todo.push(g.start(e));
      }
  }
  return reach;
}

bool closure_contains(const Graph& g, const EvPath& p, const EvPath& q) {
  const auto reach = closure_vertices(g, p);
  const auto along = path_vertices(g, q);
  return std::all_of(along.begin(), along.end(), [&](Vertex v) { return reach[v]; });
}

bool closure_is_everything(const Graph& g, const EvPath& p) {
  const auto reach = closure_vertices(g, p);
  return std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
}

GraphLattice graph_H(const Graph& g, const EvPath& p, std::size_t oracle_length) {
  const auto inside = closure_vertices(g, p);
  std::vector<EdgeId> admissible;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (inside[g.start(e)] && inside[g.end(e)]) admissible.push_back(e);
  auto out_degree = [&](Vertex v) {
    return std::count_if(admissible.begin(), admissible.end(), [&](EdgeId e) { return g.start(e) == v; });
  };

  GraphLattice out;
  const bool deterministic =
      std::all_of(p.cycle().begin(), p.cycle().end(), [&](EdgeId e) { return out_degree(g.start(e)) == 1; });
  out.criterion = deterministic ? static_cast<std::int64_t>(p.cycle().size()) : 0;

  // Oracle: admissible paths of length L from each vertex, counts saturated
  // at 2. A vertex with exactly one such path spans a cylinder on which the
  // shift is eventually periodic with the period of that path.
  const std::size_t length = oracle_length ? oracle_length : 3 * g.edge_count();
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> count(length + 1, std::vector<int>(n, 0));
  for (Vertex v = 0; v < n; ++v) count[0][v] = inside[v] ? 1 : 0;
  for (std::size_t l = 1; l <= length; ++l)
    for (EdgeId e : admissible) count[l][g.start(e)] = std::min(2, count[l][g.start(e)] + count[l - 1][g.end(e)]);
  std::int64_t oracle = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!inside[v] || count[length][v] != 1) continue;
    std::vector<EdgeId> walk;
    Vertex at = v;
    for (std::size_t l = length; l > 0; --l) {
      for (EdgeId e : admissible)
        if (g.start(e) == at && count[l - 1][g.end(e)] > 0) {
          walk.push_back(e);
          at = g.end(e);
          break;
        }
    }
    const std::size_t half = walk.size() / 2;
    std::int64_t period = 0;
    for (std::size_t d = 1; d + half < walk.size() && period == 0; ++d) {
      bool ok = true;
      for (std::size_t i = half; i + d < walk.size() && ok; ++i) ok = walk[i] == walk[i + d];
      if (ok) period = static_cast<std::int64_t>(d);
    }
    oracle = std::gcd(oracle, period);
  }
  out.oracle = oracle;
  out.agrees = out.oracle == out.criterion;
  std::vector<ZVector> gens;
  if (out.oracle != 0) gens.push_back(zvector({out.oracle}));
  out.H = Lattice::generated_by(1, gens);
  return out;
}

GraphCatalogue graph_catalogue(const Graph& g, const std::vector<EvPath>& representatives) {
  GraphCatalogue out;
  const std::size_t r = representatives.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (closure_contains(g, representatives[i], representatives[j]) &&
          closure_contains(g, representatives[j], representatives[i]))
        throw Error(ErrorCode::DuplicateQuasiOrbit,
                    representatives[i].to_string(g) + ", " + representatives[j].to_string(g));

  for (const auto& p : representatives) {
    GraphEntry entry{p, graph_H(g, p), {}, closure_is_everything(g, p), {}};
    entry.dual = dual_description(entry.lattice.H);
    const auto reach = closure_vertices(g, p);
    for (Vertex v = 0; v < reach.size(); ++v)
      if (reach[v]) entry.closure_vertices.push_back(v);
    if (!entry.lattice.agrees)
      out.notes.push_back("H(" + p.to_string(g) + "): deterministic-cycle test gives " +
                          lattice_name(entry.lattice.criterion) + " but path enumeration gives " +
                          lattice_name(entry.lattice.oracle) + "; reporting the enumeration");
    out.entries.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (closure_contains(g, representatives[j], representatives[i]))
        out.order.push_back({i, j});
      else if (i < j && !closure_contains(g, representatives[i], representatives[j]))
        out.incomparable.emplace_back(i, j);
    }

  // Two vertices with a loop each and one edge between them: the closure of
  // the ideals at the source loop is known in closed form.
  if (g.vertex_count() == 2 && g.edge_count() == 3) {
    std::vector<EdgeId> loops, links;
    for (EdgeId e = 0; e < 3; ++e) (g.start(e) == g.end(e) ? loops : links).push_back(e);
    if (loops.size() == 2 && links.size() == 1 && g.start(loops[0]) != g.start(loops[1])) {
      const EdgeId f = links[0];
      const EdgeId e = g.start(loops[0]) == g.end(f) ? loops[0] : loops[1];
      const EdgeId w = e == loops[0] ? loops[1] : loops[0];
      const std::string ee = g.edge_name(e), gg = g.edge_name(w);
      out.notes.push_back("closure{I_{" + gg + "^inf,z}} = {I_{" + gg + "^inf,z}} u {I_{" + ee + "^inf,w} : w in T}");
    }
  }
  return out;
}

}  // namespace drprim
