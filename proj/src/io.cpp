#include "drprim/io.hpp"

#include <cstdio>
#include <fstream>

namespace drprim {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) fail(std::string("missing field '") + name + "'");
  return doc.at(name);
}

ZVector parse_vector(const Json& doc, std::size_t k) {
  if (!doc.is_array() || doc.size() != k) fail("displacement must be an array of " + std::to_string(k) + " integers");
  ZVector v(static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (!doc[i].is_number_integer()) fail("displacement entries must be integers");
    v(static_cast<Eigen::Index>(i)) = doc[i].get<std::int64_t>();
  }
  return v;
}

}  // namespace

RawSystem parse_system(const Json& doc) {
  try {
    RawSystem raw;
    const auto& k = field(doc, "k");
    if (!k.is_number_integer() || k.get<std::int64_t>() < 1) fail("k must be a positive integer");
    raw.k = k.get<std::size_t>();
    raw.points = field(doc, "points").get<std::vector<std::string>>();
    raw.maps = field(doc, "maps").get<std::vector<std::vector<std::int64_t>>>();
    return raw;
  } catch (const Json::exception& e) {
    fail(e.what());
  }
}

Json system_to_json(const FiniteSystem& sys) {
  const RawSystem raw = sys.raw();
  return Json{{"k", raw.k}, {"points", raw.points}, {"maps", raw.maps}};
}

GraphDocument parse_graph(const Json& doc) {
  try {
    GraphDocument out;
    out.graph.vertices = field(doc, "vertices").get<std::vector<std::string>>();
    for (const auto& e : field(doc, "edges")) {
      out.graph.edges.push_back({field(e, "name").get<std::string>(), field(e, "start").get<std::string>(),
                                 field(e, "end").get<std::string>()});
    }
    if (doc.contains("representatives"))
      out.representatives = doc.at("representatives").get<std::vector<std::string>>();
    return out;
  } catch (const Json::exception& e) {
    fail(e.what());
  }
}

Json graph_to_json(const Graph& g, const std::vector<EvPath>& representatives) {
  const RawGraph raw = g.raw();
  Json edges = Json::array();
  for (const auto& e : raw.edges) edges.push_back({{"name", e.name}, {"start", e.start}, {"end", e.end}});
  Json doc{{"vertices", raw.vertices}, {"edges", edges}};
  if (!representatives.empty()) {
    Json reps = Json::array();
    for (const auto& p : representatives) reps.push_back(p.to_string(g));
    doc["representatives"] = reps;
  }
  return doc;
}

CcFunction parse_function(const FiniteSystem& sys, const Json& doc) {
  if (!doc.is_array()) fail("function must be an array of records");
  CcFunction f;
  try {
    for (const auto& r : doc) {
      const Point x = sys.index_of(field(r, "range").get<std::string>());
      const Point y = sys.index_of(field(r, "source").get<std::string>());
      const ZVector g = parse_vector(field(r, "displacement"), sys.k());
      const double re = field(r, "re").get<double>();
      const double im = r.contains("im") ? r.at("im").get<double>() : 0.0;
      f.add(make_element(sys, x, g, y), Complex(re, im));
    }
  } catch (const Json::exception& e) {
    fail(e.what());
  }
  f.prune();
  return f;
}

Json function_to_json(const FiniteSystem& sys, const CcFunction& f) {
  Json out = Json::array();
  for (const auto& [g, v] : f.terms())
    out.push_back({{"range", sys.name(g.range)},
                   {"displacement", vector_to_json(g.displacement)},
                   {"source", sys.name(g.source)},
                   {"re", v.real()},
                   {"im", v.imag()}});
  return out;
}

PrimIdealLabel parse_label(const FiniteSystem& sys, const Json& doc) {
  try {
    PrimIdealLabel label;
    label.quasi_orbit = sys.index_of(field(doc, "quasi_orbit").get<std::string>());
    std::vector<Rational> values;
    for (const auto& s : field(doc, "character")) values.push_back(parse_rational(s.get<std::string>()));
    label.character = CharacterLabel(std::move(values));
    return label;
  } catch (const Json::exception& e) {
    fail(e.what());
  }
}

Json label_to_json(const FiniteSystem& sys, const PrimIdealLabel& label) {
  Json values = Json::array();
  for (const auto& v : label.character.values()) values.push_back(rational_to_string(v));
  return {{"quasi_orbit", sys.name(label.quasi_orbit)}, {"character", values}};
}

LabelledPoint parse_labelled_point(const FiniteSystem& sys, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) fail("expected point:angle, got '" + text + "'");
  LabelledPoint p{sys.index_of(text.substr(0, colon)), RationalAngle::parse(text.substr(colon + 1))};
  if (p.angle.size() != sys.k())
    throw Error(ErrorCode::DimensionMismatch, "angle '" + text.substr(colon + 1) + "' for k=" + std::to_string(sys.k()));
  return p;
}

Json vector_to_json(const ZVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json lattice_to_json(const Lattice& h) {
  Json out = Json::array();
  for (const auto& r : h.rows()) out.push_back(vector_to_json(r));
  return out;
}

Json points_to_json(const FiniteSystem& sys, const PointSet& points) {
  Json out = Json::array();
  for (Point p : points) out.push_back(sys.name(p));
  return out;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace drprim
