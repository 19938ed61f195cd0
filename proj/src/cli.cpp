#include "drprim/cli.hpp"

#include <functional>
#include <ostream>

namespace drprim {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BatteryFailure:
    case ErrorCode::VerificationFailure: return 1;
    case ErrorCode::BoundTooSmall: return 3;
    default: return 2;
  }
}

namespace {

PeriodicityOptions periodicity_options(const CliOptions& options) {
  PeriodicityOptions p;
  p.sigma_bound_retries = options.sigma_bound_retries;
  return p;
}

FiniteSystem load_system(const std::string& file) { return FiniteSystem::validate(parse_system(read_json_file(file))); }

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

Json subsets_to_json(const FiniteSystem& sys, const std::vector<PointSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(points_to_json(sys, s));
  return out;
}

Json smith_to_json(const SmithInvariants& s) {
  Json factors = Json::array();
  for (const auto& d : s.factors) factors.push_back(d.str());
  return {{"factors", factors}, {"free_rank", s.free_rank}};
}

}  // namespace

Json battery_report_json(const BatteryReport& report) {
  Json ids = Json::array();
  for (const auto& r : report.identities) {
    Json item{{"identity", r.identity}, {"name", r.name}, {"max_residual", r.max_residual}, {"passed", r.passed}};
    if (!r.passed) item["first_failure"] = r.first_failure;
    ids.push_back(item);
  }
  return {{"seed", report.seed},
          {"trials", report.trials},
          {"tolerance", report.tolerance},
          {"max_residual", report.max_residual()},
          {"passed", report.passed()},
          {"identities", ids}};
}

Json analysis_report(const FiniteSystem& sys, const CliOptions& options) {
  const auto profiles = analyze_profiles(sys, periodicity_options(options), options.max_invariant_subsets);
  Json doc;
  const Json system = system_to_json(sys);
  doc["system"] = {{"digest", fnv1a_hex(system.dump())}, {"k", sys.k()}, {"points", sys.size()}};

  Json classes = Json::array();
  for (const auto& q : profiles.partition.classes)
    classes.push_back({{"representative", sys.name(q.representative)},
                       {"points", points_to_json(sys, q.points)},
                       {"irreducible", q.irreducible}});
  doc["quasi_orbits"] = classes;
  if (profiles.partition.closed_invariant_subsets) {
    doc["closed_invariant_subsets"] = subsets_to_json(sys, *profiles.partition.closed_invariant_subsets);
    doc["irreducible_closed_invariant_subsets"] = subsets_to_json(sys, *profiles.partition.irreducible_subsets);
  }

  Json prof = Json::array();
  for (const auto& p : profiles.profiles) {
    Json sigma = Json::array();
    for (const auto& [m, n] : p.sigma_min) sigma.push_back({vector_to_json(m), vector_to_json(n)});
    Json per_point = Json::object();
    for (const auto& [y, l] : p.per_point) per_point[sys.name(y)] = lattice_to_json(l);
    prof.push_back({{"quasi_orbit", sys.name(p.quasi_orbit)},
                    {"H", lattice_to_json(p.H)},
                    {"Y", points_to_json(sys, p.Y)},
                    {"sigma_min", sigma},
                    {"per_point", per_point}});
  }
  doc["profiles"] = prof;

  Json cat = Json::array();
  for (const auto& e : catalogue(sys, profiles))
    cat.push_back({{"quasi_orbit", sys.name(e.quasi_orbit)},
                   {"orbit", points_to_json(sys, e.orbit)},
                   {"H", lattice_to_json(e.H)},
                   {"smith", smith_to_json(e.smith)},
                   {"Y", points_to_json(sys, e.Y)},
                   {"dual", e.dual}});
  doc["catalogue"] = cat;

  const auto topo = jacobson_topology(sys, profiles);
  Json comps = Json::array();
  for (const auto& c : topo.components)
    comps.push_back({{"quasi_orbit", sys.name(c.quasi_orbit)},
                     {"hypothesis_on_closure", c.hypothesis_on_closure},
                     {"hypothesis_on_core", c.hypothesis_on_core},
                     {"determined", c.determined},
                     {"statement", c.statement}});
  doc["topology"] = {{"irreducible", topo.irreducible},
                     {"determined", topo.determined},
                     {"summary", topo.summary},
                     {"components", comps}};

  BatteryOptions b;
  b.trials = options.trials;
  b.seed = options.seed;
  b.tolerance = options.tolerance;
  const auto battery = identity_battery(sys, profiles, b);
  doc["battery"] = {{"seed", battery.seed},
                    {"trials", battery.trials},
                    {"max_residual", battery.max_residual()},
                    {"passed", battery.passed()}};
  return doc;
}

Json graph_report(const Graph& g, const std::vector<EvPath>& representatives) {
  const auto cat = graph_catalogue(g, representatives);
  auto h_name = [](const GraphLattice& l) {
    if (l.oracle == 0) return std::string("{0}");
    return l.oracle == 1 ? std::string("Z") : std::to_string(l.oracle) + "Z";
  };
  Json entries = Json::array();
  for (const auto& e : cat.entries) {
    Json verts = Json::array();
    for (Vertex v : e.closure_vertices) verts.push_back(g.vertex_name(v));
    entries.push_back({{"representative", e.representative.to_string(g)},
                       {"H", h_name(e.lattice)},
                       {"H_criterion", e.lattice.criterion},
                       {"H_oracle", e.lattice.oracle},
                       {"H_agrees", e.lattice.agrees},
                       {"dual", e.dual},
                       {"closure_is_everything", e.dense},
                       {"closure_vertices", verts}});
  }
  Json order = Json::array();
  for (const auto& o : cat.order) {
    const std::string small = cat.entries[o.smaller].representative.to_string(g);
    const std::string large = cat.entries[o.larger].representative.to_string(g);
    order.push_back({{"closure_inclusion", "closure[" + small + "] strictly inside closure[" + large + "]"},
                     {"c0_kernel_order",
                      "ker pi_{" + large + ",.} cap C_0 strictly inside ker pi_{" + small + ",.} cap C_0"}});
  }
  Json incomparable = Json::array();
  for (const auto& [i, j] : cat.incomparable)
    incomparable.push_back({cat.entries[i].representative.to_string(g), cat.entries[j].representative.to_string(g)});
  return {{"quasi_orbit_count", cat.entries.size()},
          {"entries", entries},
          {"order", order},
          {"incomparable", incomparable},
          {"notes", cat.notes},
          {"scope", "eventually periodic representatives only"}};
}

int cmd_validate(const std::string& file, const CliOptions&, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load_system(file);
    emit(out, {{"valid", true}, {"k", sys.k()}, {"points", sys.size()}, {"digest", fnv1a_hex(system_to_json(sys).dump())}});
    return 0;
  });
}

int cmd_analyze(const std::string& file, const CliOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    emit(out, analysis_report(load_system(file), options));
    return 0;
  });
}

int cmd_classify(const std::string& file, const std::string& point, const std::string& angle,
                 const CliOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load_system(file);
    const auto profiles = analyze_profiles(sys, periodicity_options(options), 0);
    const auto p = parse_labelled_point(sys, point + ":" + angle);
    const auto label = classify(sys, profiles, p);
    Json doc = label_to_json(sys, label);
    doc["text"] = label_to_string(sys, label);
    emit(out, doc);
    return 0;
  });
}

int cmd_equiv(const std::string& file, const std::string& first, const std::string& second,
              const CliOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load_system(file);
    const auto profiles = analyze_profiles(sys, periodicity_options(options), 0);
    const auto a = parse_labelled_point(sys, first);
    const auto b = parse_labelled_point(sys, second);
    const auto v = equivalent(sys, profiles, a, b);
    emit(out, {{"verdict", v.equivalent ? "equivalent" : "inequivalent"},
               {"reason", v.reason},
               {"c0_kernel_order", to_string(c0_kernel_order(sys, a, b))}});
    return 0;
  });
}

int cmd_witness(const std::string& file, const std::string& first, const std::string& second,
                const CliOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load_system(file);
    const auto profiles = analyze_profiles(sys, periodicity_options(options), 0);
    const auto a = parse_labelled_point(sys, first);
    const auto b = parse_labelled_point(sys, second);
    const auto w = separating_witness(sys, profiles, a, b);
    emit(out, {{"function", function_to_json(sys, w.h)},
               {"kills", second},
               {"survives", first},
               {"closures_differ", w.closures_differ},
               {"n", vector_to_json(w.n)},
               {"killed_norm", w.killed_norm},
               {"surviving_norm", w.surviving_norm}});
    return 0;
  });
}

int cmd_battery(const std::string& file, const CliOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto sys = load_system(file);
    const auto profiles = analyze_profiles(sys, periodicity_options(options), 0);
    BatteryOptions b;
    b.trials = options.trials;
    b.seed = options.seed;
    b.tolerance = options.tolerance;
    try {
      emit(out, battery_report_json(identity_battery(sys, profiles, b)));
      return 0;
    } catch (const BatteryFailure& f) {
      emit(out, battery_report_json(f.report()));
      err << f.what() << '\n';
      return 1;
    }
  });
}

int cmd_graph(const std::string& file, const std::vector<std::string>& representatives, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = parse_graph(read_json_file(file));
    const auto g = Graph::validate(doc.graph);
    std::vector<EvPath> reps;
    for (const auto& r : representatives.empty() ? doc.representatives : representatives)
      reps.push_back(EvPath::parse(g, r));
    if (reps.empty()) throw Error(ErrorCode::Parse, "no representatives given");
    emit(out, graph_report(g, reps));
    return 0;
  });
}

}  // namespace drprim
