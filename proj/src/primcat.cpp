#include "drprim/primcat.hpp"

#include <algorithm>
#include <sstream>

namespace drprim {

namespace {

void check_angle(const FiniteSystem& sys, const LabelledPoint& p) {
  sys.check_point(p.point);
  if (p.angle.size() != sys.k())
    throw Error(ErrorCode::DimensionMismatch,
                "angle " + p.angle.to_string() + " for k=" + std::to_string(sys.k()));
}

std::string describe(const FiniteSystem& sys, const LabelledPoint& p) {
  return "(" + sys.name(p.point) + ", " + p.angle.to_string() + ")";
}

std::string lattice_string(const Lattice& h) {
  std::string out = "{";
  const auto rows = h.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? ", " : "") + to_string(rows[i]);
  return out + "}";
}

}  // namespace

PrimIdealLabel classify(const FiniteSystem& sys, const SystemProfiles& profiles, const LabelledPoint& p) {
  check_angle(sys, p);
  const auto& prof = profiles.of(p.point);
  return {prof.quasi_orbit, restrict_character(prof.H, p.angle)};
}

std::string label_to_string(const FiniteSystem& sys, const PrimIdealLabel& label) {
  return "(" + sys.name(label.quasi_orbit) + ", phi=" + label.character.to_string() + ")";
}

EquivalenceVerdict equivalent(const FiniteSystem& sys, const SystemProfiles& profiles, const LabelledPoint& a,
                              const LabelledPoint& b) {
  check_angle(sys, a);
  check_angle(sys, b);
  const auto& pa = profiles.of(a.point);
  const auto& pb = profiles.of(b.point);
  if (pa.quasi_orbit != pb.quasi_orbit)
    return {false, EquivalenceClause::Closure,
            "closure clause: closure[" + sys.name(a.point) + "] != closure[" + sys.name(b.point) + "]"};
  const RationalAngle diff = b.angle - a.angle;
  if (pa.H != pb.H) throw std::logic_error("one orbit closure with two lattices");
  for (Eigen::Index i = 0; i < pa.H.rank(); ++i) {
    const ZVector row = pa.H.row(i);
    const Rational value = frac(pairing(diff, row));
    if (value != 0)
      return {false, EquivalenceClause::Character,
              "character clause: (omega - theta) . " + to_string(row) + " = " + rational_to_string(value) +
                  " mod 1 for H = " + lattice_string(pa.H)};
  }
  return {true, EquivalenceClause::Holds,
          "same orbit closure and omega - theta = " + diff.to_string() + " annihilates H = " + lattice_string(pa.H)};
}

std::vector<CatalogueEntry> catalogue(const FiniteSystem& /*sys*/, const SystemProfiles& profiles) {
  std::vector<CatalogueEntry> out;
  for (const auto& p : profiles.profiles)
    out.push_back({p.quasi_orbit, p.orbit, p.H, smith_invariants(p.H), p.Y, dual_description(p.H)});
  return out;
}

SeparatingWitness separating_witness(const FiniteSystem& sys, const SystemProfiles& profiles,
                                     const LabelledPoint& a, const LabelledPoint& b) {
  const auto verdict = equivalent(sys, profiles, a, b);
  if (verdict.equivalent)
    throw Error(ErrorCode::NotSeparable, describe(sys, a) + " ~ " + describe(sys, b));
  SeparatingWitness w;
  const auto k = static_cast<Eigen::Index>(sys.k());
  if (verdict.clause == EquivalenceClause::Closure) {
    w.closures_differ = true;
    w.n = ZVector::Zero(k);
    w.h = CcFunction::indicator(unit(sys, a.point));
  } else {
    const auto& p = profiles.of(a.point);
    // (u, n, u) must lie in G_T for every n in H, so u is taken from Y(x).
    const Point u = std::find(p.Y.begin(), p.Y.end(), a.point) != p.Y.end() ? a.point : p.Y.front();
    bool found = false;
    for (Eigen::Index i = 0; i < p.H.rank() && !found; ++i) {
      const ZVector row = p.H.row(i);
      if (frac(pairing(a.angle, row)) != frac(pairing(b.angle, row))) {
        w.n = row;
        found = true;
      }
    }
    if (!found) throw std::logic_error("character clause failed without a separating row");
    w.h = character_value(b.angle, w.n) * CcFunction::indicator(unit(sys, u)) -
          CcFunction::indicator(make_element(sys, u, w.n, u));
  }
  w.killed_norm = operator_norm(pi_matrix(sys, b.point, b.angle, w.h));
  w.surviving_norm = operator_norm(pi_matrix(sys, a.point, a.angle, w.h));
  if (w.killed_norm > kKilledTolerance || w.surviving_norm < kSurvivingFloor) {
    std::ostringstream msg;
    msg << "witness for " << describe(sys, a) << " vs " << describe(sys, b) << ": killed norm " << w.killed_norm
        << ", surviving norm " << w.surviving_norm;
    throw Error(ErrorCode::VerificationFailure, msg.str());
  }
  return w;
}

namespace {

/// Sigma of every orbit closure of the system on `points` equals Sigma.
bool uniform_sigma(const FiniteSystem& sys, const PointSet& points, const Lattice& h) {
  std::int64_t widest = 1;
  for (Point y : points) widest = std::max(widest, eventual_data(sys, y).box().maxCoeff());
  std::vector<ZVector> window;
  h.for_each_in_box(widest, [&](const ZVector& g) { window.push_back(g); });
  return std::all_of(points.begin(), points.end(), [&](Point y) {
    return std::all_of(window.begin(), window.end(), [&](const ZVector& g) {
      return sys.apply(positive_part(g), y) == sys.apply(negative_part(g), y);
    });
  });
}

}  // namespace

TopologyReport jacobson_topology(const FiniteSystem& sys, const SystemProfiles& profiles) {
  TopologyReport out;
  out.irreducible = profiles.profiles.size() == 1;
  out.determined = true;
  for (const auto& p : profiles.profiles) {
    ComponentTopology c;
    c.quasi_orbit = p.quasi_orbit;
    c.hypothesis_on_closure = uniform_sigma(sys, p.orbit, p.H);
    const FiniteSystem core = restrict(sys, p.Y);
    const auto core_profiles = analyze_profiles(core, {}, 0);
    const bool core_irreducible = core_profiles.profiles.size() == 1;
    c.hypothesis_on_core = core_irreducible && core_profiles.profiles.front().H == p.H &&
                           uniform_sigma(core, core_profiles.profiles.front().orbit, p.H);
    c.determined = c.hypothesis_on_core;
    const std::string hat = "dual(" + lattice_string(p.H) + ")";
    if (c.determined) {
      c.statement = "Prim of the component of " + sys.name(p.quasi_orbit) + " is homeomorphic to {" +
                    sys.name(p.quasi_orbit) + "} x " + hat +
                    (c.hypothesis_on_closure ? " (hypothesis holds on the orbit closure)"
                                             : " (hypothesis holds on Y(x), which meets every orbit of the closure)");
    } else {
      c.statement = "not determined: Sigma varies across orbit closures inside Y(x), so the "
                    "labels fix the points of Prim but not its topology";
      out.determined = false;
    }
    out.components.push_back(std::move(c));
  }
  if (!out.determined) {
    out.summary = "NotDetermined";
  } else if (out.irreducible) {
    out.summary = "product: QO x dual(H) with QO a single point";
  } else {
    out.summary = "reducible: disjoint union over " + std::to_string(out.components.size()) +
                  " clopen components, each a product QO_i x dual(H_i)";
  }
  return out;
}

KernelOrder c0_kernel_order(const FiniteSystem& sys, const LabelledPoint& a, const LabelledPoint& b) {
  const PointSet ca = orbit(sys, a.point);
  const PointSet cb = orbit(sys, b.point);
  const bool b_in_a = std::includes(ca.begin(), ca.end(), cb.begin(), cb.end());
  const bool a_in_b = std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
  if (a_in_b && b_in_a) return KernelOrder::Equal;
  if (b_in_a) return KernelOrder::FirstBelowSecond;
  if (a_in_b) return KernelOrder::SecondBelowFirst;
  return KernelOrder::Incomparable;
}

std::string to_string(KernelOrder order) {
  switch (order) {
    case KernelOrder::Equal: return "equal";
    case KernelOrder::FirstBelowSecond: return "first-below-second";
    case KernelOrder::SecondBelowFirst: return "second-below-first";
    case KernelOrder::Incomparable: return "incomparable";
  }
  return "incomparable";
}

}  // namespace drprim
