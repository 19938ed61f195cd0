#pragma once

// The Deaconu-Renault groupoid G_T = {(x, m - n, y) : T^m x = T^n y} of a
// finite system, and its quotient by an interior-isotropy lattice.

#include "drprim/dynsys.hpp"
#include "drprim/lattice.hpp"

#include <compare>

namespace drprim {

struct GroupoidElement {
  Point range = 0;
  ZVector displacement;
  Point source = 0;

  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
    return a.range == b.range && a.source == b.source && equal_vectors(a.displacement, b.displacement);
  }
  friend bool operator<(const GroupoidElement& a, const GroupoidElement& b) {
    if (a.range != b.range) return a.range < b.range;
    if (a.source != b.source) return a.source < b.source;
    return ZVectorLess{}(a.displacement, b.displacement);
  }
};

/// (x, g, y) in G_T, decided by reachability of the diagonal from
/// (T^{g+} x, T^{g-} y) in the product system.
bool contains(const FiniteSystem& sys, Point x, const ZVector& g, Point y);

/// Checked constructor; throws InvalidElement.
GroupoidElement make_element(const FiniteSystem& sys, Point x, const ZVector& g, Point y);

GroupoidElement unit(const FiniteSystem& sys, Point x);

GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b);
GroupoidElement inverse(const GroupoidElement& a);

/// L_y = {g : (y, g, y) in G_T}.
Lattice isotropy_group(const FiniteSystem& sys, Point y);

/// (x, q(g), y) with q the quotient map onto Z^k / H, g stored as its
/// canonical coset representative.
struct QuotientElement {
  Point range = 0;
  ZVector displacement;
  Point source = 0;
  Lattice lattice;

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.range == b.range && a.source == b.source && a.lattice == b.lattice &&
           equal_vectors(a.displacement, b.displacement);
  }
};

QuotientElement quotient_element(const GroupoidElement& g, const Lattice& h);
QuotientElement quotient_compose(const QuotientElement& a, const QuotientElement& b);
QuotientElement quotient_inverse(const QuotientElement& a);

/// Every y in Y has L_y = H.
bool quotient_isotropy_is_trivial(const FiniteSystem& sys, const PointSet& y, const Lattice& h);

}  // namespace drprim
