#pragma once

#include <optional>
#include <vector>

#include "trinity/links.hpp"
#include "trinity/polytopes.hpp"

namespace trinity {

struct SupportSet {
  Colour coordinates;  // hyperedge class indexing the coordinates
  LatticeSet points;   // canonical translate
  bool invariant_is_generator = true;  // modelled, not computed
};

struct SuturedSummary {
  long genus = 0;
  std::size_t suture_components = 0;
  bool balanced = true;
  std::size_t dim_sfh = 0;
};

// With colour c's graph taken as G (c's class playing the faces), the
// support is S_(A,c) and also -S_(B,c); for c = red, A = E and B = V.
inline std::pair<Hypergraph, Hypergraph> support_hypergraphs(Colour c) {
  switch (c) {
    case Colour::Red: return {{Colour::Emerald, Colour::Red}, {Colour::Violet, Colour::Red}};
    case Colour::Violet: return {{Colour::Red, Colour::Violet}, {Colour::Emerald, Colour::Violet}};
    case Colour::Emerald: return {{Colour::Violet, Colour::Emerald}, {Colour::Red, Colour::Emerald}};
  }
  return {};
}

inline SupportSet sfh_support(const Trinity& t, Colour c = Colour::Red) {
  auto [pos, neg] = support_hypergraphs(c);
  LatticeSet a = hypertree_set(t, pos).canonical();
  LatticeSet b = hypertree_set(t, neg).negated().canonical();
  if (!(a == b)) fail(ErrorKind::Internal, "support routes disagree for " + std::string(colour_name(c)));
  return {c, a, true};
}

inline std::size_t sfh_dimension(const Trinity& t, Colour c = Colour::Red) { return sfh_support(t, c).points.size(); }

inline std::size_t tight_contact_count(const Trinity& t, Colour c) {
  auto [x, y] = colour_classes(c);
  std::size_t a = hypertree_set(t, {x, y}).size(), b = hypertree_set(t, {y, x}).size();
  if (a != b) fail(ErrorKind::Internal, "hypertree counts differ across the two sides");
  return a;
}

// Built from the arborescences of the colour's directed dual rather than from spanning trees.
inline SupportSet spin_c_tight_support(const Trinity& t, Colour c = Colour::Red) {
  Colour z = support_hypergraphs(c).first.hyperedges;
  Colour dual_colour = support_hypergraphs(c).first.graph_colour();
  std::vector<IntVec> pts;
  DirectedDual d = directed_dual(t, dual_colour);
  for (auto& a : enumerate_arborescences(d, t.root_vertex(dual_colour).index))
    pts.push_back(arborescence_to_hypertree(t, dual_colour, a, z));
  return {c, LatticeSet(t.count(z), pts).canonical(), true};
}

inline SuturedSummary sutured_summary(const Trinity& t) {
  SuturedSummary s;
  s.genus = betti1(t.source());
  s.suture_components = component_count(median_diagram(t.source(), t.source_bipartition()));
  s.balanced = true;
  s.dim_sfh = sfh_dimension(t);
  return s;
}

struct AffineEquivalence {
  bool equivalent = false;
  bool reflected = false;
  IntVec witness;
};

// b = a + c, or with reflection b = c - a.
inline AffineEquivalence affine_equivalent(const LatticeSet& a, const LatticeSet& b, bool allow_reflection) {
  if (a.ambient_dim() != b.ambient_dim()) fail(ErrorKind::Dimension, "lattice sets in different spaces");
  if (auto c = translation_between(b, a)) return {true, false, *c};
  if (allow_reflection)
    if (auto c = reflection_centre(b, a)) return {true, true, *c};
  return {};
}

}  // namespace trinity
