#pragma once

#include "trinity/links.hpp"
#include "trinity/polytopes.hpp"

namespace trinity {

struct HomflyHVectorRecord {
  Laurent2 homfly;
  Laurent1 top;
  Laurent1 h;
  long exponent = 0;   // |E| + |V| - 1
  Laurent1 rhs_v2;     // v^exponent h(v^-2)
  Laurent1 rhs_v1;     // v^exponent h(v^-1)
  bool holds_v2 = false;
  bool holds_v1 = false;
  int root = 0;        // red vertex (face id)
  bool holds() const { return holds_v2; }
};

// h from the red arborescence triangulation at `root`, top from the median link.
inline HomflyHVectorRecord verify_homfly_h_vector(const Trinity& t, int root, std::size_t crossing_cap = 16) {
  HomflyHVectorRecord r;
  r.root = root;
  const PlanarMap& m = t.source();
  r.homfly = homfly(median_diagram(m, t.source_bipartition()), crossing_cap);
  r.top = homfly_top(r.homfly);
  r.h = h_vector(arborescence_triangulation(t, Colour::Red, root));
  r.exponent = static_cast<long>(m.edge_count() + m.vertex_count()) - 1;
  r.rhs_v2 = Laurent1::monomial(static_cast<int>(r.exponent)) * r.h.substitute_power(-2);
  r.rhs_v1 = Laurent1::monomial(static_cast<int>(r.exponent)) * r.h.substitute_power(-1);
  r.holds_v2 = r.top == r.rhs_v2;
  r.holds_v1 = r.top == r.rhs_v1;
  return r;
}

}  // namespace trinity
