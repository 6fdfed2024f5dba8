#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "trinity/laurent.hpp"
#include "trinity/planar.hpp"

namespace trinity {

// Slots run counter-clockwise from the incoming under-strand (slot 0 -> 2).
// The over-strand runs 3 -> 1 on a positive crossing and 1 -> 3 on a negative one.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;
  bool operator==(const Crossing&) const = default;

  bool incoming(int slot) const { return slot == 0 || slot == (sign > 0 ? 3 : 1); }
  Crossing switched() const {
    const auto& a = arcs;
    return sign > 0 ? Crossing{{a[3], a[0], a[1], a[2]}, -1} : Crossing{{a[1], a[2], a[3], a[0]}, 1};
  }
  // (incoming, outgoing) pairs joined by the oriented smoothing
  std::array<std::pair<int, int>, 2> smoothing() const {
    const auto& a = arcs;
    if (sign > 0) return {{{a[0], a[1]}, {a[3], a[2]}}};
    return {{{a[0], a[3]}, {a[1], a[2]}}};
  }
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;  // crossingless unknotted components
  std::string provenance;
};

namespace detail {

struct ArcEnds {
  std::vector<std::pair<int, int>> head, tail;  // (crossing, slot)
  int max_label = 0;
};

inline ArcEnds arc_ends(const LinkDiagram& d) {
  ArcEnds e;
  for (auto& c : d.crossings)
    for (int a : c.arcs) e.max_label = std::max(e.max_label, a);
  e.head.assign(e.max_label + 1, {-1, -1});
  e.tail.assign(e.max_label + 1, {-1, -1});
  for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i)
    for (int s = 0; s < 4; ++s) {
      const auto& c = d.crossings[i];
      auto& slot = c.incoming(s) ? e.head[c.arcs[s]] : e.tail[c.arcs[s]];
      if (slot.first != -1) fail(ErrorKind::InvalidArgument, "arc " + std::to_string(c.arcs[s]) + " has two heads or two tails");
      slot = {i, s};
    }
  for (int a = 1; a <= e.max_label; ++a)
    if ((e.head[a].first == -1) != (e.tail[a].first == -1)) fail(ErrorKind::InvalidArgument, "arc with a single end");
  return e;
}

inline int next_arc(const LinkDiagram& d, const ArcEnds& e, int a) {
  auto [c, s] = e.head[a];
  return d.crossings[c].arcs[(s + 2) % 4];
}

}  // namespace detail

// Arc labels of each traced component, ordered by smallest label; each list starts there.
inline std::vector<std::vector<int>> trace_components(const LinkDiagram& d) {
  auto e = detail::arc_ends(d);
  std::vector<bool> seen(e.max_label + 1, false);
  std::vector<std::vector<int>> out;
  for (int a = 1; a <= e.max_label; ++a) {
    if (seen[a] || e.head[a].first == -1) continue;
    std::vector<int> comp;
    int x = a;
    do {
      seen[x] = true;
      comp.push_back(x);
      x = detail::next_arc(d, e, x);
    } while (x != a);
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::size_t component_count(const LinkDiagram& d) {
  return trace_components(d).size() + static_cast<std::size_t>(d.free_loops);
}

inline void validate_diagram(const LinkDiagram& d) {
  std::map<int, int> count;
  for (auto& c : d.crossings)
    for (int a : c.arcs) {
      if (a <= 0) fail(ErrorKind::InvalidArgument, "arc labels must be positive");
      ++count[a];
    }
  for (auto& [a, k] : count)
    if (k != 2) fail(ErrorKind::InvalidArgument, "arc " + std::to_string(a) + " appears " + std::to_string(k) + " times");
  detail::arc_ends(d);
}

// One crossing per edge; Seifert circles run counter-clockwise around violet
// vertices and clockwise around emerald ones. Arc label of corner (a, sigma a) is a+1.
// With the violet end of the edge to the west, the strand from the south-west
// corner to the north-east corner passes over, which makes every crossing positive.
inline LinkDiagram median_diagram(const PlanarMap& m, const Bipartition& bip) {
  LinkDiagram d;
  auto label = [](int dart) { return dart + 1; };
  for (int k = 0; k < static_cast<int>(m.edge_count()); ++k) {
    int v = bip.side[m.vertex_of(2 * k)] == 0 ? 2 * k : 2 * k + 1;
    int w = PlanarMap::alpha(v);
    int sw = m.sigma_inv(v), nw = v, se = w, ne = m.sigma_inv(w);
    d.crossings.push_back({{label(se), label(ne), label(nw), label(sw)}, 1});
  }
  d.provenance = "median";
  return d;
}

inline LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram r = d;
  for (auto& c : r.crossings) c = c.switched();
  r.provenance = d.provenance + "+mirror";
  return r;
}

// Along each component passages alternate over/under.
inline bool is_alternating(const LinkDiagram& d) {
  auto e = detail::arc_ends(d);
  for (auto& comp : trace_components(d)) {
    std::vector<bool> under;
    for (int a : comp) under.push_back(e.head[a].second == 0);
    for (std::size_t i = 0; i < under.size(); ++i)
      if (under[i] == under[(i + 1) % under.size()]) return false;
  }
  return true;
}

inline std::size_t seifert_circle_count(const LinkDiagram& d) {
  std::map<int, int> succ;
  for (auto& c : d.crossings)
    for (auto [in, out] : c.smoothing()) succ[in] = out;
  std::map<int, bool> seen;
  std::size_t circles = static_cast<std::size_t>(d.free_loops);
  for (auto& [a, b] : succ) {
    if (seen[a]) continue;
    ++circles;
    int x = a;
    while (!seen[x]) seen[x] = true, x = succ[x];
  }
  return circles;
}

struct SeifertData {
  std::size_t components = 0;
  long euler_characteristic = 0;
  long genus = 0;
};

inline SeifertData seifert_data(const LinkDiagram& d) {
  SeifertData s;
  s.components = component_count(d);
  s.euler_characteristic = static_cast<long>(seifert_circle_count(d)) - static_cast<long>(d.crossings.size());
  s.genus = (2 - s.euler_characteristic - static_cast<long>(s.components)) / 2;
  return s;
}

inline std::string to_pd_string(const LinkDiagram& d) {
  std::ostringstream os;
  for (auto& c : d.crossings)
    os << "X(" << c.arcs[0] << ',' << c.arcs[1] << ',' << c.arcs[2] << ',' << c.arcs[3] << ") " << (c.sign > 0 ? '+' : '-')
       << '\n';
  return os.str();
}

inline LinkDiagram parse_pd(const std::string& text) {
  LinkDiagram d;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Crossing c;
    char s = 0;
    if (std::sscanf(line.c_str(), " X(%d,%d,%d,%d) %c", &c.arcs[0], &c.arcs[1], &c.arcs[2], &c.arcs[3], &s) != 5 ||
        (s != '+' && s != '-'))
      fail(ErrorKind::Parse, "bad PD line: " + line);
    c.sign = s == '+' ? 1 : -1;
    d.crossings.push_back(c);
  }
  validate_diagram(d);
  return d;
}

namespace detail {

// Drop crossing i, continuing each (in, out) pair as one arc.
inline void remove_crossing(LinkDiagram& d, std::size_t i, std::vector<std::pair<int, int>> joins) {
  d.crossings.erase(d.crossings.begin() + static_cast<long>(i));
  for (std::size_t j = 0; j < joins.size(); ++j) {
    auto [in, out] = joins[j];
    if (in == out) {
      ++d.free_loops;
      continue;
    }
    for (auto& c : d.crossings)
      for (int& a : c.arcs)
        if (a == out) a = in;
    for (std::size_t k = j + 1; k < joins.size(); ++k) {
      if (joins[k].first == out) joins[k].first = in;
      if (joins[k].second == out) joins[k].second = in;
    }
  }
}

}  // namespace detail

// Reidemeister I: a crossing with one label in two neighbouring slots.
inline LinkDiagram remove_kinks(LinkDiagram d) {
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < d.crossings.size() && !again; ++i) {
      const Crossing c = d.crossings[i];
      for (int j = 0; j < 4 && !again; ++j) {
        if (c.arcs[j] != c.arcs[(j + 1) % 4]) continue;
        int p = (j + 2) % 4, q = (j + 3) % 4;
        int in = c.incoming(p) ? c.arcs[p] : c.arcs[q];
        int out = c.incoming(p) ? c.arcs[q] : c.arcs[p];
        detail::remove_crossing(d, i, {{in, out}});
        again = true;
      }
    }
  }
  return d;
}

namespace detail {

inline Laurent2 split_factor() { return Laurent2::monomial(-1, -1) - Laurent2::monomial(1, -1); }

inline Laurent2 power(const Laurent2& p, long k) {
  Laurent2 r = Laurent2::one();
  for (long i = 0; i < k; ++i) r = r * p;
  return r;
}

// Split crossings into diagrammatically connected groups.
inline std::vector<LinkDiagram> split_parts(const LinkDiagram& d) {
  const std::size_t n = d.crossings.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, int> first_seen;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int a : d.crossings[i].arcs) {
      auto [it, fresh] = first_seen.emplace(a, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  std::map<int, LinkDiagram> groups;
  for (int i = 0; i < static_cast<int>(n); ++i) groups[find(i)].crossings.push_back(d.crossings[i]);
  std::vector<LinkDiagram> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  return out;
}

// Relabel arcs along the traversal (components by smallest label), keeping base points.
inline LinkDiagram canonical(const LinkDiagram& d) {
  std::map<int, int> relabel;
  int next = 1;
  for (auto& comp : trace_components(d))
    for (int a : comp) relabel[a] = next++;
  LinkDiagram r;
  for (auto& c : d.crossings) {
    Crossing x = c;
    for (int& a : x.arcs) a = relabel.at(a);
    r.crossings.push_back(x);
  }
  std::sort(r.crossings.begin(), r.crossings.end(),
            [](const Crossing& a, const Crossing& b) { return std::tie(a.arcs, a.sign) < std::tie(b.arcs, b.sign); });
  return r;
}

inline std::string key(const LinkDiagram& d) {
  std::string k;
  for (auto& c : d.crossings) {
    for (int a : c.arcs) k += std::to_string(a) + ',';
    k += c.sign > 0 ? '+' : '-';
  }
  return k;
}

class SkeinEngine {
 public:
  Laurent2 eval(LinkDiagram d) {
    d = remove_kinks(std::move(d));
    const long loops = d.free_loops;
    d.free_loops = 0;
    if (d.crossings.empty()) return power(split_factor(), std::max(0L, loops - 1));
    auto parts = split_parts(d);
    Laurent2 r = power(split_factor(), static_cast<long>(parts.size()) - 1 + loops);
    for (auto& p : parts) r = r * eval_connected(canonical(p));
    return r;
  }

 private:
  Laurent2 eval_connected(const LinkDiagram& d) {
    std::string k = key(d);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    auto e = arc_ends(d);
    auto comps = trace_components(d);
    std::vector<bool> visited(d.crossings.size(), false);
    int bad = -1;
    for (auto& comp : comps) {
      for (int a : comp) {
        auto [c, s] = e.head[a];
        if (visited[c]) continue;
        visited[c] = true;
        if (s == 0) { bad = c; break; }
      }
      if (bad >= 0) break;
    }
    Laurent2 r;
    if (bad < 0) {
      r = power(split_factor(), static_cast<long>(comps.size()) - 1);
    } else {
      const Crossing c = d.crossings[bad];
      LinkDiagram sw = d, sm = d;
      sw.crossings[bad] = c.switched();
      auto joins = c.smoothing();
      detail::remove_crossing(sm, bad, {joins[0], joins[1]});
      Laurent2 p_sw = eval(sw), p_sm = eval(sm);
      if (c.sign > 0)
        r = Laurent2::monomial(2, 0) * p_sw + Laurent2::monomial(1, 1) * p_sm;
      else
        r = Laurent2::monomial(-2, 0) * p_sw - Laurent2::monomial(-1, 1) * p_sm;
    }
    memo_.emplace(std::move(k), r);
    return r;
  }

  std::unordered_map<std::string, Laurent2> memo_;
};

}  // namespace detail

// Convention: v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1.
inline Laurent2 homfly(const LinkDiagram& d, std::size_t crossing_cap = 16) {
  if (d.crossings.size() > crossing_cap)
    fail(ErrorKind::Resource, std::to_string(d.crossings.size()) + " crossings exceed the cap of " + std::to_string(crossing_cap));
  validate_diagram(d);
  if (d.crossings.empty() && d.free_loops == 0) fail(ErrorKind::InvalidArgument, "empty diagram");
  detail::SkeinEngine engine;
  return engine.eval(d);
}

// Terms of the largest z-degree whose coefficient does not vanish at v = 1.
inline Laurent1 homfly_top(const Laurent2& p) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "top of the zero polynomial");
  std::map<int, bool> zdeg;
  for (auto& [k, v] : p.terms()) zdeg[k.second] = true;
  for (auto it = zdeg.rbegin(); it != zdeg.rend(); ++it) {
    Laurent1 c = p.z_coefficient(it->first);
    if (c.evaluate_at_one() != 0) return c;
  }
  fail(ErrorKind::InvalidArgument, "polynomial vanishes at v = 1");
}

inline Laurent1 alexander_conway(const Laurent2& p) { return p.at_v_one(); }

}  // namespace trinity
