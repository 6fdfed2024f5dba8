#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trinity/trees.hpp"

namespace trinity {

struct MagicNumberReport {
  Integer determinant;  // absolute value
  Integer arborescences[3];  // per colour, rooted at the root triangle's corner
  Integer tutte_matchings;
  std::vector<std::pair<std::string, Integer>> hypertree_counts;
  bool all_equal = false;
  Integer value;
};

inline MagicNumberReport magic_number_report(const Trinity& t) {
  MagicNumberReport r;
  r.determinant = abs(det_exact(adjacency_matrix(t).to_ratmat()).get_num());
  for (Colour c : {Colour::Violet, Colour::Emerald, Colour::Red})
    r.arborescences[static_cast<int>(c)] = count_arborescences(directed_dual(t, c), t.root_vertex(c).index);
  r.tutte_matchings = static_cast<unsigned long>(tutte_matchings(t).size());
  for (const auto& h : all_hypergraphs())
    r.hypertree_counts.emplace_back(h.name(), Integer(static_cast<unsigned long>(hypertree_set(t, h).size())));
  std::vector<Integer> all{r.determinant, r.arborescences[0], r.arborescences[1], r.arborescences[2], r.tutte_matchings};
  for (auto& [n, v] : r.hypertree_counts) all.push_back(v);
  r.all_equal = true;
  for (auto& v : all) r.all_equal = r.all_equal && v == all.front();
  r.value = all.front();
  return r;
}

}  // namespace trinity
