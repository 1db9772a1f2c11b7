#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "dgas/errors.hpp"
#include "dgas/graph.hpp"

namespace dgas {

namespace {

// Every graph on n vertices is, up to isomorphism, some graph on n - 1
// vertices plus one new vertex with an arbitrary neighborhood.
std::vector<std::string> classes_by_augmentation(std::size_t n) {
  if (n == 1) return {encode_graph6(Graph(1))};
  auto smaller = classes_by_augmentation(n - 1);
  std::unordered_set<std::string> seen;
  std::vector<std::string> out;
  const std::size_t last = n - 1;
  for (const auto& form : smaller) {
    const Graph base = parse_graph6(form);
    for (std::size_t mask = 0; mask < (std::size_t{1} << last); ++mask) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.set_edge(u, v);
      for (std::size_t u = 0; u < last; ++u)
        if (mask >> u & 1) g.set_edge(u, last);
      auto canon = canonical_form(g);
      if (seen.insert(canon).second) out.push_back(std::move(canon));
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only) {
  if (n < 1 || n > kEnumerationOrderCap)
    throw DomainError("built-in enumeration supports 1 <= n <= " +
                      std::to_string(kEnumerationOrderCap) + "; supply a graph6 file instead");
  std::vector<Graph> out;
  for (const auto& form : classes_by_augmentation(n)) {
    Graph g = parse_graph6(form);
    if (!connected_only || g.is_connected()) out.push_back(std::move(g));
  }
  std::vector<std::pair<std::size_t, std::string>> keys;
  std::vector<std::size_t> idx(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    keys.emplace_back(out[i].edge_count(), encode_graph6(out[i]));
    idx[i] = i;
  }
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  std::vector<Graph> sorted;
  sorted.reserve(out.size());
  for (auto i : idx) sorted.push_back(std::move(out[i]));
  return sorted;
}

}  // namespace dgas
