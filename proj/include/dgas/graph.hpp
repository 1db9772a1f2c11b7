#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dgas {

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one byte per unordered pair {i, j}, i < j, in the
/// graph6 bit order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept;

  bool adjacent(std::size_t i, std::size_t j) const;
  void set_edge(std::size_t i, std::size_t j, bool present = true);

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  bool is_connected() const;

  /// Relabel so that vertex v of *this becomes vertex perm[v] of the result.
  Graph permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t pair_index(std::size_t i, std::size_t j) noexcept {
    // i < j
    return j * (j - 1) / 2 + i;
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// First token is the order, then one "u v" pair per line with u < v.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

Graph complement(const Graph& g);
std::vector<std::int64_t> degree_vector(const Graph& g);

inline constexpr std::size_t kCanonicalOrderCap = 10;
inline constexpr std::size_t kEnumerationOrderCap = 8;

/// Isomorphism-invariant byte string (itself a graph6 string).
///
/// Vertices are first split into cells by iterated degree refinement; the form
/// is the lexicographically smallest upper-triangle bit string over all
/// labelings that list the cells in refinement order.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

/// One representative per isomorphism class on n vertices, sorted by
/// (edge count, canonical form). Representatives are in canonical labeling.
std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only = false);

}  // namespace dgas
