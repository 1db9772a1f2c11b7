#include "dgas/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dgas/errors.hpp"

namespace dgas {

Graph::Graph(std::size_t n) : n_(n), bits_(n < 2 ? 0 : n * (n - 1) / 2, 0) {
  if (n == 0) throw DomainError("graph order must be positive");
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.set_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("vertex out of range");
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return bits_[pair_index(i, j)] != 0;
}

void Graph::set_edge(std::size_t i, std::size_t j, bool present) {
  if (i >= n_ || j >= n_) throw std::out_of_range("vertex out of range");
  if (i == j) throw DomainError("self-loops are not allowed");
  if (i > j) std::swap(i, j);
  bits_[pair_index(i, j)] = present ? 1 : 0;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (bits_[pair_index(i, j)]) out.emplace_back(i, j);
  return out;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (u != v && adjacent(u, v)) out.push_back(u);
  return out;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < n_; ++u) {
      if (!seen[u] && u != v && adjacent(u, v)) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n_;
}

Graph Graph::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw DimensionError("permutation size differs from graph order");
  Graph out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (bits_[pair_index(i, j)]) out.set_edge(perm[i], perm[j]);
  return out;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && issp(s.front())) s.remove_prefix(1);
  while (!s.empty() && issp(s.back())) s.remove_suffix(1);
  return s;
}

void append_order(std::string& out, std::size_t n) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  }
}

}  // namespace

Graph parse_graph6(std::string_view raw) {
  // Keep offsets relative to the caller's text.
  const std::size_t lead = raw.find_first_not_of(" \t\r\n");
  std::string_view text = trim(raw);
  std::size_t base = lead == std::string_view::npos ? 0 : lead;

  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base += kHeader.size();
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);
  if (text.front() == ':' || text.front() == ';' || text.front() == '&')
    throw ParseError("sparse6/digraph6 input is not supported", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", base + i);
  }

  std::size_t pos = 0;
  std::size_t n = 0;
  auto read_groups = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size())
      throw ParseError("truncated extended order header", base + text.size());
    std::size_t v = 0;
    for (int k = 0; k < count; ++k) {
      auto c = static_cast<unsigned char>(text[pos]);
      if (c == 126) throw ParseError("malformed header byte", base + pos);
      v = (v << 6) | static_cast<std::size_t>(c - kBias);
      ++pos;
    }
    return v;
  };
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - kBias);
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = read_groups(6);
  } else {
    pos = 1;
    n = read_groups(3);
  }
  if (n == 0) throw ParseError("graph order must be positive", base);

  const std::size_t nbits = n * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < nbytes)
    throw ParseError("bit-length mismatch: expected " + std::to_string(nbytes) +
                         " edge bytes, found " + std::to_string(have),
                     base + text.size());
  if (have > nbytes)
    throw ParseError("bit-length mismatch: trailing data after edge bytes",
                     base + pos + nbytes);

  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) g.set_edge(i, j);
    }
  }
  if (nbytes > 0) {
    const std::size_t used = nbits - (nbytes - 1) * 6;
    const int last = text[pos + nbytes - 1] - kBias;
    const int pad_mask = (1 << (6 - used)) - 1;
    if (last & pad_mask) throw ParseError("nonzero padding bits", base + pos + nbytes - 1);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_order(out, n);
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

// ---------------------------------------------------------------------------
// edge lists

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), offset + start});
  }
  return out;
}

std::size_t parse_index(const Token& tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError("expected a nonnegative integer, got '" + std::string(tok.text) + "'",
                     tok.offset);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Token> tokens;
  std::vector<std::size_t> line_of;  // line number of each token
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (auto& t : split_tokens(line, start)) {
      tokens.push_back(t);
      line_of.push_back(line_no);
    }
    ++line_no;
    start = end + 1;
  }
  if (tokens.empty()) throw ParseError("empty edge list", 0);

  const std::size_t n = parse_index(tokens[0]);
  if (n == 0) throw ParseError("graph order must be positive", tokens[0].offset);
  if (tokens.size() > 1 && line_of[1] == line_of[0])
    throw ParseError("the order must stand alone on its line", tokens[1].offset);
  Graph g(n);

  std::size_t k = 1;
  while (k < tokens.size()) {
    if (k + 1 >= tokens.size() || line_of[k + 1] != line_of[k] ||
        (k + 2 < tokens.size() && line_of[k + 2] == line_of[k]))
      throw ParseError("each edge line must hold exactly two vertices", tokens[k].offset);
    std::size_t u = parse_index(tokens[k]);
    std::size_t v = parse_index(tokens[k + 1]);
    if (u >= n) throw ParseError("vertex " + std::to_string(u) + " out of range", tokens[k].offset);
    if (v >= n)
      throw ParseError("vertex " + std::to_string(v) + " out of range", tokens[k + 1].offset);
    if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), tokens[k].offset);
    if (g.adjacent(u, v))
      throw ParseError("duplicate edge " + std::to_string(std::min(u, v)) + " " +
                           std::to_string(std::max(u, v)),
                       tokens[k].offset);
    g.set_edge(u, v);
    k += 2;
  }
  return g;
}

std::string encode_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) out.set_edge(i, j);
  return out;
}

std::vector<std::int64_t> degree_vector(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> d(n, 0);
  for (auto [u, v] : g.edges()) {
    ++d[u];
    ++d[v];
  }
  return d;
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

using Mask = std::uint16_t;
static_assert(kCanonicalOrderCap <= 16);

std::vector<int> refine_colors(std::span<const Mask> adj) {
  const std::size_t n = adj.size();
  std::vector<int> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = std::popcount(static_cast<unsigned>(adj[v]));

  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (std::size_t u = 0; u < n; ++u)
        if (adj[v] >> u & 1) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (std::size_t v = 0; v < n; ++v) color[v] = rank[sig[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(std::vector<Mask> adj) : adj_(std::move(adj)), n_(adj_.size()) {
    auto color = refine_colors(adj_);
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return color[a] < color[b]; });
    cell_.resize(n_);
    vertex_color_ = color;
    for (std::size_t k = 0; k < n_; ++k) cell_[k] = color[order[k]];
    placed_.resize(n_);
    cols_.assign(n_, 0);
  }

  std::vector<Mask> run() {
    search(0, 0);
    return best_;
  }

 private:
  bool twins(std::size_t u, std::size_t w) const {
    const Mask without = static_cast<Mask>(~((1u << u) | (1u << w)));
    return (adj_[u] & without) == (adj_[w] & without);
  }

  // -1, 0, 1 as the placed prefix plus `col` compares with the best labeling
  // so far. Recomputed at every node because leaves below may replace best_.
  int compare_prefix(std::size_t k, Mask col) const {
    if (best_.empty()) return -1;
    for (std::size_t i = 0; i < k; ++i)
      if (cols_[i] != best_[i]) return cols_[i] < best_[i] ? -1 : 1;
    if (col != best_[k]) return col < best_[k] ? -1 : 1;
    return 0;
  }

  void search(std::size_t k, Mask used) {
    if (k == n_) {
      if (best_.empty() || cols_ < best_) best_ = cols_;
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if ((used >> v & 1) || vertex_color_[v] != cell_[k]) continue;
      // Swapping two unplaced twins is an automorphism fixing the prefix.
      if (std::any_of(tried.begin(), tried.end(), [&](auto t) { return twins(t, v); })) continue;
      tried.push_back(v);

      Mask col = 0;
      for (std::size_t i = 0; i < k; ++i)
        col = static_cast<Mask>((col << 1) | (adj_[placed_[i]] >> v & 1));
      if (compare_prefix(k, col) > 0) continue;
      placed_[k] = v;
      cols_[k] = col;
      search(k + 1, static_cast<Mask>(used | (1u << v)));
    }
  }

  std::vector<Mask> adj_;
  std::size_t n_;
  std::vector<int> vertex_color_;
  std::vector<int> cell_;
  std::vector<std::size_t> placed_;
  std::vector<Mask> cols_;
  std::vector<Mask> best_;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalOrderCap)
    throw DomainError("canonical_form supports at most " + std::to_string(kCanonicalOrderCap) +
                      " vertices");
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] = static_cast<Mask>(adj[u] | (1u << v));
    adj[v] = static_cast<Mask>(adj[v] | (1u << u));
  }
  auto cols = CanonicalSearch(std::move(adj)).run();

  Graph canon(n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (cols[j] >> (j - 1 - i) & 1) canon.set_edge(i, j);
  return encode_graph6(canon);
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  auto dg = degree_vector(g);
  auto dh = degree_vector(h);
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace dgas
