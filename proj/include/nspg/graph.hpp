#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nspg/error.hpp"

namespace nspg {

// Fixed-size dynamic bitset, one row of an adjacency matrix.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) noexcept { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += std::size_t(std::popcount(w));
    return c;
  }

  // Low 64 bits; meaningful only when size() <= 64.
  std::uint64_t word0() const noexcept { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

using Edge = std::pair<std::size_t, std::size_t>;

// Undirected loop-free graph over vertices 0..n-1 with distinct labels.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  explicit SimpleGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
      throw InvalidArgument("vertex labels must be distinct");
    rows_.assign(labels_.size(), Bitset(labels_.size()));
  }

  // Vertices labelled "0".."n-1".
  static SimpleGraph with_vertices(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return SimpleGraph(std::move(labels));
  }

  static SimpleGraph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    auto g = with_vertices(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static SimpleGraph complete(std::size_t n) {
    auto g = with_vertices(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }

  void add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("self-loops are not allowed");
    rows_[u].set(v);
    rows_[v].set(u);
  }

  void remove_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u].reset(v);
    rows_[v].reset(u);
  }

  bool has_edge(std::size_t u, std::size_t v) const noexcept { return rows_[u].test(v); }
  const Bitset& row(std::size_t v) const noexcept { return rows_[v]; }
  std::size_t degree(std::size_t v) const noexcept { return rows_[v].count(); }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < vertex_count(); ++u)
      if (rows_[v].test(u)) out.push_back(u);
    return out;
  }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < vertex_count(); ++u)
      for (std::size_t v = u + 1; v < vertex_count(); ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  SimpleGraph complement() const {
    SimpleGraph g(labels_);
    for (std::size_t u = 0; u < vertex_count(); ++u)
      for (std::size_t v = u + 1; v < vertex_count(); ++v)
        if (!has_edge(u, v)) g.add_edge(u, v);
    return g;
  }

  // Subgraph induced by `keep`, vertices renumbered in the given order.
  SimpleGraph induced(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> labels;
    for (auto v : keep) labels.push_back(label(v));
    SimpleGraph g(std::move(labels));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (has_edge(keep[i], keep[j])) g.add_edge(i, j);
    return g;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(std::size_t v) const {
    if (v >= vertex_count())
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }

  std::vector<std::string> labels_;
  std::vector<Bitset> rows_;
};

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// DOT export: one node statement per vertex carrying only its label, then
// edges in lexicographic order.
inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph \"" << detail::dot_escape(name) << "\" {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << detail::dot_escape(g.label(v)) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

// {"vertices": [labels], "edges": [[i, j], ...]} with i < j, sorted.
inline nlohmann::ordered_json to_json(const SimpleGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.labels();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

inline SimpleGraph graph_from_json(const nlohmann::json& j) {
  SimpleGraph g(j.at("vertices").get<std::vector<std::string>>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  return g;
}

}  // namespace nspg
