#ifndef COXHOM_GRAPH_HPP_
#define COXHOM_GRAPH_HPP_

// Coxeter graph data model: labels, the sparse labelled graph, the plain
// (unlabelled, oriented) graph used for chains, and derived subgraphs.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxhom/error.hpp"

namespace coxhom {

/// Entry m(s,t) of a Coxeter matrix: a finite integer or infinity. The value
/// 1 only ever appears as the implicit diagonal; graphs never store it.
class CoxeterLabel {
 public:
  constexpr CoxeterLabel() noexcept = default;

  static CoxeterLabel finite(std::int64_t m) {
    if (m < 1) {
      throw Error(ErrorKind::BadLabel,
                  "label must be a positive integer, got " + std::to_string(m));
    }
    CoxeterLabel out;
    out.value_ = m;
    return out;
  }

  static constexpr CoxeterLabel infinity() noexcept {
    CoxeterLabel out;
    out.value_ = kInfinity;
    return out;
  }

  static constexpr CoxeterLabel diagonal() noexcept {
    CoxeterLabel out;
    out.value_ = 1;
    return out;
  }

  [[nodiscard]] constexpr bool is_infinite() const noexcept {
    return value_ == kInfinity;
  }
  [[nodiscard]] constexpr bool is_finite() const noexcept {
    return !is_infinite();
  }

  /// Throws InfiniteLabel for infinity.
  [[nodiscard]] std::int64_t value() const {
    if (is_infinite()) {
      throw Error(ErrorKind::InfiniteLabel, "label is infinite");
    }
    return value_;
  }

  // Infinity has no parity.
  [[nodiscard]] constexpr bool is_odd() const noexcept {
    return is_finite() && value_ % 2 == 1;
  }
  [[nodiscard]] constexpr bool is_even() const noexcept {
    return is_finite() && value_ % 2 == 0;
  }
  [[nodiscard]] constexpr bool is_commuting() const noexcept {
    return value_ == 2;
  }
  /// An edge of the Coxeter graph: m >= 3 or infinity.
  [[nodiscard]] constexpr bool is_edge() const noexcept { return value_ >= 3; }
  [[nodiscard]] constexpr bool is_odd_edge() const noexcept {
    return is_edge() && is_odd();
  }
  [[nodiscard]] constexpr bool is_even_edge() const noexcept {
    return is_edge() && is_even();
  }

  [[nodiscard]] std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
  }

  friend constexpr bool operator==(CoxeterLabel, CoxeterLabel) = default;

 private:
  static constexpr std::int64_t kInfinity = INT64_MAX;
  std::int64_t value_ = 2;
};

/// Unordered pair of distinct vertex indices, stored with first < second.
struct VertexPair {
  std::size_t first = 0;
  std::size_t second = 0;

  static VertexPair of(std::size_t a, std::size_t b) noexcept {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
  }

  [[nodiscard]] bool contains(std::size_t v) const noexcept {
    return first == v || second == v;
  }

  friend auto operator<=>(VertexPair const&, VertexPair const&) = default;
};

/// Input edge for build_graph, referring to vertices by name.
struct EdgeSpec {
  std::string u;
  std::string v;
  CoxeterLabel m;
};

class CoxeterGraph;
CoxeterGraph build_graph(std::vector<std::string> vertices,
                         std::span<EdgeSpec const> edges);

/// Labelled Coxeter graph in canonical sparse form: only labels != 2 are
/// stored. The vertex sequence fixes the total order on the generators.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] bool empty() const noexcept { return vertices_.empty(); }

  [[nodiscard]] std::vector<std::string> const& vertices() const noexcept {
    return vertices_;
  }
  [[nodiscard]] std::string const& name(std::size_t i) const {
    return vertices_.at(i);
  }

  [[nodiscard]] bool has_vertex(std::string_view name) const {
    return index_.find(std::string(name)) != index_.end();
  }

  [[nodiscard]] std::size_t index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      throw Error(ErrorKind::UnknownVertex,
                  "unknown vertex '" + std::string(name) + "'");
    }
    return it->second;
  }

  /// m(s,t) by index; 1 on the diagonal, 2 for unstored pairs.
  [[nodiscard]] CoxeterLabel label(std::size_t s, std::size_t t) const {
    if (s >= size() || t >= size()) {
      throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
    }
    if (s == t) {
      return CoxeterLabel::diagonal();
    }
    auto it = labels_.find(VertexPair::of(s, t));
    return it == labels_.end() ? CoxeterLabel{} : it->second;
  }

  /// Stored (non-2) labels in lexicographic pair order.
  [[nodiscard]] std::map<VertexPair, CoxeterLabel> const& labels()
      const noexcept {
    return labels_;
  }

  friend bool operator==(CoxeterGraph const& a, CoxeterGraph const& b) {
    return a.vertices_ == b.vertices_ && a.labels_ == b.labels_;
  }

 private:
  friend CoxeterGraph build_graph(std::vector<std::string> vertices,
                                  std::span<EdgeSpec const> edges);

  std::vector<std::string> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<VertexPair, CoxeterLabel> labels_;
};

inline CoxeterGraph build_graph(std::vector<std::string> vertices,
                                std::span<EdgeSpec const> edges) {
  CoxeterGraph g;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.index_.emplace(vertices[i], i).second) {
      throw Error(ErrorKind::DuplicateVertex,
                  "duplicate vertex '" + vertices[i] + "'");
    }
  }
  g.vertices_ = std::move(vertices);

  // Every listed pair, including label-2 ones, so conflicts are caught.
  std::map<VertexPair, CoxeterLabel> seen;
  for (auto const& e : edges) {
    std::size_t const a = g.index_of(e.u);
    std::size_t const b = g.index_of(e.v);
    if (a == b) {
      throw Error(ErrorKind::SelfLoop, "self-loop on vertex '" + e.u + "'");
    }
    if (e.m.is_finite() && e.m.value() < 2) {
      throw Error(ErrorKind::BadLabel, "label of edge " + e.u + "-" + e.v +
                                           " must be >= 2 or inf");
    }
    auto const key = VertexPair::of(a, b);
    auto [it, inserted] = seen.emplace(key, e.m);
    if (!inserted && it->second != e.m) {
      throw Error(ErrorKind::ConflictingLabel,
                  "pair " + e.u + "-" + e.v + " listed with labels " +
                      it->second.to_string() + " and " + e.m.to_string());
    }
    if (!e.m.is_commuting()) {
      g.labels_[key] = e.m;
    }
  }
  return g;
}

inline CoxeterGraph build_graph(std::vector<std::string> vertices,
                                std::initializer_list<EdgeSpec> edges) {
  return build_graph(std::move(vertices),
                     std::span<EdgeSpec const>(edges.begin(), edges.size()));
}

/// m(s,t) by vertex name.
inline CoxeterLabel label_of(CoxeterGraph const& g, std::string_view s,
                             std::string_view t) {
  return g.label(g.index_of(s), g.index_of(t));
}

/// Edge list of `g` (stored labels) as name-based specs, pair order.
inline std::vector<EdgeSpec> edge_specs(CoxeterGraph const& g) {
  std::vector<EdgeSpec> out;
  out.reserve(g.labels().size());
  for (auto const& [pair, m] : g.labels()) {
    out.push_back({g.name(pair.first), g.name(pair.second), m});
  }
  return out;
}

/// Full subgraph spanned by `subset`; vertex order inherited from `g`.
inline CoxeterGraph full_subgraph(CoxeterGraph const& g,
                                  std::span<std::string const> subset) {
  std::vector<bool> keep(g.size(), false);
  for (auto const& name : subset) {
    keep[g.index_of(name)] = true;
  }
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (keep[i]) {
      vertices.push_back(g.name(i));
    }
  }
  std::vector<EdgeSpec> edges;
  for (auto const& [pair, m] : g.labels()) {
    if (keep[pair.first] && keep[pair.second]) {
      edges.push_back({g.name(pair.first), g.name(pair.second), m});
    }
  }
  return build_graph(std::move(vertices), edges);
}

/// Unlabelled graph with edges oriented from the lower to the higher vertex
/// index, so the boundary of edge (s,t) is t - s.
struct PlainGraph {
  std::vector<std::string> vertices;
  std::vector<VertexPair> edges;

  [[nodiscard]] std::size_t vertex_count() const noexcept {
    return vertices.size();
  }
  [[nodiscard]] std::size_t edge_count() const noexcept {
    return edges.size();
  }

  friend bool operator==(PlainGraph const&, PlainGraph const&) = default;
};

/// The odd subgraph: same vertices, edges with finite odd label >= 3.
inline PlainGraph odd_subgraph(CoxeterGraph const& g) {
  PlainGraph out;
  out.vertices = g.vertices();
  for (auto const& [pair, m] : g.labels()) {
    if (m.is_odd_edge()) {
      out.edges.push_back(pair);
    }
  }
  return out;
}

/// Picks "s<k>" for the smallest k >= size() not already a vertex name.
inline std::string fresh_vertex_name(CoxeterGraph const& g) {
  for (std::size_t k = g.size();; ++k) {
    std::string candidate = "s" + std::to_string(k);
    if (!g.has_vertex(candidate)) {
      return candidate;
    }
  }
}

/// One step of the stability family: append a vertex joined by a 3-edge to
/// the current last vertex.
inline CoxeterGraph extend_family(CoxeterGraph const& g) {
  if (g.empty()) {
    throw Error(ErrorKind::EmptyGraph, "cannot extend an empty graph");
  }
  auto vertices = g.vertices();
  auto edges = edge_specs(g);
  std::string fresh = fresh_vertex_name(g);
  edges.push_back({vertices.back(), fresh, CoxeterLabel::finite(3)});
  vertices.push_back(std::move(fresh));
  return build_graph(std::move(vertices), edges);
}

/// Same graph with the vertex sequence reordered: `order[i]` is the old index
/// of the vertex placed at position i.
inline CoxeterGraph permute_vertices(CoxeterGraph const& g,
                                     std::span<std::size_t const> order) {
  if (order.size() != g.size()) {
    throw Error(ErrorKind::LengthMismatch, "permutation has wrong length");
  }
  std::vector<std::string> vertices;
  vertices.reserve(g.size());
  for (auto i : order) {
    vertices.push_back(g.name(i));
  }
  return build_graph(std::move(vertices), edge_specs(g));
}

}  // namespace coxhom

#endif  // COXHOM_GRAPH_HPP_
