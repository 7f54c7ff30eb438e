#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cheegerlab {

/// A vertex pair. For undirected use the canonical form has u < v; in an
/// OrientedGraph, u is the input and v the output of the edge.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Real value per vertex; length must equal the vertex count.
using VertexFunction = std::vector<double>;

/// Simple undirected graph on dense vertex indices 0..n-1.
///
/// Construction validates eagerly: no loops, no multi-edges, no isolated
/// vertices, all indices in range. Neighbour lists are strictly sorted and
/// symmetric. Immutable once built.
class Graph {
 public:
  /// Throws Error with LoopEdge, DuplicateEdge, IsolatedVertex or
  /// IndexOutOfRange naming the offending vertex or edge.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  int degree(int v) const;
  std::span<const int> neighbors(int v) const;
  bool adjacent(int v, int w) const;

  /// Canonical edges (u < v) in lexicographic order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// vol(V) = 2|E|.
  std::int64_t total_volume() const noexcept { return 2 * static_cast<std::int64_t>(edges_.size()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  Graph(std::vector<std::vector<int>> adj, std::vector<Edge> edges)
      : adj_(std::move(adj)), edges_(std::move(edges)) {}

  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSubset {
 public:
  VertexSubset() = default;

  /// Validates membership against g (IndexOutOfRange) and removes repeats.
  static VertexSubset of(const Graph& g, std::vector<int> members);
  /// Bit i of mask selects vertex i; n <= 64.
  static VertexSubset from_mask(std::uint64_t mask, int n);

  std::span<const int> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(int v) const;

  VertexSubset complement(const Graph& g) const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  explicit VertexSubset(std::vector<int> sorted) : members_(std::move(sorted)) {}

  std::vector<int> members_;
};

std::int64_t volume(const Graph& g, const VertexSubset& s);

/// Edges with one endpoint in s and the other in t. Throws OverlappingSets
/// when s and t share a vertex.
std::int64_t cut_size(const Graph& g, const VertexSubset& s, const VertexSubset& t);

/// Component label per vertex, labels numbered by smallest member.
std::vector<int> component_labels(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Two-colouring (0/1 per vertex) when one exists.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// |N(v) ∩ N(w)| for v != w.
int common_neighbors(const Graph& g, int v, int w);

/// Classes of vertices with identical neighbourhoods, singletons included.
/// Each class is sorted; classes are ordered by their smallest member.
std::vector<std::vector<int>> duplicate_classes(const Graph& g);

}  // namespace cheegerlab
