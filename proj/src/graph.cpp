#include "cheegerlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "cheegerlab/error.hpp"

namespace cheegerlab {
namespace {

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

struct NeighborListHash {
  std::size_t operator()(std::span<const int> list) const noexcept {
    // FNV-1a over the vertex indices.
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : list) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct NeighborListEqual {
  bool operator()(std::span<const int> a, std::span<const int> b) const noexcept {
    return std::ranges::equal(a, b);
  }
};

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n <= 0) throw Error(ErrorCode::InvalidParams, "vertex count must be positive, got " + std::to_string(n));

  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge " + edge_text(e) + " outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw Error(ErrorCode::LoopEdge, "vertex " + std::to_string(e.u));
    canonical.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::ranges::sort(canonical);
  if (auto dup = std::ranges::adjacent_find(canonical); dup != canonical.end()) {
    throw Error(ErrorCode::DuplicateEdge, "edge " + edge_text(*dup));
  }

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : canonical) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    if (adj[v].empty()) throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v));
    std::ranges::sort(adj[v]);
  }
  return Graph(std::move(adj), std::move(canonical));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " outside 0.." +
                                                std::to_string(vertex_count() - 1));
  }
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::adjacent(int v, int w) const {
  check_vertex(v);
  check_vertex(w);
  return std::ranges::binary_search(adj_[v], w);
}

VertexSubset VertexSubset::of(const Graph& g, std::vector<int> members) {
  for (int v : members) {
    if (v < 0 || v >= g.vertex_count()) {
      throw Error(ErrorCode::IndexOutOfRange, "subset member " + std::to_string(v));
    }
  }
  std::ranges::sort(members);
  auto tail = std::ranges::unique(members);
  members.erase(tail.begin(), tail.end());
  return VertexSubset(std::move(members));
}

VertexSubset VertexSubset::from_mask(std::uint64_t mask, int n) {
  std::vector<int> members;
  for (int v = 0; v < n && v < 64; ++v) {
    if (mask >> v & 1U) members.push_back(v);
  }
  return VertexSubset(std::move(members));
}

bool VertexSubset::contains(int v) const { return std::ranges::binary_search(members_, v); }

VertexSubset VertexSubset::complement(const Graph& g) const {
  std::vector<int> rest;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!contains(v)) rest.push_back(v);
  }
  return VertexSubset(std::move(rest));
}

std::int64_t volume(const Graph& g, const VertexSubset& s) {
  std::int64_t vol = 0;
  for (int v : s.members()) vol += g.degree(v);
  return vol;
}

std::int64_t cut_size(const Graph& g, const VertexSubset& s, const VertexSubset& t) {
  std::vector<signed char> side(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s.members()) side.at(v) = 1;
  for (int v : t.members()) {
    if (side.at(v) == 1) throw Error(ErrorCode::OverlappingSets, "vertex " + std::to_string(v) + " in both sets");
    side[v] = 2;
  }
  std::int64_t cut = 0;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != 0 && side[e.v] != 0 && side[e.u] != side[e.v]) ++cut;
  }
  return cut;
}

std::vector<int> component_labels(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    if (label[root] != -1) continue;
    label[root] = next;
    queue.push_back(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (label[w] == -1) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::ranges::max_element(labels) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

int common_neighbors(const Graph& g, int v, int w) {
  auto nv = g.neighbors(v);
  auto nw = g.neighbors(w);
  if (v == w) throw Error(ErrorCode::InvalidParams, "common_neighbors needs two distinct vertices");
  int count = 0;
  auto a = nv.begin();
  auto b = nw.begin();
  while (a != nv.end() && b != nw.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

std::vector<std::vector<int>> duplicate_classes(const Graph& g) {
  std::unordered_map<std::span<const int>, std::size_t, NeighborListHash, NeighborListEqual> index;
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = index.try_emplace(g.neighbors(v), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

}  // namespace cheegerlab
