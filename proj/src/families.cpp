#include "cheegerlab/families.hpp"

#include <string>

#include "cheegerlab/error.hpp"

namespace cheegerlab {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParams, what);
}

Graph join_layout(const OneSidedParams& p, std::vector<Edge> edges) {
  const int v1 = p.n - p.k;
  for (int a = 0; a < v1; ++a) {
    for (int b = v1; b < p.n; ++b) edges.push_back({a, b});
  }
  return Graph::from_edge_list(p.n, edges);
}

}  // namespace

void OneSidedParams::validate() const {
  require(n >= 3, "one-sided bipartite graphs need n >= 3, got n=" + std::to_string(n));
  require(k > 0 && k <= n - 2, "need 0 < k <= n-2, got " + this->to_string());
  require(d >= k && d <= n - 1, "need k <= d <= n-1, got " + this->to_string());
}

std::string OneSidedParams::to_string() const {
  return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",d=" + std::to_string(d) + ")";
}

bool exists_one_sided(const OneSidedParams& p) {
  p.validate();
  return (p.d - p.k) % 2 == 0 || (p.n - p.k) % 2 == 0;
}

Graph build_one_sided(const OneSidedParams& p) {
  if (!exists_one_sided(p)) {
    throw Error(ErrorCode::NonExistent, "no such graph " + p.to_string() + ": both d-k=" +
                                            std::to_string(p.d - p.k) + " and n-k=" + std::to_string(p.n - p.k) +
                                            " are odd, so no (d-k)-regular graph on n-k vertices exists");
  }
  return join_layout(p, circulant_edges(p.n - p.k, p.d - p.k));
}

Graph build_one_sided(const OneSidedParams& p, std::span<const Edge> internal) {
  p.validate();
  const int v1 = p.n - p.k;
  std::vector<int> degree(static_cast<std::size_t>(v1), 0);
  for (const Edge& e : internal) {
    require(e.u >= 0 && e.u < v1 && e.v >= 0 && e.v < v1, "internal edge outside V1");
    ++degree[e.u];
    ++degree[e.v];
  }
  for (int v = 0; v < v1; ++v) {
    require(degree[v] == p.d - p.k, "internal graph is not " + std::to_string(p.d - p.k) + "-regular at vertex " +
                                        std::to_string(v));
  }
  // Loops and repeated edges are rejected by Graph validation.
  return join_layout(p, {internal.begin(), internal.end()});
}

std::vector<Edge> circulant_edges(int m, int r) {
  require(m >= 1 && r >= 0 && r < m, "circulant needs 0 <= r < m, got m=" + std::to_string(m) +
                                         ", r=" + std::to_string(r));
  if (r % 2 == 1 && m % 2 == 1) {
    throw Error(ErrorCode::ParityImpossible, "no " + std::to_string(r) + "-regular graph on " + std::to_string(m) +
                                                 " vertices: both are odd");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= r / 2; ++j) {
      const int w = (i + j) % m;
      edges.push_back(i < w ? Edge{i, w} : Edge{w, i});
    }
    if (r % 2 == 1 && i < m / 2) edges.push_back({i, i + m / 2});
  }
  return edges;
}

Graph circulant_regular(int m, int r) {
  require(r >= 1, "a 0-regular circulant has isolated vertices");
  return Graph::from_edge_list(m, circulant_edges(m, r));
}

LambdaPrediction predict_lambda_max(const OneSidedParams& p) {
  p.validate();
  const Rational low(p.d + p.k, p.d);
  if (p.d >= p.n - p.k) return {LambdaPrediction::Kind::Exact, low, low, low};
  return {LambdaPrediction::Kind::Interval, Rational{}, low, Rational(p.n, p.d)};
}

Rational predict_q(const OneSidedParams& p) {
  p.validate();
  // Internal edges exist only when d > k; they dominate when d < n - k.
  if (p.d == p.k || p.d >= p.n - p.k) return Rational(1, p.d) + Rational(1, p.n - p.k);
  return Rational(2, p.d);
}

Graph complete_graph(int n) {
  require(n >= 2, "complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs both sides nonempty");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  }
  return Graph::from_edge_list(a + b, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
  require(n >= 2, "path needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edge_list(n, edges);
}

Graph petal_graph(int m) {
  require(m >= 1, "petal graph needs at least one petal");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const int a = 2 * i + 1;
    edges.push_back({0, a});
    edges.push_back({0, a + 1});
    edges.push_back({a, a + 1});
  }
  return Graph::from_edge_list(2 * m + 1, edges);
}

}  // namespace cheegerlab
