#pragma once

#include <span>
#include <string>
#include <vector>

#include "cheegerlab/graph.hpp"
#include "cheegerlab/rational.hpp"

namespace cheegerlab {

/// A (k,d)-one-sided bipartite graph on n vertices: V2 (k vertices) is an
/// independent set joined to every vertex of V1 (n-k vertices), and every V1
/// vertex has degree d. Valid parameters satisfy n >= 3, 0 < k <= n-2 and
/// k <= d <= n-1.
struct OneSidedParams {
  int n = 0;
  int k = 0;
  int d = 0;

  /// Throws InvalidParams naming the violated constraint.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const OneSidedParams&, const OneSidedParams&) = default;
};

/// The graph exists iff d-k or n-k is even.
bool exists_one_sided(const OneSidedParams& p);

/// V1 = 0..n-k-1, V2 = n-k..n-1, V1-internal edges from the (d-k)-regular
/// circulant on n-k vertices. Throws NonExistent when the parity condition
/// fails and InvalidParams for out-of-range parameters.
Graph build_one_sided(const OneSidedParams& p);

/// Same layout with a caller-supplied (d-k)-regular graph on V1 (indices
/// 0..n-k-1). Throws InvalidParams unless `internal` is simple and
/// (d-k)-regular.
Graph build_one_sided(const OneSidedParams& p, std::span<const Edge> internal);

/// Edges of the r-regular circulant on m vertices: i ~ i+-1..i+-r/2, plus
/// i ~ i+m/2 when r is odd. Requires 0 <= r < m and r*m even
/// (ParityImpossible otherwise). r = 0 yields no edges.
std::vector<Edge> circulant_edges(int m, int r);
/// As a Graph; r >= 1.
Graph circulant_regular(int m, int r);

struct LambdaPrediction {
  enum class Kind { Exact, Interval };
  Kind kind = Kind::Exact;
  Rational value;  // when exact
  Rational lower;  // lower == upper == value when exact
  Rational upper;

  bool exact() const noexcept { return kind == Kind::Exact; }
};

/// (d+k)/d exactly when d >= n-k, otherwise the interval [(d+k)/d, n/d].
LambdaPrediction predict_lambda_max(const OneSidedParams& p);

/// 2/d when k < d < n-k, else 1/d + 1/(n-k).
Rational predict_q(const OneSidedParams& p);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Friendship graph: vertex 0 joined to both ends of m disjoint edges.
Graph petal_graph(int m);

}  // namespace cheegerlab
