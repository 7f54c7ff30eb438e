#pragma once

#include <optional>
#include <span>

#include "cheegerlab/graph.hpp"
#include "cheegerlab/rational.hpp"
#include "cheegerlab/spectral.hpp"

namespace cheegerlab {

inline constexpr int kMaxCheegerVertices = 22;
inline constexpr int kMaxDualCheegerVertices = 13;
inline constexpr std::size_t kMaxBipartiteSubgraphEdges = 18;

/// An exact value attained on a specific edge (canonical orientation).
struct EdgeValue {
  Rational value;
  Edge witness;
};

struct CheegerValue {
  Rational value;
  VertexSubset witness;
};

struct DualCheegerValue {
  Rational value;
  VertexSubset first;
  VertexSubset second;
};

struct ConstantsRecord {
  EdgeValue q;
  EdgeValue tau;
  std::optional<CheegerValue> h;
  std::optional<DualCheegerValue> h_bar;
};

/// Q = max over edges of 1/deg v + 1/deg w. Witness is the lexicographically
/// smallest maximising edge.
EdgeValue q_constant(const Graph& g);

/// tau = max over edges, oriented so deg w >= deg v, of
/// (deg w - deg v + n) deg v / (deg v + deg w).
EdgeValue tau_constant(const Graph& g);

/// Cheeger constant min_S |E(S,S^c)| / min(vol S, vol S^c) by exhaustive
/// enumeration of the subsets containing vertex 0 (Gray-code order). The
/// witness is the minimiser with the smallest bitmask. Requires a connected
/// graph with at most kMaxCheegerVertices vertices.
CheegerValue cheeger_h(const Graph& g);

/// Dual Cheeger constant max 2|E(V1,V2)| / (vol V1 + vol V2) over disjoint
/// nonempty V1, V2 (the rest of the vertices may be left out). The factor 2
/// follows the usual literature definition, under which
/// 2 h_bar <= lambda_max <= 1 + sqrt(1 - (1 - h_bar)^2) holds. The witness is
/// the first maximiser in enumeration order, where V1 always holds the
/// smallest vertex used. At most kMaxDualCheegerVertices vertices.
DualCheegerValue dual_cheeger(const Graph& g);

/// Edge L1 quotient sum_v (1/deg v)|sum_in - sum_out| / sum_e |gamma(e)|.
/// Its maximum over gamma is Q.
double l1_edge_quotient(const OrientedGraph& og, std::span<const double> gamma);
Rational l1_edge_quotient(const OrientedGraph& og, std::span<const Rational> gamma);

/// sum_{v~w} |f(v)-f(w)| / sum_v deg v |f(v)|; its maximum is 1 on every graph.
double l1_vertex_quotient_plain(const Graph& g, std::span<const double> f);
Rational l1_vertex_quotient_plain(const Graph& g, std::span<const Rational> f);

/// sum_{v~w} |f(v)-f(w)| / min_t sum_v deg v |f(v)-t|. The denominator is
/// piecewise linear in t with breakpoints at the values of f, so the minimum
/// is taken over those values. Throws ConstantFunction for constant f.
double l1_vertex_quotient_maxt(const Graph& g, std::span<const double> f);
Rational l1_vertex_quotient_maxt(const Graph& g, std::span<const Rational> f);

/// Maximum over bipartite edge-subgraphs H of sum_v deg_H(v)/deg(v) / |E(H)|
/// by enumerating every nonempty edge subset. At most
/// kMaxBipartiteSubgraphEdges edges.
Rational q_via_bipartite_subgraphs(const Graph& g);

/// f minus its degree-weighted mean, so that sum_v deg v f(v) = 0.
VertexFunction orthogonalize_to_constants(const Graph& g, std::span<const double> f);

/// Q and tau always; h when connected with n <= kMaxCheegerVertices; h_bar
/// when n <= kMaxDualCheegerVertices.
ConstantsRecord compute_constants(const Graph& g);

}  // namespace cheegerlab
