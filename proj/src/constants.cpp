#include "cheegerlab/constants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cheegerlab/error.hpp"

namespace cheegerlab {
namespace {

using std::abs;

void check_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(got) + ", expected " + std::to_string(want));
  }
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    masks[e.u] |= std::uint64_t{1} << e.v;
    masks[e.v] |= std::uint64_t{1} << e.u;
  }
  return masks;
}

template <class Scalar>
Scalar edge_quotient_impl(const OrientedGraph& og, std::span<const Scalar> gamma) {
  check_length(gamma.size(), og.edge_count(), "edge function");
  const Graph& g = og.base();
  std::vector<Scalar> div(static_cast<std::size_t>(g.vertex_count()), Scalar{0});
  Scalar den{0};
  for (std::size_t j = 0; j < og.edge_count(); ++j) {
    div[og.edges()[j].u] += gamma[j];
    div[og.edges()[j].v] -= gamma[j];
    den += abs(gamma[j]);
  }
  if (den == Scalar{0}) throw Error(ErrorCode::ZeroFunction, "edge function is identically zero");
  Scalar num{0};
  for (int v = 0; v < g.vertex_count(); ++v) num += abs(div[v]) / Scalar(g.degree(v));
  return num / den;
}

template <class Scalar>
Scalar edge_variation(const Graph& g, std::span<const Scalar> f) {
  Scalar num{0};
  for (const Edge& e : g.edges()) num += abs(f[e.u] - f[e.v]);
  return num;
}

template <class Scalar>
Scalar plain_quotient_impl(const Graph& g, std::span<const Scalar> f) {
  check_length(f.size(), static_cast<std::size_t>(g.vertex_count()), "vertex function");
  Scalar den{0};
  for (int v = 0; v < g.vertex_count(); ++v) den += Scalar(g.degree(v)) * abs(f[v]);
  if (den == Scalar{0}) throw Error(ErrorCode::ZeroFunction, "vertex function is identically zero");
  return edge_variation(g, f) / den;
}

template <class Scalar>
Scalar maxt_quotient_impl(const Graph& g, std::span<const Scalar> f) {
  check_length(f.size(), static_cast<std::size_t>(g.vertex_count()), "vertex function");
  std::vector<Scalar> levels(f.begin(), f.end());
  std::ranges::sort(levels);
  auto tail = std::ranges::unique(levels);
  levels.erase(tail.begin(), tail.end());
  if (levels.size() < 2) throw Error(ErrorCode::ConstantFunction, "vertex function is constant");

  Scalar best_den{0};
  bool first = true;
  for (const Scalar& t : levels) {
    Scalar den{0};
    for (int v = 0; v < g.vertex_count(); ++v) den += Scalar(g.degree(v)) * abs(f[v] - t);
    if (first || den < best_den) best_den = den;
    first = false;
  }
  return edge_variation(g, f) / best_den;
}

// Union-find with parity, used to test whether an edge subset is bipartite.
class ParityForest {
 public:
  explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0) { reset(); }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::ranges::fill(parity_, 0);
  }

  // Returns false when joining u and v with odd parity closes an odd cycle.
  bool join_odd(int u, int v) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) return pu != pv;
    parent_[ru] = rv;
    parity_[ru] = static_cast<unsigned char>(pu ^ pv ^ 1);
    return true;
  }

 private:
  std::pair<int, int> find(int v) {
    int p = 0;
    while (parent_[v] != v) {
      p ^= parity_[v];
      v = parent_[v];
    }
    return {v, p};
  }

  std::vector<int> parent_;
  std::vector<unsigned char> parity_;
};

}  // namespace

EdgeValue q_constant(const Graph& g) {
  EdgeValue best{Rational{-1}, {}};
  for (const Edge& e : g.edges()) {
    Rational value = Rational(1, g.degree(e.u)) + Rational(1, g.degree(e.v));
    if (value > best.value) best = {value, e};
  }
  return best;
}

EdgeValue tau_constant(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  EdgeValue best{Rational{-1}, {}};
  for (const Edge& e : g.edges()) {
    std::int64_t lo = g.degree(e.u);
    std::int64_t hi = g.degree(e.v);
    if (lo > hi) std::swap(lo, hi);
    Rational value((hi - lo + n) * lo, lo + hi);
    if (value > best.value) best = {value, e};
  }
  return best;
}

CheegerValue cheeger_h(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCheegerVertices) {
    throw Error(ErrorCode::TooLarge, "Cheeger enumeration limited to " + std::to_string(kMaxCheegerVertices) +
                                         " vertices, got " + std::to_string(n));
  }
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "Cheeger constant needs a connected graph");

  const auto adj = adjacency_masks(g);
  const std::int64_t total_vol = g.total_volume();
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::uint64_t mask = 1;
  std::int64_t cut = g.degree(0);
  std::int64_t vol = g.degree(0);
  std::int64_t best_cut = 0;
  std::int64_t best_den = 0;
  std::uint64_t best_mask = 0;

  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 0; i < steps; ++i) {
    if (i > 0) {
      const int v = std::countr_zero(i) + 1;
      const std::uint64_t bit = std::uint64_t{1} << v;
      const int inside = std::popcount(adj[v] & mask);
      if (mask & bit) {
        mask &= ~bit;
        cut += 2 * inside - g.degree(v);
        vol -= g.degree(v);
      } else {
        mask |= bit;
        cut += g.degree(v) - 2 * inside;
        vol += g.degree(v);
      }
    }
    if (mask == full) continue;
    const std::int64_t den = std::min(vol, total_vol - vol);
    if (best_den == 0) {
      best_cut = cut;
      best_den = den;
      best_mask = mask;
      continue;
    }
    const __int128 lhs = static_cast<__int128>(cut) * best_den;
    const __int128 rhs = static_cast<__int128>(best_cut) * den;
    if (lhs < rhs || (lhs == rhs && mask < best_mask)) {
      best_cut = cut;
      best_den = den;
      best_mask = mask;
    }
  }
  if (best_den == 0) throw Error(ErrorCode::InvalidParams, "Cheeger constant needs at least two vertices");
  return {Rational(best_cut, best_den), VertexSubset::from_mask(best_mask, n)};
}

DualCheegerValue dual_cheeger(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxDualCheegerVertices) {
    throw Error(ErrorCode::TooLarge, "dual Cheeger enumeration limited to " +
                                         std::to_string(kMaxDualCheegerVertices) + " vertices, got " +
                                         std::to_string(n));
  }
  const auto adj = adjacency_masks(g);

  std::int64_t best_num = -1;  // 2|E(V1,V2)|
  std::int64_t best_den = 1;   // vol V1 + vol V2
  std::uint64_t best_first = 0;
  std::uint64_t best_second = 0;

  auto visit = [&](auto&& self, int i, std::uint64_t first, std::uint64_t second, std::int64_t cut,
                   std::int64_t vol) -> void {
    if (i == n) {
      if (first == 0 || second == 0) return;
      const __int128 lhs = static_cast<__int128>(2 * cut) * best_den;
      const __int128 rhs = static_cast<__int128>(best_num) * vol;
      if (best_num < 0 || lhs > rhs) {
        best_num = 2 * cut;
        best_den = vol;
        best_first = first;
        best_second = second;
      }
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << i;
    const int deg = g.degree(i);
    self(self, i + 1, first | bit, second, cut + std::popcount(adj[i] & second), vol + deg);
    if (first != 0) self(self, i + 1, first, second | bit, cut + std::popcount(adj[i] & first), vol + deg);
    self(self, i + 1, first, second, cut, vol);
  };
  visit(visit, 0, 0, 0, 0, 0);

  if (best_num < 0) throw Error(ErrorCode::InvalidParams, "dual Cheeger constant needs at least two vertices");
  return {Rational(best_num, best_den), VertexSubset::from_mask(best_first, n),
          VertexSubset::from_mask(best_second, n)};
}

double l1_edge_quotient(const OrientedGraph& og, std::span<const double> gamma) {
  return edge_quotient_impl(og, gamma);
}
Rational l1_edge_quotient(const OrientedGraph& og, std::span<const Rational> gamma) {
  return edge_quotient_impl(og, gamma);
}

double l1_vertex_quotient_plain(const Graph& g, std::span<const double> f) { return plain_quotient_impl(g, f); }
Rational l1_vertex_quotient_plain(const Graph& g, std::span<const Rational> f) { return plain_quotient_impl(g, f); }

double l1_vertex_quotient_maxt(const Graph& g, std::span<const double> f) { return maxt_quotient_impl(g, f); }
Rational l1_vertex_quotient_maxt(const Graph& g, std::span<const Rational> f) { return maxt_quotient_impl(g, f); }

Rational q_via_bipartite_subgraphs(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m > kMaxBipartiteSubgraphEdges) {
    throw Error(ErrorCode::TooLarge, "bipartite subgraph enumeration limited to " +
                                         std::to_string(kMaxBipartiteSubgraphEdges) + " edges, got " +
                                         std::to_string(m));
  }
  // Scale every 1/deg by the lcm of the degrees so edge weights are integers.
  std::int64_t scale = 1;
  for (int v = 0; v < g.vertex_count(); ++v) scale = std::lcm(scale, static_cast<std::int64_t>(g.degree(v)));
  std::vector<std::int64_t> weight(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Edge& e = g.edges()[j];
    weight[j] = scale / g.degree(e.u) + scale / g.degree(e.v);
  }

  ParityForest forest(static_cast<std::size_t>(g.vertex_count()));
  std::int64_t best_sum = 0;
  std::int64_t best_count = 1;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
    forest.reset();
    std::int64_t sum = 0;
    std::int64_t count = 0;
    bool bipartite = true;
    for (std::size_t j = 0; j < m && bipartite; ++j) {
      if (!(subset >> j & 1U)) continue;
      bipartite = forest.join_odd(g.edges()[j].u, g.edges()[j].v);
      sum += weight[j];
      ++count;
    }
    if (!bipartite) continue;
    if (static_cast<__int128>(sum) * best_count > static_cast<__int128>(best_sum) * count) {
      best_sum = sum;
      best_count = count;
    }
  }
  return Rational(best_sum, scale * best_count);
}

VertexFunction orthogonalize_to_constants(const Graph& g, std::span<const double> f) {
  check_length(f.size(), static_cast<std::size_t>(g.vertex_count()), "vertex function");
  double weighted = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) weighted += g.degree(v) * f[v];
  const double mean = weighted / static_cast<double>(g.total_volume());
  VertexFunction out(f.begin(), f.end());
  for (double& x : out) x -= mean;
  return out;
}

ConstantsRecord compute_constants(const Graph& g) {
  ConstantsRecord rec{q_constant(g), tau_constant(g), std::nullopt, std::nullopt};
  if (g.vertex_count() <= kMaxCheegerVertices && is_connected(g)) rec.h = cheeger_h(g);
  if (g.vertex_count() <= kMaxDualCheegerVertices) rec.h_bar = dual_cheeger(g);
  return rec;
}

}  // namespace cheegerlab
