#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cheegerlab/constants.hpp"
#include "cheegerlab/error.hpp"
#include "cheegerlab/families.hpp"
#include "cheegerlab/harness.hpp"
#include "cheegerlab/random.hpp"
#include "doctest.h"

using namespace cheegerlab;

namespace {

// Naive oracles: enumerate every subset / assignment without any of the
// incremental tricks used by the library.
Rational naive_h(const Graph& g) {
  const int n = g.vertex_count();
  std::optional<Rational> best;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::int64_t cut = 0, vs = 0, vc = 0;
    for (int v = 0; v < n; ++v) (mask >> v & 1 ? vs : vc) += g.degree(v);
    for (const Edge& e : g.edges()) cut += ((mask >> e.u) & 1) != ((mask >> e.v) & 1);
    const Rational r(cut, std::min(vs, vc));
    if (!best || r < *best) best = r;
  }
  return *best;
}

Rational naive_h_bar(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, 0);
  Rational best(0);
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int v = 0; v < n; ++v, c /= 3) label[v] = c % 3;
    std::int64_t vol = 0, cut = 0;
    for (int v = 0; v < n; ++v) vol += label[v] < 2 ? g.degree(v) : 0;
    if (vol == 0) continue;
    bool has1 = false, has2 = false;
    for (int v = 0; v < n; ++v) has1 |= label[v] == 0, has2 |= label[v] == 1;
    if (!has1 || !has2) continue;
    for (const Edge& e : g.edges()) cut += (label[e.u] == 0 && label[e.v] == 1) || (label[e.u] == 1 && label[e.v] == 0);
    best = std::max(best, Rational(2 * cut, vol));
  }
  return best;
}

Rational naive_q(const Graph& g) {
  Rational best(0);
  for (const Edge& e : g.edges()) best = std::max(best, Rational(1, g.degree(e.u)) + Rational(1, g.degree(e.v)));
  return best;
}

Rational naive_tau(const Graph& g) {
  const int n = g.vertex_count();
  Rational best(0);
  for (const Edge& e : g.edges()) {
    int a = g.degree(e.u), b = g.degree(e.v);
    if (a > b) std::swap(a, b);
    best = std::max(best, Rational(std::int64_t(b - a + n) * a, a + b));
  }
  return best;
}

}  // namespace

TEST_CASE("Q and tau on small named graphs") {
  CHECK(q_constant(complete_graph(2)).value == Rational(2));
  CHECK(q_constant(complete_graph(5)).value == Rational(1, 2));
  CHECK(tau_constant(complete_graph(5)).value == Rational(5, 2));
  CHECK(q_constant(complete_bipartite(2, 3)).value == Rational(5, 6));
  const auto star = q_constant(complete_bipartite(1, 4));
  CHECK(star.value == Rational(5, 4));
  CHECK(star.witness == Edge{0, 1});
}

TEST_CASE("constants match naive oracles on random graphs") {
  for (std::uint64_t s = 0; s < 80; ++s) {
    const int n = 3 + int(s % 9);
    const Graph g = random_connected_graph(n, 0.45, 500 + s);
    CHECK(q_constant(g).value == naive_q(g));
    CHECK(tau_constant(g).value == naive_tau(g));
    const auto h = cheeger_h(g);
    CHECK(h.value == naive_h(g));
    const auto s1 = h.witness;
    CHECK(Rational(cut_size(g, s1, s1.complement(g)), std::min(volume(g, s1), volume(g, s1.complement(g)))) ==
          h.value);
    if (n <= 9) {
      const auto hb = dual_cheeger(g);
      CHECK(hb.value == naive_h_bar(g));
      CHECK(Rational(2 * cut_size(g, hb.first, hb.second), volume(g, hb.first) + volume(g, hb.second)) == hb.value);
    }
  }
}

TEST_CASE("dual Cheeger is 1 exactly on bipartite graphs") {
  CHECK(dual_cheeger(cycle_graph(6)).value == Rational(1));
  CHECK(dual_cheeger(complete_bipartite(3, 4)).value == Rational(1));
  CHECK(dual_cheeger(cycle_graph(5)).value < Rational(1));
}

TEST_CASE("Cheeger preconditions") {
  const Graph two = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(cheeger_h(two), Error);
  CHECK_THROWS_AS(cheeger_h(cycle_graph(23)), Error);
  CHECK_THROWS_AS(dual_cheeger(cycle_graph(14)), Error);
}

TEST_CASE("edge L1 quotient is bounded by Q and attained on a single edge") {
  Rng rng(7);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_connected_graph(4 + int(s % 8), 0.5, 900 + s);
    const OrientedGraph og(g);
    const Rational q = q_constant(g).value;
    std::vector<double> gamma(og.edge_count());
    for (int t = 0; t < 200; ++t) {
      for (double& x : gamma) x = rng.uniform(-1, 1);
      CHECK(l1_edge_quotient(og, gamma) <= q.to_double() + 1e-9);
    }
    const Edge w = q_constant(g).witness;
    std::vector<Rational> indicator(og.edge_count(), Rational(0));
    for (std::size_t i = 0; i < og.edge_count(); ++i) {
      const Edge e = og.edges()[i];
      if (std::min(e.u, e.v) == w.u && std::max(e.u, e.v) == w.v) indicator[i] = Rational(1);
    }
    CHECK(l1_edge_quotient(og, indicator) == q);
  }
}

TEST_CASE("bipartite-subgraph characterization agrees with Q") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    Graph g = random_connected_graph(4 + int(s % 5), 0.5, 1300 + s);
    if (g.edge_count() > 14) continue;
    CHECK(q_via_bipartite_subgraphs(g) == q_constant(g).value);
  }
  CHECK_THROWS_AS(q_via_bipartite_subgraphs(complete_graph(7)), Error);
}

TEST_CASE("vertex L1 quotients") {
  const Graph g = petal_graph(2);
  Rng rng(3);
  std::vector<double> f(g.vertex_count());
  for (int t = 0; t < 500; ++t) {
    for (double& x : f) x = rng.uniform(-2, 2);
    CHECK(l1_vertex_quotient_plain(g, f) <= 1 + 1e-9);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<Rational> ind(g.vertex_count(), Rational(0));
    ind[v] = Rational(1);
    CHECK(l1_vertex_quotient_plain(g, ind) == Rational(1));
  }
  const std::vector<double> constant(g.vertex_count(), 2.0);
  CHECK_THROWS_AS(l1_vertex_quotient_maxt(g, constant), Error);
}

TEST_CASE("max-t quotient of the Cheeger witness equals h") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_connected_graph(5 + int(s % 6), 0.5, 1700 + s);
    const auto h = cheeger_h(g);
    std::vector<Rational> ind(g.vertex_count(), Rational(0));
    for (int v : h.witness.members()) ind[v] = Rational(1);
    CHECK(l1_vertex_quotient_maxt(g, ind) == h.value);
  }
}

TEST_CASE("orthogonalization removes the degree-weighted mean") {
  const Graph g = complete_bipartite(1, 3);
  const std::vector<double> f{1, 2, 3, 4};
  const auto h = orthogonalize_to_constants(g, f);
  double s = 0;
  for (int v = 0; v < 4; ++v) s += g.degree(v) * h[v];
  CHECK(std::abs(s) < 1e-12);
}
