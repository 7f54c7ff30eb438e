#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "cheegerlab/error.hpp"
#include "cheegerlab/families.hpp"
#include "cheegerlab/harness.hpp"
#include "cheegerlab/random.hpp"
#include "cheegerlab/spectral.hpp"
#include "doctest.h"

using namespace cheegerlab;

namespace {

// Eigenvalues of I - D^{-1/2} A D^{-1/2} from Eigen's own solver.
Eigen::VectorXd oracle_vertex_eigenvalues(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (const Edge& e : g.edges()) {
    const double w = 1.0 / std::sqrt(double(g.degree(e.u)) * g.degree(e.v));
    m(e.u, e.v) -= w;
    m(e.v, e.u) -= w;
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

}  // namespace

TEST_CASE("vertex spectrum matches Eigen on random graphs") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 3 + int(s % 12);
    const Graph g = random_connected_graph(n, 0.5, s);
    const Spectrum sp = vertex_spectrum(g);
    const Eigen::VectorXd ref = oracle_vertex_eigenvalues(g);
    REQUIRE(sp.size() == std::size_t(n));
    for (int i = 0; i < n; ++i) CHECK(std::abs(sp.eigenvalues[i] - ref[i]) < 1e-10);
    CHECK(sp.residual_bound < 1e-10);
  }
}

TEST_CASE("eigenvectors solve L f = lambda f and are D-orthonormal") {
  const Graph g = random_connected_graph(9, 0.4, 17);
  const Spectrum sp = vertex_spectrum(g);
  const Matrix l = normalized_laplacian(g);
  for (std::size_t k = 0; k < sp.size(); ++k) {
    const auto f = sp.eigenvector(k);
    for (int i = 0; i < g.vertex_count(); ++i) {
      double lf = 0;
      for (int j = 0; j < g.vertex_count(); ++j) lf += l(i, j) * f[j];
      CHECK(std::abs(lf - sp.eigenvalues[k] * f[i]) < 1e-9);
    }
    CHECK(rayleigh_vertex(g, f) == doctest::Approx(sp.eigenvalues[k]).epsilon(1e-9));
    for (std::size_t m = 0; m < sp.size(); ++m) {
      const auto h = sp.eigenvector(m);
      double ip = 0;
      for (int i = 0; i < g.vertex_count(); ++i) ip += g.degree(i) * f[i] * h[i];
      CHECK(std::abs(ip - (k == m ? 1.0 : 0.0)) < 1e-9);
    }
  }
}

TEST_CASE("known spectra") {
  const Spectrum k5 = vertex_spectrum(complete_graph(5));
  CHECK(k5.min() == doctest::Approx(0).epsilon(1e-12));
  CHECK(k5.max() == doctest::Approx(1.25));
  const Spectrum c6 = vertex_spectrum(cycle_graph(6));
  // 1 - cos(2 pi j / 6)
  std::vector<double> expect{0, 0.5, 0.5, 1.5, 1.5, 2};
  for (int i = 0; i < 6; ++i) CHECK(c6.eigenvalues[i] == doctest::Approx(expect[i]));
}

TEST_CASE("edge Laplacian shares the nonzero spectrum") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = random_connected_graph(4 + int(s % 9), 0.6, 100 + s);
    const OrientedGraph og(g);
    const Spectrum v = vertex_spectrum(g);
    const Spectrum e = edge_spectrum(og);
    const auto a = nonzero_eigenvalues(v);
    const auto b = nonzero_eigenvalues(e);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8);
    CHECK(zero_multiplicity(e) == g.edge_count() - g.vertex_count() + 1);
  }
}

TEST_CASE("edge spectrum does not depend on orientation") {
  const Graph g = petal_graph(2);
  const OrientedGraph a(g);
  const std::vector<std::size_t> flip{0, 2, 3};
  const OrientedGraph b = a.with_reversed(flip);
  const Spectrum sa = edge_spectrum(a), sb = edge_spectrum(b);
  for (std::size_t i = 0; i < sa.size(); ++i) CHECK(sa.eigenvalues[i] == doctest::Approx(sb.eigenvalues[i]));
}

TEST_CASE("incidence matrix sign convention") {
  const OrientedGraph og(complete_graph(2));
  const Matrix i = incidence_matrix(og);
  CHECK(i(0, 0) == 1.0);
  CHECK(i(1, 0) == -1.0);
}

TEST_CASE("rayleigh quotients reject bad input") {
  const Graph g = complete_graph(3);
  const std::vector<double> zero(3, 0.0), short_f(2, 1.0);
  CHECK_THROWS_AS(rayleigh_vertex(g, zero), Error);
  CHECK_THROWS_AS(rayleigh_vertex(g, short_f), Error);
  const std::vector<double> gamma{1.0, -1.0, 0.5};
  const OrientedGraph og(g);
  const Spectrum e = edge_spectrum(og);
  const double r = rayleigh_edge(og, gamma);
  CHECK(r >= e.min() - 1e-12);
  CHECK(r <= e.max() + 1e-12);
}

TEST_CASE("generic Jacobi solver") {
  SymmetricMatrix m(3);
  m.set(0, 0, 2);
  m.set(1, 1, 2);
  m.set(2, 2, 2);
  m.set(0, 1, 1);
  const Spectrum s = spectrum(m);
  CHECK(s.eigenvalues[0] == doctest::Approx(1));
  CHECK(s.eigenvalues[1] == doctest::Approx(2));
  CHECK(s.eigenvalues[2] == doctest::Approx(3));
}
