#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cheegerlab/graph.hpp"

namespace cheegerlab {

/// Real value per oriented edge; length must equal the edge count.
using EdgeFunction = std::vector<double>;

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<double> column(std::size_t j) const;
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Square matrix whose (i,j) and (j,i) entries are always stored equal.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dimension) : dim_(dimension), data_(dimension * dimension, 0.0) {}

  std::size_t dimension() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  /// Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double value) {
    data_[i * dim_ + j] = value;
    data_[j * dim_ + i] = value;
  }
  void add(std::size_t i, std::size_t j, double delta) { set(i, j, (*this)(i, j) + delta); }

  std::span<const double> entries() const noexcept { return data_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Eigen-decomposition with an a-posteriori residual certificate.
///
/// eigenvalues ascend; eigenvectors holds one vector per column, in the same
/// order. residual_bound is max_i ||M v_i - lambda_i v_i||_2 recomputed after
/// the solver finished.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
  double residual_bound = 0.0;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  std::vector<double> eigenvector(std::size_t i) const { return eigenvectors.column(i); }
};

inline constexpr double kDefaultSpectrumTolerance = 1e-10;
inline constexpr double kZeroEigenvalueThreshold = 1e-8;

/// Orientation of every edge of a graph. Edge::u is the input, Edge::v the
/// output. The default orientation points from the smaller index to the
/// larger one.
class OrientedGraph {
 public:
  explicit OrientedGraph(Graph base);
  /// edges must list every undirected edge of base exactly once, in any
  /// direction and order (InvalidParams otherwise).
  OrientedGraph(Graph base, std::vector<Edge> edges);

  const Graph& base() const noexcept { return base_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Copy with the listed edges (by position) flipped.
  OrientedGraph with_reversed(std::span<const std::size_t> positions) const;

 private:
  Graph base_;
  std::vector<Edge> edges_;
};

/// Dense-solver guards: 2048 vertices and 4096 edges by default. Setting
/// CHEEGERLAB_MAX_N raises the vertex limit (and the edge limit to twice it).
std::size_t max_dense_vertices();
std::size_t max_dense_edges();

/// L = Id - D^{-1} A (not symmetric).
Matrix normalized_laplacian(const Graph& g);
/// Id - D^{-1/2} A D^{-1/2}, similar to L.
SymmetricMatrix symmetric_laplacian(const Graph& g);
/// |V| x |E|; +1 at each edge's input, -1 at its output.
Matrix incidence_matrix(const OrientedGraph& og);
/// I^T D^{-1} I on edge functions.
SymmetricMatrix edge_laplacian(const OrientedGraph& og);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// 1e-12, then the residual certificate is computed. Throws
/// ConvergenceFailure if the sweep limit is hit or the residual exceeds tol.
Spectrum spectrum(const SymmetricMatrix& m, double tol = kDefaultSpectrumTolerance);

/// Spectrum of L computed through its symmetric conjugate. Eigenfunctions are
/// f = D^{-1/2} g and are orthonormal for (f,h) = sum_v deg v f(v) h(v).
/// residual_bound covers both the symmetric solve and ||L f - lambda f||_2.
Spectrum vertex_spectrum(const Graph& g, double tol = kDefaultSpectrumTolerance);
Spectrum edge_spectrum(const OrientedGraph& og, double tol = kDefaultSpectrumTolerance);

/// Number of eigenvalues below threshold in absolute value.
std::size_t zero_multiplicity(const Spectrum& s, double threshold = kZeroEigenvalueThreshold);
std::vector<double> nonzero_eigenvalues(const Spectrum& s, double threshold = kZeroEigenvalueThreshold);

/// sum_{v~w} (f(v)-f(w))^2 / sum_v deg v f(v)^2.
double rayleigh_vertex(const Graph& g, std::span<const double> f);
/// sum_v (1/deg v)(sum_in gamma - sum_out gamma)^2 / sum_e gamma(e)^2.
double rayleigh_edge(const OrientedGraph& og, std::span<const double> gamma);

}  // namespace cheegerlab
