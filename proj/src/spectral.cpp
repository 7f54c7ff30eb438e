#include "cheegerlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "cheegerlab/error.hpp"

namespace cheegerlab {
namespace {

constexpr double kOffDiagonalTarget = 1e-12;
constexpr int kMaxSweeps = 100;

void check_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(got) + ", expected " + std::to_string(want));
  }
}

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  }
  return std::sqrt(2.0 * sum);
}

// Cyclic Jacobi on a full symmetric copy. Returns unsorted diagonal and the
// accumulated rotation matrix (columns are eigenvectors).
void jacobi_diagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& v) {
  v.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  int sweep = 0;
  while (off_diagonal_norm(a, n) > kOffDiagonalTarget) {
    if (++sweep > kMaxSweeps) {
      throw Error(ErrorCode::ConvergenceFailure, "Jacobi did not converge after " + std::to_string(kMaxSweeps) +
                                                     " sweeps (dimension " + std::to_string(n) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];

        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          const double new_kp = c * akp - s * akq;
          const double new_kq = s * akp + c * akq;
          a[k * n + p] = a[p * n + k] = new_kp;
          a[k * n + q] = a[q * n + k] = new_kq;
        }
        a[p * n + p] = c * c * app - 2.0 * c * s * apq + s * s * aqq;
        a[q * n + q] = s * s * app + 2.0 * c * s * apq + c * c * aqq;
        a[p * n + q] = a[q * n + p] = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }
}

double vector_norm(std::span<const double> x) {
  double s = 0.0;
  for (double e : x) s += e * e;
  return std::sqrt(s);
}

std::size_t env_limit(std::size_t fallback) {
  if (const char* raw = std::getenv("CHEEGERLAB_MAX_N")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return fallback;
}

}  // namespace

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

OrientedGraph::OrientedGraph(Graph base) : base_(std::move(base)) {
  edges_.assign(base_.edges().begin(), base_.edges().end());
}

OrientedGraph::OrientedGraph(Graph base, std::vector<Edge> edges) : base_(std::move(base)), edges_(std::move(edges)) {
  std::vector<Edge> canonical;
  canonical.reserve(edges_.size());
  for (const Edge& e : edges_) canonical.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  std::ranges::sort(canonical);
  if (!std::ranges::equal(canonical, base_.edges())) {
    throw Error(ErrorCode::InvalidParams, "orientation does not list each edge of the graph exactly once");
  }
}

OrientedGraph OrientedGraph::with_reversed(std::span<const std::size_t> positions) const {
  std::vector<Edge> flipped = edges_;
  for (std::size_t i : positions) {
    if (i >= flipped.size()) throw Error(ErrorCode::IndexOutOfRange, "edge position " + std::to_string(i));
    std::swap(flipped[i].u, flipped[i].v);
  }
  return OrientedGraph(base_, std::move(flipped));
}

std::size_t max_dense_vertices() { return env_limit(2048); }
std::size_t max_dense_edges() {
  const std::size_t n = env_limit(0);
  return n == 0 ? 4096 : 2 * n;
}

Matrix normalized_laplacian(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix l(n, n);
  for (int v = 0; v < g.vertex_count(); ++v) {
    l(v, v) = 1.0;
    const double w = 1.0 / g.degree(v);
    for (int u : g.neighbors(v)) l(v, u) = -w;
  }
  return l;
}

SymmetricMatrix symmetric_laplacian(const Graph& g) {
  SymmetricMatrix l(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) l.set(v, v, 1.0);
  for (const Edge& e : g.edges()) {
    l.set(e.u, e.v, -1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v)));
  }
  return l;
}

Matrix incidence_matrix(const OrientedGraph& og) {
  Matrix inc(static_cast<std::size_t>(og.base().vertex_count()), og.edge_count());
  for (std::size_t j = 0; j < og.edge_count(); ++j) {
    inc(og.edges()[j].u, j) = 1.0;
    inc(og.edges()[j].v, j) = -1.0;
  }
  return inc;
}

SymmetricMatrix edge_laplacian(const OrientedGraph& og) {
  // (I^T D^{-1} I)_{ef} = sum_v I(v,e) I(v,f) / deg v, only shared endpoints contribute.
  const Graph& g = og.base();
  const std::size_t m = og.edge_count();
  SymmetricMatrix le(m);
  std::vector<std::vector<std::pair<std::size_t, double>>> incident(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t j = 0; j < m; ++j) {
    incident[og.edges()[j].u].emplace_back(j, 1.0);
    incident[og.edges()[j].v].emplace_back(j, -1.0);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const double w = 1.0 / g.degree(v);
    const auto& list = incident[v];
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a; b < list.size(); ++b) {
        le.add(list[a].first, list[b].first, w * list[a].second * list[b].second);
      }
    }
  }
  return le;
}

Spectrum spectrum(const SymmetricMatrix& m, double tol) {
  const std::size_t n = m.dimension();
  std::vector<double> a(m.entries().begin(), m.entries().end());
  std::vector<double> v;
  jacobi_diagonalize(a, n, v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a[src * n + src];
    for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, col) = v[k * n + src];
  }

  double worst = 0.0;
  std::vector<double> r(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += m(i, k) * out.eigenvectors(k, col);
      r[i] = s - out.eigenvalues[col] * out.eigenvectors(i, col);
    }
    worst = std::max(worst, vector_norm(r));
  }
  out.residual_bound = worst;
  if (!(worst <= tol)) {
    throw Error(ErrorCode::ConvergenceFailure,
                "residual " + std::to_string(worst) + " exceeds tolerance " + std::to_string(tol));
  }
  return out;
}

Spectrum vertex_spectrum(const Graph& g, double tol) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n > max_dense_vertices()) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds dense limit " +
                                         std::to_string(max_dense_vertices()));
  }
  Spectrum s = spectrum(symmetric_laplacian(g), tol);

  for (std::size_t v = 0; v < n; ++v) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(g.degree(static_cast<int>(v))));
    for (std::size_t col = 0; col < n; ++col) s.eigenvectors(v, col) *= scale;
  }

  double worst = s.residual_bound;
  std::vector<double> r(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      double mean = 0.0;
      for (int w : g.neighbors(v)) mean += s.eigenvectors(w, col);
      mean /= g.degree(v);
      const double fv = s.eigenvectors(v, col);
      r[v] = (fv - mean) - s.eigenvalues[col] * fv;
    }
    worst = std::max(worst, vector_norm(r));
  }
  s.residual_bound = worst;
  if (!(worst <= tol)) {
    throw Error(ErrorCode::ConvergenceFailure,
                "eigenfunction residual " + std::to_string(worst) + " exceeds tolerance " + std::to_string(tol));
  }
  return s;
}

Spectrum edge_spectrum(const OrientedGraph& og, double tol) {
  if (og.edge_count() > max_dense_edges()) {
    throw Error(ErrorCode::TooLarge, std::to_string(og.edge_count()) + " edges exceeds dense limit " +
                                         std::to_string(max_dense_edges()));
  }
  return spectrum(edge_laplacian(og), tol);
}

std::size_t zero_multiplicity(const Spectrum& s, double threshold) {
  return static_cast<std::size_t>(
      std::ranges::count_if(s.eigenvalues, [&](double x) { return std::abs(x) < threshold; }));
}

std::vector<double> nonzero_eigenvalues(const Spectrum& s, double threshold) {
  std::vector<double> out;
  for (double x : s.eigenvalues) {
    if (std::abs(x) >= threshold) out.push_back(x);
  }
  return out;
}

double rayleigh_vertex(const Graph& g, std::span<const double> f) {
  check_length(f.size(), static_cast<std::size_t>(g.vertex_count()), "vertex function");
  double num = 0.0;
  for (const Edge& e : g.edges()) {
    const double d = f[e.u] - f[e.v];
    num += d * d;
  }
  double den = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) den += g.degree(v) * f[v] * f[v];
  if (den == 0.0) throw Error(ErrorCode::ZeroFunction, "vertex function is identically zero");
  return num / den;
}

double rayleigh_edge(const OrientedGraph& og, std::span<const double> gamma) {
  check_length(gamma.size(), og.edge_count(), "edge function");
  const Graph& g = og.base();
  std::vector<double> div(static_cast<std::size_t>(g.vertex_count()), 0.0);
  double den = 0.0;
  for (std::size_t j = 0; j < og.edge_count(); ++j) {
    div[og.edges()[j].u] += gamma[j];
    div[og.edges()[j].v] -= gamma[j];
    den += gamma[j] * gamma[j];
  }
  if (den == 0.0) throw Error(ErrorCode::ZeroFunction, "edge function is identically zero");
  double num = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) num += div[v] * div[v] / g.degree(v);
  return num / den;
}

}  // namespace cheegerlab
