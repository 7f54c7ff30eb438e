#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cheegerlab/constants.hpp"
#include "cheegerlab/families.hpp"
#include "cheegerlab/graph.hpp"
#include "cheegerlab/spectral.hpp"

namespace cheegerlab {

inline constexpr double kDefaultCheckTolerance = 1e-9;

/// One inequality lhs <= rhs. slack = rhs - lhs and pass <=> slack >= -tol,
/// where tol is the report's effective tolerance.
struct Check {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
};

struct BoundsReport {
  std::string graph_id;
  int n = 0;
  std::size_t edges = 0;
  bool connected = true;
  ConstantsRecord constants;
  double lambda2 = 0.0;
  double lambda_max = 0.0;
  double residual_bound = 0.0;
  /// max(requested tolerance, 10 * residual_bound).
  double tolerance = 0.0;
  std::vector<Check> checks;
  std::vector<std::string> notices;
  /// Vertex spectrum, kept only when requested.
  std::optional<Spectrum> spectrum;

  bool all_pass() const;
  const Check* find(std::string_view id) const;
};

struct CheckOptions {
  double tol = kDefaultCheckTolerance;
  bool keep_spectrum = false;
};

/// Stable 64-bit FNV-1a fingerprint of the vertex count and canonical edges,
/// rendered as 16 hex digits.
std::string graph_id(const Graph& g);

/// G(n,p) resampled until connected. Deterministic per seed. Throws
/// ResampleLimit after 1000 disconnected draws.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

/// Runs every inequality that applies to g:
///   main-lower, main-upper           Q <= lambda_max <= Q tau
///   cheeger-lower, cheeger-upper     1 - sqrt(1 - h^2) <= lambda_2 <= 2h   (n <= 22)
///   dual-cheeger-lower/upper         2 hbar <= lambda_max <= 1 + sqrt(1 - (1 - hbar)^2)   (n <= 13)
///   spectra-agreement                nonzero spectra of L and L^E within 1e-8
///   zero-multiplicity                0 has multiplicity c for L and |E|-|V|+c for L^E
///   lambda-max-ceiling/floor         n/(n-1) <= lambda_max <= 2
///   lambda-max-bipartite             lambda_max = 2 iff some component is bipartite
///   leaf-threshold                   Q >= n/(n-1) iff some vertex has degree 1
///   duplicate-eigenfunction          eigenfunctions with lambda != 1 agree on duplicate classes
/// Throws NotConnected for disconnected graphs.
BoundsReport check_graph(const Graph& g, double tol = kDefaultCheckTolerance);
BoundsReport check_graph(const Graph& g, const CheckOptions& options);

/// As check_graph, but accepts disconnected graphs, omitting the Cheeger
/// checks with a notice.
BoundsReport analyze_graph(const Graph& g, const CheckOptions& options = {});

struct FuzzOptions {
  std::size_t trials = 1000;
  int n_min = 3;
  int n_max = 14;
  std::vector<double> p_values{0.3, 0.5, 0.8};
  std::uint64_t seed = 0;
  double tol = kDefaultCheckTolerance;
  unsigned threads = 1;

  void validate() const;
};

struct FuzzTrial {
  std::size_t index = 0;
  int n = 0;
  double p = 0.0;
  std::uint64_t graph_seed = 0;
  std::optional<Graph> graph;
  std::optional<BoundsReport> report;
  std::string error;

  bool passed() const { return error.empty() && report && report->all_pass(); }
};

struct FuzzSummary {
  FuzzOptions options;
  std::vector<FuzzTrial> trials;  // ordered by index
  std::size_t violations = 0;
  std::map<std::string, std::size_t> check_failures;
};

/// Trial i draws (n, p, graph seed) from derive_seed(seed, i), so results do
/// not depend on thread count or scheduling.
FuzzSummary fuzz(const FuzzOptions& options);

/// Edge-list text with "# seed=..." provenance comments, readable by
/// read_edge_list.
std::string replay_contents(const FuzzTrial& trial);

struct LowerSharpnessReport {
  std::string description;
  Graph graph;
  Rational q;
  double lambda_max = 0.0;
  double ratio = 0.0;  // lambda_max / Q, a ceiling for any nu in Q nu <= lambda_max
  bool bipartite = false;
  Rational k2_q;
  double k2_lambda_max = 0.0;

  bool passed() const;
};

/// Non-bipartite graph with an edge whose endpoints have degrees 1 and 2
/// (a triangle with a two-edge pendant path), showing lambda_max / Q < 4/3;
/// plus K2 where Q = lambda_max = 2.
LowerSharpnessReport lower_sharpness_demo();

using Triple = std::array<int, 3>;

struct SearchRow {
  Triple params{};
  Rational exact_ratio;                // lambda_max / Q from closed forms
  std::optional<Rational> reference;   // independent closed form, when one exists
  std::optional<double> numeric_lambda_max;
  std::optional<double> numeric_ratio;
  std::optional<Rational> shift;       // exact_ratio - n/2 (no-shift scan)
};

struct SearchResult {
  std::string name;
  std::string claim;
  int n_min = 0;
  int n_max = 0;
  std::size_t scanned = 0;
  std::vector<Triple> violations;
  std::vector<Triple> witnesses;
  Triple best{};
  Rational best_ratio;
  std::vector<SearchRow> rows;
  bool confirmed = false;
};

/// Exhaustive scan of x = n, y = deg v, z = deg w over 0 < y <= z < x <= n_max
/// for y(z - y + x)/(y + z) >= 0.54 x, in exact integer arithmetic. Any hit is
/// a violation of tau < 0.54 n. best/best_ratio record the largest tau/n.
/// n_max <= 2000.
SearchResult tau_upper_search(int n_max);

/// Scans feasible one-sided parameters (n, k, d), d >= n-k, k < n-1, for
/// lambda_max / Q = (dn - dk + kn - k^2)/(d + n - k) > 0.53 n. All hits are
/// witnesses. When n_max >= 249 the (249, 69, 241) graph is also built and
/// its numerical lambda_max compared against 310/241. 249 <= n_max <= 1000.
SearchResult epsilon_witness_search(int n_max, bool build_reference = true);

/// For each n (multiple of 4, n >= 8) builds the (n, n/4, n-1) graph, checks
/// lambda_max / Q against (15n^2 - 12n)/(28n - 16) and that ratio - n/2
/// strictly increases along the list.
SearchResult no_linear_shift_bound(const std::vector<int>& n_list);

}  // namespace cheegerlab
