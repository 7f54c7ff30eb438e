#include "cheegerlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "cheegerlab/edge_list.hpp"
#include "cheegerlab/error.hpp"
#include "cheegerlab/random.hpp"

namespace cheegerlab {
namespace {

constexpr double kSpectraAgreement = 1e-8;
constexpr double kDuplicateAgreement = 1e-7;
constexpr double kDuplicateEigenvalueGap = 1e-6;
constexpr int kResampleLimit = 1000;

void add_check(BoundsReport& r, std::string id, double lhs, double rhs) {
  const double slack = rhs - lhs;
  r.checks.push_back({std::move(id), lhs, rhs, slack, slack >= -r.tolerance});
}

bool any_component_bipartite(const Graph& g) {
  const auto labels = component_labels(g);
  const auto colour = bipartition(g);
  if (colour) return true;
  // Re-check component by component: a single odd cycle spoils the global test.
  const int count = *std::ranges::max_element(labels) + 1;
  std::vector<bool> odd(static_cast<std::size_t>(count), false);
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          odd[labels[v]] = true;
        }
      }
    }
  }
  return std::ranges::any_of(odd, [](bool b) { return !b; });
}

double duplicate_spread(const Graph& g, const Spectrum& s) {
  std::vector<std::vector<int>> classes;
  for (auto& c : duplicate_classes(g)) {
    if (c.size() > 1) classes.push_back(std::move(c));
  }
  if (classes.empty()) return 0.0;
  double worst = 0.0;
  for (std::size_t col = 0; col < s.size(); ++col) {
    if (std::abs(s.eigenvalues[col] - 1.0) <= kDuplicateEigenvalueGap) continue;
    double inf_norm = 0.0;
    for (std::size_t v = 0; v < s.size(); ++v) inf_norm = std::max(inf_norm, std::abs(s.eigenvectors(v, col)));
    for (const auto& c : classes) {
      double lo = s.eigenvectors(c.front(), col);
      double hi = lo;
      for (int v : c) {
        lo = std::min(lo, s.eigenvectors(v, col));
        hi = std::max(hi, s.eigenvectors(v, col));
      }
      worst = std::max(worst, (hi - lo) / inf_norm);
    }
  }
  return worst;
}

BoundsReport build_report(const Graph& g, const CheckOptions& options, bool connected) {
  BoundsReport r;
  r.graph_id = graph_id(g);
  r.n = g.vertex_count();
  r.edges = g.edge_count();
  r.connected = connected;

  const OrientedGraph og(g);
  Spectrum vs = vertex_spectrum(g);
  const Spectrum es = edge_spectrum(og);
  r.residual_bound = std::max(vs.residual_bound, es.residual_bound);
  r.tolerance = std::max(options.tol, 10.0 * r.residual_bound);
  r.lambda2 = vs.size() > 1 ? vs.eigenvalues[1] : 0.0;
  r.lambda_max = vs.max();

  r.constants = {q_constant(g), tau_constant(g), std::nullopt, std::nullopt};
  if (connected && r.n <= kMaxCheegerVertices) r.constants.h = cheeger_h(g);
  if (r.n <= kMaxDualCheegerVertices) r.constants.h_bar = dual_cheeger(g);

  const double q = r.constants.q.value.to_double();
  const double q_tau = (r.constants.q.value * r.constants.tau.value).to_double();
  add_check(r, "main-lower", q, r.lambda_max);
  add_check(r, "main-upper", r.lambda_max, q_tau);

  if (r.constants.h) {
    const double h = r.constants.h->value.to_double();
    add_check(r, "cheeger-lower", 1.0 - std::sqrt(std::max(0.0, 1.0 - h * h)), r.lambda2);
    add_check(r, "cheeger-upper", r.lambda2, 2.0 * h);
  } else if (!connected) {
    r.notices.push_back("graph is disconnected: Cheeger constant and lambda_2 checks omitted");
  } else {
    r.notices.push_back("n > " + std::to_string(kMaxCheegerVertices) + ": Cheeger enumeration skipped");
  }
  if (r.constants.h_bar) {
    const double hb = r.constants.h_bar->value.to_double();
    add_check(r, "dual-cheeger-lower", 2.0 * hb, r.lambda_max);
    add_check(r, "dual-cheeger-upper", r.lambda_max, 1.0 + std::sqrt(std::max(0.0, 1.0 - (1.0 - hb) * (1.0 - hb))));
  } else {
    r.notices.push_back("n > " + std::to_string(kMaxDualCheegerVertices) + ": dual Cheeger enumeration skipped");
  }

  const auto nz_vertex = nonzero_eigenvalues(vs);
  const auto nz_edge = nonzero_eigenvalues(es);
  double disagreement = 0.0;
  if (nz_vertex.size() != nz_edge.size()) {
    disagreement = 1.0;
    r.notices.push_back("nonzero eigenvalue counts differ between L and L^E");
  } else {
    for (std::size_t i = 0; i < nz_vertex.size(); ++i) {
      disagreement = std::max(disagreement, std::abs(nz_vertex[i] - nz_edge[i]));
    }
  }
  add_check(r, "spectra-agreement", disagreement, kSpectraAgreement);

  const auto components = static_cast<std::int64_t>(component_count(g));
  const std::int64_t cycle_rank = static_cast<std::int64_t>(r.edges) - r.n + components;
  const auto zero_v = static_cast<std::int64_t>(zero_multiplicity(vs));
  const auto zero_e = static_cast<std::int64_t>(zero_multiplicity(es));
  add_check(r, "zero-multiplicity", static_cast<double>(std::llabs(zero_v - components) + std::llabs(zero_e - cycle_rank)),
            0.0);

  add_check(r, "lambda-max-ceiling", r.lambda_max, 2.0);
  add_check(r, "lambda-max-floor", static_cast<double>(r.n) / (r.n - 1), r.lambda_max);
  const bool reaches_two = r.lambda_max >= 2.0 - r.tolerance;
  add_check(r, "lambda-max-bipartite", reaches_two == any_component_bipartite(g) ? 0.0 : 1.0, 0.0);

  bool has_leaf = false;
  for (int v = 0; v < r.n; ++v) has_leaf = has_leaf || g.degree(v) == 1;
  const bool above = r.constants.q.value >= Rational(r.n, r.n - 1);
  add_check(r, "leaf-threshold", above == has_leaf ? 0.0 : 1.0, 0.0);

  add_check(r, "duplicate-eigenfunction", duplicate_spread(g, vs), kDuplicateAgreement);

  if (options.keep_spectrum) r.spectrum = std::move(vs);
  return r;
}

}  // namespace

bool BoundsReport::all_pass() const {
  return std::ranges::all_of(checks, [](const Check& c) { return c.pass; });
}

const Check* BoundsReport::find(std::string_view id) const {
  auto it = std::ranges::find(checks, id, &Check::id);
  return it == checks.end() ? nullptr : &*it;
}

std::string graph_id(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "random graphs need n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidParams, "edge probability must lie in (0, 1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    std::vector<Edge> edges;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.uniform01() < p) {
          edges.push_back({u, v});
          ++degree[u];
          ++degree[v];
        }
      }
    }
    if (std::ranges::find(degree, 0) != degree.end()) continue;
    Graph g = Graph::from_edge_list(n, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::ResampleLimit, "no connected G(" + std::to_string(n) + "," + std::to_string(p) +
                                            ") sample in " + std::to_string(kResampleLimit) + " attempts");
}

BoundsReport check_graph(const Graph& g, double tol) { return check_graph(g, CheckOptions{tol, false}); }

BoundsReport check_graph(const Graph& g, const CheckOptions& options) {
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "check_graph needs a connected graph");
  return build_report(g, options, true);
}

BoundsReport analyze_graph(const Graph& g, const CheckOptions& options) {
  return build_report(g, options, is_connected(g));
}

void FuzzOptions::validate() const {
  if (n_min < 2 || n_max < n_min) {
    throw Error(ErrorCode::InvalidParams, "need 2 <= n_min <= n_max, got " + std::to_string(n_min) + ".." +
                                              std::to_string(n_max));
  }
  if (p_values.empty()) throw Error(ErrorCode::InvalidParams, "at least one edge probability is required");
  for (double p : p_values) {
    if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidParams, "edge probability must lie in (0, 1]");
  }
}

FuzzSummary fuzz(const FuzzOptions& options) {
  options.validate();
  FuzzSummary summary;
  summary.options = options;
  summary.trials.resize(options.trials);

  auto run_trial = [&](std::size_t i) {
    FuzzTrial& t = summary.trials[i];
    t.index = i;
    Rng rng(derive_seed(options.seed, i));
    t.n = static_cast<int>(rng.uniform_int(options.n_min, options.n_max));
    t.p = options.p_values[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(options.p_values.size()) - 1))];
    t.graph_seed = rng.next();
    try {
      t.graph = random_connected_graph(t.n, t.p, t.graph_seed);
      t.report = check_graph(*t.graph, options.tol);
    } catch (const Error& e) {
      t.error = e.what();
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(options.trials)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < options.trials; ++i) run_trial(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < options.trials; i = next++) run_trial(i);
      });
    }
  }

  for (const FuzzTrial& t : summary.trials) {
    if (t.passed()) continue;
    ++summary.violations;
    if (!t.error.empty()) ++summary.check_failures["error"];
    if (t.report) {
      for (const Check& c : t.report->checks) {
        if (!c.pass) ++summary.check_failures[c.id];
      }
    }
  }
  return summary;
}

std::string replay_contents(const FuzzTrial& trial) {
  if (!trial.graph) throw Error(ErrorCode::InvalidParams, "trial " + std::to_string(trial.index) + " has no graph");
  char p_text[32];
  std::snprintf(p_text, sizeof p_text, "%.17g", trial.p);
  std::vector<std::string> comments{
      "seed=" + std::to_string(trial.graph_seed),
      "trial=" + std::to_string(trial.index) + " n=" + std::to_string(trial.n) + " p=" + p_text,
  };
  if (!trial.error.empty()) comments.push_back("error: " + trial.error);
  if (trial.report) {
    for (const Check& c : trial.report->checks) {
      if (!c.pass) comments.push_back("failed " + c.id);
    }
  }
  return to_edge_list(*trial.graph, comments);
}

bool LowerSharpnessReport::passed() const {
  return !bipartite && q == Rational(3, 2) && lambda_max < 2.0 - 1e-9 && ratio < 4.0 / 3.0 - 1e-6 &&
         k2_q == Rational(2) && std::abs(k2_lambda_max - 2.0) <= 1e-10;
}

LowerSharpnessReport lower_sharpness_demo() {
  // Triangle 0-1-2 with the path 2-3-4 hanging off it: edge (3,4) has degrees 2 and 1.
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}};
  Graph g = Graph::from_edge_list(5, edges);
  const Rational q = q_constant(g).value;
  const double lambda = vertex_spectrum(g).max();

  const Graph k2 = complete_graph(2);
  return LowerSharpnessReport{
      .description = "triangle with a two-edge pendant path",
      .graph = g,
      .q = q,
      .lambda_max = lambda,
      .ratio = lambda / q.to_double(),
      .bipartite = is_bipartite(g),
      .k2_q = q_constant(k2).value,
      .k2_lambda_max = vertex_spectrum(k2).max(),
  };
}

SearchResult tau_upper_search(int n_max) {
  if (n_max < 2 || n_max > 2000) throw Error(ErrorCode::InvalidParams, "tau scan needs 2 <= n_max <= 2000");
  SearchResult r;
  r.name = "tau-bound";
  r.claim = "tau < 0.54 n";
  r.n_min = 2;
  r.n_max = n_max;
  // best tracks y(z - y + x) / ((y + z) x) as an exact fraction.
  std::int64_t best_num = -1;
  std::int64_t best_den = 1;
  for (std::int64_t x = 2; x <= n_max; ++x) {
    for (std::int64_t y = 1; y < x; ++y) {
      for (std::int64_t z = y; z < x; ++z) {
        ++r.scanned;
        const std::int64_t num = y * (z - y + x);
        const std::int64_t den = (y + z) * x;
        if (100 * num >= 54 * den) r.violations.push_back({int(x), int(y), int(z)});
        if (best_num < 0 || static_cast<__int128>(num) * best_den > static_cast<__int128>(best_num) * den) {
          best_num = num;
          best_den = den;
          r.best = {int(x), int(y), int(z)};
        }
      }
    }
  }
  r.best_ratio = Rational(best_num, best_den);
  r.confirmed = r.violations.empty();
  return r;
}

SearchResult epsilon_witness_search(int n_max, bool build_reference) {
  if (n_max < 249 || n_max > 1000) throw Error(ErrorCode::InvalidParams, "epsilon scan needs 249 <= n_max <= 1000");
  SearchResult r;
  r.name = "epsilon-witness";
  r.claim = "some one-sided bipartite graph has lambda_max > 0.53 n Q";
  r.n_min = 3;
  r.n_max = n_max;
  std::int64_t best_num = -1;
  std::int64_t best_den = 1;
  for (std::int64_t n = 3; n <= n_max; ++n) {
    for (std::int64_t k = 1; k <= n - 2; ++k) {
      for (std::int64_t d = std::max(k, n - k); d <= n - 1; ++d) {
        if ((d - k) % 2 != 0 && (n - k) % 2 != 0) continue;
        ++r.scanned;
        const std::int64_t num = d * n - d * k + k * n - k * k;
        const std::int64_t den = d + n - k;
        if (100 * num > 53 * n * den) r.witnesses.push_back({int(n), int(k), int(d)});
        // Normalise by n to compare against epsilon.
        if (best_num < 0 || static_cast<__int128>(num) * best_den > static_cast<__int128>(best_num) * den * n) {
          best_num = num;
          best_den = den * n;
          r.best = {int(n), int(k), int(d)};
        }
      }
    }
  }
  r.best_ratio = Rational(best_num, best_den);

  const Triple reference{249, 69, 241};
  const bool found = std::ranges::find(r.witnesses, reference) != r.witnesses.end();
  bool numeric_ok = true;
  if (build_reference) {
    const OneSidedParams p{249, 69, 241};
    const Rational exact = predict_lambda_max(p).value / predict_q(p);
    const Graph g = build_one_sided(p);
    const double lambda = vertex_spectrum(g).max();
    SearchRow row;
    row.params = reference;
    row.exact_ratio = exact;
    row.reference = Rational(310, 241);
    row.numeric_lambda_max = lambda;
    row.numeric_ratio = lambda / predict_q(p).to_double();
    r.rows.push_back(row);
    numeric_ok = std::abs(lambda - Rational(310, 241).to_double()) <= 1e-8;
  }
  r.confirmed = found && numeric_ok;
  return r;
}

SearchResult no_linear_shift_bound(const std::vector<int>& n_list) {
  if (n_list.empty()) throw Error(ErrorCode::InvalidParams, "no-shift scan needs at least one n");
  SearchResult r;
  r.name = "no-shift";
  r.claim = "lambda_max / Q - n/2 is unbounded along (n, n/4, n-1)";
  r.n_min = *std::ranges::min_element(n_list);
  r.n_max = *std::ranges::max_element(n_list);
  bool ok = true;
  std::optional<Rational> previous_shift;
  for (int n : n_list) {
    if (n < 8 || n % 4 != 0) {
      throw Error(ErrorCode::InvalidParams, "no-shift scan needs multiples of 4 with n >= 8, got " + std::to_string(n));
    }
    const OneSidedParams p{n, n / 4, n - 1};
    const Rational exact = predict_lambda_max(p).value / predict_q(p);
    const std::int64_t nn = n;
    const Rational closed(15 * nn * nn - 12 * nn, 28 * nn - 16);
    const Graph g = build_one_sided(p);
    const double lambda = vertex_spectrum(g).max();
    const double numeric_ratio = lambda / predict_q(p).to_double();

    SearchRow row;
    row.params = {n, n / 4, n - 1};
    row.exact_ratio = exact;
    row.reference = closed;
    row.numeric_lambda_max = lambda;
    row.numeric_ratio = numeric_ratio;
    row.shift = exact - Rational(nn, 2);
    ++r.scanned;

    bool row_ok = exact == closed && std::abs(numeric_ratio - closed.to_double()) <= 1e-8;
    if (previous_shift && !(*row.shift > *previous_shift)) row_ok = false;
    if (!row_ok) {
      r.violations.push_back(row.params);
      ok = false;
    }
    previous_shift = row.shift;
    if (r.rows.empty() || exact / Rational(nn) > r.best_ratio) {
      r.best = row.params;
      r.best_ratio = exact / Rational(nn);
    }
    r.rows.push_back(std::move(row));
  }
  r.confirmed = ok;
  return r;
}

}  // namespace cheegerlab
