// Acceptance suite: one PASS/FAIL line per criterion at pinned tolerances.
// Every criterion also produces a JSON record; the whole suite is run twice
// and the records compared byte for byte (AC12).
//
// Usage: acceptance [--json PATH]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "cheegerlab/constants.hpp"
#include "cheegerlab/error.hpp"
#include "cheegerlab/families.hpp"
#include "cheegerlab/harness.hpp"
#include "cheegerlab/random.hpp"
#include "cheegerlab/report.hpp"
#include "cheegerlab/spectral.hpp"

using namespace cheegerlab;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string summary;
  Json record = Json::object();
};

std::uint64_t seed_for(int criterion, std::uint64_t i) { return derive_seed(derive_seed(kSeed, criterion), i); }

Graph random_graph(int criterion, std::uint64_t i, int n_min, int n_max) {
  Rng rng(seed_for(criterion, i));
  const int n = static_cast<int>(rng.uniform_int(n_min, n_max));
  const double p = rng.uniform(0.25, 0.85);
  return random_connected_graph(n, p, rng.next());
}

// Connected random bipartite graph on sides of random size.
Graph random_bipartite(Rng& rng, int n) {
  const int a = static_cast<int>(rng.uniform_int(1, n - 1));
  for (;;) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
      for (int v = a; v < n; ++v)
        if (rng.uniform01() < 0.5) edges.push_back({u, v});
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) ++deg[e.u], ++deg[e.v];
    bool ok = !edges.empty();
    for (int d : deg) ok = ok && d > 0;
    if (!ok) continue;
    Graph g = Graph::from_edge_list(n, edges);
    if (is_connected(g)) return g;
  }
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.vertex_count(), e.v + a.vertex_count()});
  return Graph::from_edge_list(a.vertex_count() + b.vertex_count(), edges);
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome ac1_main_bounds() {
  FuzzOptions o;
  o.trials = 1000;
  o.n_min = 3;
  o.n_max = 14;
  o.seed = kSeed;
  o.tol = 1e-9;
  const FuzzSummary s = fuzz(o);
  std::size_t violations = 0, errors = 0;
  double worst = INFINITY;
  for (const FuzzTrial& t : s.trials) {
    if (!t.report) {
      ++errors;
      continue;
    }
    for (const char* id : {"main-lower", "main-upper"}) {
      const Check* c = t.report->find(id);
      worst = std::min(worst, c->slack);
      if (!c->pass) ++violations;
    }
  }
  Outcome out;
  out.pass = violations == 0 && errors == 0 && s.trials.size() == 1000;
  out.summary = "1000 graphs, n in [3,14]: " + std::to_string(violations) + " violations, min slack " + fmt(worst);
  out.record = {{"trials", s.trials.size()}, {"violations", violations}, {"errors", errors}, {"min_slack", worst}};
  return out;
}

Outcome ac2_complete_equality() {
  Outcome out;
  double worst = 0;
  for (int n = 2; n <= 30; ++n) {
    const Graph g = complete_graph(n);
    const double lm = vertex_spectrum(g).max();
    const double err = std::abs(lm - double(n) / (n - 1));
    worst = std::max(worst, err);
    const ConstantsRecord c{q_constant(g), tau_constant(g), {}, {}};
    const bool exact = c.q.value * c.tau.value == Rational(n, n - 1);
    out.pass = out.pass && err <= 1e-10 && exact;
    out.record[std::to_string(n)] = {{"lambda_max", lm}, {"q_tau", to_json(c.q.value * c.tau.value)}};
  }
  out.summary = "K_2..K_30: max |lambda_max - n/(n-1)| = " + fmt(worst) + ", Q tau = n/(n-1) exactly";
  return out;
}

Outcome ac3_lower_sharpness() {
  const LowerSharpnessReport r = lower_sharpness_demo();
  Outcome out;
  out.pass = std::abs(r.k2_lambda_max - 2) <= 1e-10 && r.k2_q == Rational(2) && r.q == Rational(3, 2) &&
             r.ratio < 4.0 / 3.0 - 1e-6 && !r.bipartite;
  out.summary = "K2: Q = lambda_max = 2; triangle+path: Q = " + r.q.to_string() + ", lambda_max/Q = " + fmt(r.ratio);
  out.record = to_json(r);
  return out;
}

Outcome ac4_one_sided() {
  Outcome out;
  std::size_t exact = 0, interval = 0;
  double worst = 0;
  for (int n = 3; n <= 16; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      for (int d = k; d <= n - 1; ++d) {
        const OneSidedParams p{n, k, d};
        if (!exists_one_sided(p)) continue;
        const double lm = vertex_spectrum(build_one_sided(p)).max();
        const double lo = double(d + k) / d;
        if (d >= n - k) {
          ++exact;
          worst = std::max(worst, std::abs(lm - lo));
          out.pass = out.pass && std::abs(lm - lo) <= 1e-9;
        } else {
          ++interval;
          out.pass = out.pass && lm >= lo - 1e-9 && lm <= double(n) / d + 1e-9;
        }
        out.record[p.to_string()] = lm;
      }
    }
  }
  out.summary = std::to_string(exact) + " exact triples (max err " + fmt(worst) + "), " + std::to_string(interval) +
                " interval triples";
  return out;
}

Outcome ac5_q_characterization() {
  Outcome out;
  double max_excess = -INFINITY;
  std::size_t witness_ok = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Graph g = random_graph(5, i, 3, 14);
    const OrientedGraph og(g);
    const EdgeValue q = q_constant(g);
    Rng rng(seed_for(50, i));
    std::vector<double> gamma(og.edge_count());
    for (int t = 0; t < 10000; ++t) {
      for (double& x : gamma) x = rng.uniform(-1, 1);
      max_excess = std::max(max_excess, l1_edge_quotient(og, gamma) - q.value.to_double());
    }
    std::vector<Rational> indicator(og.edge_count(), Rational(0));
    for (std::size_t e = 0; e < og.edge_count(); ++e) {
      const Edge oe = og.edges()[e];
      if (Edge{std::min(oe.u, oe.v), std::max(oe.u, oe.v)} == q.witness) indicator[e] = Rational(1);
    }
    if (l1_edge_quotient(og, indicator) == q.value) ++witness_ok;
  }
  std::size_t oracle_ok = 0, tested = 0;
  for (std::uint64_t i = 0; tested < 50; ++i) {
    const Graph g = random_graph(51, i, 3, 9);
    if (g.edge_count() > 16) continue;
    ++tested;
    if (q_via_bipartite_subgraphs(g) == q_constant(g).value) ++oracle_ok;
  }
  out.pass = max_excess <= 1e-9 && witness_ok == 100 && oracle_ok == 50;
  out.summary = "max(quotient - Q) = " + fmt(max_excess) + ", witnesses exact " + std::to_string(witness_ok) +
                "/100, bipartite-subgraph oracle " + std::to_string(oracle_ok) + "/50";
  out.record = {{"max_excess", max_excess}, {"witness_ok", witness_ok}, {"oracle_ok", oracle_ok}};
  return out;
}

Outcome ac6_vertex_quotient() {
  Outcome out;
  double max_q = -INFINITY;
  std::size_t indicators_ok = 0, indicators = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Graph g = random_graph(6, i, 3, 14);
    Rng rng(seed_for(60, i));
    std::vector<double> f(g.vertex_count());
    for (int t = 0; t < 10000; ++t) {
      for (double& x : f) x = rng.uniform(-1, 1);
      max_q = std::max(max_q, l1_vertex_quotient_plain(g, f));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<Rational> ind(g.vertex_count(), Rational(0));
      ind[v] = Rational(1);
      ++indicators;
      if (l1_vertex_quotient_plain(g, ind) == Rational(1)) ++indicators_ok;
    }
  }
  out.pass = max_q <= 1 + 1e-9 && indicators_ok == indicators;
  out.summary = "max quotient " + fmt(max_q) + ", indicators exactly 1: " + std::to_string(indicators_ok) + "/" +
                std::to_string(indicators);
  out.record = {{"max_quotient", max_q}, {"indicators_ok", indicators_ok}, {"indicators", indicators}};
  return out;
}

Outcome ac7_cheeger() {
  Outcome out;
  std::size_t violations = 0, witness_ok = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const Graph g = random_graph(7, i, 3, 14);
    const CheegerValue h = cheeger_h(g);
    const double l2 = vertex_spectrum(g).eigenvalues[1];
    const double hd = h.value.to_double();
    if (1 - std::sqrt(1 - hd * hd) > l2 + 1e-9 || l2 > 2 * hd + 1e-9) ++violations;
    std::vector<Rational> ind(g.vertex_count(), Rational(0));
    for (int v : h.witness.members()) ind[v] = Rational(1);
    if (l1_vertex_quotient_maxt(g, ind) == h.value) ++witness_ok;
  }
  out.pass = violations == 0 && witness_ok == 500;
  out.summary = "500 graphs: " + std::to_string(violations) + " violations, witness quotient = h on " +
                std::to_string(witness_ok) + "/500";
  out.record = {{"violations", violations}, {"witness_ok", witness_ok}};
  return out;
}

Outcome ac8_dual_cheeger() {
  Outcome out;
  std::size_t violations = 0, bipartite = 0, bipartite_ok = 0;
  auto test = [&](const Graph& g) {
    const DualCheegerValue hb = dual_cheeger(g);
    const double lm = vertex_spectrum(g).max();
    const double x = hb.value.to_double();
    if (2 * x > lm + 1e-9 || lm > 1 + std::sqrt(1 - (1 - x) * (1 - x)) + 1e-9) ++violations;
    if (is_bipartite(g)) {
      ++bipartite;
      if (hb.value == Rational(1)) ++bipartite_ok;
    }
  };
  for (std::uint64_t i = 0; i < 300; ++i) test(random_graph(8, i, 3, 12));
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(seed_for(80, i));
    test(random_bipartite(rng, static_cast<int>(rng.uniform_int(2, 12))));
  }
  out.pass = violations == 0 && bipartite > 0 && bipartite_ok == bipartite;
  out.summary = "350 graphs: " + std::to_string(violations) + " violations, h_bar = 1 on " +
                std::to_string(bipartite_ok) + "/" + std::to_string(bipartite) + " bipartite";
  out.record = {{"violations", violations}, {"bipartite", bipartite}, {"bipartite_ok", bipartite_ok}};
  return out;
}

Outcome ac9_edge_laplacian() {
  Outcome out;
  double worst = 0;
  std::size_t mult_ok = 0, disconnected = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Graph g = random_graph(9, i, 2, 14);
    if (i % 3 == 2) {
      g = disjoint_union(g, random_graph(90, i, 2, 8));
      ++disconnected;
    }
    const Spectrum v = vertex_spectrum(g);
    const Spectrum e = edge_spectrum(OrientedGraph(g));
    const auto a = nonzero_eigenvalues(v), b = nonzero_eigenvalues(e);
    if (a.size() != b.size()) {
      out.pass = false;
      continue;
    }
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    const std::size_t c = static_cast<std::size_t>(component_count(g));
    if (zero_multiplicity(e) == g.edge_count() - g.vertex_count() + c) ++mult_ok;
  }
  out.pass = out.pass && worst <= 1e-8 && mult_ok == 300;
  out.summary = "300 graphs (" + std::to_string(disconnected) + " disconnected): max diff " + fmt(worst) +
                ", zero multiplicity " + std::to_string(mult_ok) + "/300";
  out.record = {{"max_difference", worst}, {"multiplicity_ok", mult_ok}};
  return out;
}

Outcome ac10_duplicates() {
  Outcome out;
  std::size_t pairs = 0, bad = 0;
  double worst = 0;
  auto test = [&](const Graph& g) {
    const Spectrum s = vertex_spectrum(g);
    const auto classes = duplicate_classes(g);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (std::abs(s.eigenvalues[k] - 1) <= 1e-6) continue;
      const auto f = s.eigenvector(k);
      double inf = 0;
      for (double x : f) inf = std::max(inf, std::abs(x));
      ++pairs;
      double spread = 0;
      for (const auto& cls : classes)
        for (int v : cls) spread = std::max(spread, std::abs(f[v] - f[cls.front()]));
      worst = std::max(worst, spread / inf);
      if (spread > 1e-7 * inf) ++bad;
    }
  };
  std::vector<OneSidedParams> feasible;
  for (int n = 3; n <= 16; ++n)
    for (int k = 1; k <= n - 2; ++k)
      for (int d = k; d <= n - 1; ++d)
        if (exists_one_sided({n, k, d})) feasible.push_back({n, k, d});
  Rng pick(seed_for(10, 0));
  for (int i = 0; i < 100; ++i)
    test(build_one_sided(feasible[pick.uniform_int(0, static_cast<std::int64_t>(feasible.size()) - 1)]));
  for (std::uint64_t i = 0; i < 100; ++i) test(random_graph(10, i, 3, 14));
  out.pass = bad == 0;
  out.summary = std::to_string(pairs) + " eigenpairs: " + std::to_string(bad) + " not constant on duplicates, max " +
                fmt(worst) + " x |f|_inf";
  out.record = {{"eigenpairs", pairs}, {"bad", bad}, {"max_relative_spread", worst}};
  return out;
}

Outcome ac11_searches() {
  Outcome out;
  const SearchResult tau = tau_upper_search(300);
  const SearchResult eps = epsilon_witness_search(249);
  const SearchResult shift = no_linear_shift_bound({8, 16, 24, 32, 40});
  bool has_witness = false;
  for (const Triple& t : eps.witnesses) has_witness |= t == Triple{249, 69, 241};
  bool numeric_ok = false;
  for (const SearchRow& row : eps.rows) {
    if (row.params == Triple{249, 69, 241} && row.numeric_lambda_max)
      numeric_ok = std::abs(*row.numeric_lambda_max - 310.0 / 241.0) <= 1e-8 &&
                   row.exact_ratio > Rational(53 * 249, 100);
  }
  bool closed_form = shift.rows.size() == 5;
  for (std::size_t i = 0; i < shift.rows.size(); ++i) {
    const std::int64_t n = shift.rows[i].params[0];
    closed_form = closed_form && shift.rows[i].exact_ratio == Rational(15 * n * n - 12 * n, 28 * n - 16);
    if (i > 0) closed_form = closed_form && *shift.rows[i].shift > *shift.rows[i - 1].shift;
  }
  out.pass = tau.violations.empty() && tau.confirmed && has_witness && numeric_ok && eps.confirmed && closed_form &&
             shift.confirmed;
  out.summary = "tau-bound: " + std::to_string(tau.violations.size()) + " violations (max tau/n " +
                tau.best_ratio.to_string() + "); epsilon: " + std::to_string(eps.witnesses.size()) +
                " witnesses, (249,69,241) " + (numeric_ok ? "matches 310/241" : "MISMATCH") + "; no-shift " +
                (closed_form ? "exact and increasing" : "MISMATCH");
  out.record = {{"tau", to_json(tau)}, {"epsilon_witness_count", eps.witnesses.size()},
                {"epsilon_rows", to_json(eps)["rows"]}, {"no_shift", to_json(shift)}};
  return out;
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"AC1", "main bounds Q <= lambda_max <= Q tau", ac1_main_bounds},
      {"AC2", "equality on complete graphs", ac2_complete_equality},
      {"AC3", "lower-bound sharpness", ac3_lower_sharpness},
      {"AC4", "one-sided bipartite spectrum", ac4_one_sided},
      {"AC5", "edge L1 characterization of Q", ac5_q_characterization},
      {"AC6", "vertex L1 quotient at most 1", ac6_vertex_quotient},
      {"AC7", "classical Cheeger inequality", ac7_cheeger},
      {"AC8", "dual Cheeger inequality", ac8_dual_cheeger},
      {"AC9", "edge Laplacian spectrum", ac9_edge_laplacian},
      {"AC10", "duplicate-vertex eigenfunctions", ac10_duplicates},
      {"AC11", "tau, epsilon and no-shift searches", ac11_searches},
  };
  return list;
}

Json run_suite(std::vector<Outcome>* outcomes, std::vector<double>* seconds) {
  Json all = Json::object();
  for (const Criterion& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    all[c.id] = {{"pass", o.pass}, {"summary", o.summary}, {"record", o.record}};
    if (outcomes) outcomes->push_back(std::move(o));
    if (seconds) seconds->push_back(elapsed.count());
  }
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::string json_path;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--json") == 0 && i + 1 < argc) json_path = argv[++i];
  }

  std::vector<Outcome> outcomes;
  std::vector<double> seconds;
  const Json first = run_suite(&outcomes, &seconds);

  int failed = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Criterion& c = criteria()[i];
    std::printf("%-5s %s  %s: %s [%.1fs]\n", c.id, outcomes[i].pass ? "PASS" : "FAIL", c.title,
                outcomes[i].summary.c_str(), seconds[i]);
    std::fflush(stdout);
    if (!outcomes[i].pass) ++failed;
  }

  // AC12: a second full run with the same seeds, plus a threaded fuzz run.
  const auto start = std::chrono::steady_clock::now();
  const std::string a = first.dump();
  const std::string b = run_suite(nullptr, nullptr).dump();
  FuzzOptions o;
  o.trials = 1000;
  o.seed = kSeed;
  const std::string serial = to_json(fuzz(o), true).dump();
  o.threads = 4;
  const std::string threaded = to_json(fuzz(o), true).dump();
  const bool same = a == b && serial == threaded;
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::printf("%-5s %s  %s: suite JSON %zu bytes %s, fuzz threads=1 vs 4 %s [%.1fs]\n", "AC12",
              same ? "PASS" : "FAIL", "determinism", a.size(), a == b ? "identical" : "DIFFERS",
              serial == threaded ? "identical" : "DIFFERS", elapsed.count());
  if (!same) ++failed;

  if (!json_path.empty()) std::ofstream(json_path) << first.dump(2) << '\n';
  std::printf("%d of 12 criteria passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
