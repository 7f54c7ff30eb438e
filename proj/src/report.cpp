#include "cheegerlab/report.hpp"

#include <cstdio>
#include <sstream>

#include "cheegerlab/error.hpp"

namespace cheegerlab {
namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json triple_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }

}  // namespace

Json to_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_double()}}; }

Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw Error(ErrorCode::ParseError, "rational must be an object with num and den");
  }
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const VertexSubset& s) { return Json(std::vector<int>(s.members().begin(), s.members().end())); }

Json to_json(const ConstantsRecord& c) {
  Json j;
  j["q"] = to_json(c.q.value);
  j["q_argmax_edge"] = to_json(c.q.witness);
  j["tau"] = to_json(c.tau.value);
  j["tau_argmax_edge"] = to_json(c.tau.witness);
  j["q_tau"] = to_json(c.q.value * c.tau.value);
  if (c.h) {
    j["h"] = to_json(c.h->value);
    j["h_witness"] = to_json(c.h->witness);
  }
  if (c.h_bar) {
    j["h_bar"] = to_json(c.h_bar->value);
    j["h_bar_witness"] = Json::array({to_json(c.h_bar->first), to_json(c.h_bar->second)});
  }
  return j;
}

Json to_json(const LambdaPrediction& p) {
  Json j;
  j["kind"] = p.exact() ? "exact" : "interval";
  if (p.exact()) j["value"] = to_json(p.value);
  j["lower"] = to_json(p.lower);
  j["upper"] = to_json(p.upper);
  return j;
}

Json to_json(const Spectrum& s, bool with_vectors) {
  Json j;
  j["eigenvalues"] = s.eigenvalues;
  j["residual_bound"] = s.residual_bound;
  if (with_vectors) {
    Json vectors = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) vectors.push_back(s.eigenvector(i));
    j["eigenvectors"] = std::move(vectors);
  }
  return j;
}

Json to_json(const Check& c) {
  return Json{{"id", c.id}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}, {"pass", c.pass}};
}

Json to_json(const BoundsReport& r, bool with_vectors) {
  Json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["connected"] = r.connected;
  j["constants"] = to_json(r.constants);
  j["lambda2"] = r.lambda2;
  j["lambda_max"] = r.lambda_max;
  j["residual_bound"] = r.residual_bound;
  j["tolerance"] = r.tolerance;
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["notices"] = r.notices;
  j["pass"] = r.all_pass();
  if (r.spectrum) j["spectrum"] = to_json(*r.spectrum, with_vectors);
  return j;
}

Json to_json(const FuzzSummary& s, bool all_trials) {
  Json j;
  Json opts;
  opts["trials"] = s.options.trials;
  opts["n_min"] = s.options.n_min;
  opts["n_max"] = s.options.n_max;
  opts["p_values"] = s.options.p_values;
  opts["seed"] = s.options.seed;
  opts["tol"] = s.options.tol;
  j["options"] = std::move(opts);
  j["trials"] = s.trials.size();
  j["violations"] = s.violations;
  j["check_failures"] = Json::object();
  for (const auto& [id, count] : s.check_failures) j["check_failures"][id] = count;

  Json records = Json::array();
  for (const FuzzTrial& t : s.trials) {
    if (!all_trials && t.passed()) continue;
    Json rec;
    rec["trial"] = t.index;
    rec["n"] = t.n;
    rec["p"] = t.p;
    rec["graph_seed"] = t.graph_seed;
    rec["pass"] = t.passed();
    if (!t.error.empty()) rec["error"] = t.error;
    if (t.report) rec["report"] = to_json(*t.report);
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  return j;
}

Json to_json(const LowerSharpnessReport& r) {
  Json j;
  j["description"] = r.description;
  j["edges"] = Json::array();
  for (const Edge& e : r.graph.edges()) j["edges"].push_back(to_json(e));
  j["q"] = to_json(r.q);
  j["lambda_max"] = r.lambda_max;
  j["lambda_max_over_q"] = r.ratio;
  j["nu_ceiling"] = "nu <= lambda_max / Q < 4/3";
  j["bipartite"] = r.bipartite;
  j["k2"] = Json{{"q", to_json(r.k2_q)}, {"lambda_max", r.k2_lambda_max}};
  j["pass"] = r.passed();
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["search"] = r.name;
  j["claim"] = r.claim;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["scanned"] = r.scanned;
  j["violations"] = Json::array();
  for (const Triple& t : r.violations) j["violations"].push_back(triple_json(t));
  j["witness_count"] = r.witnesses.size();
  j["witnesses"] = Json::array();
  for (const Triple& t : r.witnesses) j["witnesses"].push_back(triple_json(t));
  j["best"] = triple_json(r.best);
  j["best_ratio"] = to_json(r.best_ratio);
  Json rows = Json::array();
  for (const SearchRow& row : r.rows) {
    Json jr;
    jr["params"] = triple_json(row.params);
    jr["exact_ratio"] = to_json(row.exact_ratio);
    if (row.reference) jr["reference"] = to_json(*row.reference);
    if (row.numeric_lambda_max) jr["numeric_lambda_max"] = *row.numeric_lambda_max;
    if (row.numeric_ratio) jr["numeric_ratio"] = *row.numeric_ratio;
    if (row.shift) jr["ratio_minus_half_n"] = to_json(*row.shift);
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["confirmed"] = r.confirmed;
  return j;
}

std::string csv_header() { return "graph_id,n,edges,check,lhs,rhs,slack,pass\n"; }

std::string to_csv_rows(const BoundsReport& r) {
  std::ostringstream out;
  for (const Check& c : r.checks) {
    out << r.graph_id << ',' << r.n << ',' << r.edges << ',' << c.id << ',' << fmt_double(c.lhs) << ','
        << fmt_double(c.rhs) << ',' << fmt_double(c.slack) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_csv(const FuzzSummary& s) {
  std::ostringstream out;
  out << "trial," << csv_header();
  for (const FuzzTrial& t : s.trials) {
    if (!t.report) {
      out << t.index << ",,," << ",error,,,," << "false\n";
      continue;
    }
    std::istringstream rows(to_csv_rows(*t.report));
    std::string line;
    while (std::getline(rows, line)) out << t.index << ',' << line << '\n';
  }
  return out.str();
}

std::string render_table(const BoundsReport& r) {
  std::ostringstream out;
  const auto& c = r.constants;
  out << "graph " << r.graph_id << "  n=" << r.n << "  |E|=" << r.edges << (r.connected ? "" : "  (disconnected)")
      << '\n';
  out << "  Q          = " << c.q.value << "  (edge " << c.q.witness.u << "-" << c.q.witness.v << ")\n";
  out << "  tau        = " << c.tau.value << "  (edge " << c.tau.witness.u << "-" << c.tau.witness.v << ")\n";
  out << "  Q*tau      = " << c.q.value * c.tau.value << " = " << fmt_short((c.q.value * c.tau.value).to_double())
      << '\n';
  if (c.h) out << "  h          = " << c.h->value << '\n';
  if (c.h_bar) out << "  h_bar      = " << c.h_bar->value << '\n';
  out << "  lambda_2   = " << fmt_short(r.lambda2) << '\n';
  out << "  lambda_max = " << fmt_short(r.lambda_max) << '\n';
  out << "  residual   = " << r.residual_bound << "  (tolerance " << r.tolerance << ")\n\n";

  char line[160];
  std::snprintf(line, sizeof line, "  %-24s %-20s %-20s %-12s %s\n", "check", "lhs", "rhs", "slack", "result");
  out << line;
  for (const Check& ch : r.checks) {
    std::snprintf(line, sizeof line, "  %-24s %-20s %-20s %-12.3g %s\n", ch.id.c_str(), fmt_short(ch.lhs).c_str(),
                  fmt_short(ch.rhs).c_str(), ch.slack, ch.pass ? "pass" : "FAIL");
    out << line;
  }
  for (const auto& n : r.notices) out << "  note: " << n << '\n';
  return out.str();
}

}  // namespace cheegerlab
