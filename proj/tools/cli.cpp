#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "cheegerlab/constants.hpp"
#include "cheegerlab/edge_list.hpp"
#include "cheegerlab/error.hpp"
#include "cheegerlab/families.hpp"
#include "cheegerlab/harness.hpp"
#include "cheegerlab/report.hpp"

namespace cheegerlab::cli {
namespace {

enum class Format { Auto, Json, Csv, Table };

struct OutputFlags {
  bool json = false;
  bool csv = false;
  bool table = false;

  void attach(CLI::App* cmd) {
    auto* j = cmd->add_flag("--json", json, "Emit JSON");
    auto* c = cmd->add_flag("--csv", csv, "Emit CSV (one row per check)");
    auto* t = cmd->add_flag("--table", table, "Emit a human-readable table");
    j->excludes(c)->excludes(t);
    c->excludes(t);
  }

  Format resolve(bool tty) const {
    if (json) return Format::Json;
    if (csv) return Format::Csv;
    if (table) return Format::Table;
    return tty ? Format::Table : Format::Json;
  }
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
      return kParseError;
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::Overflow:
      return kCheckFailed;
    default:
      return kValidationError;
  }
}

void emit_report(std::ostream& out, const BoundsReport& r, Format format, bool with_spectrum,
                 const Json& extra = Json::object()) {
  switch (format) {
    case Format::Csv:
      out << csv_header() << to_csv_rows(r);
      break;
    case Format::Table:
      out << render_table(r);
      if (!extra.empty()) out << "  " << extra.dump() << '\n';
      break;
    default: {
      Json j = to_json(r, with_spectrum);
      for (const auto& [key, value] : extra.items()) j[key] = value;
      out << j.dump(2) << '\n';
    }
  }
}

void push_check(BoundsReport& r, std::string id, double lhs, double rhs) {
  const double slack = rhs - lhs;
  r.checks.push_back({std::move(id), lhs, rhs, slack, slack >= -r.tolerance});
}

Graph make_family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t count, const char* usage) {
    if (params.size() != count) {
      throw Error(ErrorCode::InvalidParams, "family " + name + " expects " + usage);
    }
  };
  if (name == "one-sided") {
    need(3, "n k d");
    return build_one_sided({params[0], params[1], params[2]});
  }
  if (name == "complete") {
    need(1, "n");
    return complete_graph(params[0]);
  }
  if (name == "complete-bipartite") {
    need(2, "a b");
    return complete_bipartite(params[0], params[1]);
  }
  if (name == "cycle") {
    need(1, "n");
    return cycle_graph(params[0]);
  }
  if (name == "path") {
    need(1, "n");
    return path_graph(params[0]);
  }
  if (name == "petal") {
    need(1, "m");
    return petal_graph(params[0]);
  }
  throw Error(ErrorCode::InvalidParams,
              "unknown family '" + name + "' (one-sided, complete, complete-bipartite, cycle, path, petal)");
}

std::string summary_table(const FuzzSummary& s) {
  std::string text = "trials: " + std::to_string(s.trials.size()) + "\nviolations: " + std::to_string(s.violations) + "\n";
  for (const auto& [id, count] : s.check_failures) text += "  " + id + ": " + std::to_string(count) + "\n";
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool tty) {
  CLI::App app{"Cheeger-like constants and largest-eigenvalue bounds for graphs", "cheegerlab"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Check every bound on a graph read from an edge-list file");
  std::string analyze_path;
  double analyze_tol = kDefaultCheckTolerance;
  bool analyze_spectrum = false;
  OutputFlags analyze_fmt;
  analyze->add_option("file", analyze_path, "Edge-list file")->required();
  analyze->add_option("--tol", analyze_tol, "Slack tolerance for the inequality checks");
  analyze->add_flag("--with-spectrum", analyze_spectrum, "Include eigenvalues and eigenvectors");
  analyze_fmt.attach(analyze);

  // family
  auto* family = app.add_subcommand("family", "Generate a graph family member");
  std::string family_name;
  std::vector<int> family_params;
  std::string family_out;
  bool family_analyze = false;
  double family_tol = kDefaultCheckTolerance;
  OutputFlags family_fmt;
  family->add_option("name", family_name, "one-sided | complete | complete-bipartite | cycle | path | petal")
      ->required();
  family->add_option("params", family_params, "Integer parameters, e.g. 'n k d' for one-sided");
  auto* out_opt = family->add_option("--out", family_out, "Write the edge list to this path");
  auto* analyze_flag = family->add_flag("--analyze", family_analyze, "Analyze the generated graph");
  out_opt->excludes(analyze_flag);
  family->add_option("--tol", family_tol, "Slack tolerance for --analyze");
  family_fmt.attach(family);

  // fuzz
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check every bound on seeded random connected graphs");
  FuzzOptions fuzz_opts;
  std::string replay_path;
  std::string replay_dir = "cheegerlab-replays";
  bool all_trials = false;
  OutputFlags fuzz_fmt;
  fuzz_cmd->add_option("--trials", fuzz_opts.trials, "Number of random graphs")->capture_default_str();
  fuzz_cmd->add_option("--n-min", fuzz_opts.n_min, "Smallest vertex count")->capture_default_str();
  fuzz_cmd->add_option("--n-max", fuzz_opts.n_max, "Largest vertex count")->capture_default_str();
  fuzz_cmd->add_option("--p", fuzz_opts.p_values, "Edge probabilities (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz_opts.seed, "Base seed")->capture_default_str();
  fuzz_cmd->add_option("--threads", fuzz_opts.threads, "Worker threads")->capture_default_str();
  fuzz_cmd->add_option("--tol", fuzz_opts.tol, "Slack tolerance")->capture_default_str();
  fuzz_cmd->add_option("--replay", replay_path, "Re-run one saved replay file instead of fuzzing");
  fuzz_cmd->add_option("--replay-dir", replay_dir, "Directory for replay files of failing graphs")
      ->capture_default_str();
  fuzz_cmd->add_flag("--all-trials", all_trials, "Include every trial's report in JSON output");
  fuzz_fmt.attach(fuzz_cmd);

  // search
  auto* search = app.add_subcommand("search", "Exact scans over degree triples and one-sided parameters");
  search->require_subcommand(1);
  auto* tau_cmd = search->add_subcommand("tau-bound", "Exhaustive scan for tau >= 0.54 n");
  int tau_n_max = 300;
  tau_cmd->add_option("--n-max", tau_n_max, "Largest n")->capture_default_str();
  auto* eps_cmd = search->add_subcommand("epsilon-witness", "One-sided graphs with lambda_max > 0.53 n Q");
  int eps_n_max = 249;
  bool eps_no_build = false;
  eps_cmd->add_option("--n-max", eps_n_max, "Largest n")->capture_default_str();
  eps_cmd->add_flag("--no-build", eps_no_build, "Skip building the (249,69,241) graph");
  auto* shift_cmd = search->add_subcommand("no-shift", "Ratio - n/2 along (n, n/4, n-1)");
  std::vector<int> shift_list{8, 16, 24, 32, 40};
  shift_cmd->add_option("--n-list", shift_list, "Multiples of 4, comma separated")->delimiter(',');

  // demo
  auto* demo = app.add_subcommand("demo", "Sharpness of the lower bound Q <= lambda_max");
  OutputFlags demo_fmt;
  demo_fmt.attach(demo);

  std::vector<const char*> argv{"cheegerlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*analyze) {
      const Graph g = read_edge_list_file(analyze_path);
      const BoundsReport r = analyze_graph(g, {analyze_tol, analyze_spectrum});
      for (const auto& note : r.notices) err << "notice: " << note << '\n';
      emit_report(out, r, analyze_fmt.resolve(tty), analyze_spectrum);
      if (!r.all_pass()) {
        for (const Check& c : r.checks) {
          if (!c.pass) err << "check failed: " << c.id << " (slack " << c.slack << ")\n";
        }
        return kCheckFailed;
      }
      return kOk;
    }

    if (*family) {
      const Graph g = make_family(family_name, family_params);
      if (!family_out.empty()) {
        std::ofstream file(family_out);
        if (!file) throw Error(ErrorCode::InvalidParams, "cannot write " + family_out);
        write_edge_list(file, g);
        return kOk;
      }
      if (!family_analyze) {
        write_edge_list(out, g);
        return kOk;
      }
      BoundsReport r = analyze_graph(g, {family_tol, false});
      Json extra = Json::object();
      if (family_name == "one-sided") {
        const OneSidedParams p{family_params[0], family_params[1], family_params[2]};
        const LambdaPrediction pred = predict_lambda_max(p);
        const Rational q = predict_q(p);
        if (pred.exact()) {
          push_check(r, "predicted-lambda-max", std::abs(r.lambda_max - pred.value.to_double()), 1e-8);
        } else {
          push_check(r, "predicted-lambda-max-lower", pred.lower.to_double(), r.lambda_max);
          push_check(r, "predicted-lambda-max-upper", r.lambda_max, pred.upper.to_double());
        }
        push_check(r, "predicted-q", q == r.constants.q.value ? 0.0 : 1.0, 0.0);
        extra["prediction"] = Json{{"lambda_max", to_json(pred)}, {"q", to_json(q)}};
      }
      emit_report(out, r, family_fmt.resolve(tty), false, extra);
      return r.all_pass() ? kOk : kCheckFailed;
    }

    if (*fuzz_cmd) {
      const Format format = fuzz_fmt.resolve(tty);
      if (!replay_path.empty()) {
        const Graph g = read_edge_list_file(replay_path);
        const BoundsReport r = check_graph(g, fuzz_opts.tol);
        emit_report(out, r, format, false);
        return r.all_pass() ? kOk : kCheckFailed;
      }
      const FuzzSummary s = fuzz(fuzz_opts);
      if (s.violations > 0) {
        std::filesystem::create_directories(replay_dir);
        for (const FuzzTrial& t : s.trials) {
          if (t.passed() || !t.graph) continue;
          const auto path = std::filesystem::path(replay_dir) / ("trial-" + std::to_string(t.index) + ".txt");
          std::ofstream(path) << replay_contents(t);
          err << "violation in trial " << t.index << ", replay file " << path.string() << '\n';
        }
      }
      switch (format) {
        case Format::Csv: out << to_csv(s); break;
        case Format::Table: out << summary_table(s); break;
        default: out << to_json(s, all_trials).dump(2) << '\n';
      }
      return s.violations == 0 ? kOk : kCheckFailed;
    }

    if (*search) {
      std::optional<SearchResult> result;
      if (*tau_cmd) result = tau_upper_search(tau_n_max);
      if (*eps_cmd) result = epsilon_witness_search(eps_n_max, !eps_no_build);
      if (*shift_cmd) result = no_linear_shift_bound(shift_list);
      out << to_json(*result).dump(2) << '\n';
      return result->confirmed ? kOk : kCheckFailed;
    }

    if (*demo) {
      const LowerSharpnessReport r = lower_sharpness_demo();
      if (demo_fmt.resolve(tty) == Format::Table) {
        out << r.description << ": Q = " << r.q << ", lambda_max = " << r.lambda_max
            << ", lambda_max/Q = " << r.ratio << " < 4/3\n"
            << "K2: Q = " << r.k2_q << ", lambda_max = " << r.k2_lambda_max << '\n';
      } else {
        out << to_json(r).dump(2) << '\n';
      }
      return r.passed() ? kOk : kCheckFailed;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kParseError;
}

}  // namespace cheegerlab::cli
