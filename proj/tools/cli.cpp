#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "compnum/bounds.hpp"
#include "compnum/cover.hpp"
#include "compnum/formats.hpp"
#include "compnum/generators.hpp"
#include "compnum/realizer.hpp"
#include "json.hpp"

namespace compnum::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kBudgetEnv = "COMPNUM_BUDGET_NODES";

std::string trim_line(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.pop_back();
  }
  return line;
}

std::string read_file(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write " + path);
}

Graph parse_graph_arg(const std::string& text) {
  try {
    return parse_graph6(text);
  } catch (const ParseError& e) {
    throw InputError("graph6 '" + text + "': " + e.what());
  }
}

/// The positional graph6 argument, or the first non-blank line of stdin.
std::string graph_source(const std::string& positional, bool from_stdin, std::istream& in) {
  if (from_stdin == !positional.empty()) {
    throw UsageError("give exactly one of a graph6 argument or --stdin");
  }
  if (!from_stdin) return positional;
  std::string line;
  while (std::getline(in, line)) {
    line = trim_line(line);
    if (!line.empty()) return line;
  }
  throw InputError("no graph6 line on stdin");
}

std::optional<std::uint64_t> resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return flag;
  const char* env = std::getenv(kBudgetEnv);
  if (env == nullptr || *env == '\0') return std::nullopt;
  std::uint64_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError(std::string(kBudgetEnv) + " must be a nonnegative integer, got '" + env + "'");
  }
  return value;
}

Json vertex_list(VertexSet s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

// ---- bound ----------------------------------------------------------------

struct BoundArgs {
  std::string method = "general";
  std::optional<int> m;
  std::string graph;
  bool from_stdin = false;
  bool json = false;
  bool prune = false;
};

int cmd_bound(const BoundArgs& a, std::istream& in, std::ostream& out) {
  if (a.m && a.method != "general") throw UsageError("--m requires --method general");
  const std::string text = graph_source(a.graph, a.from_stdin, in);
  const Graph g = parse_graph_arg(text);
  if (g.order() == 0) throw InputError("bounds need at least one vertex");

  Json j;
  j["graph6"] = text;
  j["n"] = g.order();
  j["method"] = a.method;

  if (a.m) {
    if (*a.m < 1 || *a.m > g.order()) {
      throw UsageError("--m must lie in 1.." + std::to_string(g.order()));
    }
    const BoundTerm t = general_bound_term(g, *a.m);
    if (a.json) {
      j["m"] = t.m;
      j["term_raw"] = t.value;
      j["term"] = clamp_bound(t.value);
      j["argmin"] = vertex_list(t.argmin);
      out << j.dump() << '\n';
    } else {
      out << "term(m=" << t.m << ") = " << t.value << "  argmin " << t.argmin.to_string() << '\n';
    }
    return kSuccess;
  }

  if (a.method == "opsut-e" || a.method == "opsut-v") {
    const int raw = a.method == "opsut-e" ? opsut_edge_bound(g) : opsut_vertex_bound(g);
    const std::string key = a.method == "opsut-e" ? "opsut_e" : "opsut_v";
    if (a.json) {
      j[key + "_raw"] = raw;
      j[key] = clamp_bound(raw);
      out << j.dump() << '\n';
    } else {
      out << a.method << " = " << clamp_bound(raw) << " (raw " << raw << ")\n";
    }
    return kSuccess;
  }

  const BoundReport r = general_bound(g, {.prune = a.prune});
  if (a.json) {
    j["general_raw"] = r.general;
    j["general"] = clamp_bound(r.general);
    j["opsut_e_raw"] = r.opsut_edge;
    j["opsut_v_raw"] = r.opsut_vertex;
    Json terms = Json::array();
    for (const BoundTerm& t : r.per_m) {
      terms.push_back(
          {{"m", t.m}, {"value", t.value}, {"argmin", vertex_list(t.argmin)}, {"truncated", t.truncated}});
    }
    j["per_m"] = terms;
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "general = " << clamp_bound(r.general) << " (raw " << r.general << ")\n";
  out << "m\tterm\targmin\n";
  for (const BoundTerm& t : r.per_m) {
    out << t.m << '\t' << t.value << '\t' << t.argmin.to_string();
    if (t.truncated) out << "\t(pruned)";
    out << '\n';
  }
  return kSuccess;
}

// ---- exact ----------------------------------------------------------------

struct ExactArgs {
  std::string graph;
  bool from_stdin = false;
  std::string witness_path;
  std::string dot_path;
  std::optional<int> start_k;
  std::optional<std::uint64_t> budget;
  bool json = false;
};

int cmd_exact(const ExactArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  if (a.start_k && *a.start_k < 0) throw UsageError("--start-k must be nonnegative");
  const std::optional<std::uint64_t> budget = resolve_budget(a.budget);
  const std::string text = graph_source(a.graph, a.from_stdin, in);
  const Graph g = parse_graph_arg(text);
  if (g.order() == 0) throw InputError("the competition number needs at least one vertex");

  const CompetitionNumberResult r = exact_competition_number(g, {.start_k = a.start_k, .node_budget = budget});
  const RealizationWitness& w = r.witness;

  if (!a.witness_path.empty()) {
    std::ostringstream comment;
    comment << "graph " << text << '\n' << "k = " << w.k;
    write_file(a.witness_path, write_arc_list(w.digraph, comment.str()));
  }
  if (!a.dot_path.empty()) write_file(a.dot_path, write_dot(w.digraph, g.order()));

  if (a.json) {
    Json j;
    j["graph6"] = text;
    j["n"] = g.order();
    j["exact"] = r.exact;
    if (r.exact) {
      j["k"] = r.upper_bound;
    } else {
      j["k"] = nullptr;
    }
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["nodes"] = r.nodes;
    Json arcs = Json::array();
    for (const Arc& arc : w.digraph.arcs()) arcs.push_back({arc.tail, arc.head});
    j["witness"] = {{"k", w.k}, {"order", w.digraph.order()}, {"arcs", arcs}, {"ordering", w.ordering}};
    out << j.dump() << '\n';
  } else if (r.exact) {
    out << "k = " << r.upper_bound << '\n';
  } else {
    out << "k in [" << r.lower_bound << ", " << r.upper_bound << "]\n";
  }
  if (!r.exact) {
    err << "node budget exhausted after " << r.nodes << " nodes\n";
    return kBudgetExhausted;
  }
  return kSuccess;
}

// ---- competition / verify -------------------------------------------------

Digraph read_arc_list(const std::string& path, std::istream& in) {
  const std::string text = read_file(path, in);
  try {
    return parse_arc_list(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": line " + std::to_string(e.position()) + ": " + e.what());
  }
}

int cmd_competition(const std::string& path, std::istream& in, std::ostream& out) {
  out << write_graph6(competition_graph(read_arc_list(path, in))) << '\n';
  return kSuccess;
}

int cmd_verify(const std::string& graph, const std::string& path, std::istream& in, std::ostream& out) {
  const Graph g = parse_graph_arg(graph);
  const Digraph d = read_arc_list(path, in);
  const int k = d.order() - g.order();
  if (k < 0) {
    out << "invalid: witness has " << d.order() << " vertices, graph has " << g.order() << '\n';
    return kInputError;
  }
  const VerificationResult v = verify_realization(g, k, d);
  if (!v) {
    out << "invalid: " << v.diagnostic << '\n';
    return kInputError;
  }
  out << "ok: k <= " << k << '\n';
  return kSuccess;
}

// ---- survey ---------------------------------------------------------------

struct SurveyArgs {
  std::string input;
  std::optional<int> all_labeled;
  bool allow_large = false;
  std::string output;
  std::string format;
  bool with_exact = false;
  int jobs = 1;
  bool timing = false;
  std::optional<std::uint64_t> budget;
};

struct SurveyRow {
  std::string graph6;
  std::string error;
  int n = 0;
  std::size_t edges = 0;
  int theta_e = 0;
  int opsut_e = 0;
  int opsut_v = 0;
  int general = 0;
  int general_raw = 0;
  // nullopt: not requested; -1: budget exceeded.
  std::optional<int> k_exact;
  long long millis = 0;
};

SurveyRow survey_row(const std::string& line, bool with_exact, std::optional<std::uint64_t> budget,
                     bool timing) {
  SurveyRow row;
  row.graph6 = line;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Graph g = parse_graph6(line);
    if (g.order() == 0) throw std::invalid_argument("graph has no vertices");
    row.n = g.order();
    row.edges = g.edge_count();
    row.theta_e = edge_clique_cover_number(g);
    const BoundReport r = general_bound(g);
    row.opsut_e = clamp_bound(r.opsut_edge);
    row.opsut_v = clamp_bound(r.opsut_vertex);
    row.general = clamp_bound(r.general);
    row.general_raw = r.general;
    if (with_exact) {
      const auto exact = exact_competition_number(g, {.start_k = std::nullopt, .node_budget = budget});
      row.k_exact = exact.exact ? exact.upper_bound : -1;
    }
  } catch (const ParseError& e) {
    row.error = "offset " + std::to_string(e.position()) + ": " + e.what();
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  if (timing) {
    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                     .count();
  }
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string k_text(const std::optional<int>& k) {
  if (!k) return "";
  return *k < 0 ? "?" : std::to_string(*k);
}

void write_csv_row(std::ostream& out, const SurveyRow& r) {
  out << csv_field(r.graph6) << ',';
  if (!r.error.empty()) {
    // The note rides in the k_exact column; numeric columns stay empty.
    out << ",,,,,," << csv_field("error: " + r.error) << ",\n";
    return;
  }
  out << r.n << ',' << r.edges << ',' << r.theta_e << ',' << r.opsut_e << ',' << r.opsut_v << ',' << r.general
      << ',' << k_text(r.k_exact) << ',' << r.millis << '\n';
}

void write_jsonl_row(std::ostream& out, const SurveyRow& r) {
  Json j;
  j["graph6"] = r.graph6;
  if (!r.error.empty()) {
    j["error"] = r.error;
    out << j.dump() << '\n';
    return;
  }
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["theta_e"] = r.theta_e;
  j["opsut_e"] = r.opsut_e;
  j["opsut_v"] = r.opsut_v;
  j["general"] = r.general;
  j["general_raw"] = r.general_raw;
  if (!r.k_exact) {
    j["k_exact"] = nullptr;
  } else if (*r.k_exact < 0) {
    j["k_exact"] = "?";
  } else {
    j["k_exact"] = *r.k_exact;
  }
  j["millis"] = r.millis;
  out << j.dump() << '\n';
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int cmd_survey(const SurveyArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  if (a.input.empty() == !a.all_labeled) throw UsageError("give exactly one of --input or --all-labeled");
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  std::string format = a.format;
  if (format.empty()) format = ends_with(a.output, ".jsonl") ? "jsonl" : "csv";
  const std::optional<std::uint64_t> budget = resolve_budget(a.budget);

  std::vector<std::string> lines;
  if (a.all_labeled) {
    try {
      for_each_labeled_graph(
          *a.all_labeled, [&](const Graph& g) { lines.push_back(write_graph6(g)); }, a.allow_large);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--all-labeled: ") + e.what());
    }
  } else {
    std::istringstream text(read_file(a.input, in));
    std::string line;
    while (std::getline(text, line)) {
      line = trim_line(line);
      if (line.empty() || line.rfind(">>graph6<<", 0) == 0) continue;
      lines.push_back(line);
    }
  }

  std::vector<SurveyRow> rows(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      rows[i] = survey_row(lines[i], a.with_exact, budget, a.timing);
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t extra = std::min<std::size_t>(a.jobs, std::max<std::size_t>(lines.size(), 1)) - 1;
    for (std::size_t t = 0; t < extra; ++t) pool.emplace_back(worker);
    worker();
  }

  std::ostringstream body;
  if (format == "csv") body << "graph6,n,edges,theta_e,opsut_e,opsut_v,general,k_exact,millis\n";
  std::size_t errors = 0;
  std::size_t exhausted = 0;
  for (const SurveyRow& r : rows) {
    if (!r.error.empty()) ++errors;
    if (r.k_exact && *r.k_exact < 0) ++exhausted;
    if (format == "csv") {
      write_csv_row(body, r);
    } else {
      write_jsonl_row(body, r);
    }
  }
  if (a.output.empty() || a.output == "-") {
    out << body.str();
  } else {
    write_file(a.output, body.str());
  }
  if (errors > 0) err << errors << " of " << rows.size() << " lines could not be processed\n";
  if (exhausted > 0) err << exhausted << " graphs exhausted the node budget (k_exact = ?)\n";
  return kSuccess;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::string params;
  std::optional<std::uint64_t> seed;
  int count = 1;
};

std::vector<double> parse_params(const std::string& text) {
  std::vector<double> params;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("--params: not a number: '" + item + "'");
    params.push_back(value);
  }
  return params;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.count < 1) throw UsageError("--count must be at least 1");
  const GraphFamily family{a.family, parse_params(a.params)};
  std::ostringstream body;
  for (int i = 0; i < a.count; ++i) {
    std::optional<std::uint64_t> seed;
    if (a.seed) seed = *a.seed + static_cast<std::uint64_t>(i);
    try {
      body << write_graph6(generate(family, seed)) << '\n';
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("gen: ") + e.what());
    }
  }
  out << body.str();
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Competition numbers, clique covers and their lower bounds for small graphs", "compnum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "compnum 0.1.0");

  BoundArgs bound;
  CLI::App* bound_cmd = app.add_subcommand("bound", "Lower bounds on the competition number");
  bound_cmd->add_option("--method", bound.method, "Which bound")
      ->check(CLI::IsMember({"opsut-e", "opsut-v", "general"}));
  bound_cmd->add_option("--m", bound.m, "Single subset size for the general bound");
  bound_cmd->add_option("graph6", bound.graph, "Graph in graph6");
  bound_cmd->add_flag("--stdin", bound.from_stdin, "Read the graph from stdin");
  bound_cmd->add_flag("--json", bound.json, "Emit JSON");
  bound_cmd->add_flag("--prune", bound.prune, "Stop scanning subset sizes that cannot raise the maximum");

  ExactArgs exact;
  CLI::App* exact_cmd = app.add_subcommand("exact", "Exact competition number with a witness digraph");
  exact_cmd->add_option("graph6", exact.graph, "Graph in graph6");
  exact_cmd->add_flag("--stdin", exact.from_stdin, "Read the graph from stdin");
  exact_cmd->add_option("--witness", exact.witness_path, "Write the witness as an arc list");
  exact_cmd->add_option("--dot", exact.dot_path, "Write the witness as Graphviz DOT");
  exact_cmd->add_option("--start-k", exact.start_k, "First k to try");
  exact_cmd->add_option("--budget", exact.budget, std::string("Search node cap (default: $") + kBudgetEnv + ")");
  exact_cmd->add_flag("--json", exact.json, "Emit JSON");

  std::string competition_path;
  CLI::App* competition_cmd = app.add_subcommand("competition", "Competition graph of a digraph");
  competition_cmd->add_option("arcs", competition_path, "Arc-list file, '-' for stdin")->required();

  SurveyArgs survey;
  CLI::App* survey_cmd = app.add_subcommand("survey", "Tabulate bounds over a corpus");
  survey_cmd->add_option("--input", survey.input, "graph6 file, one graph per line; '-' for stdin");
  survey_cmd->add_option("--all-labeled", survey.all_labeled, "Every labeled graph on this many vertices");
  survey_cmd->add_flag("--allow-large", survey.allow_large, "Permit --all-labeled above 6");
  survey_cmd->add_option("-o,--output", survey.output, "Output path (default stdout)");
  survey_cmd->add_option("--format", survey.format, "csv or jsonl (default from the output extension)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  survey_cmd->add_flag("--with-exact", survey.with_exact, "Also compute k exactly");
  survey_cmd->add_option("--jobs", survey.jobs, "Worker threads");
  survey_cmd->add_flag("--timing", survey.timing, "Fill the millis column (otherwise 0)");
  survey_cmd->add_option("--budget", survey.budget, "Search node cap per graph");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate graphs as graph6 lines");
  gen_cmd->add_option("--family", gen.family, "path, cycle, complete, edgeless, star, multipartite, random")
      ->required();
  gen_cmd->add_option("--params", gen.params, "Comma-separated family parameters");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random families; graph i uses seed + i");
  gen_cmd->add_option("--count", gen.count, "Number of graphs");

  std::string verify_graph;
  std::string verify_path;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a witness digraph against a graph");
  verify_cmd->group("");
  verify_cmd->add_option("graph6", verify_graph)->required();
  verify_cmd->add_option("witness", verify_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*bound_cmd) return cmd_bound(bound, in, out);
    if (*exact_cmd) return cmd_exact(exact, in, out, err);
    if (*competition_cmd) return cmd_competition(competition_path, in, out);
    if (*survey_cmd) return cmd_survey(survey, in, out, err);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*verify_cmd) return cmd_verify(verify_graph, verify_path, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

}  // namespace compnum::cli
