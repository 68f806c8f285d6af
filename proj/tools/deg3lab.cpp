// deg3lab command-line tool.
//
// Exit codes:
//   0  success / check passed
//   1  check failed, or an acceptance criterion failed
//   2  usage error or construction precondition violated
//   3  inconclusive (budget exhausted)
//   4  input file missing or malformed

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "deg3lab/acceptance.hpp"
#include "deg3lab/deg3lab.hpp"

using deg3lab::Graph;
using deg3lab::Tree;
using deg3lab::Vertex;
using json = nlohmann::json;

namespace {

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3, kBadInput = 4 };

struct Options {
  std::optional<std::uint64_t> budget;
  bool deterministic = false;
  std::string json_path;
  std::string witness_path;
  std::string output_path;
  std::vector<std::string> argv;
};

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::optional<std::uint64_t> env_budget() {
  const char* v = std::getenv("DEG3LAB_BUDGET");
  if (v == nullptr || *v == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const auto b = std::stoull(v, &used);
    if (used == std::string(v).size() && b > 0) return b;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring malformed DEG3LAB_BUDGET\n";
  return std::nullopt;
}

std::uint64_t budget_or(const Options& o, std::uint64_t fallback) {
  if (o.budget) return *o.budget;
  if (auto e = env_budget()) return *e;
  return fallback;
}

class Reporter {
 public:
  Reporter(const Options& o, std::string command, const std::string& input)
      : opts_(o), start_(std::chrono::steady_clock::now()) {
    report_["command"] = std::move(command);
    report_["args"] = o.argv;
    report_["input_digest"] = fnv1a(input);
  }

  json& results() { return report_["results"]; }
  void budget(const json& b) { report_["budget"] = b; }

  // Writes the report to stdout (unless quiet) and to --json.
  void emit(bool to_stdout = true) {
    if (!opts_.deterministic) {
      report_["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    const std::string text = report_.dump(2) + "\n";
    if (to_stdout) std::cout << text;
    if (!opts_.json_path.empty()) {
      std::ofstream out(opts_.json_path);
      if (!out) throw std::runtime_error("cannot write " + opts_.json_path);
      out << text;
    }
  }

 private:
  const Options& opts_;
  json report_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw deg3lab::ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw deg3lab::PreconditionError("bad integer '" + item + "' in list");
    out.push_back(v);
  }
  if (out.empty()) throw deg3lab::PreconditionError("empty list");
  return out;
}

int parse_int(const std::string& text) {
  const auto xs = parse_int_list(text);
  if (xs.size() != 1) throw deg3lab::PreconditionError("expected one integer, got '" + text + "'");
  return xs[0];
}

json lengths_json(const deg3lab::LengthSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

// Trees with an even 1-3 shape get the polynomial spectrum.
std::optional<Tree> even_13_tree_of(const Graph& g) {
  auto d = deg3lab::recognize_g_of_t(g);
  if (!d || !deg3lab::is_13_tree(d->tree) || !deg3lab::is_even_tree(d->tree)) return std::nullopt;
  return d->tree;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  std::vector<std::string> params;
  bool swap = false;
};

int cmd_construct(const Options& o, const ConstructArgs& a) {
  auto need = [&](std::size_t count) {
    if (a.params.size() != count) {
      throw deg3lab::PreconditionError(a.kind + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  Graph g;
  std::optional<Vertex> root;
  json meta;
  if (a.kind == "wheel") {
    need(1);
    g = deg3lab::wheel(parse_int(a.params[0]));
  } else if (a.kind == "h") {
    need(1);
    g = deg3lab::h_graph(parse_int(a.params[0]));
  } else if (a.kind == "glue") {
    need(2);
    const int i = parse_int(a.params[0]);
    const int j = parse_int(a.params[1]);
    g = deg3lab::glue_h(i, j, a.swap);
    meta["swap"] = a.swap;
  } else if (a.kind == "spine-tree" || a.kind == "g-of-t") {
    need(1);
    const auto xs = parse_int_list(a.params[0]);
    const Tree t = deg3lab::build_spine_tree(xs);
    meta["sequence"] = xs;
    meta["tree_order"] = t.order();
    if (a.kind == "spine-tree") {
      g = t.graph();
      root = 0;
    } else {
      g = deg3lab::g_of_t(t);
    }
  } else if (a.kind == "counterexample" || a.kind == "counterexample-tree") {
    need(1);
    const Tree t = deg3lab::counterexample_tree(parse_int(a.params[0]));
    meta["tree_order"] = t.order();
    if (a.kind == "counterexample") {
      g = deg3lab::g_of_t(t);
    } else {
      g = t.graph();
      root = 0;
    }
  } else if (a.kind == "perfect-tree" || a.kind == "bb-tree") {
    need(1);
    const int d = parse_int(a.params[0]);
    const Tree t = a.kind == "perfect-tree" ? deg3lab::perfect_binary_tree(d) : deg3lab::bollobas_brightwell_tree(d);
    g = t.graph();
    root = t.root();
  } else {
    throw deg3lab::PreconditionError("unknown construction '" + a.kind + "'");
  }
  const std::string text = deg3lab::to_edge_list(g, root);
  Reporter rep(o, "construct", a.kind + " " + [&] {
    std::string s;
    for (const auto& p : a.params) s += p + " ";
    return s + (a.swap ? "swap" : "");
  }());
  meta["kind"] = a.kind;
  meta["params"] = a.params;
  meta["n"] = g.order();
  meta["edges"] = g.edge_count();
  meta["output_digest"] = fnv1a(text);
  rep.results() = meta;
  if (o.output_path.empty()) {
    std::cout << text;
    rep.emit(false);
  } else {
    std::ofstream out(o.output_path);
    if (!out) throw std::runtime_error("cannot write " + o.output_path);
    out << text;
    meta["output"] = o.output_path;
    rep.results() = meta;
    rep.emit();
  }
  return kPass;
}

// -------------------------------------------------------------------- check

struct Verdict3 {
  int code;
  json detail;
};

Verdict3 cycle_check(const Graph& g, int length, bool want_present, std::uint64_t budget) {
  json d{{"length", length}};
  std::optional<bool> present;
  if (length < 3 || length > g.order()) {
    d["method"] = "trivial";
    present = false;
  } else if (auto t = even_13_tree_of(g)) {
    d["method"] = "tree";
    present = deg3lab::cycle_spectrum_via_tree(*t).contains(length);
  } else {
    d["method"] = "search";
    const auto r = deg3lab::find_cycle_of_length(g, length, budget);
    d["expansions"] = r.expansions;
    if (r.status == deg3lab::CycleStatus::Found) {
      d["witness"] = r.witness;
      present = true;
    } else if (r.status == deg3lab::CycleStatus::NotFound) {
      present = false;
    }
  }
  if (!present) {
    d["status"] = "inconclusive";
    return {kInconclusive, d};
  }
  d["present"] = *present;
  return {*present == want_present ? kPass : kFail, d};
}

Verdict3 run_check(const std::string& name, const Graph& g, std::uint64_t budget) {
  using namespace deg3lab;
  auto verdict = [](bool ok, json d) { return Verdict3{ok ? kPass : kFail, std::move(d)}; };
  if (name == "degree3-critical") {
    json d;
    d["edge_count_ok"] = static_cast<long long>(g.edge_count()) == 2LL * g.order() - 2;
    if (auto w = find_proper_induced_min_degree3(g)) d["induced_witness"] = *w;
    d["core_is_whole_graph"] = static_cast<int>(three_core_vertices(g).size()) == g.order();
    return verdict(is_degree3_critical(g), d);
  }
  if (name == "no-proper-subgraph") {
    json d;
    const auto w = find_proper_subgraph_min_degree3(g);
    if (w) {
      d["witness"]["vertices"] = w->vertices;
      if (w->deleted_edge) d["witness"]["deleted_edge"] = {w->deleted_edge->u, w->deleted_edge->v};
    }
    return verdict(!w, d);
  }
  if (name == "family-member") {
    const auto c = classify_family_g(g);
    return verdict(c.verdict != FamilyVerdict::NotMember, json{{"verdict", to_string(c.verdict)}});
  }
  if (name == "pancyclic") {
    detail::require(g.order() >= 3, "pancyclic needs n >= 3");
    json d;
    json missing = json::array();
    json inconclusive = json::array();
    if (auto t = even_13_tree_of(g)) {
      d["method"] = "tree";
      const auto s = cycle_spectrum_via_tree(*t);
      for (int l = 3; l <= g.order(); ++l) {
        if (!s.contains(l)) missing.push_back(l);
      }
    } else {
      d["method"] = "search";
      for (int l = 3; l <= g.order(); ++l) {
        const auto st = contains_cycle_of_length(g, l, budget);
        if (st == CycleStatus::NotFound) missing.push_back(l);
        if (st == CycleStatus::Inconclusive) inconclusive.push_back(l);
      }
    }
    d["missing"] = missing;
    d["inconclusive"] = inconclusive;
    if (!missing.empty()) return {kFail, d};
    return {inconclusive.empty() ? kPass : kInconclusive, d};
  }
  for (const auto& [prefix, want] : {std::pair<std::string, bool>{"no-cycle-", false}, {"has-cycle-", true}}) {
    if (name.rfind(prefix, 0) == 0) return cycle_check(g, parse_int(name.substr(prefix.size())), want, budget);
  }
  throw PreconditionError("unknown check '" + name + "'");
}

int cmd_check(const Options& o, const std::string& name, const std::string& path) {
  const std::string text = read_file(path);
  const auto file = deg3lab::parse_edge_list(text);
  const std::uint64_t budget = budget_or(o, deg3lab::kDefaultCycleBudget);
  Reporter rep(o, "check", text);
  const Verdict3 v = run_check(name, file.graph, budget);
  rep.results() = v.detail;
  rep.results()["check"] = name;
  rep.results()["n"] = file.graph.order();
  rep.results()["outcome"] = v.code == kPass ? "pass" : v.code == kFail ? "fail" : "inconclusive";
  rep.budget({{"cycle_budget", budget}});
  rep.emit();
  return v.code;
}

// ----------------------------------------------------------------- spectrum

int cmd_spectrum(const Options& o, const std::string& path, const std::string& method) {
  const std::string text = read_file(path);
  const auto file = deg3lab::parse_edge_list(text);
  const Graph& g = file.graph;
  const std::uint64_t budget = budget_or(o, deg3lab::kDefaultCycleBudget);
  Reporter rep(o, "spectrum", text);
  std::optional<Tree> tree;
  if (method != "exhaustive") tree = even_13_tree_of(g);
  if (method == "tree" && !tree) throw deg3lab::PreconditionError("graph is not G(T) for an even 1-3 tree");
  deg3lab::CycleSpectrum s = tree ? deg3lab::cycle_spectrum_via_tree(*tree) : deg3lab::cycle_spectrum_exhaustive(g, budget);
  json r;
  r["n"] = g.order();
  r["method"] = tree ? "tree" : "exhaustive";
  r["lengths"] = lengths_json(s.lengths);
  r["distinct_lengths"] = s.lengths.size();
  json w = json::object();
  for (const auto& [len, cyc] : s.witnesses) w[std::to_string(len)] = cyc;
  r["witnesses"] = w;
  r["inconclusive"] = s.inconclusive;
  r["expansions"] = s.expansions;
  rep.results() = r;
  rep.budget({{"cycle_budget", budget}});
  rep.emit();
  return s.complete() ? kPass : kInconclusive;
}

// ----------------------------------------------------------------- classify

int cmd_classify(const Options& o, const std::string& path) {
  const std::string text = read_file(path);
  const auto file = deg3lab::parse_edge_list(text);
  Reporter rep(o, "classify", text);
  const auto c = deg3lab::classify_family_g(file.graph);
  json r;
  r["verdict"] = deg3lab::to_string(c.verdict);
  switch (c.verdict) {
    case deg3lab::FamilyVerdict::Wheel:
      r["params"] = {{"n", c.n}};
      r["mapping"] = c.mapping;
      break;
    case deg3lab::FamilyVerdict::Glued:
      r["params"] = {{"i", c.i}, {"j", c.j}, {"swap", c.swap}};
      r["mapping"] = c.mapping;
      break;
    case deg3lab::FamilyVerdict::NotMember:
      r["params"] = {{"n", c.n}};
      r["witness"]["reason"] = c.reason;
      if (c.witness) {
        r["witness"]["vertices"] = c.witness->vertices;
        if (c.witness->deleted_edge) r["witness"]["deleted_edge"] = {c.witness->deleted_edge->u, c.witness->deleted_edge->v};
      }
      break;
  }
  rep.results() = r;
  rep.emit();
  return kPass;
}

// ---------------------------------------------------------- search-avoiding

int cmd_search(const Options& o, int k) {
  const std::uint64_t budget = budget_or(o, deg3lab::kDefaultSearchBudget);
  Reporter rep(o, "search-avoiding", "k=" + std::to_string(k));
  const auto r = deg3lab::search_k_avoiding(k, budget);
  json res;
  res["k"] = r.k;
  res["verdict"] = deg3lab::to_string(r.verdict);
  res["witness_period"] = r.witness_period;
  res["states_explored"] = r.stats.states_explored;
  res["prefix_nodes"] = r.stats.prefix_nodes;
  res["extensions"] = r.stats.extensions;
  res["budget_exhausted"] = r.stats.budget_exhausted;
  if (r.verdict == deg3lab::Verdict::Exists && !o.witness_path.empty()) {
    std::ofstream out(o.witness_path);
    if (!out) throw std::runtime_error("cannot write " + o.witness_path);
    out << json{{"k", k}, {"period", r.witness_period}}.dump() << "\n";
    res["witness_file"] = o.witness_path;
  }
  rep.results() = res;
  rep.budget({{"search_budget", budget}});
  rep.emit();
  return r.verdict == deg3lab::Verdict::Inconclusive ? kInconclusive : kPass;
}

int cmd_replay(const Options& o, const std::string& path) {
  const std::string text = read_file(path);
  json w;
  try {
    w = json::parse(text);
  } catch (const json::exception& e) {
    throw deg3lab::ParseError(std::string("witness file: ") + e.what());
  }
  if (!w.contains("k") || !w.contains("period") || !w["k"].is_number_integer() || !w["period"].is_array()) {
    throw deg3lab::ParseError("witness file needs integer 'k' and array 'period'");
  }
  const int k = w["k"].get<int>();
  std::vector<int> period;
  try {
    period = w["period"].get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw deg3lab::ParseError(std::string("witness period: ") + e.what());
  }
  Reporter rep(o, "replay", text);
  const bool ok = deg3lab::is_k_avoiding_periodic(period, k);
  rep.results() = {{"k", k}, {"period_length", period.size()}, {"k_avoiding", ok}};
  rep.emit();
  return ok ? kPass : kFail;
}

// --------------------------------------------------------------- acceptance

int cmd_acceptance(const Options& o, const std::string& suite) {
  Reporter rep(o, "acceptance", suite);
  json rows = json::array();
  bool all = true;
  deg3lab::acceptance::run_suite(suite, [&](const deg3lab::acceptance::CriterionResult& r) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " [" << r.suite << "] " << r.title << ": "
              << r.detail;
    if (!o.deterministic) std::cout << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    std::cout << std::endl;
    json row{{"id", r.id}, {"suite", r.suite}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
    if (!o.deterministic) row["seconds"] = r.seconds;
    rows.push_back(row);
  });
  rep.results() = {{"suite", suite}, {"criteria", rows}, {"passed", all}};
  rep.emit(false);
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int t = 1; t < argc; ++t) o.argv.emplace_back(argv[t]);

  CLI::App app{"Degree 3-critical graphs, 1-3 tree path lengths and k-avoiding sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t budget = 0;
  app.add_option("--budget", budget, "search budget (cycle expansions or sequence states)")->check(CLI::PositiveNumber);
  app.add_flag("--deterministic", o.deterministic, "omit timings from reports");
  app.add_option("--json", o.json_path, "also write the JSON report to this path");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "write a graph or tree as an edge list");
  construct->add_option("kind", ca.kind,
                        "wheel | h | glue | spine-tree | g-of-t | counterexample | counterexample-tree | perfect-tree | "
                        "bb-tree")
      ->required();
  construct->add_option("params", ca.params, "size parameters; sequences as comma lists");
  construct->add_flag("--swap", ca.swap, "glue with x = y', y = x'");
  construct->add_option("-o,--output", o.output_path, "edge-list file (default stdout)");

  std::string check_name;
  std::string path;
  auto* check = app.add_subcommand("check", "run one check on an edge-list file");
  check->add_option("check", check_name,
                    "degree3-critical | no-proper-subgraph | family-member | pancyclic | no-cycle-L | has-cycle-L")
      ->required();
  check->add_option("file", path)->required();

  std::string method = "auto";
  auto* spectrum = app.add_subcommand("spectrum", "cycle spectrum of an edge-list file");
  spectrum->add_option("file", path)->required();
  spectrum->add_option("--method", method, "auto | tree | exhaustive")
      ->check(CLI::IsMember({"auto", "tree", "exhaustive"}));

  auto* classify = app.add_subcommand("classify", "wheel / glued pair / non-member");
  classify->add_option("file", path)->required();

  int k = 0;
  auto* search = app.add_subcommand("search-avoiding", "decide whether a k-avoiding sequence exists");
  search->add_option("k", k)->required();
  search->add_option("--witness", o.witness_path, "write the periodic witness here");

  auto* replay = app.add_subcommand("replay", "re-verify a witness file written by search-avoiding");
  replay->add_option("file", path)->required();

  std::string suite = "all";
  auto* acceptance = app.add_subcommand("acceptance", "run acceptance criteria");
  acceptance->add_option("suite", suite)->check(CLI::IsMember(deg3lab::acceptance::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (budget > 0) o.budget = budget;

  try {
    if (*construct) return cmd_construct(o, ca);
    if (*check) return cmd_check(o, check_name, path);
    if (*spectrum) return cmd_spectrum(o, path, method);
    if (*classify) return cmd_classify(o, path);
    if (*search) return cmd_search(o, k);
    if (*replay) return cmd_replay(o, path);
    if (*acceptance) return cmd_acceptance(o, suite);
  } catch (const deg3lab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const deg3lab::BudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const deg3lab::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
