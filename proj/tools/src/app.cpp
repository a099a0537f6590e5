#include "distidx/cli/app.hpp"

#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "distidx/cli/report_json.hpp"
#include "distidx/enumerate.hpp"
#include "distidx/error.hpp"
#include "distidx/families.hpp"
#include "distidx/graph6.hpp"
#include "distidx/indices.hpp"
#include "distidx/invariants.hpp"
#include "distidx/verify.hpp"

namespace distidx::cli {

namespace {

struct ComputeArgs {
  std::string index;
  double j = 1.0;
  std::string weight = "id";
  std::vector<std::string> graph6;
  std::string file;
};

struct ConstructArgs {
  std::string family;
  std::vector<int> params;
  std::string out = "graph6";
};

struct EnumerateArgs {
  std::string kind;
  int n = 0;
  std::optional<int> matching;
  std::optional<int> alpha;
  std::string bipartition;
  bool unicyclic = false;
  bool count_only = false;
};

struct VerifyArgs {
  std::string statement;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> alpha;
  double j = 1.0;
  std::string weight = "id";
  std::optional<int> k_max;
  std::string source = "builtin";
  bool json = false;
  int threads = 0;
};

Error usage(const std::string& what) { return Error(ErrorCode::kUsage, what); }

std::string edges_text(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ':';
  for (const Edge& e : g.edges()) os << ' ' << e.u << '-' << e.v;
  return os.str();
}

// ---------------------------------------------------------------- compute

std::vector<Graph> compute_inputs(const ComputeArgs& a) {
  std::vector<Graph> graphs;
  for (const auto& s : a.graph6) graphs.push_back(parse_graph6(s));
  if (!a.file.empty()) {
    auto more = read_graph6_file(a.file);
    graphs.insert(graphs.end(), more.begin(), more.end());
  }
  if (graphs.empty()) throw usage("compute needs --graph6 or --file");
  return graphs;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string compute_one(const ComputeArgs& a, const ConvexWeight& f,
                        const Graph& g) {
  const std::string& idx = a.index;
  if (idx == "matching") return std::to_string(matching_number(g));
  if (idx == "alpha") return std::to_string(independence_number(g));
  const DistanceMatrix d(g);
  if (idx == "wiener") return std::to_string(wiener(d));
  if (idx == "hyper") return hyper_wiener(d).to_string();
  if (idx == "wex") return std::to_string(external_wiener(g, d));
  if (idx == "tw") return std::to_string(terminal_wiener(g, d));
  if (idx == "sz") return std::to_string(szeged(g, d));
  if (idx == "wsz") return std::to_string(weighted_szeged(g, d));
  if (idx == "w-minus-ecc") return std::to_string(w_minus_ecc(d));
  if (idx == "ecc") return std::to_string(total_eccentricity(d));
  if (idx == "diameter") return std::to_string(diameter(d));
  if (idx == "radius") return std::to_string(radius(d));
  if (idx == "wf") return generalized_wiener(d, f).to_string();
  if (idx == "mu") {
    if (a.j == 1.0) return mean_distance(d).to_string();
    return format_double(power_mean_distance(d, a.j));
  }
  throw usage("unknown index " + idx);
}

int do_compute(const ComputeArgs& a, std::ostream& out) {
  const ConvexWeight f = ConvexWeight::parse(a.weight);
  for (const Graph& g : compute_inputs(a)) out << compute_one(a, f, g) << '\n';
  return kExitOk;
}

// -------------------------------------------------------------- construct

using Builder = std::function<std::vector<Graph>(const std::vector<int>&)>;

const std::map<std::string, std::pair<std::size_t, Builder>>& builders() {
  using P = const std::vector<int>&;
  static const std::map<std::string, std::pair<std::size_t, Builder>> table{
      {"a-nm", {2, [](P p) { return std::vector{a_nm(p[0], p[1])}; }}},
      {"dumbbell", {2, [](P p) { return std::vector{dumbbell(p[0], p[1])}; }}},
      {"g4", {3, [](P p) { return std::vector{g4(p[0], p[1], p[2])}; }}},
      {"double-broom",
       {3, [](P p) { return std::vector{double_broom(p[0], p[1], p[2])}; }}},
      {"path", {1, [](P p) { return std::vector{path(p[0])}; }}},
      {"cycle", {1, [](P p) { return std::vector{cycle(p[0])}; }}},
      {"star", {1, [](P p) { return std::vector{star(p[0])}; }}},
      {"complete", {1, [](P p) { return std::vector{complete(p[0])}; }}},
      {"kpq",
       {2, [](P p) { return std::vector{complete_bipartite(p[0], p[1])}; }}},
      {"cycle-with-path",
       {2, [](P p) { return std::vector{cycle_with_path(p[0], p[1])}; }}},
      {"subdivided-star",
       {1, [](P p) { return std::vector{subdivided_star(p[0])}; }}},
      {"min-we-family", {1, [](P p) { return min_we_extremal_family(p[0]); }}},
      {"balanced-double-brooms",
       {1, [](P p) { return balanced_double_brooms(p[0]); }}},
  };
  return table;
}

std::vector<Graph> construct(const ConstructArgs& a) {
  const auto it = builders().find(a.family);
  if (it == builders().end()) throw usage("unknown family " + a.family);
  const auto& [arity, build] = it->second;
  if (a.params.size() != arity) {
    throw usage(a.family + " takes " + std::to_string(arity) + " parameter(s)");
  }
  return build(a.params);
}

int do_construct(const ConstructArgs& a, std::ostream& out) {
  for (const Graph& g : construct(a)) {
    out << (a.out == "edges" ? edges_text(g) : emit_graph6(g)) << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------- enumerate

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw usage("expected P,Q");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw usage("expected P,Q");
  }
}

int do_enumerate(const EnumerateArgs& a, std::ostream& out) {
  Filter filter;
  filter.matching = a.matching;
  filter.alpha = a.alpha;
  filter.unicyclic = a.unicyclic;
  if (!a.bipartition.empty()) {
    auto [p, q] = parse_pair(a.bipartition);
    filter.bipartition = std::pair{std::min(p, q), std::max(p, q)};
  }
  std::unique_ptr<GraphSource> source;
  if (a.kind == "trees") {
    source = tree_source(a.n);
  } else if (a.kind == "graphs") {
    source = connected_source(a.n);
  } else {
    source = unicyclic_source(a.n);
  }
  FilterCounts counts;
  const GraphVisitor print = [&](const Graph& g) {
    if (!a.count_only) out << emit_graph6(g) << '\n';
  };
  source->for_each({}, filtered(filter, print, counts));
  if (a.count_only) out << counts.accepted << '\n';
  return kExitOk;
}

// ----------------------------------------------------------------- verify

int need(const std::optional<int>& v, const char* name) {
  if (!v) throw usage(std::string("this statement needs ") + name);
  return *v;
}

std::unique_ptr<GraphSource> make_source(const VerifyArgs& a, int n) {
  if (a.source == "builtin") return connected_source(n);
  if (a.source == "trees") return tree_source(n);
  if (a.source == "unicyclic") return unicyclic_source(n);
  return graph6_file_source(a.source, n);
}

std::vector<CheckReport> run_statement(const VerifyArgs& a) {
  const ScanOptions opt{a.threads};
  const std::string& s = a.statement;
  if (s == "cycle-vs-path") return {check_cycle_vs_path(a.k_max.value_or(50))};
  if (s == "g4-closed-form") return {check_g4_closed_form(a.k_max.value_or(10))};
  const int n = need(a.n, "-n");
  const ConvexWeight f = ConvexWeight::parse(a.weight);
  if (s == "wf-matching") {
    if (a.m) return {check_wf_max_matching(n, *a.m, f, opt)};
    return check_wf_max_matching_all(n, {f}, opt);
  }
  if (s == "wf-monotonicity") return {check_monotonicity(n, f, opt)};
  if (s == "wex-max") return {check_wex_max(n, opt)};
  if (s == "bipartite-unicyclic") return check_bipartite_unicyclic(n, opt);
  if (s == "w-minus-ecc-tree-min") return {check_w_minus_ecc_tree_min(n, opt)};
  if (s == "diameter-fixed-min") return check_diameter_fixed_min(n, opt);
  const auto source = make_source(a, n);
  if (s == "wf-independence") {
    if (a.alpha) {
      return {check_wf_max_independence(n, *a.alpha, f, source.get(), opt)};
    }
    return check_wf_max_independence_all(n, {f}, source.get(), opt);
  }
  if (s == "chung") return {check_chung(n, a.j, source.get(), opt)};
  if (s == "w-minus-ecc-max") return {check_w_minus_ecc_max(n, *source, opt)};
  if (s == "w-minus-ecc-min") {
    return {check_w_minus_ecc_min(n, source.get(), opt)};
  }
  if (s == "wsz-max") return {check_wsz_conjecture(n, source.get(), opt)};
  throw usage("unknown statement " + s);
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  bool all = true;
  for (const auto& r : run_statement(a)) {
    out << (a.json ? to_json_line(r) : to_text_line(r)) << '\n';
    all = all && r.pass;
  }
  return all ? kExitOk : kExitCheckFailed;
}

const std::vector<std::string> kStatements{
    "wf-matching",     "wf-monotonicity",      "wf-independence",
    "chung",           "wex-max",              "bipartite-unicyclic",
    "g4-closed-form",  "w-minus-ecc-max",      "cycle-vs-path",
    "w-minus-ecc-min", "w-minus-ecc-tree-min", "diameter-fixed-min",
    "wsz-max"};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Distance-based graph indices and extremal checks"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Evaluate an index");
  compute
      ->add_option("--index", ca.index, "Index to evaluate")
      ->required()
      ->check(CLI::IsMember({"wiener", "hyper", "wex", "tw", "sz", "wsz",
                             "w-minus-ecc", "mu", "wf", "ecc", "diameter",
                             "radius", "matching", "alpha"}));
  compute->add_option("--j", ca.j, "Power mean exponent for mu");
  compute->add_option("--weight", ca.weight, "Weight SPEC for wf");
  auto* g6 = compute->add_option("--graph6", ca.graph6, "graph6 input");
  auto* file = compute->add_option("--file", ca.file, "graph6 file");
  g6->excludes(file);

  ConstructArgs co;
  auto* cons = app.add_subcommand("construct", "Build a named graph");
  cons->add_option("family", co.family, "Family name")->required();
  cons->add_option("params", co.params, "Integer parameters");
  cons->add_option("--out", co.out, "Output format")
      ->check(CLI::IsMember({"graph6", "edges"}));

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List graphs up to isomorphism");
  en->add_option("kind", ea.kind, "trees, graphs or unicyclic")
      ->required()
      ->check(CLI::IsMember({"trees", "graphs", "unicyclic"}));
  en->add_option("-n", ea.n, "Order")->required();
  en->add_option("--matching", ea.matching, "Matching number");
  en->add_option("--alpha", ea.alpha, "Independence number");
  en->add_option("--bipartition", ea.bipartition, "Part sizes P,Q");
  en->add_flag("--unicyclic", ea.unicyclic, "Only unicyclic graphs");
  en->add_flag("--count-only", ea.count_only, "Print the count only");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run an exhaustive check");
  ver->add_option("statement", va.statement, "Statement id")
      ->required()
      ->check(CLI::IsMember(kStatements));
  ver->add_option("-n", va.n, "Order");
  ver->add_option("--m", va.m, "Matching number");
  ver->add_option("--alpha", va.alpha, "Independence number");
  ver->add_option("--j", va.j, "Power mean exponent");
  ver->add_option("--weight", va.weight, "Weight SPEC");
  ver->add_option("--k-max", va.k_max, "Largest k");
  ver->add_option("--source", va.source,
                  "builtin, trees, unicyclic or a graph6 file");
  ver->add_flag("--json", va.json, "JSON lines output");
  ver->add_option("--threads", va.threads, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return do_compute(ca, out);
    if (*cons) return do_construct(co, out);
    if (*en) return do_enumerate(ea, out);
    return do_verify(va, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace distidx::cli
