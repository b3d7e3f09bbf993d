#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seidel/bounds.hpp"
#include "seidel/errors.hpp"
#include "seidel/graph.hpp"
#include "seidel/io.hpp"
#include "seidel/odd.hpp"
#include "seidel/rng.hpp"
#include "seidel/spectral.hpp"
#include "seidel/treegen.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& s) {
  Range r;
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s);
    } else {
      r.lo = std::stoi(s.substr(0, dots));
      r.hi = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw seidel::ParseError("bad range \"" + s + "\" (want N or A..B)");
  }
  if (r.lo > r.hi) throw seidel::ParseError("empty range \"" + s + "\"");
  return r;
}

// Output sink: file if --output was given, stdout otherwise.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) throw seidel::ParseError("cannot open output file " + path);
    os = &file;
  }
  std::ostream& out() { return *os; }
};

seidel::Graph load_graph(const std::string& path) {
  seidel::EdgeListData data = seidel::read_edge_list_file(path);
  for (const std::string& w : data.warnings) std::cerr << "warning: " << w << "\n";
  return data.graph;
}

int default_jobs() {
  if (const char* env = std::getenv("SEIDEL_LAB_JOBS")) {
    const int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

const std::vector<std::string> kAllChecks = {"haemers",      "aekn",     "theorem", "lemma-lambda",
                                             "lemma-edge",   "classify", "chain"};

std::vector<std::string> parse_checks(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  for (const std::string& c : out)
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end())
      throw seidel::ParseError("unknown check \"" + c + "\"");
  if (out.empty()) throw seidel::ParseError("no checks requested");
  return out;
}

std::string opt17(const std::optional<double>& x) {
  return x ? seidel::format_double17(*x) : std::string();
}

// -------- spectrum --------

int run_spectrum(const std::string& input, double tol, const std::string& output) {
  const seidel::Graph g = load_graph(input);
  const seidel::Spectrum s = seidel::symmetric_eigenvalues(seidel::seidel_matrix(g), tol);
  ordered_json j;
  j["eigenvalues"] = s.eigenvalues;
  j["energy"] = seidel::spectrum_energy(s);
  Sink sink;
  sink.open(output);
  sink.out() << j.dump(2) << "\n";
  return 0;
}

// -------- oddpairs --------

int run_oddpairs(const std::string& input, const std::string& output) {
  const seidel::Graph g = load_graph(input);
  const seidel::Graph lam = seidel::lambda_graph(g);
  ordered_json j;
  j["nop"] = seidel::count_odd_pairs(g);
  ordered_json edges = ordered_json::array();
  for (const seidel::Edge& e : lam.edges()) edges.push_back({e.u, e.v});
  j["lambda_edges"] = edges;
  std::vector<int> degs(g.order());
  for (int v = 0; v < g.order(); ++v) degs[v] = lam.degree(v);
  j["lambda_degrees"] = degs;
  Sink sink;
  sink.open(output);
  sink.out() << j.dump(2) << "\n";
  return 0;
}

// -------- gen --------

int run_gen(const std::string& family, int n, int a, int b, const std::string& output) {
  using seidel::TreeFamily;
  TreeFamily f = TreeFamily::path(0);
  if (family == "path")
    f = TreeFamily::path(n);
  else if (family == "star")
    f = TreeFamily::star(n);
  else if (family == "cycle")
    f = TreeFamily::cycle(n);
  else if (family == "complete")
    f = TreeFamily::complete(n);
  else if (family == "type1")
    f = TreeFamily::type1(a, b);
  else if (family == "type2")
    f = TreeFamily::type2(a, b);
  else
    throw seidel::ParseError("unknown family \"" + family + "\"");
  Sink sink;
  sink.open(output);
  seidel::write_edge_list(sink.out(), seidel::make_family(f));
  return 0;
}

// -------- verify --------

struct VerifyRow {
  std::string code;
  seidel::BoundReport rep;
  bool excluded = false;
  bool passed = true;
};

bool has_check(const std::vector<std::string>& checks, const char* name) {
  return std::find(checks.begin(), checks.end(), name) != checks.end();
}

VerifyRow verify_one(const seidel::Graph& t, const std::string& code,
                     const std::vector<std::string>& checks) {
  VerifyRow row;
  row.code = code;
  row.rep = seidel::check_tree(t);
  row.excluded = seidel::is_excluded_tree(t);
  const int n = t.order();
  const bool lemma_applies = n >= 4 && !row.excluded;

  bool ok = true;
  if (has_check(checks, "haemers")) ok = ok && row.rep.slack_haemers >= -seidel::kBoundTol;
  if (has_check(checks, "theorem")) ok = ok && row.rep.slack_tree >= -seidel::kBoundTol;
  if (has_check(checks, "aekn"))
    ok = ok && (!row.rep.slack_aekn || *row.rep.slack_aekn >= -seidel::kBoundTol);
  if (has_check(checks, "lemma-lambda") && lemma_applies)
    ok = ok && seidel::verify_lemma_lambda_size(t).holds;
  if (has_check(checks, "lemma-edge")) ok = ok && seidel::verify_lemma_per_edge(t).holds;
  if (has_check(checks, "classify") && n >= 4)
    ok = ok && seidel::verify_classification(t).all_classified;
  if (has_check(checks, "chain") && lemma_applies) ok = ok && seidel::chained_nop_bound(t).holds;
  row.passed = ok;
  return row;
}

void emit_verify_csv(std::ostream& os, const std::vector<VerifyRow>& rows, bool header) {
  if (header)
    os << "n,tree,d_stat,nop,lambda_edges,energy,haemers,aekn,tree_bound,"
          "slack_haemers,slack_aekn,slack_tree,passed,excluded\n";
  for (const VerifyRow& r : rows) {
    os << r.rep.n << ',' << r.code << ',' << r.rep.d_stat << ',' << r.rep.nop << ','
       << r.rep.lambda_edges << ',' << seidel::format_double17(r.rep.energy) << ','
       << seidel::format_double17(r.rep.haemers) << ',' << opt17(r.rep.aekn) << ','
       << seidel::format_double17(r.rep.tree_bound) << ','
       << seidel::format_double17(r.rep.slack_haemers) << ',' << opt17(r.rep.slack_aekn) << ','
       << seidel::format_double17(r.rep.slack_tree) << ',' << (r.passed ? "true" : "false") << ','
       << (r.excluded ? "true" : "false") << '\n';
  }
}

ordered_json verify_row_json(const VerifyRow& r) {
  ordered_json j;
  j["n"] = r.rep.n;
  j["tree"] = r.code;
  j["d_stat"] = r.rep.d_stat;
  j["nop"] = r.rep.nop;
  j["lambda_edges"] = r.rep.lambda_edges;
  j["energy"] = r.rep.energy;
  j["haemers"] = r.rep.haemers;
  if (r.rep.aekn)
    j["aekn"] = *r.rep.aekn;
  else
    j["aekn"] = nullptr;
  j["tree_bound"] = r.rep.tree_bound;
  j["slack_haemers"] = r.rep.slack_haemers;
  if (r.rep.slack_aekn)
    j["slack_aekn"] = *r.rep.slack_aekn;
  else
    j["slack_aekn"] = nullptr;
  j["slack_tree"] = r.rep.slack_tree;
  j["passed"] = r.passed;
  j["excluded"] = r.excluded;
  return j;
}

int run_verify(const std::string& range_str, const std::string& checks_str, int jobs,
               const std::string& format, const std::string& output) {
  const Range range = parse_range(range_str);
  if (range.lo < 2 || range.hi > 12)
    throw seidel::ParseError("verify supports n in 2..12");
  const std::vector<std::string> checks = parse_checks(checks_str);
  jobs = std::max(1, jobs);

  Sink sink;
  sink.open(output);
  bool all_passed = true;
  ordered_json jrows = ordered_json::array();
  bool first_block = true;

  for (int n = range.lo; n <= range.hi; ++n) {
    const std::vector<seidel::Graph>& trees = seidel::free_trees(n);
    // Sort by canonical code so --jobs never changes the artifact.
    std::vector<std::pair<std::string, const seidel::Graph*>> items;
    items.reserve(trees.size());
    for (const seidel::Graph& t : trees) items.emplace_back(seidel::canonical_form(t).code, &t);
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<VerifyRow> rows(items.size());
    std::exception_ptr err;
    auto work = [&](int w) {
      try {
        for (size_t i = w; i < items.size(); i += static_cast<size_t>(jobs))
          rows[i] = verify_one(*items[i].second, items[i].first, checks);
      } catch (...) {
        err = std::current_exception();
      }
    };
    if (jobs == 1 || items.size() <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
      for (std::thread& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);

    for (const VerifyRow& r : rows) {
      if (!r.passed) {
        all_passed = false;
        std::cerr << "check failed: n=" << r.rep.n << " tree=" << r.code << "\n";
      }
    }
    if (format == "csv") {
      emit_verify_csv(sink.out(), rows, first_block);
      first_block = false;
    } else {
      for (const VerifyRow& r : rows) jrows.push_back(verify_row_json(r));
    }
  }
  if (format == "json") sink.out() << jrows.dump(2) << "\n";
  return all_passed ? 0 : kExitCheckFailed;
}

// -------- table1 --------

int run_table1(const std::string& range_str, const std::string& mode, long long samples,
               std::uint64_t seed, const std::string& format, const std::string& output) {
  const Range range = parse_range(range_str);
  if (range.lo < 2) throw seidel::ParseError("table1 supports n >= 2");
  if (mode != "exact" && mode != "mc")
    throw seidel::ParseError("mode must be exact or mc");

  std::vector<seidel::AverageDResult> rows;
  for (int n = range.lo; n <= range.hi; ++n)
    rows.push_back(mode == "exact" ? seidel::average_D_exact(n)
                                   : seidel::average_D_monte_carlo(n, samples, seed));

  Sink sink;
  sink.open(output);
  if (format == "csv") {
    sink.out() << "n,mode,mean,exact_numerator,denominator,samples,std_error,seed,rng\n";
    for (const seidel::AverageDResult& r : rows) {
      const bool exact = r.mode == seidel::AverageMode::Exact;
      sink.out() << r.n << ',' << (exact ? "exact" : "mc") << ','
                 << seidel::format_double17(r.mean) << ',';
      if (exact)
        sink.out() << r.exact_numerator << ',' << r.denominator << ",,,,";
      else
        sink.out() << ",," << r.samples << ',' << seidel::format_double17(r.std_error) << ','
                   << r.seed << ',' << seidel::kRngAlgorithm;
      sink.out() << '\n';
    }
  } else {
    ordered_json jrows = ordered_json::array();
    for (const seidel::AverageDResult& r : rows) {
      const bool exact = r.mode == seidel::AverageMode::Exact;
      ordered_json j;
      j["n"] = r.n;
      j["mode"] = exact ? "exact" : "mc";
      j["mean"] = r.mean;
      if (exact) {
        j["exact_numerator"] = r.exact_numerator;
        j["denominator"] = r.denominator;
      } else {
        j["samples"] = r.samples;
        j["std_error"] = r.std_error;
        j["seed"] = r.seed;
        j["rng"] = seidel::kRngAlgorithm;
      }
      jrows.push_back(j);
    }
    sink.out() << jrows.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seidel-matrix toolkit: spectra, odd pairs, tree bounds, average D(T) tables"};
  app.require_subcommand(1);

  std::string input, output, range_str, format = "csv";
  double tol = seidel::kDefaultEigenTol;

  CLI::App* spectrum = app.add_subcommand("spectrum", "Seidel eigenvalues and energy of a graph");
  spectrum->add_option("--input", input, "edge-list file")->required();
  spectrum->add_option("--tol", tol, "eigensolver tolerance");
  spectrum->add_option("--output", output, "write to file instead of stdout");

  CLI::App* oddpairs = app.add_subcommand("oddpairs", "N_op, Lambda edges and degrees");
  oddpairs->add_option("--input", input, "edge-list file")->required();
  oddpairs->add_option("--output", output, "write to file instead of stdout");

  std::string family;
  int gen_n = 0, gen_a = 0, gen_b = 0;
  CLI::App* gen = app.add_subcommand("gen", "Emit a named family as an edge list");
  gen->add_option("--family", family, "path|star|cycle|complete|type1|type2")->required();
  gen->add_option("--n", gen_n, "order (path/star/cycle/complete)");
  gen->add_option("--a", gen_a, "first hub leaf count (type1/type2)");
  gen->add_option("--b", gen_b, "second hub leaf count (type1/type2)");
  gen->add_option("--output", output, "write to file instead of stdout");

  std::string checks_str = "haemers,aekn,theorem,lemma-lambda,lemma-edge,classify,chain";
  int jobs = default_jobs();
  CLI::App* verify = app.add_subcommand("verify", "Sweep all free trees, check bounds and lemmas");
  verify->add_option("--n", range_str, "order range A..B (2..12)")->required();
  verify->add_option("--checks", checks_str, "comma list: haemers,aekn,theorem,lemma-lambda,lemma-edge,classify,chain");
  verify->add_option("--jobs", jobs, "worker threads (default $SEIDEL_LAB_JOBS or 1)");
  verify->add_option("--format", format, "csv|json");
  verify->add_option("--output", output, "write to file instead of stdout");

  std::string mode = "exact";
  long long samples = 1000000;
  std::uint64_t seed = 1;
  CLI::App* table1 = app.add_subcommand("table1", "Average D(T) over uniform labeled trees");
  table1->add_option("--n", range_str, "order range A..B")->required();
  table1->add_option("--mode", mode, "exact|mc");
  table1->add_option("--samples", samples, "Monte-Carlo sample count");
  table1->add_option("--seed", seed, "RNG seed");
  table1->add_option("--format", format, "csv|json");
  table1->add_option("--output", output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (format != "csv" && format != "json")
      throw seidel::ParseError("format must be csv or json");
    if (*spectrum) return run_spectrum(input, tol, output);
    if (*oddpairs) return run_oddpairs(input, output);
    if (*gen) return run_gen(family, gen_n, gen_a, gen_b, output);
    if (*verify) return run_verify(range_str, checks_str, jobs, format, output);
    if (*table1) return run_table1(range_str, mode, samples, seed, format, output);
  } catch (const seidel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
