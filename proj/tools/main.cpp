#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gpark/graph_io.hpp"
#include "gpark/verification.hpp"

namespace {

using namespace gpark;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

struct Options {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  std::uint64_t seed = 0;
  int max_edges = 18;
  unsigned long long max_box = 100000000ULL;
  std::string out;
  std::string format = "csv";
};

std::string verdict_line(const EqualityVerdict& v) {
  std::ostringstream os;
  if (v.equal)
    os << "verdict: equal, " << v.std_count.get_str() << " = " << v.det_q.get_str();
  else
    os << "verdict: not equal, " << v.std_count.get_str() << " > " << v.det_q.get_str();
  return os.str();
}

std::string vertex_set(const std::vector<int>& verts) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < verts.size(); ++i) os << (i ? "," : "") << verts[i];
  os << "}";
  return os.str();
}

int cmd_analyze(const std::string& path) {
  const Multigraph g = parse_graph_json(read_file(path));
  const int n = g.inner_vertex_count();
  std::cout << "graph: " << n << " inner vertices + root, " << g.edge_count() << " edges\n";
  std::cout << "degrees:";
  for (int v = 0; v <= n; ++v) std::cout << " d" << v << "=" << g.degree(v);
  std::cout << "\n";
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) == 0)
      std::cout << "note: vertex " << v
                << " has degree 0; its ideals are the unit ideal (dim 0)\n";
  const EqualityVerdict verdict = check_equality(g);
  std::cout << "essential components: " << verdict.per_component.size() << "\n";
  for (const ComponentVerdict& cv : verdict.per_component)
    std::cout << "  component " << vertex_set(cv.vertices) << ": dim " << cv.std_count.get_str()
              << ", det " << cv.det.get_str() << "\n";
  std::cout << "det L = " << determinant(laplacian_truncated(g)).get_str() << "\n";
  std::cout << "det Q = " << verdict.det_q.get_str() << "\n";
  const MonomialIdeal parking = parking_ideal(g);
  std::cout << "parking ideal: " << parking.generators().size() << " minimal generators, dim "
            << std_count(parking).get_str() << "\n";
  const MonomialIdeal skeleton = skeleton_ideal(g, std::min(1, n - 1));
  std::cout << "1-skeleton ideal: " << skeleton.generators().size()
            << " minimal generators, dim " << verdict.std_count.get_str() << "\n";
  std::cout << verdict_line(verdict) << "\n";
  return 0;
}

int cmd_tu(const std::string& path, const Options& opt) {
  const Multigraph g = parse_graph_json(read_file(path));
  const TUReport report = tu_enumerate(g, opt.max_edges, opt.threads);
  const BigInt det_q = determinant(signless_laplacian_truncated(g));
  const bool match = (report.weighted_sum == det_q);
  std::ostringstream line;
  for (const auto& [c, count] : report.census) line << "c=" << c << ":" << count << ", ";
  line << "weighted " << report.weighted_sum.get_str() << ", det " << det_q.get_str() << ", "
       << (match ? "MATCH" : "MISMATCH");
  std::cout << line.str() << "\n";
  if (!opt.out.empty()) {
    std::ostringstream os;
    write_tu_report(os, report, det_q, parse_report_format(opt.format));
    write_file(opt.out, os.str());
    std::cout << "report written to " << opt.out << "\n";
  }
  return match ? 0 : 1;
}

int cmd_product(const std::string& path1, const std::string& path2, long long d,
                const Options& opt) {
  const Multigraph g1 = parse_graph_json(read_file(path1));
  const Multigraph g2 = parse_graph_json(read_file(path2));
  const Multigraph product = d_fold_product(g1, g2, d);
  const std::string json = graph_to_json(product);
  if (opt.out.empty()) {
    std::cout << json;
  } else {
    write_file(opt.out, json);
    std::cout << "wrote " << opt.out << "\n";
  }
  return 0;
}

int cmd_parking(const std::string& path, const Options& opt) {
  const Multigraph g = parse_graph_json(read_file(path));
  const std::vector<Monomial> functions = parking_functions(g, opt.max_box);
  std::cout << "parking functions: " << functions.size() << "\n";
  std::cout << "det L = " << determinant(laplacian_truncated(g)).get_str() << "\n";
  for (const Monomial& m : functions) {
    std::cout << "(";
    for (int i = 0; i < m.nvars(); ++i) std::cout << (i ? "," : "") << m.exponent(i);
    std::cout << ")\n";
  }
  return 0;
}

int cmd_classify(const std::string& path) {
  const Multigraph g = parse_graph_json(read_file(path));
  const ClassifyVerdict cls = classify_subgraph_of_Ka1(g);
  if (cls.matches)
    std::cout << "classification: true (every essentially connected component is a complete "
                 "multigraph with unit inner multiplicities, up to rooted deletions)\n";
  else
    std::cout << "classification: false (" << cls.witness << ")\n";
  const EqualityVerdict verdict = check_equality(g);
  std::cout << verdict_line(verdict) << "\n";
  const bool agree = (cls.matches == verdict.equal);
  std::cout << "agreement: " << (agree ? "yes" : "NO - counterexample") << "\n";
  return agree ? 0 : 1;
}

int cmd_verify(const std::string& suite, unsigned long long samples, int scan_n, long long scan_a,
               const std::string& mode_name, unsigned long long budget, const Options& opt) {
  SuiteResult result;
  if (suite == "thm1.1") {
    result = run_psd_lower_bound_suite(samples ? samples : 300, opt.seed + 1);
  } else if (suite == "thm2.2") {
    result = run_uniform_family_suite(samples ? samples : 200, opt.seed + 2);
  } else if (suite == "thm2.3") {
    result = run_block_join_family_suite(samples ? samples : 200, opt.seed + 3);
  } else if (suite == "lemma3.4") {
    result = run_component_product_suite(samples ? samples : 200, opt.seed + 4);
  } else if (suite == "prop3.11") {
    result = run_tu_weighted_sum_suite(samples ? samples : 100, opt.seed + 5, 4, opt.threads);
  } else if (suite == "thm3.9-scan") {
    ScanMode mode;
    if (mode_name == "exhaustive")
      mode = ScanMode::exhaustive;
    else if (mode_name == "random")
      mode = ScanMode::random;
    else
      throw std::invalid_argument("unknown scan mode '" + mode_name +
                                  "' (expected exhaustive or random)");
    result = run_clique_classification_scan(scan_n, scan_a, mode,
                                            mode == ScanMode::random && samples ? samples : budget,
                                            opt.seed, opt.threads);
  } else {
    std::cerr << "unknown suite '" << suite
              << "'; available: thm1.1, thm2.2, thm2.3, lemma3.4, prop3.11, thm3.9-scan\n";
    return 2;
  }
  write_suite_report(std::cout, result, ReportFormat::text);
  const std::string out = opt.out.empty() ? suite + "_report.csv" : opt.out;
  std::ostringstream os;
  write_suite_report(os, result, opt.out.empty() ? ReportFormat::csv
                                                 : parse_report_format(opt.format));
  write_file(out, os.str());
  std::cout << "report written to " << out << "\n";
  return result.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parking-function ideals, signless Laplace determinants and "
               "tree/odd-unicyclic censuses of rooted multigraphs"};
  app.require_subcommand(1);
  app.fallthrough(true);

  Options opt;
  if (opt.threads < 1) opt.threads = 1;
  app.add_option("--threads", opt.threads, "worker cap for the enumeration kernels");
  app.add_option("--seed", opt.seed, "base seed for randomized suites");
  app.add_option("--max-edges", opt.max_edges,
                 "guard for the 2^E subset enumeration (default 18)");
  app.add_option("--max-box", opt.max_box,
                 "guard for the standard-monomial box volume (default 1e8)");
  app.add_option("--out", opt.out, "report/output file path");
  app.add_option("--format", opt.format, "report format: csv or text (default csv)");

  std::string path, path2;
  long long d = 0;
  auto* analyze = app.add_subcommand(
      "analyze", "degrees, components, determinants, standard-monomial counts, verdict");
  analyze->add_option("graph", path, "graph file")->required();

  auto* tu = app.add_subcommand("tu", "census of spanning tree/odd-unicyclic subgraphs");
  tu->add_option("graph", path, "graph file")->required();

  auto* product = app.add_subcommand("product", "join product of two rooted graphs");
  product->add_option("left", path, "left graph file")->required();
  product->add_option("right", path2, "right graph file")->required();
  product->add_option("d", d, "number of cross edges per inner pair")->required();

  auto* parking = app.add_subcommand("parking", "enumerate the graph's parking functions");
  parking->add_option("graph", path, "graph file")->required();

  auto* classify = app.add_subcommand(
      "classify", "complete-inner-clique classification against the equality verdict");
  classify->add_option("graph", path, "graph file")->required();

  std::string suite, mode_name = "exhaustive";
  unsigned long long samples = 0, budget = 1000000;
  int scan_n = 4;
  long long scan_a = 1;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite,
                     "one of: thm1.1, thm2.2, thm2.3, lemma3.4, prop3.11, thm3.9-scan")
      ->required();
  verify->add_option("--samples", samples, "random sample count (suite-specific default)");
  verify->add_option("--n", scan_n, "scan: inner vertex count (default 4)");
  verify->add_option("--a", scan_a, "scan: maximum rooted multiplicity (default 1)");
  verify->add_option("--mode", mode_name, "scan: exhaustive or random (default exhaustive)");
  verify->add_option("--budget", budget, "scan: instance budget (default 1e6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (opt.threads < 1) opt.threads = 1;

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(path);
    if (app.got_subcommand(tu)) return cmd_tu(path, opt);
    if (app.got_subcommand(product)) return cmd_product(path, path2, d, opt);
    if (app.got_subcommand(parking)) return cmd_parking(path, opt);
    if (app.got_subcommand(classify)) return cmd_classify(path);
    if (app.got_subcommand(verify))
      return cmd_verify(suite, samples, scan_n, scan_a, mode_name, budget, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
