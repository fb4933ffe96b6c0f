// Command-line interface: tree I/O, degree-piece enumeration, Hilbert
// tables, chord diagrams, Gorenstein classification and the brute-force
// cross-validation survey.
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 survey found a
// classifier/oracle disagreement.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treesg/treesg.hpp"

namespace {

using treesg::json;

json load_json_arg(const std::string& arg, const char* what) {
  std::string text;
  if (!arg.empty() && arg.front() == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in)
      throw std::invalid_argument(std::string("cannot open ") + what +
                                  " file \"" + arg + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed ") + what +
                                " JSON: " + e.what());
  }
}

treesg::Tree load_tree(const std::string& arg) {
  return treesg::tree_from_json(load_json_arg(arg, "tree"));
}

treesg::WeightVector parse_r(const std::string& text) {
  std::vector<long long> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      entries.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (...) {
      throw std::invalid_argument("invalid r entry \"" + item + "\"");
    }
  }
  treesg::WeightVector r(entries);
  if (!r.even_sum())
    throw std::invalid_argument("sum of r entries is odd (" +
                                std::to_string(r.sum()) + ")");
  return r;
}

std::string format_r(const std::vector<long long>& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(r[i]);
  }
  return s;
}

struct Options {
  int leaves = 0;
  std::string tree;
  std::string weighting;
  std::string r;
  long long degree = 0;
  long long max_degree = 0;
  long long max_entry = 0;
  long long depth = 0;
  bool interior = false;
  bool dot = false;
  unsigned jobs = 0;
  bool depth_set = false;
};

int run_trees(const Options& o) {
  for (const auto& t : treesg::enumerate_trees(o.leaves))
    std::cout << treesg::tree_to_json(t).dump() << "\n";
  return 0;
}

int run_enumerate(const Options& o) {
  const auto tree = load_tree(o.tree);
  const auto r = parse_r(o.r);
  const auto pts = o.interior ? treesg::enumerate_interior(tree, r, o.degree)
                              : treesg::enumerate_points(tree, r, o.degree);
  for (const auto& w : pts)
    std::cout << treesg::weighting_to_json(tree, w).dump() << "\n";
  return 0;
}

int run_hilbert(const Options& o) {
  const auto tree = load_tree(o.tree);
  const auto r = parse_r(o.r);
  for (long long k = 0; k <= o.max_degree; ++k)
    std::cout << k << "\t" << treesg::hilbert_function(tree, r, k) << "\n";
  return 0;
}

int run_piping(const Options& o) {
  const auto tree = load_tree(o.tree);
  const auto w = treesg::weighting_from_json(tree, load_json_arg(o.weighting, "weighting"));
  const auto g = treesg::to_piping(tree, w);
  if (o.dot)
    std::cout << treesg::piping_dot(g);
  else
    std::cout << treesg::piping_to_json(g).dump() << "\n";
  return 0;
}

int run_classify(const Options& o) {
  const auto tree = load_tree(o.tree);
  const auto r = parse_r(o.r);
  std::cout << treesg::verdict_to_json(tree, treesg::classify_gorenstein(tree, r)).dump()
            << "\n";
  return 0;
}

int run_oracle(const Options& o) {
  const auto tree = load_tree(o.tree);
  const auto r = parse_r(o.r);
  std::cout << treesg::verdict_to_json(tree, treesg::gorenstein_oracle(tree, r, o.depth)).dump()
            << "\n";
  return 0;
}

int run_survey(const Options& o) {
  std::optional<long long> depth;
  if (o.depth_set) depth = o.depth;
  const auto rows = treesg::run_survey(o.leaves, o.max_entry, depth, o.jobs);
  std::cout << "r\ttree\tclassifier\tclassifier_a\toracle\toracle_a\tdepth\tagree\n";
  bool all_agree = true;
  for (const auto& row : rows) {
    const auto fmt_a = [](const treesg::GorensteinVerdict& v) {
      return v.generator_degree ? std::to_string(*v.generator_degree)
                                : std::string("-");
    };
    std::cout << format_r(row.r) << "\t" << row.tree_index << "\t"
              << (row.classifier.is_gorenstein ? "gorenstein" : "not_gorenstein")
              << "\t" << fmt_a(row.classifier) << "\t"
              << (row.oracle.is_gorenstein ? "gorenstein" : "not_gorenstein")
              << "\t" << fmt_a(row.oracle) << "\t" << row.depth << "\t"
              << (row.agree ? "ok" : "MISMATCH") << "\n";
    all_agree = all_agree && row.agree;
  }
  return all_agree ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact lattice-point and Gorenstein computations for edge weightings "
      "of planar trivalent trees (encoded as polygon triangulations)."};
  app.require_subcommand(1);
  Options o;

  auto* trees = app.add_subcommand("trees", "list all trees with the given number of leaves");
  trees->add_option("--leaves", o.leaves, "number of leaves")->required();

  const char* tree_help = "tree JSON (inline, starting with '{') or a file path";

  auto* enumerate = app.add_subcommand("enumerate", "list the members of one degree piece");
  enumerate->add_option("--tree", o.tree, tree_help)->required();
  enumerate->add_option("--r", o.r, "comma-separated positive leaf weights")->required();
  enumerate->add_option("--degree", o.degree, "degree of the piece")->required();
  enumerate->add_flag("--interior", o.interior, "interior members only");

  auto* hilbert = app.add_subcommand("hilbert", "tabulate degree -> member count");
  hilbert->add_option("--tree", o.tree, tree_help)->required();
  hilbert->add_option("--r", o.r, "comma-separated positive leaf weights")->required();
  hilbert->add_option("--max-degree", o.max_degree, "largest degree")->required();

  auto* piping = app.add_subcommand("piping", "chord diagram of a weighting");
  piping->add_option("--tree", o.tree, tree_help)->required();
  piping->add_option("--weighting", o.weighting, "weighting JSON (inline or file)")->required();
  piping->add_flag("--dot", o.dot, "emit Graphviz DOT instead of JSON");

  auto* classify = app.add_subcommand("classify", "closed-form Gorenstein verdict");
  classify->add_option("--tree", o.tree, tree_help)->required();
  classify->add_option("--r", o.r, "comma-separated positive leaf weights")->required();

  auto* oracle = app.add_subcommand("oracle", "depth-bounded brute-force verdict");
  oracle->add_option("--tree", o.tree, tree_help)->required();
  oracle->add_option("--r", o.r, "comma-separated positive leaf weights")->required();
  oracle->add_option("--depth", o.depth, "largest degree to verify")->required();

  auto* survey = app.add_subcommand(
      "survey", "cross-validate classifier vs oracle over all trees and gradings");
  survey->add_option("--leaves", o.leaves, "number of leaves")->required();
  survey->add_option("--max-entry", o.max_entry, "largest entry of r")->required();
  auto* depth_opt = survey->add_option(
      "--depth", o.depth, "fixed oracle depth (default: 3a on positives, 2(n-2) on negatives)");
  survey->add_option("--jobs", o.jobs, "worker threads (default: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  o.depth_set = depth_opt->count() > 0;
  try {
    if (trees->parsed()) return run_trees(o);
    if (enumerate->parsed()) return run_enumerate(o);
    if (hilbert->parsed()) return run_hilbert(o);
    if (piping->parsed()) return run_piping(o);
    if (classify->parsed()) return run_classify(o);
    if (oracle->parsed()) return run_oracle(o);
    if (survey->parsed()) return run_survey(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
