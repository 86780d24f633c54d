// njcones — neighbor joining with agglomeration-order tracking, exact
// output counting, and Monte Carlo cone-fraction estimation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "njcones/combinatorics.hpp"
#include "njcones/dissimilarity.hpp"
#include "njcones/enumerate.hpp"
#include "njcones/errors.hpp"
#include "njcones/newick.hpp"
#include "njcones/report.hpp"
#include "njcones/simulate.hpp"

namespace {

using namespace njcones;

TieBreakPolicy parse_policy(const std::string& s) {
  if (s == "lex") return TieBreakPolicy::Lexicographic;
  if (s == "uniform") return TieBreakPolicy::Uniform;
  if (s == "baggage") return TieBreakPolicy::Baggage;
  throw ConfigError("unknown policy '" + s + "'");
}

ReportFormat parse_report_format(const std::string& s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  if (s == "text") return ReportFormat::Text;
  throw ConfigError("unknown format '" + s + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

struct SimulateOptions {
  int taxa = 0;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::string policy = "lex";
  int workers = 0;
  std::string format = "text";
  std::string out;
  bool allow_large = false;
};

void cmd_simulate(const SimulateOptions& opt) {
  if (opt.taxa < 4) throw ConfigError("--taxa must be at least 4");
  if (opt.taxa > 8 && !opt.allow_large)
    throw ConfigError("--taxa above 8 needs --allow-large");
  SampleSpec spec;
  spec.n = opt.taxa;
  spec.count = opt.samples;
  spec.seed = opt.seed;
  spec.policy = parse_policy(opt.policy);
  const FrequencyTable table = simulate(spec, opt.workers);
  write_output(opt.out, emit_report(table, parse_report_format(opt.format)));
}

struct RunOptions {
  std::string matrix;
  std::string format = "csv";
  std::string policy = "lex";
  std::uint64_t seed = 0;
  bool trace = false;
};

void cmd_run(const RunOptions& opt) {
  MatrixFormat format;
  if (opt.format == "csv") {
    format = MatrixFormat::Csv;
  } else if (opt.format == "phylip") {
    format = MatrixFormat::PhylipSquare;
  } else {
    throw ConfigError("unknown matrix format '" + opt.format + "'");
  }
  const DissimilarityMap d = parse_matrix(read_file(opt.matrix), format);
  RandomStream rng = RandomStream::for_sample(opt.seed, 0);
  const NjBothResult result = run_nj_both(d, parse_policy(opt.policy), rng);

  const NjPath path = nj_path(result.trace);
  std::cout << "tree      " << serialize(result.chosen) << "\n";
  std::cout << "topology  " << strip_order(result.chosen) << "\n";
  std::cout << "nj_path   " << path_word(path) << "\n";
  std::cout << "partner   " << serialize(result.other) << "\n";
  if (opt.trace) {
    std::cout << "trace\n";
    for (const JoinEvent& e : result.trace.events) {
      std::cout << "  step " << e.step << ": " << to_string(e.cls) << " join "
                << subtree_text(result.chosen, e.bough_ids.first) << " + "
                << subtree_text(result.chosen, e.bough_ids.second) << " ("
                << e.before.stems << " stems, " << e.before.bouquets
                << " bouquets before)\n";
    }
    const auto& tie = result.trace;
    std::cout << "  final tie: "
              << subtree_text(result.chosen, tie.final_tie_chosen.first)
              << " + "
              << subtree_text(result.chosen, tie.final_tie_chosen.second)
              << " vs "
              << subtree_text(result.chosen, tie.final_tie_other.first)
              << " + "
              << subtree_text(result.chosen, tie.final_tie_other.second)
              << " (first chosen)\n";
  }
}

void cmd_count(int taxa) {
  if (taxa < 4) throw ConfigError("--taxa must be at least 4");
  std::cout << "taxa " << taxa << "\n";
  std::cout << "unrooted_trees " << count_unrooted_trees(taxa) << "\n";
  std::cout << "nj_outputs " << phi(taxa) / 2 << "\n";
  std::cout << "agglomerated_trees " << phi(taxa) << "\n";
  std::cout << "nj_paths " << count_nj_paths(taxa) << "\n";
}

void cmd_enumerate(int taxa, const std::string& out, bool allow_large) {
  if (taxa < 4) throw ConfigError("--taxa must be at least 4");
  if (taxa > 8 && !allow_large)
    throw ConfigError("--taxa above 8 needs --allow-large");
  std::string buffer;
  for (const std::string& s : enumerate_agglomerated_trees(taxa, allow_large)) {
    buffer += s;
    buffer += '\n';
  }
  write_output(out, buffer);
}

void cmd_paths(int taxa) {
  if (taxa < 4) throw ConfigError("--taxa must be at least 4");
  for (const NjPath& p : enumerate_nj_paths(taxa))
    std::cout << path_word(p) << "\t" << motzkin_word(nj_to_motzkin(p))
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Neighbor joining with agglomeration-order tracking, exact output "
      "counting, and cone-fraction estimation"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo tree frequencies over uniform inputs");
  simulate_cmd->add_option("--taxa", sim.taxa, "taxon count (4..8)")
      ->required();
  simulate_cmd->add_option("--samples", sim.samples, "number of samples");
  simulate_cmd->add_option("--seed", sim.seed, "random seed");
  simulate_cmd->add_option("--policy", sim.policy, "lex|uniform|baggage");
  simulate_cmd->add_option("--workers", sim.workers,
                           "thread count, 0 = hardware");
  simulate_cmd->add_option("--format", sim.format, "csv|json|text");
  simulate_cmd->add_option("--out", sim.out, "output path, default stdout");
  simulate_cmd->add_flag("--allow-large", sim.allow_large,
                         "permit more than 8 taxa");

  RunOptions run;
  auto* run_cmd = app.add_subcommand(
      "run", "run the algorithm on a dissimilarity matrix file");
  run_cmd->add_option("--matrix", run.matrix, "matrix file")->required();
  run_cmd->add_option("--format", run.format, "csv|phylip");
  run_cmd->add_option("--policy", run.policy, "lex|uniform|baggage");
  run_cmd->add_option("--seed", run.seed, "random seed (uniform/baggage)");
  run_cmd->add_flag("--trace", run.trace, "print every join event");

  int count_taxa = 0;
  auto* count_cmd = app.add_subcommand("count", "exact output counts");
  count_cmd->add_option("--taxa", count_taxa, "taxon count")->required();

  int enum_taxa = 0;
  std::string enum_out;
  bool enum_allow_large = false;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "list every agglomerated tree");
  enum_cmd->add_option("--taxa", enum_taxa, "taxon count (4..8)")->required();
  enum_cmd->add_option("--out", enum_out, "output path, default stdout");
  enum_cmd->add_flag("--allow-large", enum_allow_large,
                     "permit more than 8 taxa");

  int paths_taxa = 0;
  auto* paths_cmd =
      app.add_subcommand("paths", "list admissible join-step words");
  paths_cmd->add_option("--taxa", paths_taxa, "taxon count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate_cmd->parsed()) cmd_simulate(sim);
    if (run_cmd->parsed()) cmd_run(run);
    if (count_cmd->parsed()) cmd_count(count_taxa);
    if (enum_cmd->parsed()) cmd_enumerate(enum_taxa, enum_out, enum_allow_large);
    if (paths_cmd->parsed()) cmd_paths(paths_taxa);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
