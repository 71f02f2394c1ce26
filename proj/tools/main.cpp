// hopcolor: SERENA 3-hop coloring simulator, periodic grid pattern solver,
// coloring checker, and h-hop reduction tool.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hopcolor/experiment.hpp"
#include "hopcolor/reduction.hpp"
#include "hopcolor/validity.hpp"

namespace {

// exit codes: 0 success, 1 invalid coloring / failed check,
//             2 usage or input error, 3 round-guard trip
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct GridArg {
  int width = 0;
  int height = 0;
};

GridArg parse_grid(const std::string& arg) {
  auto sep = arg.find('x');
  if (sep == std::string::npos)
    throw CLI::ValidationError("--grid", "expected WxH, e.g. 10x10");
  GridArg g;
  try {
    g.width = std::stoi(arg.substr(0, sep));
    g.height = std::stoi(arg.substr(sep + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid", "expected WxH, e.g. 10x10");
  }
  return g;
}

int cmd_serena(const std::string& grid_arg, double range,
               const std::string& prio_name,
               std::optional<std::uint64_t> seed,
               const std::string& prio_variant,
               const std::string& vector_rank, bool distance_center,
               unsigned max_rounds, bool wire, const std::string& format) {
  auto grid = parse_grid(grid_arg);
  hopcolor::GridSpec spec{grid.width, grid.height, hopcolor::Range(range)};
  auto strategy = hopcolor::strategy_from_string(prio_name);
  if (!strategy) throw std::invalid_argument("unknown strategy " + prio_name);

  hopcolor::ExperimentOptions options;
  options.max_rounds = max_rounds;
  options.through_wire = wire;
  options.priority.native_variant =
      prio_variant == "card2hop" ? hopcolor::PrioVariant::kTwoHopCardinality
                                 : hopcolor::PrioVariant::kSumNeighborDegrees;
  options.priority.vector_rank_descending = vector_rank == "desc";
  options.priority.distance_to_center = distance_center;

  auto outcome =
      hopcolor::run_serena_experiment(spec, *strategy, seed, options);
  if (format == "csv") {
    std::cout << hopcolor::kExperimentCsvHeader << "\n"
              << hopcolor::to_csv(outcome.row) << "\n";
  } else {
    std::cout << "range grid    strategy  colors  rounds  check seed\n"
              << hopcolor::to_text(outcome.row) << "\n";
  }
  return outcome.row.valid ? 0 : kExitInvalid;
}

int cmd_vector(double range, unsigned hops, const std::string& tile_arg,
               const std::string& format) {
  hopcolor::Range r(range);
  auto row = hopcolor::vector_report(r, hops);
  if (format == "csv")
    std::cout << hopcolor::kVectorCsvHeader << "\n"
              << hopcolor::to_csv(row) << "\n";
  else
    std::cout << hopcolor::to_text(row) << "\n";

  if (!tile_arg.empty()) {
    auto grid = parse_grid(tile_arg);
    hopcolor::GridSpec spec{grid.width, grid.height, r};
    auto coloring = hopcolor::tile_grid(spec, row.pair, hops);
    bool valid =
        hopcolor::check_h_hop(hopcolor::build_grid(spec), coloring, hops)
            .valid;
    if (format == "csv")
      std::cout << "tile," << grid.width << "," << grid.height << ","
                << coloring.color_count() << ","
                << (valid ? "true" : "false") << "\n";
    else
      std::cout << "tiling " << grid.width << "x" << grid.height << ": "
                << coloring.color_count() << " colors, "
                << (valid ? "valid" : "INVALID") << "\n";
    if (!valid) return kExitInvalid;
  }
  return 0;
}

int cmd_reduce(const std::string& input, unsigned hops,
               const std::string& output, const std::string& sidecar,
               std::size_t equivalence_limit) {
  std::ifstream in(input);
  if (!in) throw std::invalid_argument("cannot open " + input);
  auto g = hopcolor::read_topology(in);

  auto reduced = hopcolor::transform(g, hops);
  std::ofstream out(output);
  if (!out) throw std::invalid_argument("cannot open " + output);
  hopcolor::write_topology(out, reduced.gprime);
  std::ofstream side(sidecar);
  if (!side) throw std::invalid_argument("cannot open " + sidecar);
  hopcolor::write_provenance(side, reduced);

  auto report = hopcolor::verify_lemmas(reduced);
  std::cout << "m=" << report.m << " C1=" << (report.c1 ? "ok" : "FAIL")
            << " C2=" << (report.c2 ? "ok" : "FAIL")
            << " C3=" << (report.c3 ? "ok" : "FAIL")
            << " added<=h-1=" << (report.added_within_h_minus_1 ? "ok" : "FAIL")
            << " closed-form-m=" << report.closed_form_m
            << (report.matches_closed_form ? " (matches)" : " (differs)")
            << "\n";
  for (const auto& f : report.failures) std::cerr << "  " << f << "\n";

  if (g.node_count() <= equivalence_limit) {
    auto eq = hopcolor::equivalence_check(g, hops, equivalence_limit);
    std::cout << "k=" << eq.k << " k'=" << eq.k_prime << " m=" << eq.m
              << " k'=k+m " << (eq.matches ? "ok" : "FAIL") << " lift "
              << (eq.lifted_valid ? "valid" : "INVALID") << " ("
              << eq.lifted_colors << " colors)\n";
    if (!eq.matches || !eq.lifted_valid) return kExitInvalid;
  }
  return report.all_ok() ? 0 : kExitInvalid;
}

int cmd_check(const std::string& topology_file, const std::string& coloring_file,
              unsigned hops) {
  std::ifstream tin(topology_file);
  if (!tin) throw std::invalid_argument("cannot open " + topology_file);
  auto t = hopcolor::read_topology(tin);
  std::ifstream cin_file(coloring_file);
  if (!cin_file) throw std::invalid_argument("cannot open " + coloring_file);
  auto c = hopcolor::read_coloring(cin_file);

  auto report = hopcolor::check_h_hop(t, c, hops);
  if (report.valid) {
    std::cout << "valid " << hops << "-hop coloring, " << c.color_count()
              << " colors\n";
    return 0;
  }
  std::cout << "invalid: " << report.violations.size() << " violations\n";
  std::size_t shown = 0;
  for (const auto& v : report.violations) {
    std::cout << "  nodes " << v.u << " and " << v.v << " share color "
              << v.color << " at " << v.hops << " hops\n";
    if (++shown == 20 && report.violations.size() > 20) {
      std::cout << "  ... " << (report.violations.size() - 20) << " more\n";
      break;
    }
  }
  return kExitInvalid;
}

int cmd_tables() {
  auto checks = hopcolor::reproduce_tables(&std::cout);
  std::size_t failed = 0;
  for (const auto& c : checks)
    if (!c.ok) ++failed;
  std::cout << checks.size() - failed << "/" << checks.size() << " checks ok\n";
  return failed == 0 ? 0 : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-hop coloring toolkit: SERENA simulation, periodic grid "
               "patterns, validity checking, h-hop reductions"};
  app.require_subcommand(1);

  // serena
  std::string grid_arg, prio_name, format = "text";
  std::string prio_variant = "sumdeg", vector_rank = "asc";
  double range = 1.0;
  std::optional<std::uint64_t> seed;
  unsigned max_rounds = 100000, hops = 3;
  bool distance_center = false, wire = false;

  auto* serena = app.add_subcommand("serena", "run the coloring protocol on a grid");
  serena->add_option("--grid", grid_arg, "grid size WxH")->required();
  serena->add_option("--range", range, "transmission range in grid steps")
      ->required();
  serena->add_option("--prio", prio_name,
                     "priority strategy: random|line|column|diagonal|origin|vector")
      ->required();
  serena->add_option("--seed", seed, "seed for the random strategy");
  serena->add_option("--prio-variant", prio_variant,
                     "native priority formula: sumdeg|card2hop")
      ->check(CLI::IsMember({"sumdeg", "card2hop"}));
  serena->add_option("--vector-rank", vector_rank,
                     "couple rank orientation: asc|desc")
      ->check(CLI::IsMember({"asc", "desc"}));
  serena->add_flag("--distance-center", distance_center,
                   "measure the origin strategy from the grid center");
  serena->add_option("--max-rounds", max_rounds, "round guard");
  serena->add_flag("--wire", wire, "route messages through the codec");
  serena->add_option("--format", format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}));

  // vector
  std::string tile_arg;
  auto* vector = app.add_subcommand("vector", "solve the periodic pattern for a range");
  vector->add_option("--range", range, "transmission range in grid steps")
      ->required();
  vector->add_option("--hops", hops, "hop count h")->required();
  vector->add_option("--tile", tile_arg, "also tile and validate a WxH grid");
  vector->add_option("--format", format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}));

  // reduce
  std::string input, output = "gprime.txt", sidecar = "gprime_provenance.txt";
  std::size_t equivalence_limit = 8;
  auto* reduce = app.add_subcommand("reduce", "transform a graph for h-hop coloring");
  reduce->add_option("--input", input, "topology file")->required();
  reduce->add_option("--hops", hops, "hop count h (>= 2)")->required();
  reduce->add_option("--output", output, "transformed topology file");
  reduce->add_option("--sidecar", sidecar, "provenance sidecar file");
  reduce->add_option("--equivalence-limit", equivalence_limit,
                     "run the oracle equivalence check up to this node count");

  // check
  std::string topology_file, coloring_file;
  auto* check = app.add_subcommand("check", "validate a coloring file");
  check->add_option("--topology", topology_file, "topology file")->required();
  check->add_option("--coloring", coloring_file, "coloring file")->required();
  check->add_option("--hops", hops, "hop count h")->required();

  auto* tables = app.add_subcommand("tables", "reproduce the pinned result tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (serena->parsed())
      return cmd_serena(grid_arg, range, prio_name, seed, prio_variant,
                        vector_rank, distance_center, max_rounds, wire, format);
    if (vector->parsed()) return cmd_vector(range, hops, tile_arg, format);
    if (reduce->parsed())
      return cmd_reduce(input, hops, output, sidecar, equivalence_limit);
    if (check->parsed())
      return cmd_check(topology_file, coloring_file, hops);
    if (tables->parsed()) return cmd_tables();
  } catch (const hopcolor::NonTermination& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& entry : e.trace())
      std::cerr << "  round " << entry.round << ": node " << entry.node
                << " -> color " << entry.color << "\n";
    return kExitGuard;
  } catch (const hopcolor::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
