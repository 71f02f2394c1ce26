// Experiment rows, CSV serialization, and the pinned table reproductions
// behind the CLI.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hopcolor/priority.hpp"
#include "hopcolor/serena.hpp"
#include "hopcolor/vector_method.hpp"

namespace hopcolor {

struct ExperimentRow {
  double range = 1.0;
  int width = 1;
  int height = 1;
  std::string strategy;
  unsigned colors = 0;
  unsigned rounds = 0;
  bool valid = false;
  std::optional<std::uint64_t> seed;

  bool operator==(const ExperimentRow&) const = default;
};

inline constexpr const char* kExperimentCsvHeader =
    "range,width,height,strategy,colors,rounds,valid,seed";

std::string to_csv(const ExperimentRow& row);
ExperimentRow experiment_row_from_csv(const std::string& line);
std::string to_text(const ExperimentRow& row);

struct ExperimentOptions {
  PriorityOptions priority;
  unsigned max_rounds = 100000;
  bool through_wire = false;
};

struct ExperimentOutcome {
  ExperimentRow row;
  RunResult run;
};

// Builds the grid (shuffling addresses for the random strategy), assigns
// priorities, runs SERENA, and validates the 3-hop coloring.
ExperimentOutcome run_serena_experiment(const GridSpec& spec,
                                        Strategy strategy,
                                        std::optional<std::uint64_t> seed,
                                        const ExperimentOptions& options = {});

struct VectorReportRow {
  double range = 1.0;
  Hops hops = 3;
  std::uint64_t det = 0;
  VectorPair pair;
  double lower = 0;
  double upper = 0;
};

inline constexpr const char* kVectorCsvHeader =
    "range,hops,det,x1,y1,x2,y2,lower,upper";

VectorReportRow vector_report(Range range, Hops hops);
std::string to_csv(const VectorReportRow& row);
std::string to_text(const VectorReportRow& row);

struct TableCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

// Regenerates the pinned determinant, tiling, and SERENA color targets and
// diffs them. `progress` (optional) receives one line per check.
std::vector<TableCheck> reproduce_tables(std::ostream* progress = nullptr);

}  // namespace hopcolor
