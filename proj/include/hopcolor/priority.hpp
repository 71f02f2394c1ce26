// Priority assignment strategies for SERENA runs on grids.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hopcolor/serena.hpp"
#include "hopcolor/topology.hpp"

namespace hopcolor {

enum class Strategy {
  kRandom,            // native prio on a seed-shuffled address assignment
  kLine,              // prio = y*width + x
  kColumn,            // prio = x*height + y
  kDiagonal,          // rank by (x+y, x)
  kDistanceToOrigin,  // rank by squared distance to (0,0), ties by address
  kVector,            // rank of the node's couple under solve_vectors(R, 3)
};

std::string to_string(Strategy s);
std::optional<Strategy> strategy_from_string(const std::string& name);

struct PriorityOptions {
  PrioVariant native_variant = PrioVariant::kSumNeighborDegrees;
  // Rank couples descending instead of ascending (vector strategy).
  bool vector_rank_descending = false;
  // Measure distance to the grid center instead of the origin.
  bool distance_to_center = false;
};

struct PriorityAssignment {
  Strategy strategy = Strategy::kLine;
  std::map<NodeId, unsigned> values;
};

// Grid strategies require coordinates on every node; random requires a seed
// (used by the caller to shuffle addresses, see with_shuffled_addresses).
PriorityAssignment assign(Strategy strategy, const Topology& t,
                          const GridSpec& spec,
                          std::optional<std::uint64_t> seed = std::nullopt,
                          const PriorityOptions& options = {});

// The same graph with its addresses permuted by a seeded, platform-
// independent shuffle. Node coordinates travel with the node.
Topology with_shuffled_addresses(const Topology& t, std::uint64_t seed);

}  // namespace hopcolor
