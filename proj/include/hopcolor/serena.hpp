// Deterministic synchronous simulation of the optimized SERENA 3-hop
// node-coloring protocol: rounds of Color-message exchange, local state
// updates, and the R1/R2 coloring rules.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hopcolor/color_message.hpp"
#include "hopcolor/topology.hpp"
#include "hopcolor/validity.hpp"

namespace hopcolor {

enum class PrioVariant {
  kSumNeighborDegrees,  // sum of the degrees of the 1-hop neighbors
  kTwoHopCardinality,   // |N1(u) union N2(u)|
};

// Numeric priority of a node under the selected formula.
unsigned compute_prio(const Topology& t, NodeId u,
                      PrioVariant variant = PrioVariant::kSumNeighborDegrees);

// Per-node protocol state. A node's color, once set, never changes.
struct NodeState {
  NodeId me = 0;
  Priority priority;
  std::vector<NodeId> neighbors;  // 1-hop, ascending (from the hello phase)
  std::optional<Color> color;
  std::map<NodeId, ColorMessage> neighbor_cache;  // last message per neighbor
  std::vector<Priority> max2_prio1;  // two highest uncolored 1-hop priorities
  std::vector<Priority> max2_prio2;  // two highest at 2 hops
  std::optional<Priority> max_prio3; // highest at 3 hops
  ColorSet bitmap1, bitmap2, bitmap3;
  unsigned round = 0;
  bool terminated = false;
};

class ProtocolViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Merges a round's inbox into the cache and recomputes trackers and
// bitmaps. Messages from non-neighbors are a protocol violation. Neighbors
// missing from the inbox keep their cached (stale) message.
NodeState local_update(NodeState s, const std::vector<ColorMessage>& inbox);

// Rule R1: true iff the node's priority strictly dominates every tracked
// uncolored priority. Empty trackers mean no competitor.
bool rule_r1(const NodeState& s);

// Rule R2: smallest color outside bitmap1 | bitmap2 | bitmap3.
Color rule_r2(const NodeState& s);

// The Color message a node broadcasts at the start of a round.
ColorMessage make_message(const NodeState& s);

struct TraceEntry {
  unsigned round = 0;
  NodeId node = 0;
  Color color = 0;
  bool operator==(const TraceEntry&) const = default;
};

struct RunResult {
  Coloring coloring;
  unsigned rounds = 0;  // round at which the last node colored
  std::vector<TraceEntry> trace;
};

class NonTermination : public std::runtime_error {
 public:
  NonTermination(unsigned max_rounds, std::vector<TraceEntry> trace);
  const std::vector<TraceEntry>& trace() const { return trace_; }

 private:
  std::vector<TraceEntry> trace_;
};

struct SerenaOptions {
  unsigned max_rounds = 100000;
  // Route every message through encode/decode instead of handing the
  // struct across; identical results, exercised by tests.
  bool through_wire = false;
};

// Synchronous lockstep simulation: each round every active node broadcasts,
// all apply local_update, then every eligible node colors itself. Returns a
// valid 3-hop coloring, the round of the last coloring, and the trace.
RunResult run_serena(const Topology& t, const std::map<NodeId, unsigned>& prio,
                     const SerenaOptions& options = {});
RunResult run_serena(const Topology& t, const std::map<NodeId, unsigned>& prio,
                     unsigned max_rounds);

}  // namespace hopcolor
