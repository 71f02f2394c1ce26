#include "hopcolor/serena.hpp"

#include <algorithm>
#include <memory>

namespace hopcolor {

unsigned compute_prio(const Topology& t, NodeId u, PrioVariant variant) {
  switch (variant) {
    case PrioVariant::kSumNeighborDegrees: {
      unsigned sum = 0;
      for (auto v : t.neighbors(u)) sum += static_cast<unsigned>(t.degree(v));
      return sum;
    }
    case PrioVariant::kTwoHopCardinality:
      return static_cast<unsigned>(neighborhood_up_to(t, u, 2).size());
  }
  throw std::invalid_argument("unknown prio variant");
}

namespace {

// Keep the two highest distinct priorities, highest first.
void push_top2(std::vector<Priority>& top, const Priority& p) {
  for (const auto& q : top)
    if (q.address == p.address) return;
  top.push_back(p);
  std::sort(top.begin(), top.end(),
            [](const Priority& a, const Priority& b) { return beats(a, b); });
  if (top.size() > 2) top.resize(2);
}

using CacheView = std::vector<std::pair<NodeId, const ColorMessage*>>;

// Rebuilds trackers and bitmaps from the cached per-neighbor messages,
// discarding priority entries of nodes known to be colored and of the node
// itself.
void recompute_from_cache(NodeState& s, const CacheView& cache) {
  s.bitmap1.clear();
  s.bitmap2.clear();
  s.bitmap3.clear();
  s.max2_prio1.clear();
  s.max2_prio2.clear();
  s.max_prio3.reset();

  std::vector<NodeId> colored_neighbors;
  for (const auto& [v, msg] : cache)
    if (msg->color) colored_neighbors.push_back(v);
  auto known_colored = [&](NodeId id) {
    return std::find(colored_neighbors.begin(), colored_neighbors.end(), id) !=
           colored_neighbors.end();
  };

  for (const auto& [v, msg] : cache) {
    if (msg->color) {
      s.bitmap1.insert(*msg->color);
    } else {
      push_top2(s.max2_prio1, Priority{msg->prio, v});
    }
    s.bitmap2.merge(msg->bitmap1);
    s.bitmap3.merge(msg->bitmap2);
    for (const auto& p : msg->max2_prio1) {
      if (p.address == s.me || known_colored(p.address)) continue;
      push_top2(s.max2_prio2, p);
    }
    for (const auto& p : msg->max2_prio2) {
      if (p.address == s.me || known_colored(p.address)) continue;
      if (!s.max_prio3 || beats(p, *s.max_prio3)) s.max_prio3 = p;
    }
  }
}

}  // namespace

NodeState local_update(NodeState s, const std::vector<ColorMessage>& inbox) {
  for (const auto& msg : inbox) {
    if (!std::binary_search(s.neighbors.begin(), s.neighbors.end(),
                            msg.originator))
      throw ProtocolViolation("node " + std::to_string(s.me) +
                              " received a message from non-neighbor " +
                              std::to_string(msg.originator));
    s.neighbor_cache[msg.originator] = msg;
  }
  s.round += 1;
  CacheView view;
  view.reserve(s.neighbor_cache.size());
  for (const auto& [v, msg] : s.neighbor_cache) view.emplace_back(v, &msg);
  recompute_from_cache(s, view);
  return s;
}

bool rule_r1(const NodeState& s) {
  for (const auto& p : s.max2_prio1)
    if (!beats(s.priority, p)) return false;
  for (const auto& p : s.max2_prio2)
    if (!beats(s.priority, p)) return false;
  if (s.max_prio3 && !beats(s.priority, *s.max_prio3)) return false;
  return true;
}

Color rule_r2(const NodeState& s) {
  ColorSet forbidden = s.bitmap1;
  forbidden.merge(s.bitmap2);
  forbidden.merge(s.bitmap3);
  return forbidden.smallest_absent();
}

ColorMessage make_message(const NodeState& s) {
  ColorMessage m;
  m.type = 1;
  m.originator = s.me;
  m.color = s.color;
  m.prio = s.priority.prio;
  m.max2_prio1 = s.max2_prio1;
  m.max2_prio2 = s.max2_prio2;
  m.bitmap1 = s.bitmap1;
  m.bitmap2 = s.bitmap2;
  return m;
}

NonTermination::NonTermination(unsigned max_rounds,
                               std::vector<TraceEntry> trace)
    : std::runtime_error("coloring did not terminate within " +
                         std::to_string(max_rounds) + " rounds"),
      trace_(std::move(trace)) {}

namespace {

struct EngineNode {
  NodeState state;
  std::vector<std::uint32_t> neighbor_indices;
  std::map<NodeId, std::shared_ptr<const ColorMessage>> cache;
  bool flushed = false;   // sent the final message after termination
  bool silenced = false;  // no longer transmits
};

}  // namespace

RunResult run_serena(const Topology& t, const std::map<NodeId, unsigned>& prio,
                     const SerenaOptions& options) {
  RunResult result;
  if (t.node_count() == 0) return result;

  auto ids = t.nodes();
  for (auto id : ids) {
    auto it = prio.find(id);
    if (it == prio.end())
      throw std::invalid_argument("priority mapping is not total: node " +
                                  std::to_string(id));
    if (it->second > 0xFFFF)
      throw std::invalid_argument("priority exceeds 2 octets");
    if (id > 0xFFFF)
      throw std::invalid_argument("address exceeds 2 octets");
  }

  // Engine order: ascending address.
  std::vector<EngineNode> nodes(ids.size());
  std::unordered_map<NodeId, std::uint32_t> slot;
  for (std::uint32_t i = 0; i < ids.size(); ++i) slot[ids[i]] = i;
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    auto& n = nodes[i];
    n.state.me = ids[i];
    n.state.priority = Priority{static_cast<std::uint16_t>(prio.at(ids[i])),
                                ids[i]};
    n.state.neighbors = t.neighbors(ids[i]);
    for (auto v : n.state.neighbors) n.neighbor_indices.push_back(slot.at(v));
  }

  unsigned last_color_round = 0;
  std::size_t terminated_count = 0;

  for (unsigned round = 1;; ++round) {
    if (round > options.max_rounds)
      throw NonTermination(options.max_rounds, result.trace);

    // Broadcast. Every receiver of one broadcast shares the same message.
    std::vector<std::shared_ptr<const ColorMessage>> outgoing(nodes.size());
    for (std::uint32_t i = 0; i < nodes.size(); ++i) {
      auto& n = nodes[i];
      if (n.silenced) continue;
      if (n.state.terminated && n.flushed) {
        n.silenced = true;
        continue;
      }
      auto msg = make_message(n.state);
      if (options.through_wire) msg = decode(encode(msg));
      outgoing[i] = std::make_shared<const ColorMessage>(std::move(msg));
      if (n.state.terminated) n.flushed = true;
    }
    for (std::uint32_t i = 0; i < nodes.size(); ++i) {
      if (!outgoing[i]) continue;
      for (auto j : nodes[i].neighbor_indices)
        nodes[j].cache[nodes[i].state.me] = outgoing[i];
    }

    // Local update.
    for (auto& n : nodes) {
      if (n.state.terminated) continue;
      n.state.round = round;
      CacheView view;
      view.reserve(n.cache.size());
      for (const auto& [v, msg] : n.cache) view.emplace_back(v, msg.get());
      recompute_from_cache(n.state, view);
    }

    // Rules R1/R2, applied simultaneously.
    std::vector<std::pair<std::uint32_t, Color>> pending;
    for (std::uint32_t i = 0; i < nodes.size(); ++i) {
      auto& n = nodes[i];
      if (n.state.terminated || n.state.color) continue;
      bool warm = n.state.neighbors.empty() ? round >= 1 : round >= 3;
      if (warm && rule_r1(n.state)) pending.emplace_back(i, rule_r2(n.state));
    }
    for (auto [i, color] : pending) {
      nodes[i].state.color = color;
      result.trace.push_back(TraceEntry{round, nodes[i].state.me, color});
      last_color_round = round;
    }

    // Termination detection from local state.
    for (auto& n : nodes) {
      if (n.state.terminated || !n.state.color) continue;
      if (n.cache.size() != n.state.neighbors.size()) continue;
      if (!n.state.max2_prio1.empty() || !n.state.max2_prio2.empty() ||
          n.state.max_prio3)
        continue;
      bool all_colored = true;
      for (const auto& [v, msg] : n.cache)
        if (!msg->color) {
          all_colored = false;
          break;
        }
      if (!all_colored) continue;
      n.state.terminated = true;
      ++terminated_count;
    }

    if (terminated_count == nodes.size()) break;
  }

  for (const auto& n : nodes)
    result.coloring.assignment[n.state.me] = *n.state.color;
  result.rounds = last_color_round;
  return result;
}

RunResult run_serena(const Topology& t, const std::map<NodeId, unsigned>& prio,
                     unsigned max_rounds) {
  SerenaOptions options;
  options.max_rounds = max_rounds;
  return run_serena(t, prio, options);
}

}  // namespace hopcolor
