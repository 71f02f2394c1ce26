#include "hopcolor/priority.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hopcolor/vector_method.hpp"

namespace hopcolor {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kRandom: return "random";
    case Strategy::kLine: return "line";
    case Strategy::kColumn: return "column";
    case Strategy::kDiagonal: return "diagonal";
    case Strategy::kDistanceToOrigin: return "origin";
    case Strategy::kVector: return "vector";
  }
  return "?";
}

std::optional<Strategy> strategy_from_string(const std::string& name) {
  if (name == "random") return Strategy::kRandom;
  if (name == "line") return Strategy::kLine;
  if (name == "column") return Strategy::kColumn;
  if (name == "diagonal") return Strategy::kDiagonal;
  if (name == "origin") return Strategy::kDistanceToOrigin;
  if (name == "vector") return Strategy::kVector;
  return std::nullopt;
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4B9FDull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Unbiased value in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (~bound + 1) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

Coord require_coord(const Topology& t, NodeId id) {
  auto c = t.coord(id);
  if (!c)
    throw std::invalid_argument("node " + std::to_string(id) +
                                " has no coordinates; grid strategy needs them");
  return *c;
}

// values[u] = rank of key(u) ascending; keys carry the address so the rank
// order is strict.
template <typename Key>
std::map<NodeId, unsigned> rank_by(
    const Topology& t, const std::function<Key(NodeId)>& key) {
  std::vector<std::pair<Key, NodeId>> order;
  for (auto id : t.nodes()) order.emplace_back(key(id), id);
  std::sort(order.begin(), order.end());
  std::map<NodeId, unsigned> values;
  for (std::size_t i = 0; i < order.size(); ++i)
    values[order[i].second] = static_cast<unsigned>(i);
  return values;
}

}  // namespace

PriorityAssignment assign(Strategy strategy, const Topology& t,
                          const GridSpec& spec,
                          std::optional<std::uint64_t> seed,
                          const PriorityOptions& options) {
  PriorityAssignment out;
  out.strategy = strategy;
  switch (strategy) {
    case Strategy::kRandom: {
      if (!seed)
        throw std::invalid_argument("random strategy requires a seed");
      for (auto id : t.nodes())
        out.values[id] = compute_prio(t, id, options.native_variant);
      break;
    }
    case Strategy::kLine: {
      for (auto id : t.nodes()) {
        auto c = require_coord(t, id);
        out.values[id] =
            static_cast<unsigned>(c.y) * spec.width + static_cast<unsigned>(c.x);
      }
      break;
    }
    case Strategy::kColumn: {
      for (auto id : t.nodes()) {
        auto c = require_coord(t, id);
        out.values[id] = static_cast<unsigned>(c.x) * spec.height +
                         static_cast<unsigned>(c.y);
      }
      break;
    }
    case Strategy::kDiagonal: {
      out.values = rank_by<std::tuple<int, int, NodeId>>(
          t, [&](NodeId id) {
            auto c = require_coord(t, id);
            return std::tuple<int, int, NodeId>{c.x + c.y, c.x, id};
          });
      break;
    }
    case Strategy::kDistanceToOrigin: {
      double cx = 0.0, cy = 0.0;
      if (options.distance_to_center) {
        cx = (spec.width - 1) / 2.0;
        cy = (spec.height - 1) / 2.0;
      }
      out.values = rank_by<std::tuple<std::int64_t, NodeId>>(
          t, [&](NodeId id) {
            auto c = require_coord(t, id);
            // keep the key integral: distances scaled by 4 stay exact for
            // half-integer centers
            std::int64_t dx = static_cast<std::int64_t>(std::llround(
                (c.x - cx) * 2));
            std::int64_t dy = static_cast<std::int64_t>(std::llround(
                (c.y - cy) * 2));
            return std::tuple<std::int64_t, NodeId>{dx * dx + dy * dy, id};
          });
      break;
    }
    case Strategy::kVector: {
      VectorPair pair = solve_vectors(spec.range, 3);
      std::map<Couple, unsigned> rank;
      for (auto id : t.nodes()) {
        auto c = require_coord(t, id);
        rank.emplace(couple_of(Vec2{c.x, c.y}, pair), 0);
      }
      unsigned r = 0;
      for (auto& [couple, value] : rank) value = r++;
      for (auto id : t.nodes()) {
        auto c = require_coord(t, id);
        unsigned v = rank.at(couple_of(Vec2{c.x, c.y}, pair));
        out.values[id] = options.vector_rank_descending ? (r - 1 - v) : v;
      }
      break;
    }
  }
  return out;
}

Topology with_shuffled_addresses(const Topology& t, std::uint64_t seed) {
  auto ids = t.nodes();
  std::vector<NodeId> target(ids);
  SplitMix64 rng{seed ^ 0xA0761D6478BD642Full};
  for (std::size_t i = target.size(); i > 1; --i)
    std::swap(target[i - 1], target[rng.below(i)]);
  std::unordered_map<NodeId, NodeId> mapping;
  for (std::size_t i = 0; i < ids.size(); ++i) mapping[ids[i]] = target[i];
  return relabeled(t, mapping);
}

}  // namespace hopcolor
