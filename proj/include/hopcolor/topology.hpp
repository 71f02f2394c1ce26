// Network topologies: unit-disk grids, arbitrary graphs for reductions,
// k-hop neighborhoods, and the textual interchange format.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hopcolor {

using NodeId = std::uint32_t;
using Hops = std::uint32_t;

inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

struct Coord {
  int x = 0;
  int y = 0;
  bool operator==(const Coord&) const = default;
};

// Transmission range in grid-step units, held in tenths so the unit-disk
// test d(u,v) <= R can be decided in exact integer arithmetic. R=1.5 with
// d(u,v)=1.5 must classify as an edge, bit-exactly.
class Range {
 public:
  explicit Range(double value);
  static Range from_tenths(int tenths);

  int tenths() const { return tenths_; }
  double value() const { return tenths_ / 10.0; }

  // dx^2 + dy^2 <= R^2, exactly.
  bool reaches(std::int64_t dx, std::int64_t dy) const {
    return 100 * (dx * dx + dy * dy) <=
           static_cast<std::int64_t>(tenths_) * tenths_;
  }

  bool operator==(const Range&) const = default;

 private:
  Range() = default;
  int tenths_ = 10;
};

struct GridSpec {
  int width = 1;   // nodes per row
  int height = 1;  // nodes per column
  Range range{1.0};

  void validate() const;  // throws std::invalid_argument
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Node set with optional integer coordinates and symmetric adjacency.
// Immutable once built; all mutation happens during construction.
class Topology {
 public:
  void add_node(NodeId id, std::optional<Coord> pos = std::nullopt);
  void add_edge(NodeId a, NodeId b);

  bool has_node(NodeId id) const { return index_.count(id) != 0; }
  bool has_edge(NodeId a, NodeId b) const;

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Node ids in ascending order.
  std::vector<NodeId> nodes() const;
  // Neighbor ids of u in ascending order.
  std::vector<NodeId> neighbors(NodeId u) const;
  std::size_t degree(NodeId u) const { return adj_[index_of(u)].size(); }
  std::optional<Coord> coord(NodeId u) const { return coords_[index_of(u)]; }

  // Dense-index access for algorithmic code. Indices follow insertion order.
  std::size_t index_of(NodeId id) const;
  NodeId id_at(std::size_t index) const { return ids_[index]; }
  std::span<const std::uint32_t> neighbor_indices(std::size_t index) const {
    return adj_[index];
  }

  // Minimum hop counts from `from` to every node, by dense index.
  // `max_depth` bounds the search; nodes beyond it report kUnreachable.
  std::vector<Hops> hop_distances(NodeId from,
                                  Hops max_depth = kUnreachable) const;
  Hops hop_distance(NodeId a, NodeId b) const;

 private:
  std::vector<NodeId> ids_;
  std::vector<std::optional<Coord>> coords_;
  std::vector<std::vector<std::uint32_t>> adj_;  // neighbor indices
  std::unordered_map<NodeId, std::uint32_t> index_;
  std::size_t edge_count_ = 0;
};

Topology build_grid(const GridSpec& spec);

// Nodes whose minimum hop distance to u is exactly k (u excluded), ascending.
std::vector<NodeId> k_hop_neighbors(const Topology& t, NodeId u, Hops k);
// Union of k_hop_neighbors for k in [1, h], ascending.
std::vector<NodeId> neighborhood_up_to(const Topology& t, NodeId u, Hops h);

// Textual interchange format:
//   nodes N edges M
//   id x y        (N lines; '-' for absent coordinates)
//   id id         (M lines)
Topology read_topology(std::istream& in);
void write_topology(std::ostream& out, const Topology& t);

// Same graph with addresses substituted through a bijection over the node set.
Topology relabeled(const Topology& t,
                   const std::unordered_map<NodeId, NodeId>& mapping);

}  // namespace hopcolor
