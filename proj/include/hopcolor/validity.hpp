// h-hop coloring validity checks and an exact chromatic-number oracle
// for small instances.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "hopcolor/topology.hpp"

namespace hopcolor {

using Color = std::uint32_t;

// Total mapping node -> color; colors are 0-based internally.
struct Coloring {
  std::map<NodeId, Color> assignment;

  std::size_t color_count() const;
  bool operator==(const Coloring&) const = default;
};

struct Violation {
  NodeId u = 0;
  NodeId v = 0;
  Hops hops = 0;
  Color color = 0;
  bool operator==(const Violation&) const = default;
};

struct ValidityReport {
  bool valid = true;
  std::vector<Violation> violations;  // sorted by (u, v)
};

// Reports every pair at hop distance in [1, h] sharing a color.
// A coloring that is not total over t is a caller error, not an invalid
// coloring, and throws std::invalid_argument.
ValidityReport check_h_hop(const Topology& t, const Coloring& c, Hops h);

// Same nodes; edge(u,v) iff hop distance in [1, h].
Topology power_graph(const Topology& t, Hops h);

// Exact minimum color count of a valid h-hop coloring, by backtracking on
// power_graph(t, h) with the first branch canonicalized. Refuses instances
// with more than `limit` nodes.
unsigned chromatic_number_bruteforce(const Topology& t, Hops h,
                                     std::size_t limit = 16);

struct OracleResult {
  unsigned count = 0;
  Coloring witness;
};
OracleResult chromatic_bruteforce_witness(const Topology& t, Hops h,
                                          std::size_t limit = 16);

// Coloring interchange:
//   colors K
//   id color      (one line per node, 0-based colors)
Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& c);

}  // namespace hopcolor
