// Transformation G -> G' embedding 1-hop coloring into h-hop coloring, plus
// machine checks of the structural properties it relies on.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopcolor/topology.hpp"
#include "hopcolor/validity.hpp"

namespace hopcolor {

struct AddedNode {
  NodeId id = 0;
  unsigned set_index = 0;  // U_i layer; 0 for the conjunction node
  std::optional<NodeId> source_node;                    // copy layers
  std::optional<std::pair<NodeId, NodeId>> source_edge; // edge layer (even h)
  bool is_conjunction = false;                          // u0 (odd h)
};

struct ReducedGraph {
  Topology original;
  Topology gprime;
  std::vector<NodeId> original_nodes;
  std::vector<AddedNode> added;
  Hops h = 0;

  std::size_t added_count() const { return added.size(); }
};

// Builds G' for h >= 2. Original addresses are preserved; added nodes are
// numbered above the maximum original address, grouped by layer in source
// order. Even h additionally requires at least one edge.
ReducedGraph transform(const Topology& g, Hops h);

struct LemmaReport {
  bool added_within_h_minus_1 = false;  // added nodes pairwise <= h-1 hops
  bool mixed_within_h = false;          // every (original, added) pair <= h
  bool c1 = false;  // 1-hop in G  => <= h in G'
  bool c2 = false;  // 2-hop in G  => >= h+1 in G'
  bool c3 = false;  // added pairwise <= h and mixed pairs <= h
  std::size_t m = 0;
  std::size_t closed_form_m = 0;  // h'*n+1 (odd) or h'*n-1 (even)
  bool matches_closed_form = false;
  std::vector<std::string> failures;

  bool all_ok() const {
    return added_within_h_minus_1 && mixed_within_h && c1 && c2 && c3;
  }
};

LemmaReport verify_lemmas(const ReducedGraph& r);

struct EquivalenceReport {
  unsigned k = 0;       // 1-hop chromatic number of G
  unsigned k_prime = 0; // h-hop chromatic number of G'
  std::size_t m = 0;    // |V' \ V|
  bool matches = false; // k' == k + m
  bool lifted_valid = false;
  std::size_t lifted_colors = 0;
};

// Oracle check of k' = k + m on instances with at most `limit` original
// nodes, plus the constructive lift of a 1-hop coloring of G to an h-hop
// coloring of G' with k + m colors.
EquivalenceReport equivalence_check(const Topology& g, Hops h,
                                    std::size_t limit = 8);

// Provenance sidecar: one line per added node, `added_id set_index source`
// with source `u0`, a node id, or `a-b` for an edge.
void write_provenance(std::ostream& out, const ReducedGraph& r);

}  // namespace hopcolor
