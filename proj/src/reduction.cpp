#include "hopcolor/reduction.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <string>

namespace hopcolor {

ReducedGraph transform(const Topology& g, Hops h) {
  if (h < 2) throw std::domain_error("transformation requires h >= 2");
  if (g.node_count() < 2)
    throw std::invalid_argument("graph must have at least 2 nodes");

  ReducedGraph r;
  r.original = g;
  r.h = h;
  r.original_nodes = g.nodes();

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (auto u : r.original_nodes)
    for (auto v : g.neighbors(u))
      if (v > u) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());

  bool odd = (h % 2) != 0;
  unsigned hp = odd ? (h - 1) / 2 : h / 2;
  if (!odd && edges.empty())
    throw std::invalid_argument("even h requires at least one edge");

  for (auto id : r.original_nodes) r.gprime.add_node(id, g.coord(id));

  NodeId next = r.original_nodes.back() + 1;
  // copy layers U_1 .. U_L, L = h' for odd h, h'-1 for even h
  unsigned copy_layers = odd ? hp : hp - 1;
  std::map<std::pair<unsigned, NodeId>, NodeId> copy_of;  // (layer, v) -> id
  for (unsigned layer = 1; layer <= copy_layers; ++layer)
    for (auto v : r.original_nodes) {
      r.gprime.add_node(next);
      copy_of[{layer, v}] = next;
      r.added.push_back(AddedNode{next, layer, v, std::nullopt, false});
      ++next;
    }

  if (odd) {
    // E1: each original node to its first copy
    for (auto v : r.original_nodes) r.gprime.add_edge(v, copy_of.at({1, v}));
    // E2: chains between consecutive copies of the same node
    for (unsigned layer = 1; layer + 1 <= hp; ++layer)
      for (auto v : r.original_nodes)
        r.gprime.add_edge(copy_of.at({layer, v}), copy_of.at({layer + 1, v}));
    // E3: the top copy layer mirrors E
    for (const auto& [a, b] : edges)
      r.gprime.add_edge(copy_of.at({hp, a}), copy_of.at({hp, b}));
    // E4: the conjunction node u0 joins the top layer
    NodeId u0 = next++;
    r.gprime.add_node(u0);
    r.added.push_back(AddedNode{u0, 0, std::nullopt, std::nullopt, true});
    for (auto v : r.original_nodes) r.gprime.add_edge(copy_of.at({hp, v}), u0);
  } else {
    // U_h' holds one node per original edge
    std::map<std::pair<NodeId, NodeId>, NodeId> edge_node;
    for (const auto& e : edges) {
      r.gprime.add_node(next);
      edge_node[e] = next;
      r.added.push_back(AddedNode{next, hp, std::nullopt, e, false});
      ++next;
    }
    if (hp >= 2) {
      // E1 and E2 as in the odd case, stopping one layer short
      for (auto v : r.original_nodes) r.gprime.add_edge(v, copy_of.at({1, v}));
      for (unsigned layer = 1; layer + 1 <= hp - 1; ++layer)
        for (auto v : r.original_nodes)
          r.gprime.add_edge(copy_of.at({layer, v}),
                            copy_of.at({layer + 1, v}));
    }
    // E4: each edge node joins the last copies of its two endpoints
    // (the endpoints themselves when h = 2)
    for (const auto& [e, id] : edge_node) {
      NodeId ea = hp >= 2 ? copy_of.at({hp - 1, e.first}) : e.first;
      NodeId eb = hp >= 2 ? copy_of.at({hp - 1, e.second}) : e.second;
      r.gprime.add_edge(id, ea);
      r.gprime.add_edge(id, eb);
    }
    // E5: the edge layer forms a complete graph
    for (auto it = edge_node.begin(); it != edge_node.end(); ++it)
      for (auto jt = std::next(it); jt != edge_node.end(); ++jt)
        r.gprime.add_edge(it->second, jt->second);
  }
  return r;
}

LemmaReport verify_lemmas(const ReducedGraph& r) {
  LemmaReport report;
  const Topology& gp = r.gprime;
  Hops h = r.h;

  std::vector<NodeId> added_ids;
  for (const auto& a : r.added) added_ids.push_back(a.id);

  // all-pairs distances in G'
  std::map<NodeId, std::vector<Hops>> dist;
  for (auto id : gp.nodes()) dist[id] = gp.hop_distances(id);
  auto d = [&](NodeId a, NodeId b) { return dist.at(a)[gp.index_of(b)]; };

  report.added_within_h_minus_1 = true;
  for (auto a : added_ids)
    for (auto b : added_ids)
      if (a < b && d(a, b) > h - 1) {
        report.added_within_h_minus_1 = false;
        report.failures.push_back("added nodes " + std::to_string(a) + "," +
                                  std::to_string(b) + " are " +
                                  std::to_string(d(a, b)) + " hops apart");
      }

  report.mixed_within_h = true;
  for (auto u : r.original_nodes)
    for (auto a : added_ids)
      if (d(u, a) > h) {
        report.mixed_within_h = false;
        report.failures.push_back("pair " + std::to_string(u) + "," +
                                  std::to_string(a) + " exceeds h hops");
      }

  report.c1 = true;
  report.c2 = true;
  for (auto u : r.original_nodes) {
    auto dg = r.original.hop_distances(u, 2);
    for (auto v : r.original_nodes) {
      if (v <= u) continue;
      Hops in_g = dg[r.original.index_of(v)];
      if (in_g == 1 && d(u, v) > h) {
        report.c1 = false;
        report.failures.push_back("C1: edge " + std::to_string(u) + "," +
                                  std::to_string(v) + " stretched beyond h");
      }
      if (in_g == 2 && d(u, v) < h + 1) {
        report.c2 = false;
        report.failures.push_back("C2: 2-hop pair " + std::to_string(u) + "," +
                                  std::to_string(v) + " closer than h+1");
      }
    }
  }

  report.c3 = report.mixed_within_h;
  for (auto a : added_ids)
    for (auto b : added_ids)
      if (a < b && d(a, b) > h) {
        report.c3 = false;
        report.failures.push_back("C3: added pair " + std::to_string(a) + "," +
                                  std::to_string(b) + " exceeds h hops");
      }

  report.m = r.added.size();
  unsigned hp = (h % 2) ? (h - 1) / 2 : h / 2;
  std::size_t n = r.original_nodes.size();
  report.closed_form_m = (h % 2) ? hp * n + 1 : hp * n - 1;
  report.matches_closed_form = report.m == report.closed_form_m;
  return report;
}

EquivalenceReport equivalence_check(const Topology& g, Hops h,
                                    std::size_t limit) {
  if (g.node_count() > limit)
    throw std::invalid_argument("instance too large for equivalence check");

  EquivalenceReport report;
  auto one_hop = chromatic_bruteforce_witness(g, 1, limit);
  report.k = one_hop.count;

  ReducedGraph r = transform(g, h);
  report.m = r.added_count();
  report.k_prime =
      chromatic_number_bruteforce(r.gprime, h, r.gprime.node_count());
  report.matches = report.k_prime == report.k + report.m;

  // Constructive lift: originals keep their 1-hop colors, added nodes take
  // fresh colors.
  Coloring lifted = one_hop.witness;
  Color fresh = report.k;
  for (const auto& a : r.added) lifted.assignment[a.id] = fresh++;
  auto check = check_h_hop(r.gprime, lifted, h);
  report.lifted_valid = check.valid;
  report.lifted_colors = lifted.color_count();
  return report;
}

void write_provenance(std::ostream& out, const ReducedGraph& r) {
  for (const auto& a : r.added) {
    out << a.id << " " << a.set_index << " ";
    if (a.is_conjunction)
      out << "u0";
    else if (a.source_edge)
      out << a.source_edge->first << "-" << a.source_edge->second;
    else
      out << *a.source_node;
    out << "\n";
  }
}

}  // namespace hopcolor
