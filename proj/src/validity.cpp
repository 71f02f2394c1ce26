#include "hopcolor/validity.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace hopcolor {

std::size_t Coloring::color_count() const {
  std::set<Color> seen;
  for (const auto& [id, c] : assignment) seen.insert(c);
  return seen.size();
}

ValidityReport check_h_hop(const Topology& t, const Coloring& c, Hops h) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  auto ids = t.nodes();
  for (auto id : ids)
    if (!c.assignment.count(id))
      throw std::invalid_argument("coloring is not total: node " +
                                  std::to_string(id) + " has no color");
  for (const auto& [id, color] : c.assignment)
    if (!t.has_node(id))
      throw std::invalid_argument("coloring mentions unknown node " +
                                  std::to_string(id));

  ValidityReport report;
  for (auto u : ids) {
    auto dist = t.hop_distances(u, h);
    Color cu = c.assignment.at(u);
    for (std::size_t i = 0; i < t.node_count(); ++i) {
      NodeId v = t.id_at(i);
      if (v <= u || dist[i] < 1 || dist[i] > h) continue;
      if (c.assignment.at(v) == cu)
        report.violations.push_back(Violation{u, v, dist[i], cu});
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  report.valid = report.violations.empty();
  return report;
}

Topology power_graph(const Topology& t, Hops h) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  Topology out;
  auto ids = t.nodes();
  for (auto id : ids) out.add_node(id, t.coord(id));
  for (auto u : ids) {
    auto dist = t.hop_distances(u, h);
    for (std::size_t i = 0; i < t.node_count(); ++i) {
      NodeId v = t.id_at(i);
      if (v > u && dist[i] >= 1 && dist[i] <= h) out.add_edge(u, v);
    }
  }
  return out;
}

namespace {

struct Backtracker {
  std::vector<std::vector<std::uint32_t>> adj;  // by position in id order
  std::vector<int> color;
  std::vector<int> best_color;
  unsigned best;

  void run(std::size_t i, unsigned used) {
    if (used >= best) return;
    if (i == adj.size()) {
      best = used;
      best_color = color;
      return;
    }
    // Colors tried ascending; at most one fresh color keeps the search
    // canonical, and anything >= best-1 cannot improve.
    unsigned cap = std::min(used, best - 1);
    for (unsigned c = 0; c <= cap && c + 1 <= best - 1; ++c) {
      bool ok = true;
      for (auto v : adj[i])
        if (color[v] == static_cast<int>(c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[i] = static_cast<int>(c);
      run(i + 1, std::max(used, c + 1));
      color[i] = -1;
    }
  }
};

}  // namespace

OracleResult chromatic_bruteforce_witness(const Topology& t, Hops h,
                                          std::size_t limit) {
  if (t.node_count() > limit)
    throw std::invalid_argument(
        "instance too large for the exact oracle: " +
        std::to_string(t.node_count()) + " nodes, limit " +
        std::to_string(limit));
  if (t.node_count() == 0) return {};

  Topology p = power_graph(t, h);
  auto ids = p.nodes();
  std::unordered_map<NodeId, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;

  Backtracker bt;
  bt.adj.resize(ids.size());
  for (std::uint32_t i = 0; i < ids.size(); ++i)
    for (auto v : p.neighbors(ids[i])) bt.adj[i].push_back(pos.at(v));

  // Greedy first-fit in address order gives the initial upper bound.
  std::vector<int> greedy(ids.size(), -1);
  unsigned greedy_used = 0;
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    std::set<int> taken;
    for (auto v : bt.adj[i])
      if (greedy[v] >= 0) taken.insert(greedy[v]);
    int c = 0;
    while (taken.count(c)) ++c;
    greedy[i] = c;
    greedy_used = std::max(greedy_used, static_cast<unsigned>(c) + 1);
  }

  bt.color.assign(ids.size(), -1);
  bt.best = greedy_used;
  bt.best_color = greedy;
  bt.run(0, 0);

  OracleResult result;
  result.count = bt.best;
  for (std::uint32_t i = 0; i < ids.size(); ++i)
    result.witness.assignment[ids[i]] =
        static_cast<Color>(bt.best_color[i]);
  return result;
}

unsigned chromatic_number_bruteforce(const Topology& t, Hops h,
                                     std::size_t limit) {
  return chromatic_bruteforce_witness(t, h, limit).count;
}

Coloring read_coloring(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    ++lineno;
    return false;
  };

  if (!next_line()) throw ParseError(lineno, "missing header");
  std::istringstream header(line);
  std::string kw;
  long long k = -1;
  header >> kw >> k;
  if (header.fail() || kw != "colors" || k < 0)
    throw ParseError(lineno, "expected 'colors K'");

  Coloring c;
  while (next_line()) {
    std::istringstream ls(line);
    unsigned long id = 0, color = 0;
    ls >> id >> color;
    if (ls.fail()) throw ParseError(lineno, "expected 'id color'");
    if (c.assignment.count(static_cast<NodeId>(id)))
      throw ParseError(lineno, "duplicate node " + std::to_string(id));
    c.assignment[static_cast<NodeId>(id)] = static_cast<Color>(color);
  }
  if (c.color_count() != static_cast<std::size_t>(k))
    throw ParseError(lineno, "header declares " + std::to_string(k) +
                                 " colors, body uses " +
                                 std::to_string(c.color_count()));
  return c;
}

void write_coloring(std::ostream& out, const Coloring& c) {
  out << "colors " << c.color_count() << "\n";
  for (const auto& [id, color] : c.assignment)
    out << id << " " << color << "\n";
}

}  // namespace hopcolor
