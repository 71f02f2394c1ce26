#include "hopcolor/topology.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace hopcolor {

Range::Range(double value) {
  double scaled = value * 10.0;
  double rounded = std::round(scaled);
  if (!std::isfinite(scaled) || std::abs(scaled - rounded) > 1e-6)
    throw std::invalid_argument("range must be a multiple of 0.1");
  if (rounded < 10.0) throw std::invalid_argument("range must be >= 1");
  if (rounded > 1e4) throw std::invalid_argument("range too large");
  tenths_ = static_cast<int>(rounded);
}

Range Range::from_tenths(int tenths) {
  if (tenths < 10) throw std::invalid_argument("range must be >= 1");
  Range r;
  r.tenths_ = tenths;
  return r;
}

void GridSpec::validate() const {
  if (width < 1 || height < 1)
    throw std::invalid_argument("grid dimensions must be >= 1");
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

void Topology::add_node(NodeId id, std::optional<Coord> pos) {
  if (has_node(id))
    throw std::invalid_argument("duplicate node " + std::to_string(id));
  index_.emplace(id, static_cast<std::uint32_t>(ids_.size()));
  ids_.push_back(id);
  coords_.push_back(pos);
  adj_.emplace_back();
}

std::size_t Topology::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw std::invalid_argument("unknown node " + std::to_string(id));
  return it->second;
}

void Topology::add_edge(NodeId a, NodeId b) {
  if (a == b)
    throw std::invalid_argument("self-loop on node " + std::to_string(a));
  auto ia = static_cast<std::uint32_t>(index_of(a));
  auto ib = static_cast<std::uint32_t>(index_of(b));
  auto& na = adj_[ia];
  if (std::find(na.begin(), na.end(), ib) != na.end())
    throw std::invalid_argument("duplicate edge " + std::to_string(a) + " " +
                                std::to_string(b));
  na.push_back(ib);
  adj_[ib].push_back(ia);
  ++edge_count_;
}

bool Topology::has_edge(NodeId a, NodeId b) const {
  auto ia = static_cast<std::uint32_t>(index_of(a));
  auto ib = static_cast<std::uint32_t>(index_of(b));
  const auto& na = adj_[ia];
  return std::find(na.begin(), na.end(), ib) != na.end();
}

std::vector<NodeId> Topology::nodes() const {
  std::vector<NodeId> out(ids_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> Topology::neighbors(NodeId u) const {
  std::vector<NodeId> out;
  for (auto i : adj_[index_of(u)]) out.push_back(ids_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Hops> Topology::hop_distances(NodeId from, Hops max_depth) const {
  std::vector<Hops> dist(ids_.size(), kUnreachable);
  std::queue<std::uint32_t> queue;
  auto start = static_cast<std::uint32_t>(index_of(from));
  dist[start] = 0;
  queue.push(start);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop();
    if (dist[u] >= max_depth) continue;
    for (auto v : adj_[u]) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

Hops Topology::hop_distance(NodeId a, NodeId b) const {
  return hop_distances(a)[index_of(b)];
}

Topology build_grid(const GridSpec& spec) {
  spec.validate();
  Topology t;
  for (int y = 0; y < spec.height; ++y)
    for (int x = 0; x < spec.width; ++x)
      t.add_node(static_cast<NodeId>(y) * spec.width + x, Coord{x, y});

  // Offsets with 0 < dx^2+dy^2 <= R^2, one orientation per pair.
  std::vector<Coord> offsets;
  int maxd = spec.range.tenths() / 10 + 1;
  for (int dy = 0; dy <= maxd; ++dy)
    for (int dx = -maxd; dx <= maxd; ++dx) {
      if (dy == 0 && dx <= 0) continue;
      if (spec.range.reaches(dx, dy)) offsets.push_back(Coord{dx, dy});
    }

  for (int y = 0; y < spec.height; ++y)
    for (int x = 0; x < spec.width; ++x)
      for (const auto& d : offsets) {
        int nx = x + d.x, ny = y + d.y;
        if (nx < 0 || nx >= spec.width || ny < 0 || ny >= spec.height) continue;
        t.add_edge(static_cast<NodeId>(y) * spec.width + x,
                   static_cast<NodeId>(ny) * spec.width + nx);
      }
  return t;
}

std::vector<NodeId> k_hop_neighbors(const Topology& t, NodeId u, Hops k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  auto dist = t.hop_distances(u, k);
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < t.node_count(); ++i)
    if (dist[i] == k) out.push_back(t.id_at(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> neighborhood_up_to(const Topology& t, NodeId u, Hops h) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  auto dist = t.hop_distances(u, h);
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < t.node_count(); ++i)
    if (dist[i] >= 1 && dist[i] <= h) out.push_back(t.id_at(i));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::optional<int> parse_coord_field(const std::string& tok) {
  if (tok == "-") return std::nullopt;
  std::size_t pos = 0;
  int v = std::stoi(tok, &pos);
  if (pos != tok.size()) throw std::invalid_argument("bad coordinate");
  return v;
}

}  // namespace

Topology read_topology(std::istream& in) {
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
  std::string nodes_kw, edges_kw;
  long long n = -1, m = -1;
  header >> nodes_kw >> n >> edges_kw >> m;
  if (header.fail() || nodes_kw != "nodes" || edges_kw != "edges" || n < 0 ||
      m < 0)
    throw ParseError(lineno, "expected 'nodes N edges M'");

  Topology t;
  for (long long i = 0; i < n; ++i) {
    if (!next_line()) throw ParseError(lineno, "missing node line");
    std::istringstream ls(line);
    std::string id_tok, x_tok, y_tok;
    ls >> id_tok >> x_tok >> y_tok;
    if (ls.fail()) throw ParseError(lineno, "expected 'id x y'");
    try {
      NodeId id = static_cast<NodeId>(std::stoul(id_tok));
      auto x = parse_coord_field(x_tok);
      auto y = parse_coord_field(y_tok);
      if (x.has_value() != y.has_value())
        throw std::invalid_argument("half-specified coordinates");
      if (x)
        t.add_node(id, Coord{*x, *y});
      else
        t.add_node(id);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    } catch (const std::out_of_range&) {
      throw ParseError(lineno, "value out of range");
    }
  }
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError(lineno, "missing edge line");
    std::istringstream ls(line);
    unsigned long a = 0, b = 0;
    ls >> a >> b;
    if (ls.fail()) throw ParseError(lineno, "expected 'id id'");
    try {
      t.add_edge(static_cast<NodeId>(a), static_cast<NodeId>(b));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return t;
}

void write_topology(std::ostream& out, const Topology& t) {
  auto ids = t.nodes();
  out << "nodes " << ids.size() << " edges " << t.edge_count() << "\n";
  for (auto id : ids) {
    auto c = t.coord(id);
    if (c)
      out << id << " " << c->x << " " << c->y << "\n";
    else
      out << id << " - -\n";
  }
  for (auto id : ids)
    for (auto v : t.neighbors(id))
      if (v > id) out << id << " " << v << "\n";
}

Topology relabeled(const Topology& t,
                   const std::unordered_map<NodeId, NodeId>& mapping) {
  auto ids = t.nodes();
  if (mapping.size() != ids.size())
    throw std::invalid_argument("relabeling must cover every node");
  // coordinates travel with the node
  std::vector<std::pair<NodeId, std::optional<Coord>>> entries;
  for (auto id : ids) entries.emplace_back(mapping.at(id), t.coord(id));
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first)
      throw std::invalid_argument("relabeling must be a bijection");
  Topology out;
  for (const auto& [id, c] : entries) out.add_node(id, c);
  for (auto id : ids)
    for (auto v : t.neighbors(id))
      if (v > id) out.add_edge(mapping.at(id), mapping.at(v));
  return out;
}

}  // namespace hopcolor
