#include "hopcolor/vector_method.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace hopcolor {

namespace {

// Hop distances from the origin on the window [-W, W]^2, BFS depth-capped at
// max_depth. Values beyond the cap (or outside the window) read max_depth+1.
// Exact for every hop count <= floor(W / R), since an L-hop path from the
// origin stays within euclidean distance L*R.
struct HopField {
  int W = 0;
  Hops max_depth = 0;
  std::vector<Hops> dist;

  Hops at(int x, int y) const {
    if (std::abs(x) > W || std::abs(y) > W) return max_depth + 1;
    std::size_t side = 2 * static_cast<std::size_t>(W) + 1;
    Hops d = dist[(static_cast<std::size_t>(y + W)) * side + (x + W)];
    return d > max_depth ? max_depth + 1 : d;
  }
};

std::vector<Vec2> reach_offsets(Range R) {
  std::vector<Vec2> offsets;
  int maxd = R.tenths() / 10 + 1;
  for (int dy = -maxd; dy <= maxd; ++dy)
    for (int dx = -maxd; dx <= maxd; ++dx) {
      if (dx == 0 && dy == 0) continue;
      if (R.reaches(dx, dy)) offsets.push_back(Vec2{dx, dy});
    }
  return offsets;
}

HopField make_hop_field(Range R, int W, Hops max_depth) {
  HopField field;
  field.W = W;
  field.max_depth = max_depth;
  std::size_t side = 2 * static_cast<std::size_t>(W) + 1;
  field.dist.assign(side * side, kUnreachable);
  auto index = [&](int x, int y) {
    return static_cast<std::size_t>(y + W) * side + (x + W);
  };
  auto offsets = reach_offsets(R);
  std::queue<Vec2> queue;
  field.dist[index(0, 0)] = 0;
  queue.push(Vec2{0, 0});
  while (!queue.empty()) {
    Vec2 p = queue.front();
    queue.pop();
    Hops d = field.dist[index(p.x, p.y)];
    if (d >= max_depth) continue;
    for (const auto& o : offsets) {
      int nx = p.x + o.x, ny = p.y + o.y;
      if (std::abs(nx) > W || std::abs(ny) > W) continue;
      if (field.dist[index(nx, ny)] == kUnreachable) {
        field.dist[index(nx, ny)] = d + 1;
        queue.push(Vec2{nx, ny});
      }
    }
  }
  return field;
}

int ceil_hr(Range R, Hops h) {
  // ceil(h * R) from tenths, exactly.
  int t = static_cast<int>(h) * R.tenths();
  return (t + 9) / 10;
}

// Nonzero points within h hops of the origin, nearest first.
std::vector<Vec2> h_hop_ball(Range R, Hops h, const HopField& field) {
  std::vector<Vec2> ball;
  int reach = ceil_hr(R, h);
  for (int y = -reach; y <= reach; ++y)
    for (int x = -reach; x <= reach; ++x) {
      if (x == 0 && y == 0) continue;
      if (field.at(x, y) <= h) ball.push_back(Vec2{x, y});
    }
  std::sort(ball.begin(), ball.end(), [](const Vec2& a, const Vec2& b) {
    auto na = static_cast<long>(a.x) * a.x + static_cast<long>(a.y) * a.y;
    auto nb = static_cast<long>(b.x) * b.x + static_cast<long>(b.y) * b.y;
    return na < nb;
  });
  return ball;
}

bool lattice_clear(const VectorPair& pair, const std::vector<Vec2>& ball) {
  std::int64_t d = pair.signed_det();
  for (const auto& p : ball) {
    // p is a lattice point iff both Cramer numerators divide by det.
    std::int64_t a = static_cast<std::int64_t>(p.x) * pair.v2.y -
                     static_cast<std::int64_t>(p.y) * pair.v2.x;
    std::int64_t b = static_cast<std::int64_t>(pair.v1.x) * p.y -
                     static_cast<std::int64_t>(pair.v1.y) * p.x;
    if (a % d == 0 && b % d == 0) return false;
  }
  return true;
}

}  // namespace

Hops grid_hop_distance(Range R, Vec2 p, int window_radius) {
  if (std::abs(p.x) > window_radius || std::abs(p.y) > window_radius)
    throw std::invalid_argument("point outside window");
  auto field = make_hop_field(R, window_radius, kUnreachable - 1);
  return field.at(p.x, p.y) == field.max_depth + 1 ? kUnreachable
                                                   : field.at(p.x, p.y);
}

Hops grid_hop_distance(Range R, Vec2 p) {
  if (p.x == 0 && p.y == 0) return 0;
  int W = std::max(std::abs(p.x), std::abs(p.y)) + R.tenths() / 10 + 2;
  for (;;) {
    auto field = make_hop_field(R, W, kUnreachable - 1);
    Hops d = field.at(p.x, p.y);
    // Any path of d hops stays within euclidean d*R of the origin, so the
    // answer is exact once the window encloses that disk.
    if (d != field.max_depth + 1 &&
        static_cast<long long>(d) * R.tenths() <= 10LL * W)
      return d;
    W *= 2;
    if (W > 100000) throw std::runtime_error("hop distance window blow-up");
  }
}

VectorPair solve_vectors(Range R, Hops h) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  int reach = ceil_hr(R, h);
  int W = reach + 2;  // optimal endpoints can sit just beyond h*R
  auto field = make_hop_field(R, 2 * W, h);
  auto ball = h_hop_ball(R, h, field);

  std::vector<Vec2> candidates;
  std::int64_t limit = static_cast<std::int64_t>(W) * W;
  for (int y = 0; y <= W; ++y)
    for (int x = -W; x <= W; ++x) {
      if (x == 0 && y == 0) continue;
      if (static_cast<std::int64_t>(x) * x + static_cast<std::int64_t>(y) * y >
          limit)
        continue;
      if (field.at(x, y) <= h) continue;
      candidates.push_back(Vec2{x, y});
    }

  struct Entry {
    std::uint64_t det;
    Vec2 v1, v2;
  };
  std::vector<Entry> entries;
  for (const auto& v1 : candidates)
    for (const auto& v2 : candidates) {
      VectorPair pair{v1, v2};
      if (pair.signed_det() == 0) continue;
      if (field.at(v2.x - v1.x, v2.y - v1.y) <= h) continue;
      entries.push_back(Entry{pair.det(), v1, v2});
    }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.det, a.v1.x, a.v1.y, a.v2.x, a.v2.y) <
           std::tie(b.det, b.v1.x, b.v1.y, b.v2.x, b.v2.y);
  });
  for (const auto& e : entries) {
    VectorPair pair{e.v1, e.v2};
    if (lattice_clear(pair, ball)) return pair;
  }
  throw std::runtime_error("no feasible generator pair in window");
}

Couple couple_of(Vec2 p, const VectorPair& pair) {
  std::int64_t d = static_cast<std::int64_t>(pair.det());
  if (d == 0) throw std::invalid_argument("generator vectors are dependent");
  auto emod = [d](std::int64_t v) {
    std::int64_t m = v % d;
    return static_cast<std::uint32_t>(m < 0 ? m + d : m);
  };
  std::int64_t c1 = static_cast<std::int64_t>(p.x) * pair.v1.y -
                    static_cast<std::int64_t>(p.y) * pair.v1.x;
  std::int64_t c2 = static_cast<std::int64_t>(p.x) * pair.v2.y -
                    static_cast<std::int64_t>(p.y) * pair.v2.x;
  return Couple{emod(c1), emod(c2)};
}

PatternColoring PatternColoring::canonical(const VectorPair& pair) {
  std::int64_t D = pair.signed_det();
  if (D == 0) throw std::invalid_argument("generator vectors are dependent");
  PatternColoring out;
  out.pair_ = pair;

  // Integer points of the half-open parallelogram {a*v1 + b*v2 : a,b in
  // [0,1)}, scanned in line order.
  int xs[4] = {0, pair.v1.x, pair.v2.x, pair.v1.x + pair.v2.x};
  int ys[4] = {0, pair.v1.y, pair.v2.y, pair.v1.y + pair.v2.y};
  int xmin = *std::min_element(xs, xs + 4), xmax = *std::max_element(xs, xs + 4);
  int ymin = *std::min_element(ys, ys + 4), ymax = *std::max_element(ys, ys + 4);

  Color next = 0;
  for (int y = ymin; y <= ymax; ++y)
    for (int x = xmin; x <= xmax; ++x) {
      std::int64_t a = static_cast<std::int64_t>(x) * pair.v2.y -
                       static_cast<std::int64_t>(y) * pair.v2.x;
      std::int64_t b = static_cast<std::int64_t>(pair.v1.x) * y -
                       static_cast<std::int64_t>(pair.v1.y) * x;
      // alpha = a/D in [0,1), beta = b/D in [0,1)
      bool in_domain;
      if (D > 0)
        in_domain = a >= 0 && a < D && b >= 0 && b < D;
      else
        in_domain = a <= 0 && a > D && b <= 0 && b > D;
      if (!in_domain) continue;
      Couple c = couple_of(Vec2{x, y}, pair);
      auto [it, inserted] = out.map_.emplace(c, next);
      if (!inserted)
        throw std::logic_error("couple repeated inside the parallelogram");
      ++next;
    }
  if (out.map_.size() != pair.det())
    throw std::logic_error("parallelogram does not cover every couple");
  return out;
}

PatternColoring PatternColoring::from_cells(
    const VectorPair& pair,
    const std::vector<std::tuple<int, int, Color>>& cells) {
  PatternColoring out;
  out.pair_ = pair;
  for (const auto& [x, y, color] : cells) {
    Couple c = couple_of(Vec2{x, y}, pair);
    auto it = out.map_.find(c);
    if (it != out.map_.end()) {
      if (it->second != color)
        throw std::logic_error("cells disagree on the color of a couple");
    } else {
      out.map_.emplace(c, color);
    }
  }
  if (out.map_.size() != pair.det())
    throw std::logic_error("cells do not cover every couple");
  std::vector<Color> colors;
  for (const auto& [c, color] : out.map_) colors.push_back(color);
  std::sort(colors.begin(), colors.end());
  if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
    throw std::logic_error("couple-to-color mapping is not a bijection");
  return out;
}

Color PatternColoring::color_at(int x, int y) const {
  auto it = map_.find(couple_of(Vec2{x, y}, pair_));
  if (it == map_.end())
    throw std::logic_error("couple missing from pattern mapping");
  return it->second;
}

bool pair_feasible(Range R, Hops h, const VectorPair& pair) {
  if (pair.signed_det() == 0) return false;
  if (pair.v1.y < 0 || pair.v2.y < 0) return false;
  auto field = make_hop_field(R, 2 * (ceil_hr(R, h) + 2), h);
  auto ball = h_hop_ball(R, h, field);
  return lattice_clear(pair, ball);
}

Coloring tile_grid(const GridSpec& spec, const PatternColoring& pattern) {
  spec.validate();
  Coloring c;
  for (int y = 0; y < spec.height; ++y)
    for (int x = 0; x < spec.width; ++x)
      c.assignment[static_cast<NodeId>(y) * spec.width + x] =
          pattern.color_at(x, y);
  return c;
}

Coloring tile_grid(const GridSpec& spec, const VectorPair& pair, Hops h) {
  spec.validate();
  if (!pair_feasible(spec.range, h, pair))
    throw std::invalid_argument(
        "generator pair is not feasible for this range and hop count");
  return tile_grid(spec, PatternColoring::canonical(pair));
}

BoundsReport bounds(Range R, Hops h, std::uint64_t achieved) {
  const double sqrt2 = std::numbers::sqrt2;
  const double sqrt3 = std::numbers::sqrt3;
  double r = R.value();
  double hh = static_cast<double>(h);
  BoundsReport report;
  report.lower =
      r < sqrt2 ? 0.0 : (sqrt3 / 2.0) * hh * hh * (r - sqrt2) * (r - sqrt2);
  report.upper = (sqrt3 / 2.0) * hh * hh * r * r + 2.0 * hh * r +
                 (2.0 + hh * r) * sqrt2;
  report.achieved = achieved;
  return report;
}

}  // namespace hopcolor
