// Periodic grid colorings from integer generator vectors: determinant
// minimization, couple arithmetic, tilings, and color-count bounds.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hopcolor/topology.hpp"
#include "hopcolor/validity.hpp"

namespace hopcolor {

struct Vec2 {
  int x = 0;
  int y = 0;
  bool operator==(const Vec2&) const = default;
};

// Two generator vectors of a periodic color pattern. The induced lattice
// determines which nodes share a color; det is the color count.
struct VectorPair {
  Vec2 v1;
  Vec2 v2;

  std::int64_t signed_det() const {
    return static_cast<std::int64_t>(v1.x) * v2.y -
           static_cast<std::int64_t>(v2.x) * v1.y;
  }
  std::uint64_t det() const {
    auto d = signed_det();
    return static_cast<std::uint64_t>(d < 0 ? -d : d);
  }
  bool operator==(const VectorPair&) const = default;
};

struct Couple {
  std::uint32_t c1 = 0;
  std::uint32_t c2 = 0;
  auto operator<=>(const Couple&) const = default;
};

// Minimum hop count from (0,0) to p on the unbounded grid under the
// unit-disk rule for range R. The window grows until the answer is provably
// exact.
Hops grid_hop_distance(Range R, Vec2 p);
// Same, restricted to the window [-window_radius, window_radius]^2; p outside
// the window is an error. Exact whenever window_radius >= hops * R.
Hops grid_hop_distance(Range R, Vec2 p, int window_radius);

// Smallest-determinant generator pair for an h-hop coloring with range R.
// Candidates live in the half-plane y >= 0; a pair is feasible when no
// nonzero point of its lattice lies within h hops of the origin. Ties break
// by (det, x1, y1, x2, y2) ascending.
VectorPair solve_vectors(Range R, Hops h);

// Residues identifying p's position modulo the generator lattice:
//   c1 = (x*y1 - y*x1) mod det,  c2 = (x*y2 - y*x2) mod det
// with the mathematical (non-negative) modulo. Two points get the same
// couple exactly when they differ by a lattice vector.
Couple couple_of(Vec2 p, const VectorPair& pair);

// A generator pair plus a bijection couple -> color.
class PatternColoring {
 public:
  // Colors ranked by first occurrence scanning the generating parallelogram
  // in line order (y ascending, then x).
  static PatternColoring canonical(const VectorPair& pair);
  // Colors transcribed from explicit cells (x, y, color). Every couple must
  // be covered exactly once modulo the lattice and cells must agree.
  static PatternColoring from_cells(
      const VectorPair& pair,
      const std::vector<std::tuple<int, int, Color>>& cells);

  Color color_at(int x, int y) const;
  const VectorPair& pair() const { return pair_; }
  const std::map<Couple, Color>& color_of_couple() const { return map_; }

 private:
  VectorPair pair_;
  std::map<Couple, Color> map_;
};

// Colors a grid by reproducing the pattern of `pair` periodically. The pair
// must be feasible for (spec.range, h).
Coloring tile_grid(const GridSpec& spec, const VectorPair& pair, Hops h = 3);
Coloring tile_grid(const GridSpec& spec, const PatternColoring& pattern);

// True iff no nonzero lattice point of `pair` lies within h hops of the
// origin for range R (the condition a valid periodic pattern must satisfy).
bool pair_feasible(Range R, Hops h, const VectorPair& pair);

struct BoundsReport {
  double lower = 0;
  double upper = 0;
  std::uint64_t achieved = 0;
  bool within() const {
    return lower - 1e-9 <= static_cast<double>(achieved) &&
           static_cast<double>(achieved) <= upper + 1e-9;
  }
};

// Closed-form color-count bounds for periodic h-hop colorings:
//   lower = (sqrt(3)/2) h^2 (R - sqrt(2))^2   (0 when R < sqrt(2))
//   upper = (sqrt(3)/2) h^2 R^2 + 2hR + (2 + hR) sqrt(2)
BoundsReport bounds(Range R, Hops h, std::uint64_t achieved);

struct FixturePattern {
  Range range{1.0};
  PatternColoring pattern;
};

// The three proven reference patterns (8 colors for R=1, 16 for R=1.5,
// 25 for R=2), transcribed cell by cell.
std::vector<FixturePattern> fixture_patterns();

}  // namespace hopcolor
