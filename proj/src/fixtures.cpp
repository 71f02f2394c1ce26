// Reference color patterns for R = 1, 1.5 and 2, transcribed cell by cell
// around a center node at the origin. Colors here are 1-based as drawn and
// shifted to 0-based; PatternColoring::from_cells verifies that the cells
// are consistent with the generator lattice and cover every couple.
#include <sstream>

#include "hopcolor/vector_method.hpp"

namespace hopcolor {

namespace {

struct Row {
  int y;
  int x0;
  const char* colors;  // 1-based, space separated
};

std::vector<std::tuple<int, int, Color>> cells_from_rows(
    std::initializer_list<Row> rows) {
  std::vector<std::tuple<int, int, Color>> cells;
  for (const auto& row : rows) {
    std::istringstream in(row.colors);
    int x = row.x0;
    unsigned value = 0;
    while (in >> value) {
      cells.emplace_back(x, row.y, static_cast<Color>(value - 1));
      ++x;
    }
  }
  return cells;
}

}  // namespace

std::vector<FixturePattern> fixture_patterns() {
  std::vector<FixturePattern> out;

  // R = 1: 8 colors, generators (2,2) and (-2,2).
  out.push_back(FixturePattern{
      Range(1.0),
      PatternColoring::from_cells(
          VectorPair{{2, 2}, {-2, 2}},
          cells_from_rows({
              {3, 0, "4"},
              {2, -1, "5 8 3"},
              {1, -2, "4 7 2 6 4"},
              {0, -3, "5 8 3 1 5 8 3"},
              {-1, -2, "2 6 4 7 2"},
              {-2, -1, "5 8 3"},
              {-3, 0, "2"},
          }))});

  // R = 1.5: 16 colors, generators (4,0) and (0,4).
  out.push_back(FixturePattern{
      Range(1.5),
      PatternColoring::from_cells(
          VectorPair{{4, 0}, {0, 4}},
          cells_from_rows({
              {3, -3, "9 16 7 8 9 16 7"},
              {2, -3, "13 10 11 12 13 10 11"},
              {1, -3, "3 14 5 4 3 14 5"},
              {0, -3, "2 15 6 1 2 15 6"},
              {-1, -3, "9 16 7 8 9 16 7"},
              {-2, -3, "13 10 11 12 13 10 11"},
              {-3, -3, "3 14 5 4 3 14 5"},
          }))});

  // R = 2: 25 colors, generators (4,3) and (-3,4).
  out.push_back(FixturePattern{
      Range(2.0),
      PatternColoring::from_cells(
          VectorPair{{4, 3}, {-3, 4}},
          cells_from_rows({
              {6, 0, "13"},
              {5, -1, "18 25 6"},
              {4, -2, "2 8 17 14 22"},
              {3, -3, "5 7 16 20 23 12 4"},
              {2, -4, "25 6 15 21 10 19 24 13 5"},
              {1, -5, "8 17 14 22 11 3 9 18 25 6 15"},
              {0, -6, "7 16 20 23 12 4 1 2 8 17 14 22 11"},
              {-1, -5, "21 10 19 24 13 5 7 16 20 23 12"},
              {-2, -4, "3 9 18 25 6 15 21 10 19"},
              {-3, -3, "2 8 17 14 22 11 3"},
              {-4, -2, "16 20 23 12 4"},
              {-5, -1, "10 19 24"},
              {-6, 0, "9"},
          }))});

  return out;
}

}  // namespace hopcolor
