#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knotforge {

/// Arc presentation on an n x n torus. X[row] and O[row] are the columns of
/// the markings in that row; rows are numbered bottom to top. Markings sit at
/// cell centres (col + 1/2, row + 1/2).
struct GridDiagram {
  std::string name;
  std::vector<int> x;
  std::vector<int> o;

  std::size_t size() const noexcept { return x.size(); }
  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;
};

/// Largest grid whose states can be indexed by 32-bit ranks.
inline constexpr std::size_t kMaxGridSize = 12;

/// Checks the permutation and disjointness invariants and that the diagram is
/// a knot. Returns the input unchanged.
/// Throws NotPermutation, SharedCell, NotAKnot, InvalidGrid (size < 2 or > 12).
GridDiagram validate_grid(const GridDiagram& g);

/// Number of link components of the diagram.
int grid_components(const GridDiagram& g);

/// Generator of the grid complex: state[col] = row of the lattice point (col, row).
using GridState = std::vector<int>;

struct Gradings {
  int maslov;
  /// Twice the Alexander grading (integral for knots).
  int twice_alexander;

  int alexander() const { return twice_alexander / 2; }
  friend bool operator==(const Gradings&, const Gradings&) = default;
};

/// Maslov and Alexander gradings. Throws SizeMismatch or NotPermutation.
Gradings gradings(const GridDiagram& g, const GridState& s);

/// Stabilization at the X marking of `row`: one extra row and column, same knot.
GridDiagram stabilize(const GridDiagram& g, int row);

/// Grid of the mirror image (rows reversed).
GridDiagram mirror(const GridDiagram& g);

}  // namespace knotforge
