#include "knotforge/grid.hpp"

#include "knotforge/error.hpp"

namespace knotforge {

namespace {

bool is_permutation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (const int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) inv[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
  return inv;
}

// Pairs (a, b) with a strictly south-west of b; coordinates doubled so that
// cell centres are odd.
struct Point {
  int c;
  int r;
};

long sw_pairs(const std::vector<Point>& a, const std::vector<Point>& b) {
  long count = 0;
  for (const auto& p : a) {
    for (const auto& q : b) count += (p.c < q.c && p.r < q.r) ? 1 : 0;
  }
  return count;
}

std::vector<Point> markings(const std::vector<int>& cols) {
  std::vector<Point> out;
  for (std::size_t row = 0; row < cols.size(); ++row) out.push_back({2 * cols[row] + 1, 2 * static_cast<int>(row) + 1});
  return out;
}

}  // namespace

int grid_components(const GridDiagram& g) {
  // Each row joins X[row] to O[row]; each column joins its X to its O.
  // Follow X -> (row) -> O -> (column) -> X.
  const auto n = g.size();
  const auto x_row_of_col = inverse(g.x);
  std::vector<bool> seen(n, false);
  int comps = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++comps;
    std::size_t row = start;
    while (!seen[row]) {
      seen[row] = true;
      const int col = g.o[row];
      row = static_cast<std::size_t>(x_row_of_col[static_cast<std::size_t>(col)]);
    }
  }
  return comps;
}

GridDiagram validate_grid(const GridDiagram& g) {
  const auto n = g.size();
  if (g.o.size() != n) raise(ErrorCode::SizeMismatch, "X and O have different lengths");
  if (n < 2 || n > kMaxGridSize) raise(ErrorCode::InvalidGrid, "grid size must be in [2, 12], got " + std::to_string(n));
  if (!is_permutation(g.x)) raise(ErrorCode::NotPermutation, "X is not a permutation");
  if (!is_permutation(g.o)) raise(ErrorCode::NotPermutation, "O is not a permutation");
  for (std::size_t r = 0; r < n; ++r) {
    if (g.x[r] == g.o[r]) raise(ErrorCode::SharedCell, "X and O share cell in row " + std::to_string(r));
  }
  const int comps = grid_components(g);
  if (comps != 1) raise(ErrorCode::NotAKnot, "grid closes up to " + std::to_string(comps) + " components");
  return g;
}

Gradings gradings(const GridDiagram& g, const GridState& s) {
  const auto n = g.size();
  if (s.size() != n || g.o.size() != n) raise(ErrorCode::SizeMismatch, "state size does not match grid size");
  if (!is_permutation(s)) raise(ErrorCode::NotPermutation, "state is not a permutation");
  std::vector<Point> pts;
  for (std::size_t c = 0; c < n; ++c) pts.push_back({2 * static_cast<int>(c), 2 * s[c]});
  const auto os = markings(g.o);
  const auto xs = markings(g.x);
  auto maslov = [&](const std::vector<Point>& m) {
    return sw_pairs(pts, pts) - sw_pairs(pts, m) - sw_pairs(m, pts) + sw_pairs(m, m) + 1;
  };
  const long mo = maslov(os);
  const long mx = maslov(xs);
  const long twice_a = mo - mx - static_cast<long>(n - 1);
  return Gradings{static_cast<int>(mo), static_cast<int>(twice_a)};
}

GridDiagram stabilize(const GridDiagram& g, int row) {
  const auto n = static_cast<int>(g.size());
  if (row < 0 || row >= n) raise(ErrorCode::InvalidArgument, "stabilization row out of range");
  const int c = g.x[static_cast<std::size_t>(row)];
  auto shift = [c](int col) { return col <= c ? col : col + 1; };
  GridDiagram out;
  out.name = g.name;
  out.x.assign(static_cast<std::size_t>(n + 1), 0);
  out.o.assign(static_cast<std::size_t>(n + 1), 0);
  for (int k = 0; k < n; ++k) {
    if (k == row) continue;
    const auto nk = static_cast<std::size_t>(k < row ? k : k + 1);
    out.x[nk] = shift(g.x[static_cast<std::size_t>(k)]);
    out.o[nk] = shift(g.o[static_cast<std::size_t>(k)]);
  }
  const auto r = static_cast<std::size_t>(row);
  out.x[r] = c;
  out.o[r] = c + 1;
  out.x[r + 1] = c + 1;
  out.o[r + 1] = shift(g.o[r]);
  return out;
}

GridDiagram mirror(const GridDiagram& g) {
  GridDiagram out{g.name, std::vector<int>(g.x.rbegin(), g.x.rend()), std::vector<int>(g.o.rbegin(), g.o.rend())};
  return out;
}

}  // namespace knotforge
