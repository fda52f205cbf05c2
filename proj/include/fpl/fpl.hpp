// Fully packed loop configurations on the n x n grid: the bijection with
// alternating-sign matrices, degree validation, and the quarter-turn motion.
#ifndef FPL_FPL_HPP_
#define FPL_FPL_HPP_

#include <fpl/asm.hpp>

namespace fpl {

enum class Dir : uint8_t { West, East, North, South };

inline Dir opposite(Dir d) {
  switch (d) {
    case Dir::West: return Dir::East;
    case Dir::East: return Dir::West;
    case Dir::North: return Dir::South;
    default: return Dir::North;
  }
}

// Internal edges of the grid; boundary stubs are fixed by n (below), so two
// configurations are equal iff their internal edges agree.
struct Fpl {
  int n = 0;
  std::vector<uint8_t> horiz;  // edge (i,j)-(i,j+1) at index i*(n-1)+j
  std::vector<uint8_t> vert;   // edge (i,j)-(i+1,j) at index i*n+j

  Fpl() = default;
  explicit Fpl(int size)
      : n(size),
        horiz(size_t(size) * (size - 1), 0),
        vert(size_t(size - 1) * size, 0) {}

  bool h(int i, int j) const { return horiz[size_t(i) * (n - 1) + j] != 0; }
  bool v(int i, int j) const { return vert[size_t(i) * n + j] != 0; }
  void set_h(int i, int j, bool on) { horiz[size_t(i) * (n - 1) + j] = on; }
  void set_v(int i, int j, bool on) { vert[size_t(i) * n + j] = on; }

  bool operator==(const Fpl& o) const = default;
};

// Which boundary stubs exist: every second one, phased so that the stub at the
// top of the left border (row 0) is always in. k is the row (West/East sides)
// or column (North/South sides).
inline bool stub_present(int n, Dir d, int k) {
  switch (d) {
    case Dir::West: return k % 2 == 0;
    case Dir::North: return k % 2 == 1;
    case Dir::East: return (k + n - 1) % 2 == 0;
    default: return (n + k) % 2 == 0;  // South
  }
}

// Presence of whatever lies in direction d from vertex (i,j): an internal edge
// in the interior, the boundary stub on the border.
inline bool present(const Fpl& f, int i, int j, Dir d) {
  switch (d) {
    case Dir::West: return j > 0 ? f.h(i, j - 1) : stub_present(f.n, Dir::West, i);
    case Dir::East: return j < f.n - 1 ? f.h(i, j) : stub_present(f.n, Dir::East, i);
    case Dir::North: return i > 0 ? f.v(i - 1, j) : stub_present(f.n, Dir::North, j);
    default: return i < f.n - 1 ? f.v(i, j) : stub_present(f.n, Dir::South, j);
  }
}

inline int degree(const Fpl& f, int i, int j) {
  return int(present(f, i, j, Dir::West)) + int(present(f, i, j, Dir::East)) +
         int(present(f, i, j, Dir::North)) + int(present(f, i, j, Dir::South));
}

// A configuration is fully packed iff every vertex has degree exactly 2
// (boundary stubs included).
inline void validate_fpl(const Fpl& f) {
  if (f.n < 1 || f.horiz.size() != size_t(f.n) * (f.n - 1) ||
      f.vert.size() != size_t(f.n - 1) * f.n)
    fail("NotSquare", "edge arrays do not match size " + std::to_string(f.n));
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j)
      if (degree(f, i, j) != 2)
        fail("AlternationViolated",
             "vertex (" + std::to_string(i) + "," + std::to_string(j) +
                 ") has degree " + std::to_string(degree(f, i, j)));
}

// The bijection: with row prefix sums r and column prefix sums c, the edge
// east of (i,j) is in iff r(i,j) != (i+j) mod 2, the edge south of (i,j) is in
// iff c(i,j) == (i+j) mod 2. This is the unique parity choice matching the
// stub convention above.
inline Fpl to_fpl(const Asm& m) {
  validate(m);
  int n = m.n;
  Fpl f(n);
  std::vector<int8_t> colsum(n, 0);
  for (int i = 0; i < n; ++i) {
    int rowsum = 0;
    for (int j = 0; j < n; ++j) {
      rowsum += m.at(i, j);
      colsum[j] += m.at(i, j);
      if (j < n - 1)
        f.set_h(i, j, rowsum != (i + j) % 2);
      if (i < n - 1)
        f.set_v(i, j, colsum[j] == (i + j) % 2);
    }
  }
  return f;
}

inline Asm to_asm(const Fpl& f) {
  validate_fpl(f);
  int n = f.n;
  Asm m(n);
  for (int i = 0; i < n; ++i) {
    int prev = 0;
    for (int j = 0; j < n; ++j) {
      int r = j < n - 1 ? ((i + j) % 2) ^ int(f.h(i, j)) : 1;
      m.at(i, j) = int8_t(r - prev);
      prev = r;
    }
  }
  validate(m);
  return m;
}

// Quarter turn (i,j) -> (j, n-1-i). For odd n the plain rotation flips the
// stub phase, so the loop motion is rotation followed by complementing every
// internal edge; the stub set is then again the standard one.
inline Fpl rotate_quarter(const Fpl& f) {
  int n = f.n;
  Fpl out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n - 1; ++j)
      out.set_v(j, n - 1 - i, f.h(i, j));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n; ++j)
      out.set_h(j, n - 2 - i, f.v(i, j));
  if (n % 2 == 1) {
    for (auto& e : out.horiz)
      e ^= 1;
    for (auto& e : out.vert)
      e ^= 1;
  }
  return out;
}

struct SymmetryFlags {
  bool half_turn = false;
  bool quarter_turn = false;
  bool quasi_quarter_turn = false;
};

// Quasi-quarter-turn: the configuration and its quarter turn differ in exactly
// the four edges of the central unit square, with the two horizontal ones
// present. Only meaningful for n = 4k+2 (for n = 4k the quarter turn can fix
// the configuration outright).
inline SymmetryFlags classify_symmetry(const Fpl& f) {
  SymmetryFlags out;
  Fpl r = rotate_quarter(f);
  out.half_turn = f == rotate_quarter(r);
  if (f.n % 2 == 0)
    out.quarter_turn = f == r;
  if (f.n % 4 == 2) {
    int m = f.n / 2;
    size_t diff = 0;
    for (size_t k = 0; k < f.horiz.size(); ++k)
      diff += f.horiz[k] != r.horiz[k];
    for (size_t k = 0; k < f.vert.size(); ++k)
      diff += f.vert[k] != r.vert[k];
    out.quasi_quarter_turn =
        diff == 4 && f.h(m - 1, m - 1) && f.h(m, m - 1) && !r.h(m - 1, m - 1) &&
        !r.h(m, m - 1) && !f.v(m - 1, m - 1) && !f.v(m - 1, m) &&
        r.v(m - 1, m - 1) && r.v(m - 1, m);
  }
  return out;
}

namespace detail {

// One step of a walk: having reached (i,j) moving away from `from`, pick the
// other present direction. Returns false when that direction is a stub.
inline bool walk_step(const Fpl& f, int& i, int& j, Dir& from) {
  Dir next = Dir::West;
  bool found = false;
  for (Dir d : {Dir::West, Dir::East, Dir::North, Dir::South}) {
    if (d == from || !present(f, i, j, d))
      continue;
    next = d;
    found = true;
    break;
  }
  if (!found)
    fail("AlternationViolated", "walk reached a vertex of degree < 2");
  bool border = (next == Dir::West && j == 0) || (next == Dir::East && j == f.n - 1) ||
                (next == Dir::North && i == 0) || (next == Dir::South && i == f.n - 1);
  if (border) {
    from = next;
    return false;
  }
  switch (next) {
    case Dir::West: --j; break;
    case Dir::East: ++j; break;
    case Dir::North: --i; break;
    default: ++i; break;
  }
  from = opposite(next);
  return true;
}

}  // namespace detail

// Number of closed loops (paths between boundary stubs not counted).
inline int count_closed_loops(const Fpl& f) {
  int n = f.n;
  std::vector<uint8_t> hseen(f.horiz.size(), 0), vseen(f.vert.size(), 0);
  auto mark = [&](int i, int j, Dir d) {
    // marks the internal edge leaving (i,j) in direction d, if internal
    switch (d) {
      case Dir::West: if (j > 0) hseen[size_t(i) * (n - 1) + j - 1] = 1; break;
      case Dir::East: if (j < n - 1) hseen[size_t(i) * (n - 1) + j] = 1; break;
      case Dir::North: if (i > 0) vseen[size_t(i - 1) * n + j] = 1; break;
      default: if (i < n - 1) vseen[size_t(i) * n + j] = 1; break;
    }
  };
  // walk_step leaves `from` pointing back along the edge just traversed
  auto trace_from_stub = [&](int i, int j, Dir stub) {
    Dir from = stub;
    while (detail::walk_step(f, i, j, from))
      mark(i, j, from);
  };
  for (int i = 0; i < n; ++i) {
    if (stub_present(n, Dir::West, i))
      trace_from_stub(i, 0, Dir::West);
    if (stub_present(n, Dir::East, i))
      trace_from_stub(i, n - 1, Dir::East);
  }
  for (int j = 0; j < n; ++j) {
    if (stub_present(n, Dir::North, j))
      trace_from_stub(0, j, Dir::North);
    if (stub_present(n, Dir::South, j))
      trace_from_stub(n - 1, j, Dir::South);
  }
  int loops = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n - 1; ++j) {
      if (!f.h(i, j) || hseen[size_t(i) * (n - 1) + j])
        continue;
      ++loops;
      // walk the cycle starting eastward along this edge
      hseen[size_t(i) * (n - 1) + j] = 1;
      int ci = i, cj = j + 1;
      Dir from = Dir::West;
      while (!(ci == i && cj == j)) {
        detail::walk_step(f, ci, cj, from);
        mark(ci, cj, from);
      }
    }
  return loops;
}

}  // namespace fpl

#endif
