// Enumeration of alternating-sign matrices by rotational symmetry class, plus
// the exact product formulas for the plain and half-turn counts.
#ifndef FPL_ENUMERATE_HPP_
#define FPL_ENUMERATE_HPP_

#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include <fpl/fpl.hpp>

namespace fpl {

enum class SymmetryClass { Plain, HalfTurn, QuarterTurn, QuasiQuarterTurn };

inline const char* to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Plain: return "plain";
    case SymmetryClass::HalfTurn: return "ht";
    case SymmetryClass::QuarterTurn: return "qt";
    default: return "qqt";
  }
}

inline SymmetryClass symmetry_class_from_string(const std::string& s) {
  if (s == "plain") return SymmetryClass::Plain;
  if (s == "ht") return SymmetryClass::HalfTurn;
  if (s == "qt") return SymmetryClass::QuarterTurn;
  if (s == "qqt") return SymmetryClass::QuasiQuarterTurn;
  fail("IncompatibleSize", "unknown symmetry class '" + s + "'");
}

// Quarter-turn symmetric configurations exist only for sizes 4k, the
// quasi-quarter-turn class only for sizes 4k+2.
inline void check_size(SymmetryClass cls, int n) {
  if (n < 1)
    fail("IncompatibleSize", "size must be positive, got " + std::to_string(n));
  if (cls == SymmetryClass::QuarterTurn && n % 4 != 0)
    fail("IncompatibleSize",
         "quarter-turn class needs size 4k, got " + std::to_string(n));
  if (cls == SymmetryClass::QuasiQuarterTurn && n % 4 != 2)
    fail("IncompatibleSize",
         "quasi-quarter-turn class needs size 4k+2, got " + std::to_string(n));
}

// A(n) = prod_{i<n} (3i+1)!/(n+i)!; the empty product gives A(0) = 1.
inline BigInt asm_count(int n) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= factorial(3 * i + 1);
    den *= factorial(n + i);
  }
  return num / den;
}

// A(n+1)/A(n) in closed form.
inline Rational asm_count_ratio(int n) {
  return Rational(factorial(n) * factorial(3 * n + 1),
                  factorial(2 * n) * factorial(2 * n + 1));
}

// Half-turn symmetric counts: for even size 2m the count is
// A(m)^2 * prod_{i<m} (3i+2)/(3i+1); each odd size 2m+1 adds the factor
// m!(3m)!/((2m)!)^2.
inline BigInt ht_asm_count(int n) {
  int m = n / 2;
  BigInt num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= 3 * i + 2;
    den *= 3 * i + 1;
  }
  BigInt a = asm_count(m);
  if (n % 2 == 1) {
    num *= factorial(m) * factorial(3 * m);
    BigInt f = factorial(2 * m);
    den *= f * f;
  }
  return a * a * num / den;
}

// Product sides of the quarter-turn and quasi-quarter-turn counting
// identities, computable without enumeration.
inline BigInt qt_count_product(int n) {
  check_size(SymmetryClass::QuarterTurn, n);
  BigInt a = asm_count(n / 4);
  return ht_asm_count(n / 2) * a * a;
}

inline BigInt qqt_count_product(int n) {
  check_size(SymmetryClass::QuasiQuarterTurn, n);
  int k = (n - 2) / 4;
  return ht_asm_count(2 * k + 1) * asm_count(k + 1) * asm_count(k);
}

namespace detail {

constexpr int8_t kUnset = 127;

// Non-identity orbit of each cell under the class's symmetry group. The
// quasi-quarter-turn class relaxes the four central cells to half-turn orbits;
// emissions are then filtered on the loop side.
struct OrbitTable {
  int n = 0;
  std::vector<std::array<int16_t, 3>> images;
  std::vector<int8_t> degree;

  OrbitTable(int size, SymmetryClass cls) : n(size) {
    images.resize(size_t(n) * n);
    degree.assign(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int idx = i * n + j;
        auto add = [&](int ii, int jj) {
          int im = ii * n + jj;
          if (im == idx)
            return;
          for (int k = 0; k < degree[idx]; ++k)
            if (images[idx][k] == im)
              return;
          images[idx][degree[idx]++] = int16_t(im);
        };
        bool center = n % 2 == 0 && (i == n / 2 - 1 || i == n / 2) &&
                      (j == n / 2 - 1 || j == n / 2);
        switch (cls) {
          case SymmetryClass::Plain:
            break;
          case SymmetryClass::HalfTurn:
            add(n - 1 - i, n - 1 - j);
            break;
          case SymmetryClass::QuarterTurn:
            add(j, n - 1 - i);
            add(n - 1 - i, n - 1 - j);
            add(n - 1 - j, i);
            break;
          case SymmetryClass::QuasiQuarterTurn:
            if (center) {
              add(n - 1 - i, n - 1 - j);
            } else {
              add(j, n - 1 - i);
              add(n - 1 - i, n - 1 - j);
              add(n - 1 - j, i);
            }
            break;
        }
      }
  }
};

// Row-by-row depth-first search. Candidate values are tried in the order
// -1 < 0 < +1, so completions arrive in lexicographic order of the flattened
// matrix. Assigning a cell forces its whole orbit through the trail, which is
// unwound on backtrack.
struct ClassSearch {
  int n = 0;
  const OrbitTable* orbits = nullptr;
  std::vector<int8_t> cell;
  std::vector<int8_t> colsum;
  std::vector<int32_t> trail;

  ClassSearch(int size, const OrbitTable& t)
      : n(size), orbits(&t), cell(size_t(size) * size, kUnset), colsum(size, 0) {}

  bool set_cell(int idx, int8_t v) {
    if (cell[idx] != kUnset)
      return cell[idx] == v;
    cell[idx] = v;
    trail.push_back(idx);
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      cell[trail.back()] = kUnset;
      trail.pop_back();
    }
  }

  bool assign(int i, int j, int8_t v) {
    int idx = i * n + j;
    if (!set_cell(idx, v))
      return false;
    for (int k = 0; k < orbits->degree[idx]; ++k)
      if (!set_cell(orbits->images[idx][k], v))
        return false;
    return true;
  }

  Asm snapshot() const {
    Asm m(n);
    m.a.assign(cell.begin(), cell.end());
    return m;
  }

  // Emit is called with the search itself once `limit` complete rows stand.
  template <class Emit>
  void descend(int row, int limit, Emit& emit) {
    if (row == limit) {
      emit(*this);
      return;
    }
    fill_row(row, 0, 0, limit, emit);
  }

  template <class Emit>
  void fill_row(int row, int col, int rowsum, int limit, Emit& emit) {
    if (col == n) {
      if (rowsum == 1)
        descend(row + 1, limit, emit);
      return;
    }
    int idx = row * n + col;
    int8_t lo = -1, hi = 1;
    if (cell[idx] != kUnset)
      lo = hi = cell[idx];
    for (int8_t v = lo; v <= hi; ++v) {
      if (rowsum + v < 0 || rowsum + v > 1)
        continue;
      if (colsum[col] + v < 0 || colsum[col] + v > 1)
        continue;
      size_t mark = trail.size();
      if (assign(row, col, v)) {
        colsum[col] = int8_t(colsum[col] + v);
        fill_row(row, col + 1, rowsum + v, limit, emit);
        colsum[col] = int8_t(colsum[col] - v);
      }
      undo(mark);
    }
  }
};

}  // namespace detail

// Visits every matrix of the class in lexicographic order of the flattened
// contents (-1 < 0 < +1).
template <class Visit>
void for_each_asm(int n, SymmetryClass cls, Visit&& visit) {
  check_size(cls, n);
  detail::OrbitTable orbits(n, cls);
  detail::ClassSearch search(n, orbits);
  auto emit = [&](detail::ClassSearch& s) {
    Asm m = s.snapshot();
    if (cls == SymmetryClass::QuasiQuarterTurn &&
        !classify_symmetry(to_fpl(m)).quasi_quarter_turn)
      return;
    visit(m);
  };
  search.descend(0, n, emit);
}

// Splits the search below a shallow prefix depth across `jobs` threads and
// merges per-thread tallies. Merging must be commutative; every tally here is
// a sum, so the result is identical to the sequential order.
template <class Tally, class PerItem, class Merge>
Tally reduce_class(int n, SymmetryClass cls, int jobs, Tally init, PerItem per,
                   Merge merge) {
  check_size(cls, n);
  if (jobs > 1) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && unsigned(jobs) > hw)
      jobs = int(hw);
  }
  detail::OrbitTable orbits(n, cls);
  auto want = [&](const Asm& m) {
    return cls != SymmetryClass::QuasiQuarterTurn ||
           classify_symmetry(to_fpl(m)).quasi_quarter_turn;
  };
  if (jobs <= 1) {
    Tally tally = std::move(init);
    detail::ClassSearch search(n, orbits);
    auto emit = [&](detail::ClassSearch& s) {
      Asm m = s.snapshot();
      if (want(m))
        per(tally, m);
    };
    search.descend(0, n, emit);
    return tally;
  }
  // prefix states deep enough to give every thread several chunks
  struct Prefix {
    std::vector<int8_t> cell, colsum;
    int row;
  };
  std::vector<Prefix> prefixes;
  int depth = 1;
  for (; depth <= n; ++depth) {
    prefixes.clear();
    detail::ClassSearch search(n, orbits);
    auto grab = [&](detail::ClassSearch& s) {
      prefixes.push_back({s.cell, s.colsum, depth});
    };
    search.descend(0, depth, grab);
    if (int(prefixes.size()) >= 4 * jobs || depth == n)
      break;
  }
  std::atomic<size_t> cursor{0};
  std::vector<Tally> parts;
  std::mutex parts_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      Tally local = init;
      for (;;) {
        size_t k = cursor.fetch_add(1);
        if (k >= prefixes.size())
          break;
        detail::ClassSearch search(n, orbits);
        search.cell = prefixes[k].cell;
        search.colsum = prefixes[k].colsum;
        auto emit = [&](detail::ClassSearch& s) {
          Asm m = s.snapshot();
          if (want(m))
            per(local, m);
        };
        search.descend(prefixes[k].row, n, emit);
      }
      std::lock_guard<std::mutex> lock(parts_mutex);
      parts.push_back(std::move(local));
    });
  for (auto& th : pool)
    th.join();
  Tally tally = std::move(init);
  for (auto& p : parts)
    merge(tally, p);
  return tally;
}

inline BigInt count_class(int n, SymmetryClass cls, int jobs = 1) {
  return reduce_class<BigInt>(
      n, cls, jobs, BigInt(0), [](BigInt& t, const Asm&) { ++t; },
      [](BigInt& a, const BigInt& b) { a += b; });
}

// Coefficient k counts the members whose top-row +1 sits in column k.
inline std::vector<BigInt> refined_counts(int n, SymmetryClass cls, int jobs = 1) {
  return reduce_class<std::vector<BigInt>>(
      n, cls, jobs, std::vector<BigInt>(n),
      [](std::vector<BigInt>& t, const Asm& m) { ++t[first_row_one(m)]; },
      [](std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        for (size_t k = 0; k < a.size(); ++k)
          a[k] += b[k];
      });
}

}  // namespace fpl

#endif
