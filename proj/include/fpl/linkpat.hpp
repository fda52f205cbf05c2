// Link patterns: the noncrossing pairing a loop configuration induces on its
// boundary stubs, word encodings for each symmetry class, and the
// Temperley-Lieb operators acting on patterns.
#ifndef FPL_LINKPAT_HPP_
#define FPL_LINKPAT_HPP_

#include <algorithm>
#include <tuple>

#include <fpl/enumerate.hpp>

namespace fpl {

// Perfect pairing of 2N boundary points, 0-based internally; point k here is
// point k+1 in the 1-based labeling.
struct LinkPattern {
  int points = 0;
  std::vector<int> partner;

  bool operator==(const LinkPattern& o) const = default;
};

inline void validate_pattern(const LinkPattern& p) {
  if (p.points < 2 || p.points % 2 != 0 || int(p.partner.size()) != p.points)
    fail("MalformedDyck", "pattern must pair an even number of points");
  for (int x = 0; x < p.points; ++x) {
    int y = p.partner[x];
    if (y < 0 || y >= p.points || y == x || p.partner[y] != x)
      fail("MalformedDyck", "partner array is not a fixed-point-free involution");
  }
}

inline bool is_noncrossing(const LinkPattern& p) {
  std::vector<int> stack;
  for (int x = 0; x < p.points; ++x) {
    if (p.partner[x] > x) {
      stack.push_back(x);
    } else {
      if (stack.empty() || stack.back() != p.partner[x])
        return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

// Boundary stubs in counterclockwise label order starting at the top of the
// left border: left top-to-bottom, bottom left-to-right, right bottom-to-top,
// top right-to-left.
inline std::vector<std::tuple<int, int, Dir>> boundary_stubs(int n) {
  std::vector<std::tuple<int, int, Dir>> out;
  for (int i = 0; i < n; ++i)
    if (stub_present(n, Dir::West, i))
      out.emplace_back(i, 0, Dir::West);
  for (int j = 0; j < n; ++j)
    if (stub_present(n, Dir::South, j))
      out.emplace_back(n - 1, j, Dir::South);
  for (int i = n - 1; i >= 0; --i)
    if (stub_present(n, Dir::East, i))
      out.emplace_back(i, n - 1, Dir::East);
  for (int j = n - 1; j >= 0; --j)
    if (stub_present(n, Dir::North, j))
      out.emplace_back(0, j, Dir::North);
  return out;
}

inline LinkPattern link_pattern(const Fpl& f) {
  validate_fpl(f);
  int n = f.n;
  auto stubs = boundary_stubs(n);
  // stub slot (direction, border offset) -> label
  std::vector<int> label(size_t(4) * n, -1);
  auto slot = [n](Dir d, int k) { return int(d) * n + k; };
  for (size_t s = 0; s < stubs.size(); ++s) {
    auto [i, j, d] = stubs[s];
    label[slot(d, d == Dir::North || d == Dir::South ? j : i)] = int(s);
  }
  LinkPattern p;
  p.points = int(stubs.size());
  p.partner.assign(p.points, -1);
  for (size_t s = 0; s < stubs.size(); ++s) {
    if (p.partner[s] != -1)
      continue;
    auto [i, j, d] = stubs[s];
    Dir from = d;
    while (detail::walk_step(f, i, j, from)) {
    }
    int t = label[slot(from, from == Dir::North || from == Dir::South ? j : i)];
    p.partner[s] = t;
    p.partner[t] = int(s);
  }
  return p;
}

// Dyck encoding: 'a' opens at the smaller endpoint of a link, 'b' closes.
inline std::string dyck_word(const LinkPattern& p) {
  validate_pattern(p);
  std::string w(p.points, 'b');
  for (int x = 0; x < p.points; ++x)
    if (p.partner[x] > x)
      w[x] = 'a';
  return w;
}

inline bool is_dyck_word(const std::string& w) {
  int open = 0;
  for (char c : w) {
    if (c == 'a')
      ++open;
    else if (c == 'b')
      --open;
    else
      return false;
    if (open < 0)
      return false;
  }
  return open == 0;
}

inline LinkPattern pattern_from_dyck(const std::string& w) {
  if (w.empty() || !is_dyck_word(w))
    fail("MalformedDyck", "'" + w + "' is not a balanced ab-word");
  LinkPattern p;
  p.points = int(w.size());
  p.partner.assign(p.points, -1);
  std::vector<int> stack;
  for (int x = 0; x < p.points; ++x) {
    if (w[x] == 'a') {
      stack.push_back(x);
    } else {
      p.partner[x] = stack.back();
      p.partner[stack.back()] = x;
      stack.pop_back();
    }
  }
  return p;
}

inline bool is_half_turn_symmetric(const LinkPattern& p) {
  int m = p.points / 2;
  for (int x = 0; x < p.points; ++x)
    if (p.partner[(x + m) % p.points] != (p.partner[x] + m) % p.points)
      return false;
  return true;
}

// Half-turn encoding, one letter per point of the first half: 'a' when the
// partner lies ahead within half a turn, 'b' when behind, 'c' when diametral.
inline std::string ht_word(const LinkPattern& p) {
  validate_pattern(p);
  if (!is_half_turn_symmetric(p))
    fail("NotHalfTurnSymmetric", "pattern is not fixed by the half turn");
  int m = p.points / 2;
  std::string w(m, '?');
  for (int x = 0; x < m; ++x) {
    int d = (p.partner[x] - x + p.points) % p.points;
    w[x] = d == m ? 'c' : d < m ? 'a' : 'b';
  }
  return w;
}

// Inverse of ht_word: the letters prescribe, for every point of the doubled
// word, whether its link opens or closes; the unique noncrossing completion
// is found by repeatedly joining cyclically adjacent open-close pairs.
inline LinkPattern pattern_from_ht_word(const std::string& w) {
  int m = int(w.size());
  if (m == 0)
    fail("MalformedDyck", "empty word");
  int na = 0, nb = 0, nc = 0, cpos = -1;
  for (int x = 0; x < m; ++x) {
    if (w[x] == 'a')
      ++na;
    else if (w[x] == 'b')
      ++nb;
    else if (w[x] == 'c') {
      ++nc;
      cpos = x;
    } else {
      fail("MalformedDyck", "'" + w + "' has letters outside abc");
    }
  }
  if (na != nb || nc != m % 2)
    fail("MalformedDyck", "'" + w + "' is not a half-turn word");
  LinkPattern p;
  p.points = 2 * m;
  p.partner.assign(p.points, -1);
  std::vector<int> next(p.points), prev(p.points);
  for (int x = 0; x < p.points; ++x) {
    next[x] = (x + 1) % p.points;
    prev[x] = (x + p.points - 1) % p.points;
  }
  auto link = [&](int x, int y) {
    p.partner[x] = y;
    p.partner[y] = x;
    next[prev[x]] = next[x];
    prev[next[x]] = prev[x];
    next[prev[y]] = next[y];
    prev[next[y]] = prev[y];
  };
  int remaining = p.points;
  if (nc == 1) {
    link(cpos, cpos + m);
    remaining -= 2;
  }
  auto letter = [&](int x) { return w[x % m]; };
  while (remaining > 0) {
    bool progress = false;
    int start = -1;
    for (int x = 0; x < p.points && start < 0; ++x)
      if (p.partner[x] == -1)
        start = x;
    int x = start;
    do {
      int y = next[x];
      if (letter(x) == 'a' && letter(y) == 'b' && y != x) {
        link(x, y);
        remaining -= 2;
        progress = true;
        break;
      }
      x = y;
    } while (x != start);
    if (!progress)
      fail("MalformedDyck", "'" + w + "' admits no noncrossing completion");
  }
  if (ht_word(p) != w || !is_noncrossing(p))
    fail("MalformedDyck", "'" + w + "' is not realizable as a half-turn word");
  return p;
}

// Word of a pattern that is fixed by the quarter turn: the half-turn word
// repeats twice; the repeating block is the quarter-turn word.
inline std::string qt_reduce(const std::string& w) {
  size_t m = w.size() / 2;
  if (w.size() % 2 != 0 || w.compare(0, m, w, m, m) != 0)
    fail("NotSquareWord", "'" + w + "' is not a doubled word");
  return w.substr(0, m);
}

// Word of a quasi-quarter-turn pattern: the two halves of the half-turn word
// must agree except for one a/b slot, which folds to 'c'; the result has to be
// a realizable odd half-turn word.
inline std::string qqt_reduce(const std::string& w) {
  size_t m = w.size() / 2;
  if (w.size() % 2 != 0 || m == 0)
    fail("BadFactorization", "'" + w + "' has no halves");
  int diff = -1;
  for (size_t x = 0; x < m; ++x)
    if (w[x] != w[m + x]) {
      if (diff >= 0)
        fail("BadFactorization", "'" + w + "': halves differ in more than one slot");
      diff = int(x);
    }
  if (diff < 0)
    fail("BadFactorization", "'" + w + "': halves are equal");
  auto ab = [&](char c) { return c == 'a' || c == 'b'; };
  if (!ab(w[diff]) || !ab(w[m + diff]))
    fail("BadFactorization", "'" + w + "': differing slot is not an a/b pair");
  std::string z = w.substr(0, m);
  z[diff] = 'c';
  // realizability: around the folded slot z = u c v, the wrap vu must be Dyck
  if (!is_dyck_word(z.substr(diff + 1) + z.substr(0, diff)))
    fail("BadFactorization", "'" + z + "' is not a realizable folded word");
  return z;
}

// Temperley-Lieb operator e_i, 1-based, indices cyclic: joins points i and
// i+1 and rejoins their former partners. Fixes patterns already linking them.
inline LinkPattern apply_e(int i, const LinkPattern& p) {
  validate_pattern(p);
  int x = (i - 1) % p.points;
  int y = i % p.points;
  LinkPattern q = p;
  if (p.partner[x] == y)
    return q;
  int px = p.partner[x], py = p.partner[y];
  q.partner[x] = y;
  q.partner[y] = x;
  q.partner[px] = py;
  q.partner[py] = px;
  return q;
}

// Symmetrized operator for the half-turn classes: e_i together with its
// antipode e_{i+N}. The two commute, so the order is immaterial.
inline LinkPattern apply_e_sym(int i, const LinkPattern& p) {
  return apply_e(i + p.points / 2, apply_e(i, p));
}

inline LinkPattern shift_labels(const LinkPattern& p, int s) {
  LinkPattern q;
  q.points = p.points;
  q.partner.assign(p.points, -1);
  s = ((s % p.points) + p.points) % p.points;
  for (int x = 0; x < p.points; ++x)
    q.partner[(x + s) % p.points] = (p.partner[x] + s) % p.points;
  return q;
}

// All Dyck words of half-length N, lexicographic.
inline std::vector<std::string> all_dyck_words(int N) {
  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self, int open, int closed) -> void {
    if (int(cur.size()) == 2 * N) {
      out.push_back(cur);
      return;
    }
    if (open < N) {
      cur.push_back('a');
      self(self, open + 1, closed);
      cur.pop_back();
    }
    if (closed < open) {
      cur.push_back('b');
      self(self, open, closed + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

// All realizable half-turn words of length N, lexicographic. Even N: every
// balanced ab-word. Odd N: one 'c', checked by attempting to realize.
inline std::vector<std::string> all_ht_words(int N) {
  std::vector<std::string> out;
  std::string cur;
  int half = N / 2;
  auto rec = [&](auto&& self, int na, int nb, int nc) -> void {
    if (int(cur.size()) == N) {
      if (N % 2 == 0) {
        out.push_back(cur);
      } else {
        try {
          pattern_from_ht_word(cur);
          out.push_back(cur);
        } catch (const Error&) {
        }
      }
      return;
    }
    if (na < half) {
      cur.push_back('a');
      self(self, na + 1, nb, nc);
      cur.pop_back();
    }
    if (nb < half) {
      cur.push_back('b');
      self(self, na, nb + 1, nc);
      cur.pop_back();
    }
    if (nc < N % 2) {
      cur.push_back('c');
      self(self, na, nb, nc + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

// Class word of one configuration: the encoding whose tallies the stationary
// distributions and product identities refer to.
inline std::string class_word(const Fpl& f, SymmetryClass cls) {
  LinkPattern p = link_pattern(f);
  switch (cls) {
    case SymmetryClass::Plain: return dyck_word(p);
    case SymmetryClass::HalfTurn: return ht_word(p);
    case SymmetryClass::QuarterTurn: return qt_reduce(ht_word(p));
    default: return qqt_reduce(ht_word(p));
  }
}

using PatternCounts = std::map<std::string, BigInt>;

inline PatternCounts pattern_counts(int n, SymmetryClass cls, int jobs = 1) {
  return reduce_class<PatternCounts>(
      n, cls, jobs, PatternCounts{},
      [cls](PatternCounts& t, const Asm& m) { t[class_word(to_fpl(m), cls)] += 1; },
      [](PatternCounts& a, const PatternCounts& b) {
        for (auto& [w, c] : b)
          a[w] += c;
      });
}

}  // namespace fpl

#endif
