// Alternating-sign matrices: storage, validation, text form.
#ifndef FPL_ASM_HPP_
#define FPL_ASM_HPP_

#include <fpl/common.hpp>

namespace fpl {

// Square matrix over {-1, 0, +1}, row-major.
struct Asm {
  int n = 0;
  std::vector<int8_t> a;

  Asm() = default;
  explicit Asm(int size) : n(size), a(size_t(size) * size, 0) {}

  int8_t at(int i, int j) const { return a[size_t(i) * n + j]; }
  int8_t& at(int i, int j) { return a[size_t(i) * n + j]; }

  bool operator==(const Asm& o) const = default;
};

// Checks the alternating-sign conditions: every row and column reads, ignoring
// zeros, as +1, -1, +1, ..., +1 (equivalently: all prefix sums in {0,1}, total 1).
inline void validate(const Asm& m) {
  if (m.n < 1 || m.a.size() != size_t(m.n) * m.n)
    fail("NotSquare", "matrix is " + std::to_string(m.a.size()) +
                          " entries for claimed size " + std::to_string(m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j) < -1 || m.at(i, j) > 1)
        fail("EntryOutOfRange", "entry at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is " +
                                    std::to_string(m.at(i, j)));
  for (int i = 0; i < m.n; ++i) {
    int s = 0;
    for (int j = 0; j < m.n; ++j) {
      s += m.at(i, j);
      if (s < 0 || s > 1)
        fail("AlternationViolated", "row " + std::to_string(i));
    }
    if (s != 1)
      fail("AlternationViolated", "row " + std::to_string(i) + " sums to " +
                                      std::to_string(s));
  }
  for (int j = 0; j < m.n; ++j) {
    int s = 0;
    for (int i = 0; i < m.n; ++i) {
      s += m.at(i, j);
      if (s < 0 || s > 1)
        fail("AlternationViolated", "column " + std::to_string(j));
    }
    if (s != 1)
      fail("AlternationViolated", "column " + std::to_string(j) + " sums to " +
                                      std::to_string(s));
  }
}

inline Asm asm_from_rows(const std::vector<std::vector<int>>& rows) {
  int n = int(rows.size());
  Asm m(n);
  for (int i = 0; i < n; ++i) {
    if (int(rows[i].size()) != n)
      fail("NotSquare", "row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " entries, want " +
                            std::to_string(n));
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] < -1 || rows[i][j] > 1)
        fail("EntryOutOfRange", "entry at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is " +
                                    std::to_string(rows[i][j]));
      m.at(i, j) = int8_t(rows[i][j]);
    }
  }
  validate(m);
  return m;
}

// Text form: one row per line over '+', '0', '-'.
inline std::string to_text(const Asm& m) {
  std::string s;
  s.reserve(size_t(m.n) * (m.n + 1));
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j)
      s += m.at(i, j) > 0 ? '+' : m.at(i, j) < 0 ? '-' : '0';
    if (i + 1 < m.n)
      s += '\n';
  }
  return s;
}

inline Asm asm_from_text(const std::string& text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos)
      nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty())
    lines.pop_back();
  int n = int(lines.size());
  Asm m(n);
  for (int i = 0; i < n; ++i) {
    if (int(lines[i].size()) != n)
      fail("NotSquare", "line " + std::to_string(i) + " has " +
                            std::to_string(lines[i].size()) +
                            " characters, want " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      char c = lines[i][j];
      if (c != '+' && c != '0' && c != '-')
        fail("EntryOutOfRange", std::string("character '") + c + "' at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      m.at(i, j) = c == '+' ? 1 : c == '-' ? -1 : 0;
    }
  }
  validate(m);
  return m;
}

// Column of the single +1 in the top row (0-based); rows have no -1 before
// their first +1, so this is the first nonzero entry.
inline int first_row_one(const Asm& m) {
  for (int j = 0; j < m.n; ++j)
    if (m.at(0, j) == 1)
      return j;
  fail("AlternationViolated", "row 0 has no +1");
}

}  // namespace fpl

#endif
