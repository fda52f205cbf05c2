#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include <fpl/linkpat.hpp>

#include "testutil.hpp"

using namespace fpl;

TEST_CASE("boundary labels run counterclockwise from the top left", "[linkpat]") {
  auto stubs = boundary_stubs(3);
  REQUIRE(stubs.size() == 6);
  using T = std::tuple<int, int, Dir>;
  CHECK(stubs[0] == T{0, 0, Dir::West});
  CHECK(stubs[1] == T{2, 0, Dir::West});
  CHECK(stubs[2] == T{2, 1, Dir::South});
  CHECK(stubs[3] == T{2, 2, Dir::East});
  CHECK(stubs[4] == T{0, 2, Dir::East});
  CHECK(stubs[5] == T{0, 1, Dir::North});
  for (int n = 1; n <= 8; ++n)
    CHECK(boundary_stubs(n).size() == size_t(2 * n));
}

TEST_CASE("patterns of the two smallest grids", "[linkpat]") {
  CHECK(dyck_word(link_pattern(to_fpl(asm_from_rows({{1}})))) == "ab");
  CHECK(dyck_word(link_pattern(to_fpl(asm_from_rows({{1, 0}, {0, 1}})))) ==
        "aabb");
  CHECK(dyck_word(link_pattern(to_fpl(asm_from_rows({{0, 1}, {1, 0}})))) ==
        "abab");
}

TEST_CASE("dyck words round trip", "[linkpat]") {
  const size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (int N = 1; N <= 5; ++N) {
    auto words = all_dyck_words(N);
    CHECK(words.size() == catalan[N]);
    for (auto& w : words) {
      CHECK(is_dyck_word(w));
      LinkPattern p = pattern_from_dyck(w);
      CHECK(is_noncrossing(p));
      CHECK(dyck_word(p) == w);
    }
  }
  CHECK_FALSE(is_dyck_word("ba"));
  CHECK_FALSE(is_dyck_word("aab"));
  CHECK_FALSE(is_dyck_word("abba"));
  CHECK(error_code([] { pattern_from_dyck("ba"); }) == "MalformedDyck");
}

TEST_CASE("configurations always yield noncrossing patterns", "[linkpat]") {
  for (int n = 1; n <= 4; ++n)
    for_each_asm(n, SymmetryClass::Plain, [](const Asm& m) {
      LinkPattern p = link_pattern(to_fpl(m));
      CHECK_NOTHROW(validate_pattern(p));
      CHECK(is_noncrossing(p));
    });
}

TEST_CASE("half-turn words", "[linkpat]") {
  CHECK(is_half_turn_symmetric(pattern_from_dyck("aaabbb")));
  CHECK_FALSE(is_half_turn_symmetric(pattern_from_dyck("aababb")));
  CHECK(error_code([] { ht_word(pattern_from_dyck("aababb")); }) ==
        "NotHalfTurnSymmetric");
  CHECK(ht_word(pattern_from_dyck("aaabbb")) == "bca");
  CHECK(ht_word(pattern_from_dyck("aabbab")) == "cab");
  CHECK(ht_word(pattern_from_dyck("abaabb")) == "abc");

  const size_t counts[] = {0, 1, 2, 3, 6, 10, 20};
  for (int N = 1; N <= 6; ++N) {
    auto words = all_ht_words(N);
    CHECK(words.size() == counts[N]);
    for (auto& w : words) {
      LinkPattern p = pattern_from_ht_word(w);
      CHECK(is_noncrossing(p));
      CHECK(is_half_turn_symmetric(p));
      CHECK(ht_word(p) == w);
    }
  }
  auto w3 = all_ht_words(3);
  CHECK(w3 == std::vector<std::string>{"abc", "bca", "cab"});
  for (const char* bad : {"acb", "bac", "cba"})
    CHECK(error_code([&] { pattern_from_ht_word(bad); }) == "MalformedDyck");
}

TEST_CASE("quarter-turn word reduction", "[linkpat]") {
  CHECK(qt_reduce("baba") == "ba");
  CHECK(qt_reduce("aabbaabb") == "aabb");
  CHECK(error_code([] { qt_reduce("aabbab"); }) == "NotSquareWord");
}

TEST_CASE("quasi-quarter-turn word reduction", "[linkpat]") {
  CHECK(qqt_reduce("babaababba") == "babca");
  CHECK(qqt_reduce("aabbab") == "cab");
  CHECK(error_code([] { qqt_reduce("aabbbb"); }) == "BadFactorization");
  CHECK(error_code([] { qqt_reduce("baba"); }) == "BadFactorization");
  CHECK(error_code([] { qqt_reduce("aabaa"); }) == "BadFactorization");
}

TEST_CASE("worked reduction chain on a size-ten pattern", "[linkpat]") {
  LinkPattern p = pattern_from_dyck("aabaababbababaababbb");
  REQUIRE(is_half_turn_symmetric(p));
  std::string ht = ht_word(p);
  CHECK(ht == "babaababba");
  CHECK(qqt_reduce(ht) == "babca");
}

TEST_CASE("temperley-lieb relations on patterns", "[linkpat]") {
  for (int N : {3, 4}) {
    int m = 2 * N;
    for (auto& w : all_dyck_words(N)) {
      LinkPattern p = pattern_from_dyck(w);
      for (int i = 1; i <= m; ++i) {
        LinkPattern ei = apply_e(i, p);
        CHECK(is_noncrossing(ei));
        CHECK(apply_e(i, ei) == ei);
        int up = i % m + 1;
        CHECK(apply_e(i, apply_e(up, ei)) == ei);
        for (int j = 1; j <= m; ++j) {
          int d = std::abs(i - j);
          if (d >= 2 && d <= m - 2)
            CHECK(apply_e(i, apply_e(j, p)) == apply_e(j, apply_e(i, p)));
        }
      }
    }
  }
}

TEST_CASE("symmetrized operators preserve half-turn symmetry", "[linkpat]") {
  for (auto& w : all_ht_words(4)) {
    LinkPattern p = pattern_from_ht_word(w);
    for (int i = 1; i <= 4; ++i) {
      LinkPattern q = apply_e_sym(i, p);
      CHECK(is_half_turn_symmetric(q));
      CHECK(is_noncrossing(q));
    }
  }
}

TEST_CASE("label shifts", "[linkpat]") {
  LinkPattern p = pattern_from_dyck("aababb");
  CHECK(shift_labels(p, p.points) == p);
  LinkPattern q = p;
  for (int t = 0; t < p.points; ++t)
    q = shift_labels(q, 1);
  CHECK(q == p);
  CHECK(shift_labels(shift_labels(p, 2), p.points - 2) == p);
}

TEST_CASE("class words dispatch by symmetry class", "[linkpat]") {
  Fpl f = to_fpl(asm_from_rows({{0, 1}, {1, 0}}));
  CHECK(class_word(f, SymmetryClass::Plain) == "abab");
  CHECK(class_word(f, SymmetryClass::HalfTurn) == "ab");
  for_each_asm(8, SymmetryClass::QuarterTurn, [](const Asm& m) {
    CHECK(class_word(to_fpl(m), SymmetryClass::QuarterTurn).size() == 4);
  });
  for_each_asm(6, SymmetryClass::QuasiQuarterTurn, [](const Asm& m) {
    CHECK(class_word(to_fpl(m), SymmetryClass::QuasiQuarterTurn).size() == 3);
  });
}

TEST_CASE("pattern tallies", "[linkpat]") {
  PatternCounts p3 = pattern_counts(3, SymmetryClass::Plain);
  PatternCounts expected3{{"aaabbb", 1}, {"aababb", 2}, {"aabbab", 1},
                          {"abaabb", 1}, {"ababab", 2}};
  CHECK(p3 == expected3);

  PatternCounts q8 = pattern_counts(8, SymmetryClass::QuarterTurn);
  PatternCounts expected8{{"aabb", 4}, {"abab", 12}, {"abba", 4},
                          {"baab", 4}, {"baba", 12}, {"bbaa", 4}};
  CHECK(q8 == expected8);

  PatternCounts qq6 = pattern_counts(6, SymmetryClass::QuasiQuarterTurn);
  PatternCounts expected6{{"abc", 2}, {"bca", 2}, {"cab", 2}};
  CHECK(qq6 == expected6);

  CHECK(pattern_counts(4, SymmetryClass::Plain, 2) ==
        pattern_counts(4, SymmetryClass::Plain));
}
