#include <catch2/catch_amalgamated.hpp>

#include <fpl/markov.hpp>

#include "testutil.hpp"

using namespace fpl;

TEST_CASE("chain construction", "[markov]") {
  MarkovChain c2 = transition_matrix(2, SymmetryClass::Plain);
  CHECK(c2.words == std::vector<std::string>{"aabb", "abab"});
  CHECK(c2.generators == 4);
  for (auto& row : c2.hits) {
    int total = 0;
    for (auto& [t, k] : row)
      total += k;
    CHECK(total == c2.generators);
  }
  MarkovChain h3 = transition_matrix(3, SymmetryClass::HalfTurn);
  CHECK(h3.words == std::vector<std::string>{"abc", "bca", "cab"});
  CHECK(h3.generators == 3);
  CHECK(error_code([] { transition_matrix(4, SymmetryClass::QuarterTurn); }) ==
        "IncompatibleSize");
}

TEST_CASE("stationary distribution of the smallest chains", "[markov]") {
  MarkovChain c2 = transition_matrix(2, SymmetryClass::Plain);
  CHECK(stationary_distribution(c2) ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  MarkovChain c3 = transition_matrix(3, SymmetryClass::Plain);
  auto mu = stationary_distribution(c3);
  std::map<std::string, Rational> by_word;
  for (size_t s = 0; s < mu.size(); ++s)
    by_word[c3.words[s]] = mu[s];
  CHECK(by_word["aaabbb"] == Rational(1, 7));
  CHECK(by_word["aababb"] == Rational(2, 7));
  CHECK(by_word["aabbab"] == Rational(1, 7));
  CHECK(by_word["abaabb"] == Rational(1, 7));
  CHECK(by_word["ababab"] == Rational(2, 7));

  MarkovChain h2 = transition_matrix(2, SymmetryClass::HalfTurn);
  CHECK(stationary_distribution(h2) ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  MarkovChain h3 = transition_matrix(3, SymmetryClass::HalfTurn);
  CHECK(stationary_distribution(h3) ==
        std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
}

TEST_CASE("stationary distributions normalize and stay positive", "[markov]") {
  for (int N = 1; N <= 5; ++N) {
    MarkovChain c = transition_matrix(N, SymmetryClass::Plain);
    auto mu = stationary_distribution(c);
    Rational total = 0;
    for (auto& x : mu) {
      CHECK(x > 0);
      total += x;
    }
    CHECK(total == 1);
  }
  for (int N = 1; N <= 6; ++N) {
    MarkovChain c = transition_matrix(N, SymmetryClass::HalfTurn);
    auto mu = stationary_distribution(c);
    Rational total = 0;
    for (auto& x : mu) {
      CHECK(x > 0);
      total += x;
    }
    CHECK(total == 1);
  }
}

TEST_CASE("stationary frequencies match enumeration", "[markov]") {
  MarkovChain c4 = transition_matrix(4, SymmetryClass::Plain);
  auto mu = stationary_distribution(c4);
  PatternCounts counts = pattern_counts(4, SymmetryClass::Plain);
  BigInt total = 0;
  for (auto& [w, c] : counts)
    total += c;
  CHECK(total == 42);
  for (size_t s = 0; s < mu.size(); ++s)
    CHECK(mu[s] == Rational(counts.at(c4.words[s]), total));
}

TEST_CASE("reducible chains are rejected", "[markov]") {
  MarkovChain frozen;
  frozen.cls = SymmetryClass::Plain;
  frozen.N = 2;
  frozen.words = {"aabb", "abab"};
  frozen.generators = 1;
  frozen.hits = {{{0, 1}}, {{1, 1}}};
  CHECK(error_code([&] { stationary_distribution(frozen); }) ==
        "NotIrreducible");

  MarkovChain sink = frozen;
  sink.hits = {{{1, 1}}, {{1, 1}}};  // state 0 unreachable
  CHECK(error_code([&] { stationary_distribution(sink); }) == "NotIrreducible");
}

TEST_CASE("linear algebra helpers", "[markov]") {
  RationalMatrix m{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK(det_rational(m) == 1);
  RationalMatrix s{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK(det_rational(s) == -1);
  auto x = solve_linear(m, {Rational(3), Rational(2)});
  CHECK(x == std::vector<Rational>{1, 1});
  RationalMatrix sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(det_rational(sing) == 0);
  CHECK_THROWS_AS(solve_linear(sing, {Rational(1), Rational(1)}),
                  std::logic_error);
}
