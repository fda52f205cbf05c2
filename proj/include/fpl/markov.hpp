// Random walks on link patterns: a uniformly chosen Temperley-Lieb operator
// applied to the current pattern, with its exact stationary distribution.
#ifndef FPL_MARKOV_HPP_
#define FPL_MARKOV_HPP_

#include <fpl/linalg.hpp>
#include <fpl/linkpat.hpp>

namespace fpl {

struct MarkovChain {
  SymmetryClass cls = SymmetryClass::Plain;
  int N = 0;                              // word length; patterns have 2N points
  std::vector<std::string> words;         // states, lexicographic
  int generators = 0;                     // uniform choices per step
  std::vector<std::map<int, int>> hits;   // hits[s][t] = generators mapping s to t
};

// Plain class: the 2N cyclic operators on all Dyck words. Half-turn class:
// the N symmetrized operators on all realizable half-turn words.
inline MarkovChain transition_matrix(int N, SymmetryClass cls) {
  if (cls != SymmetryClass::Plain && cls != SymmetryClass::HalfTurn)
    fail("IncompatibleSize",
         "pattern chains exist for the plain and ht classes only");
  if (N < 1)
    fail("IncompatibleSize", "need at least one link");
  MarkovChain c;
  c.cls = cls;
  c.N = N;
  c.words = cls == SymmetryClass::Plain ? all_dyck_words(N) : all_ht_words(N);
  c.generators = cls == SymmetryClass::Plain ? 2 * N : N;
  std::map<std::string, int> index;
  for (size_t s = 0; s < c.words.size(); ++s)
    index[c.words[s]] = int(s);
  c.hits.resize(c.words.size());
  for (size_t s = 0; s < c.words.size(); ++s) {
    LinkPattern p = cls == SymmetryClass::Plain
                        ? pattern_from_dyck(c.words[s])
                        : pattern_from_ht_word(c.words[s]);
    for (int i = 1; i <= c.generators; ++i) {
      LinkPattern q = cls == SymmetryClass::Plain ? apply_e(i, p) : apply_e_sym(i, p);
      std::string w = cls == SymmetryClass::Plain ? dyck_word(q) : ht_word(q);
      ++c.hits[s][index.at(w)];
    }
  }
  return c;
}

namespace detail {

inline void reachability(const MarkovChain& c, bool reversed, std::vector<uint8_t>& seen) {
  size_t m = c.words.size();
  std::vector<std::vector<int>> adj(m);
  for (size_t s = 0; s < m; ++s)
    for (auto& [t, k] : c.hits[s])
      (reversed ? adj[t] : adj[s]).push_back(reversed ? int(s) : t);
  seen.assign(m, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
  }
}

}  // namespace detail

// Exact stationary distribution, indexed like chain.words. The chain must be
// irreducible; one balance equation is redundant and is replaced by the
// normalization. The result is checked against the balance equations before
// being returned.
inline std::vector<Rational> stationary_distribution(const MarkovChain& c) {
  size_t m = c.words.size();
  std::vector<uint8_t> seen;
  detail::reachability(c, false, seen);
  for (uint8_t s : seen)
    if (!s)
      fail("NotIrreducible", "chain does not reach every pattern");
  detail::reachability(c, true, seen);
  for (uint8_t s : seen)
    if (!s)
      fail("NotIrreducible", "chain is not reachable from every pattern");
  if (m == 1)
    return {Rational(1)};
  RationalMatrix a(m, std::vector<Rational>(m, 0));
  std::vector<Rational> b(m, 0);
  for (size_t t = 0; t + 1 < m; ++t) {
    a[t][t] = -c.generators;
    for (size_t s = 0; s < m; ++s) {
      auto it = c.hits[s].find(int(t));
      if (it != c.hits[s].end())
        a[t][s] += it->second;
    }
  }
  for (size_t s = 0; s < m; ++s)
    a[m - 1][s] = 1;
  b[m - 1] = 1;
  std::vector<Rational> mu = solve_linear(std::move(a), std::move(b));
  for (size_t t = 0; t < m; ++t) {
    if (mu[t] <= 0)
      throw std::logic_error("stationary_distribution: nonpositive mass");
    Rational lhs = 0;
    for (size_t s = 0; s < m; ++s) {
      auto it = c.hits[s].find(int(t));
      if (it != c.hits[s].end())
        lhs += Rational(it->second) * mu[s];
    }
    if (lhs != Rational(c.generators) * mu[t])
      throw std::logic_error("stationary_distribution: balance check failed");
  }
  return mu;
}

}  // namespace fpl

#endif
