// Weighted matching regions: honeycomb graphs of hexagons, rotation
// quotients, the reflective factorization, nonintersecting lattice paths, and
// the fixed-edge closures that tie loop configurations to rhombus tilings.
#ifndef FPL_TILINGS_HPP_
#define FPL_TILINGS_HPP_

#include <array>
#include <set>
#include <unordered_map>

#include <fpl/linalg.hpp>
#include <fpl/linkpat.hpp>

namespace fpl {

// Square: unit grid, quarter turn (x,y) -> (y,-x).
// Triangular: Eisenstein coordinates a+bw, sixth turn (a,b) -> (-b,a+b).
enum class LatticeBasis { Square, Triangular };

struct MatchRegion {
  LatticeBasis basis = LatticeBasis::Triangular;
  std::vector<std::pair<Rational, Rational>> pts;
  struct Edge {
    int u, v;
    Rational w;
  };
  std::vector<Edge> edges;
};

namespace detail {

using Point = std::pair<Rational, Rational>;

inline Point rotate_point(LatticeBasis basis, int order, const Point& p) {
  const auto& [x, y] = p;
  if (basis == LatticeBasis::Square) {
    if (order == 4)
      return {y, -x};
    if (order == 2)
      return {-x, -y};
  } else {
    if (order == 6)
      return {-y, x + y};
    if (order == 3)
      return {-(x + y), x};
    if (order == 2)
      return {-x, -y};
  }
  fail("NotSymmetric", "no rotation of order " + std::to_string(order) +
                           " on this lattice");
}

}  // namespace detail

// Honeycomb graph of the regular hexagon with side k: one vertex per unit
// triangle (centroids scaled by 3 to stay integral), one edge per shared side.
// `holed` removes the six triangles around the center, which only leaves a
// centrally symmetric region for odd k.
inline MatchRegion hexagon_region(int k, bool holed = false) {
  if (k < 1)
    fail("IncompatibleSize", "hexagon side must be positive, got " + std::to_string(k));
  if (holed && k % 2 == 0)
    fail("HoledRequiresOdd", "central hole needs odd side, got " + std::to_string(k));
  static const std::array<std::pair<long, long>, 6> hole = {
      {{1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}, {2, -1}}};
  auto in_hole = [&](long x, long y) {
    if (!holed)
      return false;
    for (auto& [hx, hy] : hole)
      if (hx == x && hy == y)
        return true;
    return false;
  };
  auto corner_ok = [&](long a, long b) {
    auto ab = [](long t) { return t < 0 ? -t : t; };
    return ab(a) <= k && ab(b) <= k && ab(a + b) <= k;
  };
  MatchRegion r;
  r.basis = LatticeBasis::Triangular;
  std::map<std::pair<long, long>, int> index;
  auto add = [&](long x, long y) {
    index[{x, y}] = int(r.pts.size());
    r.pts.emplace_back(Rational(x), Rational(y));
  };
  std::vector<std::pair<long, long>> ups;
  for (long a = -k - 1; a <= k; ++a)
    for (long b = -k - 1; b <= k; ++b) {
      if (corner_ok(a, b) && corner_ok(a + 1, b) && corner_ok(a, b + 1) &&
          !in_hole(3 * a + 1, 3 * b + 1)) {
        add(3 * a + 1, 3 * b + 1);
        ups.emplace_back(3 * a + 1, 3 * b + 1);
      }
      if (corner_ok(a + 1, b) && corner_ok(a, b + 1) && corner_ok(a + 1, b + 1) &&
          !in_hole(3 * a + 2, 3 * b + 2))
        add(3 * a + 2, 3 * b + 2);
    }
  for (auto& [x, y] : ups)
    for (auto [dx, dy] : {std::pair<long, long>{1, 1}, {-2, 1}, {1, -2}}) {
      auto it = index.find({x + dx, y + dy});
      if (it != index.end())
        r.edges.push_back({index.at({x, y}), it->second, Rational(1)});
    }
  return r;
}

namespace detail {

struct ActiveSet {
  std::vector<uint64_t> bits;
  explicit ActiveSet(size_t n) : bits((n + 63) / 64, 0) {
    for (size_t i = 0; i < n; ++i)
      bits[i / 64] |= uint64_t(1) << (i % 64);
  }
  bool test(int i) const { return bits[i / 64] >> (i % 64) & 1; }
  void clear(int i) { bits[i / 64] &= ~(uint64_t(1) << (i % 64)); }
  void set(int i) { bits[i / 64] |= uint64_t(1) << (i % 64); }
  bool any() const {
    for (uint64_t w : bits)
      if (w)
        return true;
    return false;
  }
  bool operator==(const ActiveSet& o) const = default;
};

struct ActiveHash {
  size_t operator()(const std::vector<uint64_t>& v) const {
    size_t h = 14695981039346656037ull;
    for (uint64_t w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

// Exact weighted count of perfect matchings. Branches on a minimum-degree
// vertex and memoizes on the set of still-unmatched vertices; parallel edges
// are distinct matchings and count separately.
inline Rational count_matchings(const MatchRegion& r) {
  size_t n = r.pts.size();
  if (n % 2 != 0)
    return 0;
  std::vector<std::vector<int>> inc(n);
  for (size_t e = 0; e < r.edges.size(); ++e) {
    inc[r.edges[e].u].push_back(int(e));
    inc[r.edges[e].v].push_back(int(e));
  }
  std::unordered_map<std::vector<uint64_t>, Rational, detail::ActiveHash> memo;
  detail::ActiveSet active(n);
  auto rec = [&](auto&& self) -> Rational {
    int best = -1, best_deg = 1 << 30;
    for (size_t v = 0; v < n; ++v) {
      if (!active.test(int(v)))
        continue;
      int deg = 0;
      for (int e : inc[v]) {
        int u = r.edges[e].u == int(v) ? r.edges[e].v : r.edges[e].u;
        deg += active.test(u);
      }
      if (deg == 0)
        return 0;
      if (deg < best_deg) {
        best_deg = deg;
        best = int(v);
        if (deg == 1)
          break;
      }
    }
    if (best < 0)
      return 1;
    auto it = memo.find(active.bits);
    if (it != memo.end())
      return it->second;
    Rational total = 0;
    for (int e : inc[best]) {
      int u = r.edges[e].u == best ? r.edges[e].v : r.edges[e].u;
      if (!active.test(u))
        continue;
      active.clear(best);
      active.clear(u);
      total += r.edges[e].w * self(self);
      active.set(best);
      active.set(u);
    }
    memo.emplace(active.bits, total);
    return total;
  };
  return rec(rec);
}

inline BigInt count_matchings_int(const MatchRegion& r) {
  Rational c = count_matchings(r);
  if (denominator(c) != 1)
    throw std::logic_error("count_matchings_int: fractional count");
  return numerator(c);
}

// Count of matchings fixed by the rotation group of the given order, by
// branching over whole edge orbits. Weights must be 1.
inline BigInt count_symmetric_matchings(const MatchRegion& r, int order) {
  size_t n = r.pts.size();
  std::map<detail::Point, int> index;
  for (size_t v = 0; v < n; ++v)
    index[r.pts[v]] = int(v);
  // vertex image under one rotation step
  std::vector<int> rho(n);
  for (size_t v = 0; v < n; ++v) {
    auto it = index.find(detail::rotate_point(r.basis, order, r.pts[v]));
    if (it == index.end())
      fail("NotSymmetric", "vertex set is not rotation invariant");
    rho[v] = it->second;
  }
  std::map<std::pair<int, int>, int> edge_at;
  for (size_t e = 0; e < r.edges.size(); ++e) {
    if (r.edges[e].w != 1)
      throw std::logic_error("count_symmetric_matchings: weighted region");
    int u = r.edges[e].u, v = r.edges[e].v;
    edge_at[{std::min(u, v), std::max(u, v)}] = int(e);
  }
  std::vector<std::vector<int>> inc(n);
  for (size_t e = 0; e < r.edges.size(); ++e) {
    inc[r.edges[e].u].push_back(int(e));
    inc[r.edges[e].v].push_back(int(e));
  }
  detail::ActiveSet active(n);
  auto orbit_of = [&](int e) {
    std::vector<std::pair<int, int>> out;
    int u = r.edges[e].u, v = r.edges[e].v;
    for (int t = 0; t < order; ++t) {
      out.emplace_back(u, v);
      u = rho[u];
      v = rho[v];
    }
    return out;
  };
  auto rec = [&](auto&& self) -> BigInt {
    int best = -1, best_deg = 1 << 30;
    for (size_t v = 0; v < n; ++v) {
      if (!active.test(int(v)))
        continue;
      int deg = 0;
      for (int e : inc[v]) {
        int u = r.edges[e].u == int(v) ? r.edges[e].v : r.edges[e].u;
        deg += active.test(u);
      }
      if (deg == 0)
        return 0;
      if (deg < best_deg) {
        best_deg = deg;
        best = int(v);
        if (deg == 1)
          break;
      }
    }
    if (best < 0)
      return 1;
    BigInt total = 0;
    for (int e : inc[best]) {
      int u = r.edges[e].u == best ? r.edges[e].v : r.edges[e].u;
      if (!active.test(u))
        continue;
      auto orbit = orbit_of(e);
      // the whole orbit must fit disjointly, else this choice is impossible
      bool ok = true;
      std::vector<int> taken;
      for (auto& [a, b] : orbit) {
        if (!active.test(a) || !active.test(b) || a == b) {
          ok = false;
          break;
        }
        active.clear(a);
        active.clear(b);
        taken.push_back(a);
        taken.push_back(b);
        if (edge_at.find({std::min(a, b), std::max(a, b)}) == edge_at.end())
          fail("NotSymmetric", "edge set is not rotation invariant");
      }
      if (ok)
        total += self(self);
      for (int w : taken)
        active.set(w);
    }
    return total;
  };
  return rec(rec);
}

// Quotient of a rotation-invariant region by its rotation group: one vertex
// per orbit (the representative rotated into the open first wedge when the
// lattice allows it, else the lexicographic minimum), one edge per edge orbit.
// Edges inside a single vertex orbit cannot occur in an invariant matching
// and the action must be free, so both are rejected. `edge_image`, when
// given, receives the quotient edge index of every input edge.
inline MatchRegion rotation_quotient(const MatchRegion& r, int order,
                                     std::vector<int>* edge_image = nullptr) {
  size_t n = r.pts.size();
  std::map<detail::Point, int> index;
  for (size_t v = 0; v < n; ++v)
    index[r.pts[v]] = int(v);
  std::vector<int> rho(n);
  for (size_t v = 0; v < n; ++v) {
    auto it = index.find(detail::rotate_point(r.basis, order, r.pts[v]));
    if (it == index.end())
      fail("NotSymmetric", "vertex set is not rotation invariant");
    rho[v] = it->second;
  }
  for (size_t v = 0; v < n; ++v) {
    int u = int(v);
    for (int t = 1; t < order; ++t) {
      u = rho[u];
      if (u == int(v))
        fail("NotSymmetric", "rotation fixes a vertex; the action is not free");
    }
    if (rho[u] != int(v))
      fail("NotSymmetric", "rotation order does not divide the orbit");
  }
  std::map<std::pair<int, int>, Rational> edge_at;
  for (auto& e : r.edges) {
    int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
    edge_at[{u, v}] = e.w;
  }
  for (auto& e : r.edges) {
    int u = rho[e.u], v = rho[e.v];
    auto it = edge_at.find({std::min(u, v), std::max(u, v)});
    if (it == edge_at.end() || it->second != e.w)
      fail("NotSymmetric", "edge set is not rotation invariant");
  }
  bool wedge = (r.basis == LatticeBasis::Square && order == 4) ||
               (r.basis == LatticeBasis::Triangular && order == 6);
  auto rep_of = [&](int v) {
    if (wedge) {
      int u = v;
      for (int t = 0; t < order; ++t) {
        if (r.pts[u].first > 0 && r.pts[u].second > 0)
          return u;
        u = rho[u];
      }
      fail("NotSymmetric", "orbit misses the open wedge");
    }
    int best = v, u = v;
    for (int t = 1; t < order; ++t) {
      u = rho[u];
      if (r.pts[u] < r.pts[best])
        best = u;
    }
    return best;
  };
  std::vector<int> rep(n);
  for (size_t v = 0; v < n; ++v)
    rep[v] = rep_of(int(v));
  std::vector<int> reps;
  for (size_t v = 0; v < n; ++v)
    if (rep[v] == int(v))
      reps.push_back(int(v));
  std::sort(reps.begin(), reps.end(),
            [&](int a, int b) { return r.pts[a] < r.pts[b]; });
  std::vector<int> qindex(n, -1);
  MatchRegion q;
  q.basis = r.basis;
  for (size_t i = 0; i < reps.size(); ++i) {
    qindex[reps[i]] = int(i);
    q.pts.push_back(r.pts[reps[i]]);
  }
  // one quotient edge per edge orbit, keyed by the orbit's smallest member
  auto edge_key = [&](int u, int v) {
    return std::pair<int, int>(std::min(u, v), std::max(u, v));
  };
  std::map<std::pair<int, int>, int> orbit_rep;  // key -> quotient edge idx
  if (edge_image)
    edge_image->assign(r.edges.size(), -1);
  for (size_t e = 0; e < r.edges.size(); ++e) {
    int u = r.edges[e].u, v = r.edges[e].v;
    if (rep[u] == rep[v]) {
      // An edge to the antipodal orbit member would act as a loop saturating
      // the orbit; anything else clashes with its own rotate at a shared
      // vertex, so no invariant matching uses it and the quotient omits it.
      int half = u;
      for (int t = 0; t < order / 2; ++t)
        half = rho[half];
      if (half == v)
        fail("NotSymmetric", "edge joins antipodal orbit members");
      continue;
    }
    auto key = edge_key(u, v);
    int uu = u, vv = v;
    for (int t = 1; t < order; ++t) {
      uu = rho[uu];
      vv = rho[vv];
      key = std::min(key, edge_key(uu, vv));
    }
    auto it = orbit_rep.find(key);
    int qe;
    if (it == orbit_rep.end()) {
      qe = int(q.edges.size());
      orbit_rep.emplace(key, qe);
      q.edges.push_back({qindex[rep[u]], qindex[rep[v]], r.edges[e].w});
    } else {
      qe = it->second;
    }
    if (edge_image)
      (*edge_image)[e] = qe;
  }
  return q;
}

// Strips forced pairs: while some vertex has a single neighbor, that edge lies
// in every perfect matching, so both ends can be removed; the product of the
// removed weights relates the counts of the region and its core.
struct CoreReduction {
  MatchRegion core;
  Rational factor = 1;
};

inline CoreReduction matching_core(const MatchRegion& r) {
  size_t n = r.pts.size();
  std::vector<uint8_t> alive(n, 1);
  std::vector<uint8_t> edge_alive(r.edges.size(), 1);
  CoreReduction out;
  bool again = true;
  while (again) {
    again = false;
    for (size_t v = 0; v < n; ++v) {
      if (!alive[v])
        continue;
      int deg = 0, last = -1;
      for (size_t e = 0; e < r.edges.size(); ++e)
        if (edge_alive[e] && (r.edges[e].u == int(v) || r.edges[e].v == int(v))) {
          ++deg;
          last = int(e);
        }
      if (deg == 0)
        throw std::logic_error("matching_core: isolated vertex, no matchings");
      if (deg == 1) {
        int u = r.edges[last].u == int(v) ? r.edges[last].v : r.edges[last].u;
        out.factor *= r.edges[last].w;
        alive[v] = alive[u] = 0;
        for (size_t e = 0; e < r.edges.size(); ++e)
          if (edge_alive[e] && (r.edges[e].u == int(v) || r.edges[e].v == int(v) ||
                                r.edges[e].u == u || r.edges[e].v == u))
            edge_alive[e] = 0;
        again = true;
      }
    }
  }
  std::vector<int> remap(n, -1);
  for (size_t v = 0; v < n; ++v)
    if (alive[v]) {
      remap[v] = int(out.core.pts.size());
      out.core.pts.push_back(r.pts[v]);
    }
  out.core.basis = r.basis;
  for (size_t e = 0; e < r.edges.size(); ++e)
    if (edge_alive[e])
      out.core.edges.push_back(
          {remap[r.edges[e].u], remap[r.edges[e].v], r.edges[e].w});
  return out;
}

// Structural isomorphism of unweighted multigraphs: color refinement followed
// by backtracking inside color classes. Intended for the small quotient
// graphs here.
inline bool graphs_isomorphic(const MatchRegion& a, const MatchRegion& b) {
  size_t n = a.pts.size();
  if (n != b.pts.size() || a.edges.size() != b.edges.size())
    return false;
  auto adjacency = [&](const MatchRegion& g) {
    std::vector<std::map<int, int>> adj(n);
    for (auto& e : g.edges) {
      ++adj[e.u][e.v];
      ++adj[e.v][e.u];
    }
    return adj;
  };
  auto adja = adjacency(a), adjb = adjacency(b);
  // joint color refinement: one code table per round keeps the color ids of
  // the two graphs comparable
  std::vector<long> ca(n, 0), cb(n, 0);
  for (size_t rounds = 0; rounds <= n; ++rounds) {
    std::map<std::pair<long, std::vector<std::pair<long, int>>>, long> codes;
    auto encode = [&](const std::vector<std::map<int, int>>& adj,
                      const std::vector<long>& color, std::vector<long>& next) {
      for (size_t v = 0; v < n; ++v) {
        std::vector<std::pair<long, int>> sig;
        for (auto& [u, m] : adj[v])
          sig.emplace_back(color[u], m);
        std::sort(sig.begin(), sig.end());
        auto key = std::make_pair(color[v], sig);
        auto it = codes.find(key);
        if (it == codes.end())
          it = codes.emplace(key, long(codes.size())).first;
        next[v] = it->second;
      }
    };
    std::vector<long> na(n), nb(n);
    encode(adja, ca, na);
    encode(adjb, cb, nb);
    ca = na;
    cb = nb;
  }
  std::map<long, int> hista, histb;
  for (size_t v = 0; v < n; ++v) {
    ++hista[ca[v]];
    ++histb[cb[v]];
  }
  if (hista != histb)
    return false;
  // match vertices of a to vertices of b, rarest colors first
  std::vector<int> order(n);
  for (size_t v = 0; v < n; ++v)
    order[v] = int(v);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::make_pair(hista[ca[x]], ca[x]) < std::make_pair(hista[ca[y]], ca[y]);
  });
  std::vector<int> image(n, -1), used(n, 0);
  auto rec = [&](auto&& self, size_t k) -> bool {
    if (k == n)
      return true;
    int v = order[k];
    for (size_t u = 0; u < n; ++u) {
      if (used[u] || cb[u] != ca[v])
        continue;
      bool ok = true;
      for (auto& [x, m] : adja[v]) {
        if (image[x] < 0)
          continue;
        auto it = adjb[u].find(image[x]);
        if (it == adjb[u].end() || it->second != m) {
          ok = false;
          break;
        }
      }
      if (!ok)
        continue;
      image[v] = int(u);
      used[u] = 1;
      if (self(self, k + 1))
        return true;
      image[v] = -1;
      used[u] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

// Reflective factorization of a wedge quotient of a holed hexagon. The mirror
// swaps the Eisenstein coordinates; its axis vertices keep their edges into
// the upper half, edges into the lower half are cut, and edges along the axis
// keep half their weight. The matching count of the input is the returned
// factor times the weighted matching count of the cut graph.
struct CiucuCut {
  MatchRegion cut;
  BigInt factor = 1;
  int axis_vertices = 0;
};

inline CiucuCut ciucu_factorize(const MatchRegion& g) {
  std::map<detail::Point, int> index;
  for (size_t v = 0; v < g.pts.size(); ++v)
    index[g.pts[v]] = int(v);
  std::vector<int> mirror(g.pts.size());
  for (size_t v = 0; v < g.pts.size(); ++v) {
    auto it = index.find({g.pts[v].second, g.pts[v].first});
    if (it == index.end())
      fail("NotReflective", "vertex set is not mirror invariant");
    mirror[v] = it->second;
  }
  std::map<std::pair<int, int>, Rational> edge_at;
  for (auto& e : g.edges)
    edge_at[{std::min(e.u, e.v), std::max(e.u, e.v)}] = e.w;
  for (auto& e : g.edges) {
    int u = mirror[e.u], v = mirror[e.v];
    auto it = edge_at.find({std::min(u, v), std::max(u, v)});
    if (it == edge_at.end() || it->second != e.w)
      fail("NotReflective", "edge set is not mirror invariant");
  }
  CiucuCut out;
  out.cut.basis = g.basis;
  out.cut.pts = g.pts;
  auto side = [&](int v) {
    // +1 above the axis, 0 on it, -1 below
    if (g.pts[v].first == g.pts[v].second)
      return 0;
    return g.pts[v].first < g.pts[v].second ? +1 : -1;
  };
  for (size_t v = 0; v < g.pts.size(); ++v)
    out.axis_vertices += side(int(v)) == 0;
  if (out.axis_vertices % 2 != 0)
    fail("NotReflective", "odd number of axis vertices");
  for (auto& e : g.edges) {
    int su = side(e.u), sv = side(e.v);
    if (su == 0 && sv == 0)
      out.cut.edges.push_back({e.u, e.v, e.w / 2});
    else if ((su == 0 && sv < 0) || (su < 0 && sv == 0))
      continue;  // cut
    else
      out.cut.edges.push_back(e);
  }
  out.factor = BigInt(1) << (out.axis_vertices / 2);
  return out;
}

// ---- counts of symmetric rhombus tilings ----

// Tilings of the hexagon with side p fixed by the sixth turn; p must be even
// for the class to be nonempty at all sizes (the count is taken on the
// quotient graph).
inline BigInt cssc_count(int p) {
  if (p < 2 || p % 2 != 0)
    fail("IncompatibleSize", "need an even hexagon side, got " + std::to_string(p));
  return count_matchings_int(rotation_quotient(hexagon_region(p, false), 6));
}

// ---- nonintersecting lattice paths ----

// Path matrix entry: zero when the factorial arguments go negative.
inline Rational lgv_matrix_entry(int i, int j) {
  if (2 * j - i < 0 || 2 * i - j + 2 < 0)
    return 0;
  return Rational(factorial(i + j + 1),
                  factorial(2 * j - i) * factorial(2 * i - j + 2));
}

// prod (3i+4) times det of the matrix above; an integer for every n.
inline BigInt lgv_count(int n) {
  RationalMatrix m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = lgv_matrix_entry(i, j);
  Rational d = det_rational(std::move(m));
  for (int i = 0; i < n; ++i)
    d *= 3 * i + 4;
  if (denominator(d) != 1)
    throw std::logic_error("lgv_count: fractional value");
  return numerator(d);
}

// Closed form for the same quantity.
inline BigInt qcsscpp_closed_form(int n) {
  Rational p = 1;
  for (int i = 0; i < n; ++i) {
    p *= Rational(factorial(i) * factorial(i + 1) * factorial(3 * i + 1) *
                      factorial(3 * i + 4),
                  factorial(2 * i) * factorial(2 * i + 1) * factorial(2 * i + 2) *
                      factorial(2 * i + 3));
  }
  if (denominator(p) != 1)
    throw std::logic_error("qcsscpp_closed_form: fractional value");
  return numerator(p);
}

// The concrete path family behind the determinant: sources A_i = (i, 2i+2),
// sinks B_j = (2j, j), steps east or south, and the final east step into a
// sink carrying weight 1/2 (no path can pass through a sink it is not ending
// at). The total weight of pairwise vertex-disjoint path families equals
// det of the pair-weight matrix; only the identity pairing admits any.
struct LatticePathSystem {
  int n = 0;
  std::vector<std::pair<int, int>> sources, sinks;

  explicit LatticePathSystem(int paths) : n(paths) {
    for (int i = 0; i < n; ++i) {
      sources.emplace_back(i, 2 * i + 2);
      sinks.emplace_back(2 * i, i);
    }
  }
};

// Pair weight in closed form: half of (3i+4) times the matrix entry.
inline Rational path_pair_weight(int i, int j) {
  return Rational(3 * i + 4, 2) * lgv_matrix_entry(i, j);
}

namespace detail {

// All east/south paths between two points, as vertex sequences.
inline void all_paths(std::pair<int, int> from, std::pair<int, int> to,
                      std::vector<std::vector<std::pair<int, int>>>& out) {
  if (from.first > to.first || from.second < to.second)
    return;
  if (from == to) {
    out.push_back({from});
    return;
  }
  std::vector<std::vector<std::pair<int, int>>> tails;
  tails.clear();
  if (from.first < to.first) {
    std::vector<std::vector<std::pair<int, int>>> sub;
    all_paths({from.first + 1, from.second}, to, sub);
    for (auto& t : sub)
      tails.push_back(std::move(t));
  }
  if (from.second > to.second) {
    std::vector<std::vector<std::pair<int, int>>> sub;
    all_paths({from.first, from.second - 1}, to, sub);
    for (auto& t : sub)
      tails.push_back(std::move(t));
  }
  for (auto& t : tails) {
    std::vector<std::pair<int, int>> p{from};
    p.insert(p.end(), t.begin(), t.end());
    out.push_back(std::move(p));
  }
}

inline Rational path_weight(const std::vector<std::pair<int, int>>& p) {
  // weight 1/2 iff the last step is an east step (into the sink)
  size_t m = p.size();
  if (m >= 2 && p[m - 1].first == p[m - 2].first + 1)
    return Rational(1, 2);
  return 1;
}

}  // namespace detail

// Brute-force total weight of pairwise disjoint families joining A_i to
// B_{sigma(i)}, summed over all pairings with sign. By disjointness only the
// identity contributes, so this equals det(path_pair_weight).
inline Rational disjoint_path_weight(int n) {
  LatticePathSystem sys(n);
  // paths[i][j]: all A_i -> B_j paths
  std::vector<std::vector<std::vector<std::vector<std::pair<int, int>>>>> paths(
      n, std::vector<std::vector<std::vector<std::pair<int, int>>>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      detail::all_paths(sys.sources[i], sys.sinks[j], paths[i][j]);
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i)
    sigma[i] = i;
  Rational total = 0;
  do {
    int sign = 1;
    std::vector<int> s = sigma;
    for (int i = 0; i < n; ++i)
      while (s[i] != i) {
        std::swap(s[i], s[s[i]]);
        sign = -sign;
      }
    std::set<std::pair<int, int>> used;
    std::vector<const std::vector<std::pair<int, int>>*> chosen(n, nullptr);
    Rational sub = 0;
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        Rational w = 1;
        for (int k = 0; k < n; ++k)
          w *= detail::path_weight(*chosen[k]);
        sub += w;
        return;
      }
      for (auto& p : paths[i][sigma[i]]) {
        bool ok = true;
        for (auto& v : p)
          if (used.count(v)) {
            ok = false;
            break;
          }
        if (!ok)
          continue;
        for (auto& v : p)
          used.insert(v);
        chosen[i] = &p;
        self(self, i + 1);
        for (auto& v : p)
          used.erase(v);
      }
    };
    rec(rec, 0);
    total += sign * sub;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

// ---- fixed-edge closures ----

// Full-pattern words of the two tiling-equivalent families: on grids of size
// 4k the pattern a^k (a^k b^k)^3 b^k, on grids of size 4k+2 the pattern
// a^{2k+1} b^k a^{k+1} b^{k+1} a^k b^{2k+1}.
inline std::string qt_family_pattern(int k) {
  std::string a(k, 'a'), b(k, 'b');
  return a + a + b + a + b + a + b + b;
}

inline std::string qqt_family_pattern(int k) {
  return std::string(2 * k + 1, 'a') + std::string(k, 'b') +
         std::string(k + 1, 'a') + std::string(k + 1, 'b') +
         std::string(k, 'a') + std::string(2 * k + 1, 'b');
}

// Everything that is decided before any free choice remains: edges forced in
// or out for all members of a family, the residual graph of undecided edges,
// and its quarter-turn quotient.
struct FixedEdgeClosure {
  int n = 0;
  SymmetryClass cls = SymmetryClass::QuarterTurn;
  std::string word;
  std::vector<int8_t> hstate, vstate;  // 0 unknown, 1 forced, 2 forbidden
  MatchRegion residual;                // Square basis, grid centered at origin
  std::vector<std::pair<int, int>> residual_grid_edge;  // (kind 0=h/1=v, flat)
  MatchRegion quotient;
  std::vector<int> residual_to_quotient;
};

namespace detail {

struct ClosureBuild {
  int n;
  bool qq;  // size 4k+2
  std::vector<int8_t> h, v;
  std::vector<std::pair<int, int>> queue;  // vertices to recheck

  explicit ClosureBuild(int size)
      : n(size), qq(size % 4 == 2), h(size_t(size) * (size - 1), 0),
        v(size_t(size - 1) * size, 0) {}

  bool center_edge(int kind, int i, int j) const {
    int m = n / 2;
    if (kind == 0)
      return (i == m - 1 || i == m) && j == m - 1;
    return i == m - 1 && (j == m - 1 || j == m);
  }

  int8_t& state(int kind, int i, int j) {
    return kind == 0 ? h[size_t(i) * (n - 1) + j] : v[size_t(i) * n + j];
  }

  void enqueue_ends(int kind, int i, int j) {
    queue.emplace_back(i, j);
    queue.emplace_back(kind == 0 ? i : i + 1, kind == 0 ? j + 1 : j);
  }

  // Sets an edge and, away from the central square, its whole quarter-turn
  // orbit: family members agree with their own rotation everywhere else.
  void set_edge(int kind, int i, int j, int8_t s) {
    int8_t& cur = state(kind, i, j);
    if (cur == s)
      return;
    if (cur != 0)
      throw std::logic_error("fixed_edge_closure: contradictory propagation");
    cur = s;
    enqueue_ends(kind, i, j);
    if (center_edge(kind, i, j))
      return;
    // h(i,j) rotates to v(j, n-1-i); v(i,j) rotates to h(j, n-2-i)
    if (kind == 0)
      set_edge(1, j, n - 1 - i, s);
    else
      set_edge(0, j, n - 2 - i, s);
  }

  // edge state in direction d from vertex (i,j); stubs count as decided
  int8_t look(int i, int j, Dir d) {
    switch (d) {
      case Dir::West:
        return j > 0 ? state(0, i, j - 1)
                     : stub_present(n, Dir::West, i) ? 1 : 2;
      case Dir::East:
        return j < n - 1 ? state(0, i, j)
                         : stub_present(n, Dir::East, i) ? 1 : 2;
      case Dir::North:
        return i > 0 ? state(1, i - 1, j)
                     : stub_present(n, Dir::North, j) ? 1 : 2;
      default:
        return i < n - 1 ? state(1, i, j)
                         : stub_present(n, Dir::South, j) ? 1 : 2;
    }
  }

  void force_dir(int i, int j, Dir d, int8_t s) {
    switch (d) {
      case Dir::West: set_edge(0, i, j - 1, s); break;
      case Dir::East: set_edge(0, i, j, s); break;
      case Dir::North: set_edge(1, i - 1, j, s); break;
      default: set_edge(1, i, j, s); break;
    }
  }

  void settle() {
    while (!queue.empty()) {
      auto [i, j] = queue.back();
      queue.pop_back();
      int forced = 0;
      std::vector<Dir> open;
      for (Dir d : {Dir::West, Dir::East, Dir::North, Dir::South}) {
        int8_t s = look(i, j, d);
        if (s == 1)
          ++forced;
        else if (s == 0)
          open.push_back(d);
      }
      if (forced > 2 || forced + int(open.size()) < 2)
        throw std::logic_error("fixed_edge_closure: vertex over- or under-committed");
      if (forced == 2) {
        for (Dir d : open)
          force_dir(i, j, d, 2);
      } else if (forced + int(open.size()) == 2) {
        for (Dir d : open)
          force_dir(i, j, d, 1);
      }
    }
  }
};

}  // namespace detail

inline FixedEdgeClosure fixed_edge_closure(int n, const std::string& word) {
  bool qt_ok = n >= 4 && n % 4 == 0 && word == qt_family_pattern(n / 4);
  bool qq_ok = n >= 6 && n % 4 == 2 && word == qqt_family_pattern((n - 2) / 4);
  if (!qt_ok && !qq_ok)
    fail("UnsupportedPattern",
         "'" + word + "' is not a tiling family pattern for size " + std::to_string(n));
  detail::ClosureBuild b(n);
  int m = n / 2;
  if (qt_ok) {
    // no member of the family contains any edge of the central square
    b.set_edge(0, m - 1, m - 1, 2);
    b.set_edge(0, m, m - 1, 2);
    b.set_edge(1, m - 1, m - 1, 2);
    b.set_edge(1, m - 1, m, 2);
  } else {
    // every member contains the two horizontal central edges
    b.set_edge(0, m - 1, m - 1, 1);
    b.set_edge(0, m, m - 1, 1);
    b.set_edge(1, m - 1, m - 1, 2);
    b.set_edge(1, m - 1, m, 2);
  }
  // seed edges: the horizontal edges of odd vertex parity inside the closed
  // triangle against the left border, plus their rotations
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 <= std::min(i, n - 2 - i); ++j)
      if ((i + j) % 2 == 1)
        b.set_edge(0, i, j, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b.queue.emplace_back(i, j);
  b.settle();
  FixedEdgeClosure c;
  c.n = n;
  c.cls = qt_ok ? SymmetryClass::QuarterTurn : SymmetryClass::QuasiQuarterTurn;
  c.word = word;
  c.hstate = b.h;
  c.vstate = b.v;
  // residual graph on centered half-integer coordinates
  c.residual.basis = LatticeBasis::Square;
  std::map<std::pair<int, int>, int> vidx;  // (i,j) -> residual vertex
  auto vertex = [&](int i, int j) {
    auto it = vidx.find({i, j});
    if (it != vidx.end())
      return it->second;
    int k = int(c.residual.pts.size());
    vidx.emplace(std::make_pair(i, j), k);
    c.residual.pts.emplace_back(Rational(2 * j - (n - 1), 2),
                                Rational(n - 1 - 2 * i, 2));
    return k;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n - 1; ++j)
      if (b.state(0, i, j) == 0) {
        c.residual.edges.push_back({vertex(i, j), vertex(i, j + 1), Rational(1)});
        c.residual_grid_edge.emplace_back(0, i * (n - 1) + j);
      }
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n; ++j)
      if (b.state(1, i, j) == 0) {
        c.residual.edges.push_back({vertex(i, j), vertex(i + 1, j), Rational(1)});
        c.residual_grid_edge.emplace_back(1, i * n + j);
      }
  // every undecided vertex must carry exactly one forced edge, so matchings
  // of the residual are exactly the admissible completions
  for (auto& entry : vidx) {
    int forced = 0;
    for (Dir d : {Dir::West, Dir::East, Dir::North, Dir::South})
      forced += b.look(entry.first.first, entry.first.second, d) == 1;
    if (forced != 1)
      throw std::logic_error("fixed_edge_closure: residual vertex not half-saturated");
  }
  if (!c.residual.pts.empty())
    c.quotient = rotation_quotient(c.residual, 4, &c.residual_to_quotient);
  return c;
}

// The tiling image of one family member: its undecided edges form a
// quarter-turn invariant matching of the residual, which descends to a
// perfect matching of the quotient, reported as sorted quotient edge indices.
inline std::vector<int> fpl_to_quotient_matching(const Fpl& f,
                                                 const FixedEdgeClosure& c) {
  if (f.n != c.n)
    fail("PatternMismatch", "configuration size does not match the closure");
  if (dyck_word(link_pattern(f)) != c.word)
    fail("PatternMismatch", "configuration pattern differs from the family");
  int n = c.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n - 1; ++j) {
      int8_t s = c.hstate[size_t(i) * (n - 1) + j];
      if ((s == 1 && !f.h(i, j)) || (s == 2 && f.h(i, j)))
        fail("PatternMismatch", "configuration violates a decided edge");
    }
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n; ++j) {
      int8_t s = c.vstate[size_t(i) * n + j];
      if ((s == 1 && !f.v(i, j)) || (s == 2 && f.v(i, j)))
        fail("PatternMismatch", "configuration violates a decided edge");
    }
  std::map<int, int> hits;  // quotient edge -> members seen
  for (size_t r = 0; r < c.residual.edges.size(); ++r) {
    auto [kind, flat] = c.residual_grid_edge[r];
    bool in = kind == 0 ? f.horiz[flat] != 0 : f.vert[flat] != 0;
    if (in)
      ++hits[c.residual_to_quotient[r]];
  }
  std::vector<int> matched(c.quotient.pts.size(), 0);
  std::vector<int> out;
  for (auto& [qe, k] : hits) {
    if (k != 4)
      fail("PatternMismatch", "undecided edges are not quarter-turn invariant");
    ++matched[c.quotient.edges[qe].u];
    ++matched[c.quotient.edges[qe].v];
    out.push_back(qe);
  }
  for (int v : matched)
    if (v != 1)
      fail("PatternMismatch", "image is not a perfect matching of the quotient");
  return out;
}

}  // namespace fpl

#endif
