#ifndef CULAB_TESTS_SUPPORT_HPP
#define CULAB_TESTS_SUPPORT_HPP

// Shared test machinery: fixture access, hand-rolled model generators and
// brute-force oracles. The oracles read only S.add, S.leq and S.zero and
// evaluate the defining quantifiers literally (primed variables included),
// so they share no search code with the library.

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "culab/culab.hpp"

namespace culab::testing {

using S_t = FiniteOrderedMonoid;

inline std::string fixture_path(const std::string& name) { return std::string(CULAB_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline S_t load_fixture(const std::string& name) { return parse_and_validate(read_fixture(name)); }

inline const std::vector<std::string>& shipped_fixtures() {
  static const std::vector<std::string> v = {"t1.json",    "o2.json",   "e2.json",   "n2.json",
                                             "ncap3.json", "f4.json",   "gap4.json", "sph12.json",
                                             "zmod2_pre.json", "o2_swapped.json"};
  return v;
}

inline Element el(const S_t& S, const std::string& l) { return S.at(l); }

// ---------------------------------------------------------------------------
// Arithmetic from first principles.

inline Element times(const S_t& S, std::size_t k, Element x) {
  Element r = S.zero();
  while (k--) r = S.add(r, x);
  return r;
}

// (n+1)·x is past the stabilisation point of the multiples.
inline Element inf(const S_t& S, Element x) { return times(S, S.size() + 1, x); }

inline std::vector<Element> all(const S_t& S) {
  std::vector<Element> v(S.size());
  std::iota(v.begin(), v.end(), Element{0});
  return v;
}

inline bool le(const S_t& S, Element a, Element b) { return S.leq(a, b); }

// ---------------------------------------------------------------------------
// Generators. Each draws a validated model of modest size from a fixed
// family; seeds are fixed by the callers.

inline const std::vector<S_t>& small_corpus() {
  static const std::vector<S_t> c = enumerate_corpus(4);
  return c;
}

inline const std::vector<S_t>& small_ordered_corpus() {
  static const std::vector<S_t> c = enumerate_corpus(4, CorpusOrder::all_compatible);
  return c;
}

// Submonoid of T generated by `gens`, with its own algebraic order.
inline S_t generated_submodel(const S_t& T, const std::vector<Element>& gens, const std::string& name) {
  std::vector<char> in(T.size(), 0);
  in[T.zero()] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (Element a : all(T))
      for (Element g : gens)
        if (in[a] && !in[T.add(a, g)]) in[T.add(a, g)] = 1, grew = true;
  }
  std::vector<Element> keep;
  for (Element a : all(T))
    if (in[a]) keep.push_back(a);
  std::vector<Element> pos(T.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<Element>(i);
  std::vector<std::string> labels;
  AddTable add(keep.size(), std::vector<Element>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(T.label(keep[i]));
    for (std::size_t j = 0; j < keep.size(); ++j) add[i][j] = pos[T.add(keep[i], keep[j])];
  }
  return S_t::create(name, labels, pos[T.zero()], add, std::nullopt);
}

inline S_t random_model(std::mt19937& rng) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  static const std::vector<S_t> atoms = {trivial_model(), two_point_model(), e2_model(), capped_model(2),
                                         capped_model(3), gap4_model()};
  switch (pick(5)) {
    case 0: return small_corpus()[pick(small_corpus().size())];
    case 1: return small_ordered_corpus()[pick(small_ordered_corpus().size())];
    case 2: return sphere_model(static_cast<int>(pick(2)), 1 + static_cast<int>(pick(2)));
    case 3: {
      const S_t& a = atoms[pick(atoms.size())];
      const S_t& b = atoms[pick(atoms.size() - 1)];  // GAP4 at most once keeps sizes small
      return product(a, b);
    }
    default: {
      S_t T = product(atoms[pick(5)], atoms[pick(5)]);
      std::vector<Element> gens;
      const std::size_t g = 1 + pick(3);
      for (std::size_t i = 0; i < g; ++i) gens.push_back(static_cast<Element>(pick(T.size())));
      return generated_submodel(T, gens, "sub(" + T.name() + ")");
    }
  }
}

// ---------------------------------------------------------------------------
// Axiom oracles: literal primed quantifiers with << read as <=.

inline bool oracle_o5(const S_t& S) {
  auto E = all(S);
  for (Element xp : E)
    for (Element x : E)
      if (le(S, xp, x))
        for (Element yp : E)
          for (Element y : E)
            if (le(S, yp, y))
              for (Element z : E) {
                if (!le(S, S.add(x, y), z)) continue;
                bool ok = false;
                for (Element c : E)
                  if (le(S, yp, c) && le(S, S.add(xp, c), z) && le(S, z, S.add(x, c))) ok = true;
                if (!ok) return false;
              }
  return true;
}

inline bool oracle_o6(const S_t& S) {
  auto E = all(S);
  for (Element xp : E)
    for (Element x : E)
      if (le(S, xp, x))
        for (Element y : E)
          for (Element z : E) {
            if (!le(S, x, S.add(y, z))) continue;
            bool ok = false;
            for (Element v : E)
              for (Element w : E)
                if (le(S, v, x) && le(S, v, y) && le(S, w, x) && le(S, w, z) && le(S, xp, S.add(v, w)))
                  ok = true;
            if (!ok) return false;
          }
  return true;
}

inline bool oracle_o7(const S_t& S) {
  auto E = all(S);
  for (Element x1p : E)
    for (Element x1 : E)
      if (le(S, x1p, x1))
        for (Element x2p : E)
          for (Element x2 : E)
            if (le(S, x2p, x2))
              for (Element w : E) {
                if (!le(S, x1, w) || !le(S, x2, w)) continue;
                bool ok = false;
                for (Element x : E)
                  if (le(S, x1p, x) && le(S, x2p, x) && le(S, x, w) && le(S, x, S.add(x1, x2))) ok = true;
                if (!ok) return false;
              }
  return true;
}

inline bool oracle_o8(const S_t& S) {
  auto E = all(S);
  for (Element w : E) {
    if (S.add(w, w) != w) continue;
    for (Element xp : E)
      for (Element x : E)
        if (le(S, xp, x))
          for (Element yp : E)
            for (Element y : E)
              if (le(S, yp, y))
                for (Element z : E) {
                  if (!le(S, S.add(x, y), S.add(z, w))) continue;
                  bool ok = false;
                  for (Element z1 : E)
                    for (Element z2 : E)
                      if (le(S, S.add(z1, z2), z) && le(S, xp, S.add(z1, w)) && le(S, yp, S.add(z2, w)) &&
                          le(S, z1, S.add(x, w)) && le(S, z2, S.add(y, w)))
                        ok = true;
                  if (!ok) return false;
                }
  }
  return true;
}

inline bool oracle_riesz(const S_t& S) {
  auto E = all(S);
  for (Element x1 : E)
    for (Element x2 : E)
      for (Element y1 : E)
        for (Element y2 : E) {
          if (!(le(S, x1, y1) && le(S, x1, y2) && le(S, x2, y1) && le(S, x2, y2))) continue;
          bool ok = false;
          for (Element z : E)
            if (le(S, x1, z) && le(S, x2, z) && le(S, z, y1) && le(S, z, y2)) ok = true;
          if (!ok) return false;
        }
  return true;
}

inline bool oracle_axiom(const S_t& S, Axiom a) {
  switch (a) {
    case Axiom::O5: return oracle_o5(S);
    case Axiom::O6: return oracle_o6(S);
    case Axiom::O7: return oracle_o7(S);
    case Axiom::O8: return oracle_o8(S);
    case Axiom::Riesz: return oracle_riesz(S);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Divisibility oracles.

inline bool oracle_div(const S_t& S, Element x, std::size_t k) {
  for (Element xp : all(S)) {
    if (!le(S, xp, x)) continue;
    bool ok = false;
    for (Element z : all(S))
      if (le(S, times(S, k, z), x) && le(S, xp, inf(S, z))) ok = true;
    if (!ok) return false;
  }
  return true;
}

// Sums of at most |S| terms from {z : kz <= x}, by breadth-first layers.
inline bool oracle_wdiv(const S_t& S, Element x, std::size_t k) {
  std::vector<Element> D;
  for (Element z : all(S))
    if (le(S, times(S, k, z), x)) D.push_back(z);
  std::set<Element> sums = {S.zero()};
  for (std::size_t r = 0; r < S.size(); ++r) {
    std::set<Element> next = sums;
    for (Element s : sums)
      for (Element d : D) next.insert(S.add(s, d));
    sums = next;
  }
  for (Element xp : all(S)) {
    if (!le(S, xp, x)) continue;
    bool ok = false;
    for (Element s : sums)
      if (le(S, xp, s)) ok = true;
    if (!ok) return false;
  }
  return true;
}

inline bool oracle_div_model(const S_t& S, std::size_t k) {
  for (Element x : all(S))
    if (!oracle_div(S, x, k)) return false;
  return true;
}

inline bool oracle_wdiv_model(const S_t& S, std::size_t k) {
  for (Element x : all(S))
    if (!oracle_wdiv(S, x, k)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subsets, ideals and scales by exhaustive enumeration of all 2^n subsets.

inline std::vector<std::vector<Element>> all_subsets(const S_t& S) {
  std::vector<std::vector<Element>> out;
  const std::size_t n = S.size();
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    std::vector<Element> s;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) s.push_back(static_cast<Element>(i));
    out.push_back(std::move(s));
  }
  return out;
}

inline bool contains(const std::vector<Element>& s, Element x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline bool is_downset(const S_t& S, const std::vector<Element>& I) {
  for (Element a : I)
    for (Element y : all(S))
      if (le(S, y, a) && !contains(I, y)) return false;
  return true;
}

inline bool oracle_is_ideal(const S_t& S, const std::vector<Element>& I) {
  if (!contains(I, S.zero())) return false;
  for (Element a : I)
    for (Element b : I)
      if (!contains(I, S.add(a, b))) return false;
  return is_downset(S, I);
}

inline std::vector<std::vector<Element>> oracle_ideals(const S_t& S) {
  std::vector<std::vector<Element>> out;
  for (auto& s : all_subsets(S))
    if (oracle_is_ideal(S, s)) out.push_back(s);
  return out;
}

// sigma generates S iff the only ideal containing it is S.
inline bool oracle_generates(const S_t& S, const std::vector<std::vector<Element>>& ideals,
                             const std::vector<Element>& sigma) {
  for (const auto& I : ideals) {
    bool has = std::all_of(sigma.begin(), sigma.end(), [&](Element s) { return contains(I, s); });
    if (has && I.size() != S.size()) return false;
  }
  return true;
}

inline std::vector<std::vector<Element>> oracle_scales(const S_t& S) {
  const auto ideals = oracle_ideals(S);
  std::vector<std::vector<Element>> out;
  for (auto& s : all_subsets(S))
    if (is_downset(S, s) && oracle_generates(S, ideals, s)) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Order-and-ideal properties.

inline bool oracle_stably_finite(const S_t& S) {
  for (Element x : all(S))
    for (Element y : all(S))
      if (le(S, S.add(x, y), x) && y != S.zero()) return false;
  return true;
}

inline bool oracle_almost_unperforated(const S_t& S) {
  for (Element x : all(S))
    for (Element y : all(S)) {
      if (le(S, x, y)) continue;
      for (std::size_t k = 1; k <= 2 * S.size() + 2; ++k)
        if (le(S, times(S, k + 1, x), times(S, k, y))) return false;
    }
  return true;
}

inline bool oracle_refinement(const S_t& S) {
  auto E = all(S);
  for (Element a : E)
    for (Element b : E)
      for (Element c : E)
        for (Element d : E) {
          if (S.add(a, b) != S.add(c, d)) continue;
          bool ok = false;
          for (Element z11 : E)
            for (Element z12 : E)
              for (Element z21 : E)
                for (Element z22 : E)
                  if (S.add(z11, z12) == a && S.add(z21, z22) == b && S.add(z11, z21) == c &&
                      S.add(z12, z22) == d)
                    ok = true;
          if (!ok) return false;
        }
  return true;
}

// Literal ideal-filteredness: v' <= v <= ∞x, ∞y gives z <= x, y with v' <= ∞z.
inline bool oracle_ideal_filtered(const S_t& S) {
  auto E = all(S);
  for (Element vp : E)
    for (Element v : E)
      if (le(S, vp, v))
        for (Element x : E)
          for (Element y : E) {
            if (!le(S, v, inf(S, x)) || !le(S, v, inf(S, y))) continue;
            bool ok = false;
            for (Element z : E)
              if (le(S, z, x) && le(S, z, y) && le(S, vp, inf(S, z))) ok = true;
            if (!ok) return false;
          }
  return true;
}

// Literal property (V) with primes: c, d1' <= d1, d2' <= d2, x with
// d1, d2 <= c and c + d1, c + d2 <= x give y + z <= x with
// d1' + d2' <= ∞y, ∞z.
inline bool oracle_V(const S_t& S) {
  auto E = all(S);
  for (Element x : E)
    for (Element c : E)
      for (Element d1 : E)
        for (Element d2 : E) {
          if (!le(S, d1, c) || !le(S, d2, c) || !le(S, S.add(c, d1), x) || !le(S, S.add(c, d2), x)) continue;
          for (Element d1p : E)
            for (Element d2p : E) {
              if (!le(S, d1p, d1) || !le(S, d2p, d2)) continue;
              const Element t = S.add(d1p, d2p);
              bool ok = false;
              for (Element y : E)
                for (Element z : E)
                  if (le(S, S.add(y, z), x) && le(S, t, inf(S, y)) && le(S, t, inf(S, z))) ok = true;
              if (!ok) return false;
            }
        }
  return true;
}

inline bool oracle_full(const S_t& S, Element x) {
  for (Element y : all(S))
    if (!le(S, y, inf(S, x))) return false;
  return true;
}

inline bool oracle_full_filtered(const S_t& S) {
  for (Element x : all(S))
    for (Element y : all(S)) {
      if (!oracle_full(S, x) || !oracle_full(S, y)) continue;
      bool ok = false;
      for (Element z : all(S))
        if (oracle_full(S, z) && le(S, z, x) && le(S, z, y)) ok = true;
      if (!ok) return false;
    }
  return true;
}

// dim(S) <= n, literally: lists y_1..y_r with r <= |S| (all of them,
// without the strict-partial-sum reduction) and all z_{j,k} assignments.
// Only usable on tiny models.
inline bool oracle_dim_leq(const S_t& S, std::size_t n) {
  auto E = all(S);
  const std::size_t N = S.size();
  std::vector<Element> ys;
  std::function<bool(std::size_t)> lists;
  auto witness = [&](Element x) {
    const std::size_t r = ys.size();
    std::vector<Element> z(r * (n + 1), S.zero());
    std::function<bool(std::size_t)> fill = [&](std::size_t i) -> bool {
      if (i == z.size()) {
        Element total = S.zero();
        for (Element e : z) total = S.add(total, e);
        if (!le(S, x, total)) return false;
        for (std::size_t k = 0; k <= n; ++k) {
          Element col = S.zero();
          for (std::size_t j = 0; j < r; ++j) col = S.add(col, z[j * (n + 1) + k]);
          if (!le(S, col, x)) return false;
        }
        return true;
      }
      for (Element e : E)
        if (le(S, e, ys[i / (n + 1)])) {
          z[i] = e;
          if (fill(i + 1)) return true;
        }
      return false;
    };
    return fill(0);
  };
  lists = [&](std::size_t depth) -> bool {
    Element sum = S.zero();
    for (Element y : ys) sum = S.add(sum, y);
    for (Element x : E)
      if (le(S, x, sum) && !witness(x)) return false;
    if (depth == N) return true;
    for (Element y : E) {
      ys.push_back(y);
      bool ok = lists(depth + 1);
      ys.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return lists(0);
}

// ---------------------------------------------------------------------------
// Isomorphism by permutation search (zero fixed), for tiny models.

inline bool oracle_isomorphic(const S_t& S, const S_t& T) {
  if (S.size() != T.size()) return false;
  std::vector<Element> others;
  for (Element x : all(T))
    if (x != T.zero()) others.push_back(x);
  std::sort(others.begin(), others.end());
  std::vector<Element> sx;
  for (Element x : all(S))
    if (x != S.zero()) sx.push_back(x);
  do {
    std::vector<Element> f(S.size());
    f[S.zero()] = T.zero();
    for (std::size_t i = 0; i < sx.size(); ++i) f[sx[i]] = others[i];
    bool ok = true;
    for (Element a : all(S))
      for (Element b : all(S))
        if (T.add(f[a], f[b]) != f[S.add(a, b)] || T.leq(f[a], f[b]) != S.leq(a, b)) ok = false;
    if (ok) return true;
  } while (std::next_permutation(others.begin(), others.end()));
  return false;
}

// Every commutative associative table with identity 0 on n elements whose
// order (algebraic, or each reflexive transitive antisymmetric monotone
// relation above it) makes a positively ordered monoid; classes up to
// isomorphism. No canonical-form pruning.
inline std::vector<S_t> oracle_corpus(std::size_t n, bool all_orders) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  std::vector<S_t> classes;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::size_t> v(cells.size(), 0);
  auto offer = [&](const AddTable& t, std::optional<BitMatrix> order) {
    std::optional<S_t> S;
    try {
      S = S_t::create("oracle", labels, 0, t, std::move(order));
    } catch (const ValidationError&) {
      return;
    }
    for (const auto& C : classes)
      if (oracle_isomorphic(*S, C)) return;
    classes.push_back(*S);
  };
  while (true) {
    AddTable t(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i) t[0][i] = t[i][0] = static_cast<Element>(i);
    for (std::size_t c = 0; c < cells.size(); ++c)
      t[cells[c].first][cells[c].second] = t[cells[c].second][cells[c].first] = static_cast<Element>(v[c]);
    bool assoc = true;
    for (std::size_t x = 0; x < n && assoc; ++x)
      for (std::size_t y = 0; y < n && assoc; ++y)
        for (std::size_t z = 0; z < n && assoc; ++z)
          if (t[t[x][y]][z] != t[x][t[y][z]]) assoc = false;
    if (assoc) {
      if (!all_orders) {
        offer(t, std::nullopt);
      } else {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (a != b) pairs.emplace_back(a, b);
        for (std::size_t m = 0; m < (std::size_t{1} << pairs.size()); ++m) {
          BitMatrix r(n);
          for (std::size_t a = 0; a < n; ++a) r.set(a, a);
          for (std::size_t p = 0; p < pairs.size(); ++p)
            if (m >> p & 1) r.set(pairs[p].first, pairs[p].second);
          bool closed = true;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              for (std::size_t c = 0; c < n; ++c)
                if (r.test(a, b) && r.test(b, c) && !r.test(a, c)) closed = false;
          if (!closed) continue;
          // The algebraic order itself is reported as algebraic mode.
          bool is_alg = true;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
              bool alg = false;
              for (std::size_t c = 0; c < n; ++c) alg = alg || t[a][c] == b;
              if (alg != r.test(a, b)) is_alg = false;
            }
          if (is_alg)
            offer(t, std::nullopt);
          else
            offer(t, r);
        }
      }
    }
    std::size_t c = 0;
    while (c < v.size() && ++v[c] == n) v[c++] = 0;
    if (c == v.size()) break;
  }
  return classes;
}

}  // namespace culab::testing

#endif  // CULAB_TESTS_SUPPORT_HPP
