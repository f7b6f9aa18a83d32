#ifndef CULAB_WITNESSES_HPP
#define CULAB_WITNESSES_HPP

// Exhaustive witness searches for the constructive lemmas. Each search
// returns the first admissible tuple in a fixed enumeration order, or nullopt
// when none exists. Validity is re-checked separately by verify.hpp.

#include <optional>
#include <vector>

#include "culab/divisibility.hpp"
#include "culab/error.hpp"
#include "culab/model.hpp"

namespace culab {

// Least y with (k-1)x + y <= z <= ky and x <= y. Requires kx <= z.
inline std::optional<Element> witness_div_o5(const FiniteOrderedMonoid& S, Element x, Element z,
                                             std::size_t k) {
  S.require_partial_order("witness_div_o5");
  if (k == 0) throw PreconditionFailed("witness_div_o5: k must be at least 1");
  if (!S.leq(S.multiple(k, x), z))
    throw PreconditionFailed("witness_div_o5: requires k·x ≤ z, but " + std::to_string(k) + "·" +
                             S.label(x) + " ≰ " + S.label(z));
  const Element base = S.multiple(k - 1, x);
  for (Element y : S.elements())
    if (S.leq(x, y) && S.leq(S.add(base, y), z) && S.leq(z, S.multiple(k, y))) return y;
  return std::nullopt;
}

// Least x with xs[j] <= x <= w for all j and x <= Σ xs. Requires xs[j] <= w.
inline std::optional<Element> witness_ref_o7(const FiniteOrderedMonoid& S,
                                             const std::vector<Element>& xs, Element w) {
  S.require_partial_order("witness_ref_o7");
  Bitset cand = S.down(w) & S.down(sum_of(S, xs));
  for (auto x : xs) {
    if (!S.leq(x, w))
      throw PreconditionFailed("witness_ref_o7: requires " + S.label(x) + " ≤ " + S.label(w));
    cand &= S.up(x);
  }
  if (cand.none()) return std::nullopt;
  return static_cast<Element>(cand.first());
}

struct WkDivDecomposition {
  Element c;
  std::vector<Element> d;
};

namespace detail {

inline void require_weakly_divisible(const FiniteOrderedMonoid& S, Element x, const char* op) {
  if (!is_weakly_divisible(S, x, 2))
    throw PreconditionFailed(std::string(op) + ": " + S.label(x) + " is not weakly (2,ω)-divisible");
}

}  // namespace detail

// c with x <= ∞c, and d_1..d_n with c + d_j <= x and x <= Σ d_j. c is the
// least admissible index. Lists with every d_j <= c are preferred; within a
// pool the d list is the shortest, then lex-least, nondecreasing one with
// strictly increasing partial sums.
inline std::optional<WkDivDecomposition> witness_wkdiv_decomposition(const FiniteOrderedMonoid& S,
                                                                     Element x) {
  detail::require_weakly_divisible(S, x, "witness_wkdiv_decomposition");
  for (Element c : S.elements()) {
    if (!S.leq(x, S.infinity(c))) continue;
    Bitset pool(S.size()), below(S.size());
    for (Element d : S.elements())
      if (S.leq(S.add(c, d), x)) {
        pool.set(d);
        if (S.leq(d, c)) below.set(d);
      }
    if (auto list = detail::least_cover_list(S, below, x, true)) return WkDivDecomposition{c, std::move(*list)};
    if (auto list = detail::least_cover_list(S, pool, x, true)) return WkDivDecomposition{c, std::move(*list)};
  }
  return std::nullopt;
}

struct WkDivPair {
  Element c, d1, d2;
};

// (c, d1, d2) with d1, d2 <= c, c + d1 <= x, c + m·d2 <= x, x <= ∞c and
// x <= ∞(d1 + d2). c ascends; d1 and d2 descend, so large summands are tried
// first.
inline std::optional<WkDivPair> witness_wkdiv_pair(const FiniteOrderedMonoid& S, Element x,
                                                   std::size_t m) {
  if (m == 0) throw PreconditionFailed("witness_wkdiv_pair: m must be at least 1");
  detail::require_weakly_divisible(S, x, "witness_wkdiv_pair");
  const auto n = static_cast<Element>(S.size());
  for (Element c : S.elements()) {
    if (!S.leq(x, S.infinity(c))) continue;
    for (Element i = n; i-- > 0;) {
      if (!S.leq(i, c) || !S.leq(S.add(c, i), x)) continue;
      for (Element j = n; j-- > 0;) {
        if (!S.leq(j, c) || !S.leq(S.add(c, S.multiple(m, j)), x)) continue;
        if (S.leq(x, S.infinity(S.add(i, j)))) return WkDivPair{c, i, j};
      }
    }
  }
  return std::nullopt;
}

struct RefinementEF {
  Element e, f;
};

// In the algebraic pre-order: given b1, b2 <= a and a + b1, a + b2 <= c,
// the lex-least (e, f) with e + f <= c, b1, b2 <= e and b1, b2 <= 2f.
// Accepts pre-ordered models.
inline std::optional<RefinementEF> witness_refinement_ef(const FiniteOrderedMonoid& S, Element a,
                                                         Element b1, Element b2, Element c) {
  const BitMatrix alg = algebraic_preorder(S.add_table());
  auto le = [&](Element p, Element q) { return alg.test(p, q); };
  if (!le(b1, a) || !le(b2, a) || !le(S.add(a, b1), c) || !le(S.add(a, b2), c))
    throw PreconditionFailed("witness_refinement_ef: requires b1, b2 ≤ a and a+b1, a+b2 ≤ c");
  for (Element e : S.elements()) {
    if (!le(b1, e) || !le(b2, e)) continue;
    for (Element f : S.elements()) {
      const Element f2 = S.add(f, f);
      if (le(S.add(e, f), c) && le(b1, f2) && le(b2, f2)) return RefinementEF{e, f};
    }
  }
  return std::nullopt;
}

}  // namespace culab

#endif  // CULAB_WITNESSES_HPP
