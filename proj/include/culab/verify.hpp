#ifndef CULAB_VERIFY_HPP
#define CULAB_VERIFY_HPP

// Certificate checkers for the witness searches. They read only the raw
// addition table and order relation, recomputing multiples, ∞-values, sums
// and the algebraic pre-order locally.

#include <vector>

#include "culab/model.hpp"
#include "culab/witnesses.hpp"

namespace culab::verify {

namespace local {

inline Element times(const FiniteOrderedMonoid& S, std::size_t k, Element x) {
  Element r = S.zero();
  while (k--) r = S.add(r, x);
  return r;
}

inline Element inf(const FiniteOrderedMonoid& S, Element x) {
  Element r = S.zero();
  for (std::size_t i = 0; i <= S.size(); ++i) r = S.add(r, x);
  return r;
}

inline Element total(const FiniteOrderedMonoid& S, const std::vector<Element>& xs) {
  Element r = S.zero();
  for (auto x : xs) r = S.add(r, x);
  return r;
}

inline bool alg_le(const FiniteOrderedMonoid& S, Element p, Element q) {
  for (Element t : S.elements())
    if (S.add(p, t) == q) return true;
  return false;
}

inline bool in_range(const FiniteOrderedMonoid& S, Element e) { return e < S.size(); }

}  // namespace local

inline bool div_o5(const FiniteOrderedMonoid& S, Element x, Element z, std::size_t k, Element y) {
  if (!local::in_range(S, y) || k == 0) return false;
  return S.leq(S.add(local::times(S, k - 1, x), y), z) && S.leq(z, local::times(S, k, y)) &&
         S.leq(x, y);
}

inline bool ref_o7(const FiniteOrderedMonoid& S, const std::vector<Element>& xs, Element w, Element x) {
  if (!local::in_range(S, x) || !S.leq(x, w) || !S.leq(x, local::total(S, xs))) return false;
  for (auto e : xs)
    if (!S.leq(e, x)) return false;
  return true;
}

inline bool wkdiv_decomposition(const FiniteOrderedMonoid& S, Element x, const WkDivDecomposition& w) {
  if (!local::in_range(S, w.c) || !S.leq(x, local::inf(S, w.c))) return false;
  for (auto d : w.d)
    if (!local::in_range(S, d) || !S.leq(S.add(w.c, d), x)) return false;
  return S.leq(x, local::total(S, w.d));
}

inline bool wkdiv_pair(const FiniteOrderedMonoid& S, Element x, std::size_t m, const WkDivPair& w) {
  for (auto e : {w.c, w.d1, w.d2})
    if (!local::in_range(S, e)) return false;
  return S.leq(w.d1, w.c) && S.leq(w.d2, w.c) && S.leq(S.add(w.c, w.d1), x) &&
         S.leq(S.add(w.c, local::times(S, m, w.d2)), x) && S.leq(x, local::inf(S, w.c)) &&
         S.leq(x, local::inf(S, S.add(w.d1, w.d2)));
}

inline bool refinement_ef(const FiniteOrderedMonoid& S, Element b1, Element b2, Element c,
                          const RefinementEF& w) {
  if (!local::in_range(S, w.e) || !local::in_range(S, w.f)) return false;
  const Element f2 = S.add(w.f, w.f);
  return local::alg_le(S, S.add(w.e, w.f), c) && local::alg_le(S, b1, w.e) &&
         local::alg_le(S, b2, w.e) && local::alg_le(S, b1, f2) && local::alg_le(S, b2, f2);
}

}  // namespace culab::verify

#endif  // CULAB_VERIFY_HPP
