#ifndef CULAB_DIVISIBILITY_HPP
#define CULAB_DIVISIBILITY_HPP

// (k,ω)-divisibility, weak (k,ω)-divisibility, the relation x ◁ y and
// scales.

#include <optional>
#include <string>
#include <vector>

#include "culab/certificate.hpp"
#include "culab/error.hpp"
#include "culab/model.hpp"

namespace culab {

namespace detail {

// Lexicographically least list d_1 <= ... <= d_r (by index) of nonzero
// members of `pool` with strictly increasing partial sums and target <= sum;
// with `shortest`, least r first. Such lists have r < |S|.
inline std::optional<std::vector<Element>> least_cover_list(const FiniteOrderedMonoid& S, const Bitset& pool,
                                                            Element target, bool shortest = false) {
  if (S.leq(target, S.zero())) return std::vector<Element>{};
  const std::size_t n = S.size();
  // dead[(sum * n + from) * n + left]: no completion with at most `left` more terms.
  std::vector<char> dead(n * n * n, 0);
  std::vector<Element> list;
  auto dfs = [&](auto&& self, Element sum, Element from, std::size_t left) -> bool {
    if (left == 0 || dead[(sum * n + from) * n + left]) return false;
    for (std::size_t d = pool.next(from); d < n; d = pool.next(d + 1)) {
      auto e = static_cast<Element>(d);
      if (e == S.zero()) continue;
      Element s = S.add(sum, e);
      if (s == sum) continue;
      list.push_back(e);
      if (S.leq(target, s) || self(self, s, e, left - 1)) return true;
      list.pop_back();
    }
    dead[(sum * n + from) * n + left] = 1;
    return false;
  };
  for (std::size_t r = shortest ? 1 : n - 1; r < n; ++r)
    if (dfs(dfs, S.zero(), 0, r)) return list;
  return std::nullopt;
}

// Submonoid generated by `gens` (closure under +, contains 0).
inline Bitset generated_submonoid(const FiniteOrderedMonoid& S, const Bitset& gens) {
  Bitset m(S.size());
  m.set(S.zero());
  std::vector<Element> frontier{S.zero()};
  while (!frontier.empty()) {
    Element s = frontier.back();
    frontier.pop_back();
    gens.for_each([&](std::size_t g) {
      Element t = S.add(s, static_cast<Element>(g));
      if (!m.test(t)) {
        m.set(t);
        frontier.push_back(t);
      }
    });
  }
  return m;
}

}  // namespace detail

// {z : k·z <= x}
inline Bitset divisors(const FiniteOrderedMonoid& S, Element x, std::size_t k) {
  Bitset d(S.size());
  for (Element z : S.elements())
    if (S.leq(S.multiple(k, z), x)) d.set(z);
  return d;
}

// x is (k,ω)-divisible iff for all x' <= x there is z with k·z <= x and
// x' <= ∞z. Passing results carry the least witness z for x' = x.
inline CheckResult is_divisible(const FiniteOrderedMonoid& S, Element x, std::size_t k) {
  S.require_partial_order("is_divisible");
  if (k == 0) throw PreconditionFailed("is_divisible: k must be at least 1");
  const Bitset D = divisors(S, x, k);
  auto witness_for = [&](Element xp) -> std::optional<Element> {
    for (std::size_t z = D.first(); z < S.size(); z = D.next(z + 1))
      if (S.leq(xp, S.infinity(static_cast<Element>(z)))) return static_cast<Element>(z);
    return std::nullopt;
  };
  for (std::size_t xp = S.down(x).first(); xp < S.size(); xp = S.down(x).next(xp + 1))
    if (!witness_for(static_cast<Element>(xp))) {
      Certificate c;
      c.id = "div";
      c.param("k", static_cast<long long>(k)).bind("x", x).bind("x'", static_cast<Element>(xp));
      return CheckResult::fail(std::move(c));
    }
  Certificate w;
  w.id = "div";
  w.param("k", static_cast<long long>(k)).bind("x", x).bind("z", *witness_for(x));
  return CheckResult::pass(std::move(w));
}

// x is weakly (k,ω)-divisible iff every x' <= x lies below a finite sum of
// elements z with k·z <= x, i.e. below a member of the submonoid generated by
// those z. Passing results carry a witness list for x' = x.
inline CheckResult is_weakly_divisible(const FiniteOrderedMonoid& S, Element x, std::size_t k) {
  S.require_partial_order("is_weakly_divisible");
  if (k == 0) throw PreconditionFailed("is_weakly_divisible: k must be at least 1");
  const Bitset D = divisors(S, x, k);
  const Bitset M = detail::generated_submonoid(S, D);
  for (std::size_t xp = S.down(x).first(); xp < S.size(); xp = S.down(x).next(xp + 1)) {
    bool covered = false;
    M.for_each([&](std::size_t m) { covered = covered || S.leq(static_cast<Element>(xp), static_cast<Element>(m)); });
    if (!covered) {
      Certificate c;
      c.id = "wdiv";
      c.param("k", static_cast<long long>(k)).bind("x", x).bind("x'", static_cast<Element>(xp));
      return CheckResult::fail(std::move(c));
    }
  }
  auto list = detail::least_cover_list(S, D, x);
  if (!list) throw InternalError("is_weakly_divisible: closure and witness search disagree");
  Certificate w;
  w.id = "wdiv";
  w.param("k", static_cast<long long>(k)).bind("x", x).list("z", *list);
  return CheckResult::pass(std::move(w));
}

// Model-level versions: every element is (weakly) (k,ω)-divisible.
inline CheckResult is_divisible(const FiniteOrderedMonoid& S, std::size_t k) {
  for (Element x : S.elements())
    if (auto r = is_divisible(S, x, k); !r) return r;
  return CheckResult::pass();
}

inline CheckResult is_weakly_divisible(const FiniteOrderedMonoid& S, std::size_t k) {
  for (Element x : S.elements())
    if (auto r = is_weakly_divisible(S, x, k); !r) return r;
  return CheckResult::pass();
}

// x ◁ y, finite form: x <= ∞y.
inline bool rel_below_ideal(const FiniteOrderedMonoid& S, Element x, Element y) {
  return S.leq(x, S.infinity(y));
}

// x ◁ y, literal form: some y' << y has x <= ∞y'.
inline bool rel_below_ideal_literal(const FiniteOrderedMonoid& S, Element x, Element y) {
  bool found = false;
  S.down(y).for_each([&](std::size_t yp) {
    found = found || S.leq(x, S.infinity(static_cast<Element>(yp)));
  });
  return found;
}

// ---------------------------------------------------------------------------
// Scales: downward-hereditary subsets generating S as an ideal. Closure
// under suprema of increasing sequences is automatic in finite models.

struct Scale {
  std::vector<Element> members;
};

// Throws NotAScale naming the violated clause.
inline Scale make_scale(const FiniteOrderedMonoid& S, std::vector<Element> members) {
  S.require_partial_order("make_scale");
  Bitset in(S.size());
  for (auto m : members) {
    if (m >= S.size()) throw NotAScale("scale member out of range");
    in.set(m);
  }
  for (auto m : members)
    S.down(m).for_each([&](std::size_t y) {
      if (!in.test(y))
        throw NotAScale("not downward-hereditary: " + S.label(static_cast<Element>(y)) + " ≤ " +
                        S.label(m) + " but " + S.label(static_cast<Element>(y)) + " ∉ Σ");
    });
  Element s = S.zero();
  for (auto m : members) s = S.add(s, m);
  const Element top = S.infinity(s);
  for (Element y : S.elements())
    if (!S.leq(y, top))
      throw NotAScale("not generating: " + S.label(y) + " is outside the ideal generated by Σ");
  std::vector<Element> sorted;
  in.for_each([&](std::size_t i) { sorted.push_back(static_cast<Element>(i)); });
  return Scale{std::move(sorted)};
}

// Every member of the scale is (k,ω)-divisible. A failing result names the
// first member that is not.
inline CheckResult check_scale_divisibility(const FiniteOrderedMonoid& S, const Scale& sigma,
                                            std::size_t k) {
  for (auto x : sigma.members)
    if (auto r = is_divisible(S, x, k); !r) return r;
  return CheckResult::pass();
}

inline CheckResult check_scale_divisibility(const FiniteOrderedMonoid& S,
                                            const std::vector<Element>& members, std::size_t k) {
  return check_scale_divisibility(S, make_scale(S, members), k);
}

// All scales of S (downward-closed generating subsets), smallest first.
inline std::vector<Scale> enumerate_scales(const FiniteOrderedMonoid& S) {
  S.require_partial_order("enumerate_scales");
  const std::size_t n = S.size();
  std::vector<Scale> out;
  Bitset in(n);
  // Decide elements in index order; an element may be included only if its
  // whole down-set is, and excluded only if nothing above it was included.
  auto rec = [&](auto&& self, Element i) -> void {
    if (i == n) {
      Element s = S.zero();
      in.for_each([&](std::size_t m) { s = S.add(s, static_cast<Element>(m)); });
      if (S.down(S.infinity(s)).count() != n) return;
      Scale sc;
      in.for_each([&](std::size_t m) { sc.members.push_back(static_cast<Element>(m)); });
      out.push_back(std::move(sc));
      return;
    }
    // exclude i
    bool can_exclude = true;
    for (Element j = 0; j < i; ++j)
      if (in.test(j) && S.leq(i, j)) can_exclude = false;
    if (can_exclude) self(self, i + 1);
    // include i
    bool can_include = true;
    for (Element j = 0; j < i; ++j)
      if (!in.test(j) && S.leq(j, i)) can_include = false;
    if (can_include) {
      in.set(i);
      self(self, i + 1);
      in.reset(i);
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(),
                   [](const Scale& a, const Scale& b) { return a.members.size() < b.members.size(); });
  return out;
}

// Largest downward-closed set of (k,ω)-divisible elements. Some scale is
// elementwise (k,ω)-divisible iff this set is itself a scale.
inline std::vector<Element> largest_divisible_downset(const FiniteOrderedMonoid& S, std::size_t k) {
  std::vector<Element> out;
  Bitset div(S.size());
  for (Element x : S.elements())
    if (is_divisible(S, x, k)) div.set(x);
  for (Element x : S.elements())
    if (S.down(x).is_subset_of(div)) out.push_back(x);
  return out;
}

}  // namespace culab

#endif  // CULAB_DIVISIBILITY_HPP
