#ifndef CULAB_ISOMORPHISM_HPP
#define CULAB_ISOMORPHISM_HPP

// Isomorphism of finite positively ordered monoids: bijections preserving
// addition, zero and order.
//
// Two independent routes are provided. canonical_form() runs colour
// refinement with individualisation and keeps the lexicographically least
// encoding over all discrete leaves. is_isomorphic() is a direct backtracking
// search over element-invariant classes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "culab/model.hpp"

namespace culab {

struct CanonicalLabeling {
  std::vector<std::uint32_t> code;
  // position[x] is the canonical index of x.
  std::vector<Element> position;
};

namespace detail {

inline std::size_t count_colors(const std::vector<std::uint32_t>& c) {
  auto s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

// Iterated colour refinement. Colours are renumbered by the sorted order of
// their signatures, so the result depends only on the isomorphism type of
// (model, initial colouring).
inline std::vector<std::uint32_t> refine(const FiniteOrderedMonoid& S,
                                         std::vector<std::uint32_t> colors) {
  const std::size_t n = S.size();
  std::size_t ncolors = count_colors(colors);
  while (true) {
    using Entry = std::tuple<std::uint32_t, std::uint32_t, bool, bool>;
    std::vector<std::pair<std::uint32_t, std::vector<Entry>>> sig(n);
    for (Element x : S.elements()) {
      sig[x].first = colors[x];
      auto& v = sig[x].second;
      v.reserve(n);
      for (Element y : S.elements())
        v.emplace_back(colors[y], colors[S.add(x, y)], S.leq(x, y), S.leq(y, x));
      std::sort(v.begin(), v.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::uint32_t> next(n);
    for (Element x : S.elements())
      next[x] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
    const std::size_t m = sorted.size();
    colors = std::move(next);
    if (m == ncolors) return colors;
    ncolors = m;
  }
}

inline std::vector<std::uint32_t> encode(const FiniteOrderedMonoid& S,
                                         const std::vector<std::uint32_t>& pos) {
  const std::size_t n = S.size();
  std::vector<Element> inv(n);
  for (Element x : S.elements()) inv[pos[x]] = x;
  std::vector<std::uint32_t> code;
  code.reserve(2 + 2 * n * n);
  code.push_back(static_cast<std::uint32_t>(n));
  code.push_back(pos[S.zero()]);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) code.push_back(pos[S.add(inv[p], inv[q])]);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) code.push_back(S.leq(inv[p], inv[q]) ? 1u : 0u);
  return code;
}

inline void canonical_search(const FiniteOrderedMonoid& S, const std::vector<std::uint32_t>& colors,
                             CanonicalLabeling& best, bool& have_best) {
  const std::size_t n = S.size();
  if (count_colors(colors) == n) {
    auto code = encode(S, colors);
    if (!have_best || code < best.code) {
      best.code = std::move(code);
      best.position.assign(colors.begin(), colors.end());
      have_best = true;
    }
    return;
  }
  // First colour class with more than one member.
  std::vector<std::size_t> freq(n, 0);
  for (auto c : colors) ++freq[c];
  std::uint32_t target = 0;
  while (freq[target] < 2) ++target;
  for (Element x : S.elements()) {
    if (colors[x] != target) continue;
    std::vector<std::uint32_t> ind(n);
    for (Element y : S.elements()) ind[y] = 2 * colors[y] + (y == x ? 0u : 1u);
    canonical_search(S, refine(S, std::move(ind)), best, have_best);
  }
}

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const FiniteOrderedMonoid& S) {
  CanonicalLabeling best;
  bool have = false;
  detail::canonical_search(S, detail::refine(S, std::vector<std::uint32_t>(S.size(), 0)), best,
                           have);
  return best;
}

// Representative encoding: equal iff the models are isomorphic.
inline std::vector<std::uint32_t> canonical_form(const FiniteOrderedMonoid& S) {
  return canonical_labeling(S).code;
}

// 64-bit FNV-1a of the canonical form, rendered as 16 hex digits.
inline std::string canonical_hash(const FiniteOrderedMonoid& S) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : canonical_form(S)) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return s;
}

namespace detail {

// Label-free invariants of an element; equal for x and φ(x) under any
// isomorphism φ.
inline std::vector<std::size_t> element_invariant(const FiniteOrderedMonoid& S, Element x) {
  std::size_t absorbs = 0;
  for (Element y : S.elements())
    if (S.add(x, y) == x) ++absorbs;
  std::size_t steps = 0;
  Element cur = S.zero();
  while (steps <= S.size()) {
    Element next = S.add(cur, x);
    if (next == cur) break;
    cur = next;
    ++steps;
  }
  return {x == S.zero() ? 1u : 0u, S.down(x).count(), S.up(x).count(), S.add(x, x) == x ? 1u : 0u,
          absorbs, steps};
}

}  // namespace detail

// Direct backtracking isomorphism test.
inline bool is_isomorphic(const FiniteOrderedMonoid& S, const FiniteOrderedMonoid& T) {
  const std::size_t n = S.size();
  if (T.size() != n) return false;
  std::vector<std::vector<std::size_t>> invS(n), invT(n);
  for (Element x : S.elements()) invS[x] = detail::element_invariant(S, x);
  for (Element y : T.elements()) invT[y] = detail::element_invariant(T, y);
  {
    auto a = invS, b = invT;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<std::vector<Element>> cand(n);
  for (Element x : S.elements())
    for (Element y : T.elements())
      if (invS[x] == invT[y]) cand[x].push_back(y);
  std::vector<Element> order(n);
  for (Element x : S.elements()) order[x] = x;
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return cand[a].size() < cand[b].size(); });

  constexpr Element none = ~Element{0};
  std::vector<Element> phi(n, none), phi_inv(n, none);

  auto consistent = [&](Element x) {
    for (Element y : S.elements()) {
      if (phi[y] == none) continue;
      if (S.leq(x, y) != T.leq(phi[x], phi[y]) || S.leq(y, x) != T.leq(phi[y], phi[x]))
        return false;
      Element s = S.add(x, y);
      Element t = T.add(phi[x], phi[y]);
      if (phi[s] != none) {
        if (phi[s] != t) return false;
      } else if (phi_inv[t] != none) {
        return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) {
      for (Element x : S.elements())
        for (Element y : S.elements())
          if (phi[S.add(x, y)] != T.add(phi[x], phi[y])) return false;
      return phi[S.zero()] == T.zero();
    }
    Element x = order[depth];
    for (Element y : cand[x]) {
      if (phi_inv[y] != none) continue;
      phi[x] = y;
      phi_inv[y] = x;
      if (consistent(x) && self(self, depth + 1)) return true;
      phi[x] = none;
      phi_inv[y] = none;
    }
    return false;
  };
  return search(search, 0);
}

// The same model with element x moved to index perm[x]. Labels travel with
// their elements.
inline FiniteOrderedMonoid relabel(const FiniteOrderedMonoid& S, const std::vector<Element>& perm) {
  const std::size_t n = S.size();
  std::vector<std::string> labels(n);
  AddTable add(n, std::vector<Element>(n));
  BitMatrix leq(n);
  for (Element x : S.elements()) {
    labels[perm[x]] = S.label(x);
    for (Element y : S.elements()) {
      add[perm[x]][perm[y]] = perm[S.add(x, y)];
      if (S.leq(x, y)) leq.set(perm[x], perm[y]);
    }
  }
  std::optional<BitMatrix> order;
  if (S.order_mode() == OrderMode::explicit_order) order = std::move(leq);
  return FiniteOrderedMonoid::create(S.name(), std::move(labels), perm[S.zero()], std::move(add),
                                     std::move(order), S.preorder_ok());
}

}  // namespace culab

#endif  // CULAB_ISOMORPHISM_HPP
