#ifndef CULAB_CORPUS_HPP
#define CULAB_CORPUS_HPP

// Named model families, the product combinator, and exhaustive enumeration
// of small positively ordered monoids up to isomorphism.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "culab/error.hpp"
#include "culab/isomorphism.hpp"
#include "culab/model.hpp"

namespace culab {

// ---------------------------------------------------------------------------
// Builtin families.

inline FiniteOrderedMonoid trivial_model() {
  return FiniteOrderedMonoid::create("T1", {"0"}, 0, {{0}}, std::nullopt);
}

inline FiniteOrderedMonoid two_point_model() {
  return FiniteOrderedMonoid::create("O2", {"0", "u"}, 0, {{0, 1}, {1, 1}}, std::nullopt);
}

// {0, 1, ..., k, inf}: truncated addition, sums above k become inf.
inline FiniteOrderedMonoid capped_model(std::size_t k, std::string name = "") {
  if (k == 0) throw PreconditionFailed("NCAP(k) needs k >= 1");
  if (name.empty()) name = "NCAP(" + std::to_string(k) + ")";
  const std::size_t n = k + 2;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i <= k; ++i) labels.push_back(std::to_string(i));
  labels.push_back("inf");
  AddTable add(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      add[a][b] = static_cast<Element>((a > k || b > k || a + b > k) ? k + 1 : a + b);
  return FiniteOrderedMonoid::create(std::move(name), std::move(labels), 0, std::move(add), std::nullopt);
}

// NCAP(1) with labels 0, a, inf.
inline FiniteOrderedMonoid e2_model() {
  return FiniteOrderedMonoid::create("E2", {"0", "a", "inf"}, 0, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}},
                                     std::nullopt);
}

// {0, p, q, t}: every sum of two nonzero elements is t; order 0 < p < q < t.
inline FiniteOrderedMonoid gap4_model() {
  AddTable add = {{0, 1, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}};
  BitMatrix order(4);
  order.set(0, 1);
  order.set(1, 2);
  order.set(2, 3);
  order.close_reflexive_transitive();
  return FiniteOrderedMonoid::create("GAP4", {"0", "p", "q", "t"}, 0, std::move(add), std::move(order));
}

// {(0,0)} ∪ {(n,m) : 1 <= m <= M, |n| <= K·m} ∪ {top}, coordinatewise sums
// that leave the window become top. The window is a cone, so whenever a
// partial sum leaves it the total does too; this makes the truncated
// addition associative. Within each m, n runs 0, 1, -1, 2, -2, ...
inline FiniteOrderedMonoid sphere_model(int K, int M) {
  if (K < 0 || M < 1) throw PreconditionFailed("SPH(K,M) needs K >= 0 and M >= 1");
  std::vector<std::pair<int, int>> pts{{0, 0}};
  for (int m = 1; m <= M; ++m) {
    pts.emplace_back(0, m);
    for (int a = 1; a <= K * m; ++a) {
      pts.emplace_back(a, m);
      pts.emplace_back(-a, m);
    }
  }
  const std::size_t n = pts.size() + 1;
  const auto top = static_cast<Element>(pts.size());
  std::map<std::pair<int, int>, Element> idx;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    idx[pts[i]] = static_cast<Element>(i);
    labels.push_back("(" + std::to_string(pts[i].first) + "," + std::to_string(pts[i].second) + ")");
  }
  labels.push_back("top");
  AddTable add(n, std::vector<Element>(n, top));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      auto it = idx.find({pts[i].first + pts[j].first, pts[i].second + pts[j].second});
      if (it != idx.end()) add[i][j] = it->second;
    }
  return FiniteOrderedMonoid::create("SPH(" + std::to_string(K) + "," + std::to_string(M) + ")",
                                     std::move(labels), 0, std::move(add), std::nullopt);
}

// S × T with coordinatewise addition and order, labelled "(s,t)". The
// product of two algebraic orders is the algebraic order of the product.
inline FiniteOrderedMonoid product(const FiniteOrderedMonoid& S, const FiniteOrderedMonoid& T,
                                   std::string name = "") {
  S.require_partial_order("product");
  T.require_partial_order("product");
  if (name.empty()) name = "product(" + S.name() + "," + T.name() + ")";
  const std::size_t m = T.size(), n = S.size() * m;
  auto at = [m](Element s, Element t) { return static_cast<Element>(s * m + t); };
  std::vector<std::string> labels(n);
  AddTable add(n, std::vector<Element>(n));
  BitMatrix leq(n);
  for (Element s : S.elements())
    for (Element t : T.elements()) {
      labels[at(s, t)] = "(" + S.label(s) + "," + T.label(t) + ")";
      for (Element s2 : S.elements())
        for (Element t2 : T.elements()) {
          add[at(s, t)][at(s2, t2)] = at(S.add(s, s2), T.add(t, t2));
          if (S.leq(s, s2) && T.leq(t, t2)) leq.set(at(s, t), at(s2, t2));
        }
    }
  std::optional<BitMatrix> order;
  if (S.order_mode() == OrderMode::explicit_order || T.order_mode() == OrderMode::explicit_order)
    order = std::move(leq);
  return FiniteOrderedMonoid::create(std::move(name), std::move(labels), at(S.zero(), T.zero()),
                                     std::move(add), std::move(order));
}

inline FiniteOrderedMonoid f4_model() {
  return product(two_point_model(), two_point_model(), "F4");
}

namespace detail {

inline std::size_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw PreconditionFailed(what + ": expected a nonnegative integer, got \"" + s + "\"");
  return static_cast<std::size_t>(std::stoul(s));
}

// Splits "A,B" at top-level commas (parentheses nest).
inline std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

// name ∈ {T1, O2, E2, N2, F4, GAP4, NCAP, SPH, product}; NCAP takes k, SPH
// takes K and M, product takes two model expressions.
inline FiniteOrderedMonoid builtin_model(const std::string& name,
                                         const std::vector<std::string>& params);

// Accepts "NAME" or "NAME(p1,p2,...)".
inline FiniteOrderedMonoid builtin_model(const std::string& expr) {
  auto open = expr.find('(');
  if (open == std::string::npos) return builtin_model(expr, {});
  if (expr.back() != ')') throw PreconditionFailed("malformed model expression \"" + expr + "\"");
  return builtin_model(expr.substr(0, open),
                       detail::split_args(expr.substr(open + 1, expr.size() - open - 2)));
}

inline FiniteOrderedMonoid builtin_model(const std::string& name,
                                         const std::vector<std::string>& params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw PreconditionFailed(name + " takes " + std::to_string(k) + " parameter(s), got " +
                               std::to_string(params.size()));
  };
  if (name == "T1") return arity(0), trivial_model();
  if (name == "O2") return arity(0), two_point_model();
  if (name == "E2") return arity(0), e2_model();
  if (name == "N2") return arity(0), capped_model(2, "N2");
  if (name == "F4") return arity(0), f4_model();
  if (name == "GAP4") return arity(0), gap4_model();
  if (name == "NCAP") return arity(1), capped_model(detail::parse_count(params[0], "NCAP"));
  if (name == "SPH") {
    arity(2);
    return sphere_model(static_cast<int>(detail::parse_count(params[0], "SPH")),
                        static_cast<int>(detail::parse_count(params[1], "SPH")));
  }
  if (name == "product") return arity(2), product(builtin_model(params[0]), builtin_model(params[1]));
  throw PreconditionFailed("unknown builtin model \"" + name + "\"");
}

// The fixed set of named models checked alongside the enumerated corpus.
inline std::vector<FiniteOrderedMonoid> builtin_suite() {
  return {trivial_model(), two_point_model(), e2_model(),   capped_model(2, "N2"),
          capped_model(3), f4_model(),        gap4_model(), sphere_model(1, 2)};
}

// ---------------------------------------------------------------------------
// Enumeration.

enum class CorpusOrder { algebraic, all_compatible };

inline constexpr std::size_t kMaxCorpusSize = 6;
inline constexpr std::size_t kMaxAllCompatibleSize = 4;

namespace detail {

inline std::vector<std::string> corpus_labels(std::size_t n) {
  std::vector<std::string> l{"0"};
  for (std::size_t i = 1; i < n; ++i) l.emplace_back(1, static_cast<char>('a' + i - 1));
  return l;
}

// Commutative monoid tables on {0..n-1} with neutral element 0 in which no
// two nonzero elements sum to 0 (forced by positivity and antisymmetry).
// Partial tables are pruned on associativity.
template <class F>
void for_each_conical_monoid(std::size_t n, F&& leaf) {
  constexpr Element none = ~Element{0};
  AddTable t(n, std::vector<Element>(n, none));
  for (Element i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  std::vector<std::pair<Element, Element>> cells;
  for (Element i = 1; i < n; ++i)
    for (Element j = i; j < n; ++j) cells.emplace_back(i, j);
  // Every triple whose four products are already defined associates.
  auto assoc_ok = [&] {
    for (Element x = 1; x < n; ++x)
      for (Element y = 1; y < n; ++y) {
        const Element xy = t[x][y];
        if (xy == none) continue;
        for (Element z = 1; z < n; ++z) {
          const Element yz = t[y][z];
          if (yz == none) continue;
          const Element l = t[xy][z], r = t[x][yz];
          if (l != none && r != none && l != r) return false;
        }
      }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t ci) -> void {
    if (ci == cells.size()) {
      leaf(static_cast<const AddTable&>(t));
      return;
    }
    auto [a, b] = cells[ci];
    for (Element v = 1; v < n; ++v) {
      t[a][b] = t[b][a] = v;
      if (assoc_ok()) self(self, ci + 1);
    }
    t[a][b] = t[b][a] = none;
  };
  rec(rec, 0);
}

inline bool antisymmetric(const BitMatrix& r) {
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = x + 1; y < r.size(); ++y)
      if (r.test(x, y) && r.test(y, x)) return false;
  return true;
}

inline bool transitive(const BitMatrix& r) {
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (r.test(x, y) && !r.row(y).is_subset_of(r.row(x))) return false;
  return true;
}

inline bool monotone(const AddTable& t, const BitMatrix& r) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      if (r.test(x, x2))
        for (std::size_t y = 0; y < n; ++y)
          if (!r.test(t[x][y], t[x2][y])) return false;
  return true;
}

// Partial orders containing `alg` (every compatible order does: x <= x + c)
// that make addition monotone.
inline std::vector<BitMatrix> compatible_orders(const AddTable& t, const BitMatrix& alg) {
  const std::size_t n = t.size();
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && !alg.test(x, y) && !alg.test(y, x)) free.emplace_back(x, y);
  std::vector<BitMatrix> out;
  const std::size_t subsets = std::size_t{1} << free.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    BitMatrix r = alg;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1u) r.set(free[i].first, free[i].second);
    if (antisymmetric(r) && transitive(r) && monotone(t, r)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

struct CorpusStats {
  std::size_t tables = 0;  // associative conical tables visited
  std::size_t models = 0;  // validated labelled models before deduplication
};

// All positively ordered monoids with at most max_size elements, up to
// isomorphism. Output is sorted by size and then by canonical form; names
// are "alg<n>-<i>" or "ord<n>-<i>".
inline std::vector<FiniteOrderedMonoid> enumerate_corpus(std::size_t max_size,
                                                         CorpusOrder mode = CorpusOrder::algebraic,
                                                         CorpusStats* stats = nullptr) {
  if (max_size > kMaxCorpusSize)
    throw PreconditionFailed("enumerate_corpus: max_size " + std::to_string(max_size) +
                             " exceeds the guardrail " + std::to_string(kMaxCorpusSize));
  if (mode == CorpusOrder::all_compatible && max_size > kMaxAllCompatibleSize)
    throw PreconditionFailed("enumerate_corpus: all compatible orders only up to size " +
                             std::to_string(kMaxAllCompatibleSize));
  CorpusStats local;
  std::vector<FiniteOrderedMonoid> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::map<std::vector<std::uint32_t>, FiniteOrderedMonoid> seen;
    auto keep = [&](const AddTable& t, std::optional<BitMatrix> order) {
      ++local.models;
      auto S = FiniteOrderedMonoid::create("", detail::corpus_labels(n), 0, t, std::move(order));
      auto code = canonical_form(S);
      seen.try_emplace(std::move(code), std::move(S));
    };
    detail::for_each_conical_monoid(n, [&](const AddTable& t) {
      ++local.tables;
      const BitMatrix alg = algebraic_preorder(t);
      if (!detail::antisymmetric(alg)) return;
      if (mode == CorpusOrder::algebraic) {
        keep(t, std::nullopt);
        return;
      }
      for (auto& r : detail::compatible_orders(t, alg)) {
        if (r == alg)
          keep(t, std::nullopt);
        else
          keep(t, std::move(r));
      }
    });
    std::size_t i = 0;
    const std::string prefix = mode == CorpusOrder::algebraic ? "alg" : "ord";
    for (auto& [code, S] : seen) {
      std::string idx = std::to_string(i++);
      while (idx.size() < 3) idx.insert(idx.begin(), '0');
      out.push_back(S.renamed(prefix + std::to_string(n) + "-" + idx));
    }
  }
  if (stats) *stats = local;
  return out;
}

}  // namespace culab

#endif  // CULAB_CORPUS_HPP
