#ifndef CULAB_AXIOMS_HPP
#define CULAB_AXIOMS_HPP

// Decision procedures for the axioms O5-O8, Riesz interpolation and the
// dimension bound dim(S) <= n.
//
// Each axiom has a primed form (quantifying x' <= x, etc.) and a collapsed
// form taking x' = x. The two are equivalent: shrinking a primed variable
// only weakens what the existential part has to achieve, and the collapsed
// witness still works for it. Variables are enumerated in index order and the
// first counterexample is returned.

#include <optional>
#include <string>
#include <vector>

#include "culab/certificate.hpp"
#include "culab/model.hpp"

namespace culab {

enum class Axiom { O5, O6, O7, O8, Riesz };
enum class AxiomForm { collapsed, primed };

inline const char* to_string(Axiom a) noexcept {
  switch (a) {
    case Axiom::O5: return "O5";
    case Axiom::O6: return "O6";
    case Axiom::O7: return "O7";
    case Axiom::O8: return "O8";
    case Axiom::Riesz: return "Riesz";
  }
  return "?";
}

inline std::optional<Axiom> parse_axiom(const std::string& s) {
  if (s == "O5") return Axiom::O5;
  if (s == "O6") return Axiom::O6;
  if (s == "O7") return Axiom::O7;
  if (s == "O8") return Axiom::O8;
  if (s == "Riesz" || s == "riesz") return Axiom::Riesz;
  return std::nullopt;
}

namespace axiom_body {

// O5: exists c with y' <= c and x' + c <= z <= x + c.
inline bool o5(const FiniteOrderedMonoid& S, Element xp, Element x, Element yp, Element z) {
  for (Element c : S.elements())
    if (S.leq(yp, c) && S.leq(S.add(xp, c), z) && S.leq(z, S.add(x, c))) return true;
  return false;
}

// O6: exists v <= x,y and w <= x,z with x' <= v + w.
inline bool o6(const FiniteOrderedMonoid& S, Element xp, Element x, Element y, Element z) {
  const Bitset vs = S.down(x) & S.down(y);
  const Bitset ws = S.down(x) & S.down(z);
  bool found = false;
  vs.for_each([&](std::size_t v) {
    if (found) return;
    ws.for_each([&](std::size_t w) {
      if (!found && S.leq(xp, S.add(static_cast<Element>(v), static_cast<Element>(w)))) found = true;
    });
  });
  return found;
}

// O7: exists x with x1', x2' <= x <= w and x <= x1 + x2.
inline bool o7(const FiniteOrderedMonoid& S, Element x1p, Element x1, Element x2p, Element x2,
               Element w) {
  Bitset c = S.up(x1p) & S.up(x2p) & S.down(w) & S.down(S.add(x1, x2));
  return c.any();
}

// O8 (w idempotent, x + y <= z + w): exists z1, z2 with z1 + z2 <= z,
// x' <= z1 + w, y' <= z2 + w, z1 <= x + w and z2 <= y + w.
inline bool o8(const FiniteOrderedMonoid& S, Element xp, Element x, Element yp, Element y,
               Element z, Element w) {
  const Bitset c1 = S.down(z) & S.down(S.add(x, w));
  const Bitset c2 = S.down(z) & S.down(S.add(y, w));
  bool found = false;
  c1.for_each([&](std::size_t a) {
    if (found || !S.leq(xp, S.add(static_cast<Element>(a), w))) return;
    c2.for_each([&](std::size_t b) {
      if (found) return;
      auto z1 = static_cast<Element>(a), z2 = static_cast<Element>(b);
      if (S.leq(yp, S.add(z2, w)) && S.leq(S.add(z1, z2), z)) found = true;
    });
  });
  return found;
}

// Riesz: exists z with x1, x2 <= z <= y1, y2.
inline bool riesz(const FiniteOrderedMonoid& S, Element x1, Element x2, Element y1, Element y2) {
  return (S.up(x1) & S.up(x2) & S.down(y1) & S.down(y2)).any();
}

}  // namespace axiom_body

namespace detail {

inline Certificate axiom_cex(Axiom a, AxiomForm f) {
  Certificate c;
  c.id = to_string(a);
  c.form = f == AxiomForm::collapsed ? "collapsed" : "primed";
  return c;
}

inline CheckResult check_collapsed(const FiniteOrderedMonoid& S, Axiom a) {
  const auto els = S.elements();
  switch (a) {
    case Axiom::O5:
      for (Element x : els)
        for (Element y : els)
          for (Element z : els)
            if (S.leq(S.add(x, y), z) && !axiom_body::o5(S, x, x, y, z))
              return CheckResult::fail(axiom_cex(a, AxiomForm::collapsed).bind("x", x).bind("y", y).bind("z", z));
      break;
    case Axiom::O6:
      for (Element x : els)
        for (Element y : els)
          for (Element z : els)
            if (S.leq(x, S.add(y, z)) && !axiom_body::o6(S, x, x, y, z))
              return CheckResult::fail(axiom_cex(a, AxiomForm::collapsed).bind("x", x).bind("y", y).bind("z", z));
      break;
    case Axiom::O7:
      for (Element x1 : els)
        for (Element x2 : els)
          for (Element w : els)
            if (S.leq(x1, w) && S.leq(x2, w) && !axiom_body::o7(S, x1, x1, x2, x2, w))
              return CheckResult::fail(axiom_cex(a, AxiomForm::collapsed).bind("x1", x1).bind("x2", x2).bind("w", w));
      break;
    case Axiom::O8:
      for (Element x : els)
        for (Element y : els)
          for (Element z : els)
            for (Element w : els)
              if (S.add(w, w) == w && S.leq(S.add(x, y), S.add(z, w)) &&
                  !axiom_body::o8(S, x, x, y, y, z, w))
                return CheckResult::fail(
                    axiom_cex(a, AxiomForm::collapsed).bind("x", x).bind("y", y).bind("z", z).bind("w", w));
      break;
    case Axiom::Riesz:
      for (Element x1 : els)
        for (Element x2 : els)
          for (Element y1 : els)
            for (Element y2 : els)
              if (S.leq(x1, y1) && S.leq(x1, y2) && S.leq(x2, y1) && S.leq(x2, y2) &&
                  !axiom_body::riesz(S, x1, x2, y1, y2))
                return CheckResult::fail(
                    axiom_cex(a, AxiomForm::collapsed).bind("x1", x1).bind("x2", x2).bind("y1", y1).bind("y2", y2));
      break;
  }
  return CheckResult::pass();
}

inline CheckResult check_primed(const FiniteOrderedMonoid& S, Axiom a) {
  const auto els = S.elements();
  auto below = [&](Element x) { return S.down(x); };
  switch (a) {
    case Axiom::O5:
      for (Element x : els)
        for (Element y : els)
          for (Element z : els) {
            if (!S.leq(S.add(x, y), z)) continue;
            for (std::size_t xp = below(x).first(); xp < S.size(); xp = below(x).next(xp + 1))
              for (std::size_t yp = below(y).first(); yp < S.size(); yp = below(y).next(yp + 1))
                if (!axiom_body::o5(S, static_cast<Element>(xp), x, static_cast<Element>(yp), z))
                  return CheckResult::fail(axiom_cex(a, AxiomForm::primed)
                                               .bind("x'", static_cast<Element>(xp)).bind("x", x)
                                               .bind("y'", static_cast<Element>(yp)).bind("y", y)
                                               .bind("z", z));
          }
      break;
    case Axiom::O6:
      for (Element x : els)
        for (Element y : els)
          for (Element z : els) {
            if (!S.leq(x, S.add(y, z))) continue;
            for (std::size_t xp = below(x).first(); xp < S.size(); xp = below(x).next(xp + 1))
              if (!axiom_body::o6(S, static_cast<Element>(xp), x, y, z))
                return CheckResult::fail(axiom_cex(a, AxiomForm::primed)
                                             .bind("x'", static_cast<Element>(xp)).bind("x", x)
                                             .bind("y", y).bind("z", z));
          }
      break;
    case Axiom::O7:
      for (Element x1 : els)
        for (Element x2 : els)
          for (Element w : els) {
            if (!S.leq(x1, w) || !S.leq(x2, w)) continue;
            for (std::size_t a1 = below(x1).first(); a1 < S.size(); a1 = below(x1).next(a1 + 1))
              for (std::size_t a2 = below(x2).first(); a2 < S.size(); a2 = below(x2).next(a2 + 1))
                if (!axiom_body::o7(S, static_cast<Element>(a1), x1, static_cast<Element>(a2), x2, w))
                  return CheckResult::fail(axiom_cex(a, AxiomForm::primed)
                                               .bind("x1'", static_cast<Element>(a1)).bind("x1", x1)
                                               .bind("x2'", static_cast<Element>(a2)).bind("x2", x2)
                                               .bind("w", w));
          }
      break;
    case Axiom::O8:
      for (Element x : els)
        for (Element y : els)
          for (Element z : els)
            for (Element w : els) {
              if (S.add(w, w) != w || !S.leq(S.add(x, y), S.add(z, w))) continue;
              for (std::size_t xp = below(x).first(); xp < S.size(); xp = below(x).next(xp + 1))
                for (std::size_t yp = below(y).first(); yp < S.size(); yp = below(y).next(yp + 1))
                  if (!axiom_body::o8(S, static_cast<Element>(xp), x, static_cast<Element>(yp), y, z, w))
                    return CheckResult::fail(axiom_cex(a, AxiomForm::primed)
                                                 .bind("x'", static_cast<Element>(xp)).bind("x", x)
                                                 .bind("y'", static_cast<Element>(yp)).bind("y", y)
                                                 .bind("z", z).bind("w", w));
            }
      break;
    case Axiom::Riesz:
      // No primed variables.
      return check_collapsed(S, a);
  }
  return CheckResult::pass();
}

}  // namespace detail

inline CheckResult check_axiom(const FiniteOrderedMonoid& S, Axiom a,
                               AxiomForm form = AxiomForm::collapsed) {
  S.require_partial_order("check_axiom");
  return form == AxiomForm::collapsed ? detail::check_collapsed(S, a) : detail::check_primed(S, a);
}

// True when the counterexample's bindings satisfy the axiom's hypotheses and
// its existential conclusion still fails.
inline bool replay_axiom(const FiniteOrderedMonoid& S, const Certificate& c) {
  const bool primed = c.form == "primed";
  auto p = [&](const char* base) { return primed ? c.at(std::string(base) + "'") : c.at(base); };
  auto a = parse_axiom(c.id);
  if (!a) return false;
  switch (*a) {
    case Axiom::O5: {
      Element x = c.at("x"), y = c.at("y"), z = c.at("z");
      Element xp = p("x"), yp = p("y");
      return S.leq(xp, x) && S.leq(yp, y) && S.leq(S.add(x, y), z) && !axiom_body::o5(S, xp, x, yp, z);
    }
    case Axiom::O6: {
      Element x = c.at("x"), y = c.at("y"), z = c.at("z"), xp = p("x");
      return S.leq(xp, x) && S.leq(x, S.add(y, z)) && !axiom_body::o6(S, xp, x, y, z);
    }
    case Axiom::O7: {
      Element x1 = c.at("x1"), x2 = c.at("x2"), w = c.at("w");
      Element x1p = p("x1"), x2p = p("x2");
      return S.leq(x1p, x1) && S.leq(x2p, x2) && S.leq(x1, w) && S.leq(x2, w) &&
             !axiom_body::o7(S, x1p, x1, x2p, x2, w);
    }
    case Axiom::O8: {
      Element x = c.at("x"), y = c.at("y"), z = c.at("z"), w = c.at("w");
      Element xp = p("x"), yp = p("y");
      return S.leq(xp, x) && S.leq(yp, y) && S.add(w, w) == w &&
             S.leq(S.add(x, y), S.add(z, w)) && !axiom_body::o8(S, xp, x, yp, y, z, w);
    }
    case Axiom::Riesz: {
      Element x1 = c.at("x1"), x2 = c.at("x2"), y1 = c.at("y1"), y2 = c.at("y2");
      return S.leq(x1, y1) && S.leq(x1, y2) && S.leq(x2, y1) && S.leq(x2, y2) &&
             !axiom_body::riesz(S, x1, x2, y1, y2);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Dimension.
//
// dim(S) <= n: whenever x <= y_1 + ... + y_r there are z_{j,k} (j <= r,
// k = 0..n) with z_{j,k} <= y_j, x <= sum_{j,k} z_{j,k} and
// sum_j z_{j,k} <= x for every k.
//
// Only lists y_1 <= ... <= y_r (by index) of nonzero elements whose partial
// sums strictly increase are quantified. If s_i = s_{i+1} the summand y_{i+1}
// can be dropped without changing the total, and a witness for the shorter
// list extends by z_{i+1,k} = 0. The partial sums then form a strict chain
// starting at 0, so r < |S|.

// z[j][k] for j < ys.size(), k <= n.
using DimWitness = std::vector<std::vector<Element>>;

inline std::optional<DimWitness> dim_witness(const FiniteOrderedMonoid& S, Element x,
                                             const std::vector<Element>& ys, std::size_t n) {
  const std::size_t N = S.size();
  const std::size_t r = ys.size();
  constexpr Element none = ~Element{0};
  // Column sums reachable with z_j <= y_j, keeping every partial sum <= x
  // (partial sums only grow, so nothing is lost).
  std::vector<std::vector<std::pair<Element, Element>>> col(r + 1,
                                                            std::vector<std::pair<Element, Element>>(N, {none, none}));
  col[0][S.zero()] = {S.zero(), S.zero()};
  for (std::size_t j = 0; j < r; ++j)
    for (Element s : S.elements()) {
      if (col[j][s].first == none) continue;
      S.down(ys[j]).for_each([&](std::size_t zi) {
        Element t = S.add(s, static_cast<Element>(zi));
        if (S.leq(t, x) && col[j + 1][t].first == none) col[j + 1][t] = {s, static_cast<Element>(zi)};
      });
    }
  std::vector<Element> sums;
  for (Element s : S.elements())
    if (col[r][s].first != none) sums.push_back(s);
  // Totals of n+1 column sums.
  std::vector<std::vector<std::pair<Element, Element>>> tot(n + 2,
                                                            std::vector<std::pair<Element, Element>>(N, {none, none}));
  tot[0][S.zero()] = {S.zero(), S.zero()};
  for (std::size_t k = 0; k <= n; ++k)
    for (Element t : S.elements()) {
      if (tot[k][t].first == none) continue;
      for (Element c : sums) {
        Element u = S.add(t, c);
        if (tot[k + 1][u].first == none) tot[k + 1][u] = {t, c};
      }
    }
  Element target = none;
  for (Element t : S.elements())
    if (tot[n + 1][t].first != none && S.leq(x, t)) {
      target = t;
      break;
    }
  if (target == none) return std::nullopt;
  DimWitness z(r, std::vector<Element>(n + 1, S.zero()));
  Element t = target;
  for (std::size_t k = n + 1; k-- > 0;) {
    auto [prev, c] = tot[k + 1][t];
    Element s = c;
    for (std::size_t j = r; j-- > 0;) {
      auto [ps, zj] = col[j + 1][s];
      z[j][k] = zj;
      s = ps;
    }
    t = prev;
  }
  return z;
}

// Independent check of conditions (i)-(iii) for a proposed witness.
inline bool verify_dim_witness(const FiniteOrderedMonoid& S, Element x, const std::vector<Element>& ys,
                               std::size_t n, const DimWitness& z) {
  if (z.size() != ys.size()) return false;
  Element total = S.zero();
  std::vector<Element> colsum(n + 1, S.zero());
  for (std::size_t j = 0; j < ys.size(); ++j) {
    if (z[j].size() != n + 1) return false;
    for (std::size_t k = 0; k <= n; ++k) {
      if (!S.leq(z[j][k], ys[j])) return false;
      total = S.add(total, z[j][k]);
      colsum[k] = S.add(colsum[k], z[j][k]);
    }
  }
  if (!S.leq(x, total)) return false;
  for (auto c : colsum)
    if (!S.leq(c, x)) return false;
  return true;
}

namespace detail {

// Calls f(list, sum) for every nonempty nondecreasing list of nonzero
// elements with strictly increasing partial sums; stops when f returns false.
template <class F>
bool for_each_reduced_list(const FiniteOrderedMonoid& S, std::vector<Element>& list, Element sum,
                           Element from, F& f) {
  for (Element y = from; y < S.size(); ++y) {
    if (y == S.zero()) continue;
    Element s = S.add(sum, y);
    if (s == sum) continue;
    list.push_back(y);
    if (!f(list, s)) return false;
    if (!for_each_reduced_list(S, list, s, y, f)) return false;
    list.pop_back();
  }
  return true;
}

}  // namespace detail

inline CheckResult check_dim_leq(const FiniteOrderedMonoid& S, std::size_t n) {
  S.require_partial_order("check_dim_leq");
  std::optional<Certificate> cex;
  for (Element x : S.elements()) {
    if (x == S.zero()) continue;  // x = 0 is covered by z = 0
    std::vector<Element> list;
    auto visit = [&](const std::vector<Element>& ys, Element s) {
      if (!S.leq(x, s)) return true;
      if (dim_witness(S, x, ys, n)) return true;
      Certificate c;
      c.id = "dim";
      c.bind("x", x).list("y", ys).param("n", static_cast<long long>(n));
      cex = std::move(c);
      return false;
    };
    detail::for_each_reduced_list(S, list, S.zero(), 0, visit);
    if (cex) return CheckResult::fail(std::move(*cex));
  }
  return CheckResult::pass();
}

inline bool replay_dim(const FiniteOrderedMonoid& S, const Certificate& c) {
  Element x = c.at("x");
  const auto* ys = c.get_list("y");
  auto n = c.get_param("n");
  if (!ys || !n) return false;
  return S.leq(x, sum_of(S, *ys)) && !dim_witness(S, x, *ys, static_cast<std::size_t>(*n));
}

}  // namespace culab

#endif  // CULAB_AXIOMS_HPP
