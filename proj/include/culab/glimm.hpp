#ifndef CULAB_GLIMM_HPP
#define CULAB_GLIMM_HPP

// Ideal-filteredness in four equivalent formulations, property (V), and
// filteredness of the full elements.
//
// Formulations (x ◁ y means x <= ∞y' for some y' << y):
//   definition      v <= ∞x, ∞y  =>  ∃z <= x, y with v <= ∞z
//   rephrased       v' <= v, v ◁ x, v ◁ y  =>  ∃z <= x, y with v' ◁ z,
//                   with ◁ evaluated from its literal definition
//   two_conditions  (1) v' <= v ◁ x  =>  ∃z: v' ◁ z ◁ v, z <= x
//                   (2) x' <= x <= 2y  =>  ∃z: x' ◁ z <= x, y
//   via_o6o7        (2) alone; valid only under O6 and O7, which are checked

#include <optional>
#include <string>

#include "culab/axioms.hpp"
#include "culab/certificate.hpp"
#include "culab/divisibility.hpp"
#include "culab/error.hpp"
#include "culab/model.hpp"

namespace culab {

enum class IFFormulation { definition, rephrased, two_conditions, via_o6o7 };

inline const char* to_string(IFFormulation f) noexcept {
  switch (f) {
    case IFFormulation::definition: return "definition";
    case IFFormulation::rephrased: return "rephrased";
    case IFFormulation::two_conditions: return "two_conditions";
    case IFFormulation::via_o6o7: return "via_o6o7";
  }
  return "?";
}

inline std::optional<IFFormulation> parse_if_formulation(const std::string& s) {
  if (s == "definition") return IFFormulation::definition;
  if (s == "rephrased") return IFFormulation::rephrased;
  if (s == "two_conditions") return IFFormulation::two_conditions;
  if (s == "via_o6o7") return IFFormulation::via_o6o7;
  return std::nullopt;
}

namespace detail {

inline Certificate if_cex(const char* form) {
  Certificate c;
  c.id = "IF";
  c.form = form;
  return c;
}

inline CheckResult if_definition(const FiniteOrderedMonoid& S) {
  for (Element v : S.elements())
    for (Element x : S.elements()) {
      if (!S.leq(v, S.infinity(x))) continue;
      for (Element y : S.elements()) {
        if (!S.leq(v, S.infinity(y))) continue;
        const Bitset common = S.down(x) & S.down(y);
        bool ok = false;
        common.for_each([&](std::size_t z) { ok = ok || S.leq(v, S.infinity(static_cast<Element>(z))); });
        if (!ok) return CheckResult::fail(if_cex("definition").bind("v", v).bind("x", x).bind("y", y));
      }
    }
  return CheckResult::pass();
}

inline CheckResult if_rephrased(const FiniteOrderedMonoid& S) {
  for (Element v : S.elements())
    for (Element x : S.elements()) {
      if (!rel_below_ideal_literal(S, v, x)) continue;
      for (Element y : S.elements()) {
        if (!rel_below_ideal_literal(S, v, y)) continue;
        const Bitset common = S.down(x) & S.down(y);
        for (std::size_t vp = S.down(v).first(); vp < S.size(); vp = S.down(v).next(vp + 1)) {
          bool ok = false;
          common.for_each([&](std::size_t z) {
            ok = ok || rel_below_ideal_literal(S, static_cast<Element>(vp), static_cast<Element>(z));
          });
          if (!ok)
            return CheckResult::fail(if_cex("rephrased")
                                         .bind("v'", static_cast<Element>(vp))
                                         .bind("v", v).bind("x", x).bind("y", y));
        }
      }
    }
  return CheckResult::pass();
}

}  // namespace detail

// Condition (1): v' <= v ◁ x  =>  ∃z with v' ◁ z ◁ v and z <= x.
inline CheckResult check_if_condition1(const FiniteOrderedMonoid& S) {
  S.require_partial_order("check_if_condition1");
  for (Element v : S.elements())
    for (Element x : S.elements()) {
      if (!rel_below_ideal(S, v, x)) continue;
      for (std::size_t vp = S.down(v).first(); vp < S.size(); vp = S.down(v).next(vp + 1)) {
        bool ok = false;
        S.down(x).for_each([&](std::size_t zi) {
          auto z = static_cast<Element>(zi);
          ok = ok || (rel_below_ideal(S, static_cast<Element>(vp), z) && rel_below_ideal(S, z, v));
        });
        if (!ok) {
          auto c = detail::if_cex("two_conditions");
          c.param("condition", 1).bind("v'", static_cast<Element>(vp)).bind("v", v).bind("x", x);
          return CheckResult::fail(std::move(c));
        }
      }
    }
  return CheckResult::pass();
}

// Condition (2) with multiplier 2^n: x' <= x <= 2^n·y  =>  ∃z with x' ◁ z
// and z <= x, y. n = 1 is condition (2) itself.
inline CheckResult check_if_condition2(const FiniteOrderedMonoid& S, std::size_t n = 1,
                                       const char* form = "two_conditions") {
  S.require_partial_order("check_if_condition2");
  const std::size_t mult = std::size_t{1} << n;
  for (Element x : S.elements())
    for (Element y : S.elements()) {
      if (!S.leq(x, S.multiple(mult, y))) continue;
      const Bitset common = S.down(x) & S.down(y);
      for (std::size_t xp = S.down(x).first(); xp < S.size(); xp = S.down(x).next(xp + 1)) {
        bool ok = false;
        common.for_each([&](std::size_t z) {
          ok = ok || rel_below_ideal(S, static_cast<Element>(xp), static_cast<Element>(z));
        });
        if (!ok) {
          auto c = detail::if_cex(form);
          c.param("condition", 2)
              .param("n", static_cast<long long>(n))
              .bind("x'", static_cast<Element>(xp))
              .bind("x", x)
              .bind("y", y);
          return CheckResult::fail(std::move(c));
        }
      }
    }
  return CheckResult::pass();
}

// Throws HypothesisNotChecked for via_o6o7 when O6 or O7 fails.
inline CheckResult is_ideal_filtered(const FiniteOrderedMonoid& S,
                                     IFFormulation f = IFFormulation::definition) {
  S.require_partial_order("is_ideal_filtered");
  switch (f) {
    case IFFormulation::definition: return detail::if_definition(S);
    case IFFormulation::rephrased: return detail::if_rephrased(S);
    case IFFormulation::two_conditions:
      if (auto r = check_if_condition1(S); !r) return r;
      return check_if_condition2(S);
    case IFFormulation::via_o6o7:
      for (Axiom a : {Axiom::O6, Axiom::O7})
        if (!check_axiom(S, a))
          throw HypothesisNotChecked(std::string("IF:via_o6o7 requires O6 and O7; ") + to_string(a) +
                                     " fails on '" + S.name() + "'");
      return check_if_condition2(S, 1, "via_o6o7");
  }
  return CheckResult::pass();
}

// Every element is the supremum of the compact elements (c << c) below it.
inline bool is_algebraic(const FiniteOrderedMonoid& S) {
  for (Element e : S.elements()) {
    Bitset bounds = S.up(S.zero());
    S.down(e).for_each([&](std::size_t c) {
      if (way_below(S, static_cast<Element>(c), static_cast<Element>(c))) bounds &= S.up(static_cast<Element>(c));
    });
    if (!bounds.test(e) || !bounds.is_subset_of(S.up(e))) return false;
  }
  return true;
}

// Lat_f(S) is algebraic iff: for all x' <= x there are y', y with
// x' <= y' <= y <= x and y <= ∞y'.
inline CheckResult check_lat_condition(const FiniteOrderedMonoid& S) {
  S.require_partial_order("check_lat_condition");
  for (Element x : S.elements())
    for (std::size_t xp = S.down(x).first(); xp < S.size(); xp = S.down(x).next(xp + 1)) {
      bool ok = false;
      S.down(x).for_each([&](std::size_t yi) {
        if (ok || !S.leq(static_cast<Element>(xp), static_cast<Element>(yi))) return;
        (S.up(static_cast<Element>(xp)) & S.down(static_cast<Element>(yi))).for_each([&](std::size_t ypi) {
          ok = ok || S.leq(static_cast<Element>(yi), S.infinity(static_cast<Element>(ypi)));
        });
      });
      if (!ok) {
        Certificate c;
        c.id = "lat-condition";
        c.bind("x'", static_cast<Element>(xp)).bind("x", x);
        return CheckResult::fail(std::move(c));
      }
    }
  return CheckResult::pass();
}

// Property (V): d1, d2 <= c and c+d1, c+d2 <= x  =>  ∃y, z with y+z <= x and
// d1+d2 <= ∞y, ∞z. The primed d_j' are dropped: the largest choice d_j' = d_j
// is the hardest instance. Enumeration order is (x, c, d1, d2).
inline CheckResult has_property_V(const FiniteOrderedMonoid& S) {
  S.require_partial_order("has_property_V");
  for (Element x : S.elements()) {
    // (∞y, ∞z) for every y + z <= x.
    std::vector<std::pair<Element, Element>> splits;
    for (Element y : S.elements())
      for (Element z : S.elements())
        if (S.leq(S.add(y, z), x)) splits.emplace_back(S.infinity(y), S.infinity(z));
    for (Element c : S.elements()) {
      if (!S.leq(c, x)) continue;
      for (Element d1 : S.elements()) {
        if (!S.leq(d1, c) || !S.leq(S.add(c, d1), x)) continue;
        for (Element d2 : S.elements()) {
          if (!S.leq(d2, c) || !S.leq(S.add(c, d2), x)) continue;
          const Element d = S.add(d1, d2);
          bool ok = false;
          for (auto [iy, iz] : splits)
            if (S.leq(d, iy) && S.leq(d, iz)) {
              ok = true;
              break;
            }
          if (!ok) {
            Certificate cx;
            cx.id = "V";
            cx.bind("x", x).bind("c", c).bind("d1", d1).bind("d2", d2);
            return CheckResult::fail(std::move(cx));
          }
        }
      }
    }
  }
  return CheckResult::pass();
}

// For all full x, y there is a full z <= x, y.
inline CheckResult full_elements_filtered(const FiniteOrderedMonoid& S) {
  S.require_partial_order("full_elements_filtered");
  Bitset full(S.size());
  for (Element x : S.elements())
    if (is_full(S, x)) full.set(x);
  for (Element x : S.elements()) {
    if (!full.test(x)) continue;
    for (Element y : S.elements()) {
      if (!full.test(y)) continue;
      if (!(S.down(x) & S.down(y)).intersects(full)) {
        Certificate c;
        c.id = "full-filtered";
        c.bind("x", x).bind("y", y);
        return CheckResult::fail(std::move(c));
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace culab

#endif  // CULAB_GLIMM_HPP
