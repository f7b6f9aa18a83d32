#ifndef CULAB_IDEALS_HPP
#define CULAB_IDEALS_HPP

// Ideals, quotients S/I, Lat_f(S), and the order-theoretic predicates that
// depend on them (stable finiteness, almost unperforation, refinement).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "culab/certificate.hpp"
#include "culab/divisibility.hpp"
#include "culab/error.hpp"
#include "culab/model.hpp"

namespace culab {

// A downward-hereditary submonoid. Closure under suprema of increasing
// sequences is automatic in finite models.
class Ideal {
 public:
  const FiniteOrderedMonoid& model() const noexcept { return model_; }
  const Bitset& mask() const noexcept { return mask_; }
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element x) const noexcept { return mask_.test(x); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.mask_ == b.mask_; }

 private:
  Ideal(FiniteOrderedMonoid S, Bitset mask) : model_(std::move(S)), mask_(std::move(mask)) {
    mask_.for_each([&](std::size_t i) { members_.push_back(static_cast<Element>(i)); });
  }
  friend Ideal make_ideal(const FiniteOrderedMonoid&, const Bitset&);

  FiniteOrderedMonoid model_;
  Bitset mask_;
  std::vector<Element> members_;
};

// Throws NotAnIdeal naming the violated clause.
inline Ideal make_ideal(const FiniteOrderedMonoid& S, const Bitset& mask) {
  if (mask.size() != S.size()) throw NotAnIdeal("member set has the wrong width");
  if (!mask.test(S.zero())) throw NotAnIdeal("does not contain " + S.label(S.zero()));
  for (std::size_t a = mask.first(); a < S.size(); a = mask.next(a + 1))
    for (std::size_t b = mask.first(); b < S.size(); b = mask.next(b + 1)) {
      Element s = S.add(static_cast<Element>(a), static_cast<Element>(b));
      if (!mask.test(s))
        throw NotAnIdeal("not closed under addition: " + S.label(static_cast<Element>(a)) + "+" +
                         S.label(static_cast<Element>(b)) + " = " + S.label(s) + " is missing");
    }
  for (std::size_t a = mask.first(); a < S.size(); a = mask.next(a + 1)) {
    Bitset below = S.down(static_cast<Element>(a));
    if (!below.is_subset_of(mask)) {
      std::size_t y = below.first();
      while (mask.test(y)) y = below.next(y + 1);
      throw NotAnIdeal("not downward-hereditary: " + S.label(static_cast<Element>(y)) + " ≤ " +
                       S.label(static_cast<Element>(a)) + " is missing");
    }
  }
  return Ideal(S, mask);
}

inline Ideal make_ideal(const FiniteOrderedMonoid& S, const std::vector<Element>& members) {
  Bitset m(S.size());
  for (auto e : members) {
    if (e >= S.size()) throw NotAnIdeal("member index out of range");
    m.set(e);
  }
  return make_ideal(S, m);
}

// ⟨x⟩ = {y : y <= ∞x}
inline Ideal ideal_generated(const FiniteOrderedMonoid& S, Element x) {
  return make_ideal(S, S.down(S.infinity(x)));
}

// All ideals, smallest first, ties broken by the member lists. Each ideal I
// is ⟨ΣI⟩, so deduplicating {⟨x⟩} is exhaustive.
inline std::vector<Ideal> enumerate_ideals(const FiniteOrderedMonoid& S) {
  S.require_partial_order("enumerate_ideals");
  std::vector<Ideal> out;
  for (Element x : S.elements()) {
    Ideal I = ideal_generated(S, x);
    if (std::find(out.begin(), out.end(), I) == out.end()) out.push_back(std::move(I));
  }
  for (const auto& I : out)
    if (!(ideal_generated(S, sum_of(S, I.members())) == I))
      throw InternalError("enumerate_ideals: ideal not generated by its sum");
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

inline std::string ideal_label(const Ideal& I) {
  std::string s = "{";
  for (std::size_t i = 0; i < I.members().size(); ++i) {
    if (i) s += ",";
    s += I.model().label(I.members()[i]);
  }
  return s + "}";
}

namespace detail {

// Submodel on `keep` (closed under + and containing 0), preserving labels and
// the order mode. In algebraic mode the order is recomputed from the
// restricted table; on a downward-hereditary subset this is the inherited
// order, since x + c = y with y in I forces c in I.
inline FiniteOrderedMonoid submodel(const FiniteOrderedMonoid& S, const Bitset& keep,
                                    std::string name) {
  std::vector<Element> idx(S.size(), 0);
  std::vector<Element> members;
  keep.for_each([&](std::size_t e) {
    idx[e] = static_cast<Element>(members.size());
    members.push_back(static_cast<Element>(e));
  });
  const std::size_t m = members.size();
  std::vector<std::string> labels;
  AddTable add(m, std::vector<Element>(m));
  BitMatrix leq(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(S.label(members[i]));
    for (std::size_t j = 0; j < m; ++j) {
      add[i][j] = idx[S.add(members[i], members[j])];
      if (S.leq(members[i], members[j])) leq.set(i, j);
    }
  }
  std::optional<BitMatrix> order;
  if (S.order_mode() == OrderMode::explicit_order) order = std::move(leq);
  return FiniteOrderedMonoid::create(std::move(name), std::move(labels), idx[S.zero()],
                                     std::move(add), std::move(order));
}

}  // namespace detail

// I as a model in its own right.
inline FiniteOrderedMonoid restrict_to_ideal(const Ideal& I) {
  return detail::submodel(I.model(), I.mask(), I.model().name() + "|" + ideal_label(I));
}

struct QuotientResult {
  FiniteOrderedMonoid model;
  // projection[x] is the class of x.
  std::vector<Element> projection;
};

// S/I: classes of x ~ y iff x <=_I y <=_I x, where x <=_I y iff x <= y + z
// for some z in I. Each class is represented by its least index and labelled
// "[label]".
inline QuotientResult quotient(const FiniteOrderedMonoid& S, const Ideal& I) {
  S.require_partial_order("quotient");
  if (I.model().size() != S.size() || !(make_ideal(S, I.mask()) == I))
    throw NotAnIdeal("ideal belongs to a different model");
  const std::size_t n = S.size();
  BitMatrix rel(n);
  for (Element x : S.elements())
    for (Element y : S.elements())
      for (Element z : I.members())
        if (S.leq(x, S.add(y, z))) {
          rel.set(x, y);
          break;
        }
  constexpr Element none = ~Element{0};
  std::vector<Element> cls(n, none);
  std::vector<Element> reps;
  for (Element x : S.elements()) {
    if (cls[x] != none) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element y = x; y < n; ++y)
      if (rel.test(x, y) && rel.test(y, x)) cls[y] = c;
  }
  const std::size_t m = reps.size();
  std::vector<std::string> labels;
  AddTable add(m, std::vector<Element>(m));
  BitMatrix leq(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("[" + S.label(reps[i]) + "]");
    for (std::size_t j = 0; j < m; ++j) {
      add[i][j] = cls[S.add(reps[i], reps[j])];
      if (rel.test(reps[i], reps[j])) leq.set(i, j);
    }
  }
  std::optional<BitMatrix> order;
  if (S.order_mode() == OrderMode::explicit_order) order = leq;
  auto Q = FiniteOrderedMonoid::create(S.name() + "/" + ideal_label(I), std::move(labels),
                                       cls[S.zero()], std::move(add), std::move(order));
  // The algebraic order of S/I is the induced order <=_I.
  if (!(Q.leq_matrix() == leq)) throw InternalError("quotient: induced order is not the quotient order");
  return {std::move(Q), std::move(cls)};
}

struct LatfResult {
  FiniteOrderedMonoid model;
  // surjection[x] is the element ⟨x⟩.
  std::vector<Element> surjection;
};

// Lat_f(S): the singly generated ideals, realised as the values ∞x (a
// submonoid of S, since ∞x + ∞y = ∞(x+y)). ⟨a⟩ ⊆ ⟨b⟩ iff ∞a <= ∞b, and the
// result is idempotent. Elements are labelled "<label of ∞x>".
inline LatfResult latf(const FiniteOrderedMonoid& S) {
  S.require_partial_order("latf");
  Bitset vals(S.size());
  for (Element x : S.elements()) vals.set(S.infinity(x));
  auto sub = detail::submodel(S, vals, "Lat_f(" + S.name() + ")");
  std::vector<std::string> labels;
  for (const auto& l : sub.labels()) labels.push_back("<" + l + ">");
  std::vector<Element> pos(S.size(), 0);
  Element k = 0;
  vals.for_each([&](std::size_t v) { pos[v] = k++; });
  std::vector<Element> surj(S.size());
  for (Element x : S.elements()) surj[x] = pos[S.infinity(x)];
  std::optional<BitMatrix> order;
  if (sub.order_mode() == OrderMode::explicit_order) order = sub.leq_matrix();
  auto L = FiniteOrderedMonoid::create(sub.name(), std::move(labels), sub.zero(), sub.add_table(),
                                       std::move(order));
  // In an idempotent monoid e <= f forces e + f = f, so the algebraic order of
  // the value set is the order inherited from S.
  std::vector<Element> val;
  vals.for_each([&](std::size_t v) { val.push_back(static_cast<Element>(v)); });
  for (Element i : L.elements())
    for (Element j : L.elements())
      if (L.leq(i, j) != S.leq(val[i], val[j])) throw InternalError("latf: order is not inclusion");
  return {std::move(L), std::move(surj)};
}

// x+y <= x implies y = 0. Failing certificates bind the lex-first (x, y).
inline CheckResult is_stably_finite(const FiniteOrderedMonoid& S) {
  S.require_partial_order("is_stably_finite");
  for (Element x : S.elements())
    for (Element y : S.elements())
      if (y != S.zero() && S.leq(S.add(x, y), x)) {
        Certificate c;
        c.id = "stably-finite";
        c.bind("x", x).bind("y", y);
        return CheckResult::fail(std::move(c));
      }
  return CheckResult::pass();
}

// Every quotient S/I is stably finite. Failing certificates carry the ideal
// and class representatives x, y in S.
inline CheckResult is_stably_finite(const FiniteOrderedMonoid& S, bool residual) {
  if (!residual) return is_stably_finite(S);
  for (const auto& I : enumerate_ideals(S)) {
    auto q = quotient(S, I);
    if (auto r = is_stably_finite(q.model); !r) {
      auto rep = [&](Element c) {
        Element e = 0;
        while (q.projection[e] != c) ++e;
        return e;
      };
      Certificate c;
      c.id = "stably-finite";
      c.form = "residual";
      c.list("I", I.members())
          .bind("x", rep(r.certificate->at("x")))
          .bind("y", rep(r.certificate->at("y")));
      return CheckResult::fail(std::move(c));
    }
  }
  return CheckResult::pass();
}

// (k+1)x <= ky for some k implies x <= y. Multiples stabilise by step |S|,
// so k = |S|+1 already compares ∞x with ∞y and larger k add nothing.
inline CheckResult is_almost_unperforated(const FiniteOrderedMonoid& S) {
  S.require_partial_order("is_almost_unperforated");
  const std::size_t kmax = S.size() + 1;
  for (Element x : S.elements())
    for (Element y : S.elements()) {
      if (S.leq(x, y)) continue;
      Element kx = x, ky = S.zero();  // (k+1)x and kx for k = 0
      for (std::size_t k = 1; k <= kmax; ++k) {
        kx = S.add(kx, x);
        ky = S.add(ky, y);
        if (S.leq(kx, ky)) {
          Certificate c;
          c.id = "almost-unperforated";
          c.bind("x", x).bind("y", y).param("k", static_cast<long long>(k));
          return CheckResult::fail(std::move(c));
        }
      }
    }
  return CheckResult::pass();
}

// Every a+b = c+d has a refinement matrix z11+z12 = a, z21+z22 = b,
// z11+z21 = c, z12+z22 = d. Only addition is used, so pre-ordered models are
// accepted.
inline CheckResult is_refinement_monoid(const FiniteOrderedMonoid& S) {
  const std::size_t n = S.size();
  std::vector<std::vector<std::pair<Element, Element>>> split(n);
  for (Element p : S.elements())
    for (Element q : S.elements()) split[S.add(p, q)].emplace_back(p, q);
  for (Element a : S.elements())
    for (Element b : S.elements())
      for (Element c : S.elements())
        for (Element d : S.elements()) {
          if (S.add(a, b) != S.add(c, d)) continue;
          bool ok = false;
          for (auto [z11, z12] : split[a]) {
            for (auto [z21, z22] : split[b])
              if (S.add(z11, z21) == c && S.add(z12, z22) == d) {
                ok = true;
                break;
              }
            if (ok) break;
          }
          if (!ok) {
            Certificate cx;
            cx.id = "refinement";
            cx.bind("a", a).bind("b", b).bind("c", c).bind("d", d);
            return CheckResult::fail(std::move(cx));
          }
        }
  return CheckResult::pass();
}

struct MaximalDivisibleIdeals {
  std::vector<Ideal> ideals;
  bool unique = false;
};

// Inclusion-maximal ideals that are (k,ω)-divisible as models in their own
// right. Being one of several maximal elements is reported, not an error.
inline MaximalDivisibleIdeals maximal_divisible_ideals(const FiniteOrderedMonoid& S,
                                                       std::size_t k = 2) {
  std::vector<Ideal> div;
  for (auto& I : enumerate_ideals(S))
    if (is_divisible(restrict_to_ideal(I), k)) div.push_back(std::move(I));
  MaximalDivisibleIdeals out;
  for (const auto& I : div) {
    bool maximal = true;
    for (const auto& J : div)
      if (J.size() > I.size() && I.mask().is_subset_of(J.mask())) maximal = false;
    if (maximal) out.ideals.push_back(I);
  }
  out.unique = out.ideals.size() == 1;
  return out;
}

}  // namespace culab

#endif  // CULAB_IDEALS_HPP
