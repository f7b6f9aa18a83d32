#ifndef CULAB_RULES_HPP
#define CULAB_RULES_HPP

// Rule engine: named implications between decision procedures, evaluated on
// every model of a corpus. A rule is vacuous on a model when a hypothesis
// fails, passes when hypotheses and conclusion hold, and FAILs otherwise.

#include <algorithm>
#include <atomic>
#include <functional>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "culab/axioms.hpp"
#include "culab/certificate.hpp"
#include "culab/divisibility.hpp"
#include "culab/glimm.hpp"
#include "culab/ideals.hpp"
#include "culab/isomorphism.hpp"
#include "culab/model.hpp"
#include "culab/verify.hpp"
#include "culab/witnesses.hpp"

namespace culab {

// Lazily computed verdicts for one model. Not thread-safe; each worker owns
// the facts of the models it evaluates.
class ModelFacts {
 public:
  explicit ModelFacts(FiniteOrderedMonoid S) : S_(std::move(S)) {}

  const FiniteOrderedMonoid& model() const noexcept { return S_; }

  const std::string& hash() {
    if (!hash_) hash_ = canonical_hash(S_);
    return *hash_;
  }
  const CheckResult& axiom(Axiom a) {
    return memo(axioms_, static_cast<int>(a), [&] { return check_axiom(S_, a); });
  }
  const CheckResult& div(std::size_t k) {
    return memo(div_, static_cast<int>(k), [&] { return is_divisible(S_, k); });
  }
  const CheckResult& wdiv(std::size_t k) {
    return memo(wdiv_, static_cast<int>(k), [&] { return is_weakly_divisible(S_, k); });
  }
  bool wdiv_element(Element x) {
    if (wdiv_elem_.empty())
      for (Element e : S_.elements()) wdiv_elem_.push_back(is_weakly_divisible(S_, e, 2).holds);
    return wdiv_elem_[x];
  }
  const CheckResult& ideal_filtered(IFFormulation f = IFFormulation::definition) {
    return memo(if_, static_cast<int>(f), [&] { return is_ideal_filtered(S_, f); });
  }
  const CheckResult& cond1() { return once(cond1_, [&] { return check_if_condition1(S_); }); }
  const CheckResult& cond2(std::size_t n) {
    return memo(cond2_, static_cast<int>(n), [&] { return check_if_condition2(S_, n); });
  }
  const CheckResult& V() { return once(v_, [&] { return has_property_V(S_); }); }
  const CheckResult& full_filtered() { return once(full_, [&] { return full_elements_filtered(S_); }); }
  const CheckResult& stably_finite() { return once(sf_, [&] { return is_stably_finite(S_); }); }
  const CheckResult& residually_stably_finite() {
    return once(rsf_, [&] { return is_stably_finite(S_, true); });
  }
  const CheckResult& almost_unperforated() { return once(au_, [&] { return is_almost_unperforated(S_); }); }
  const CheckResult& refinement() { return once(ref_, [&] { return is_refinement_monoid(S_); }); }
  const CheckResult& dim0() { return once(dim0_, [&] { return check_dim_leq(S_, 0); }); }
  const CheckResult& lat_condition() { return once(lat_, [&] { return check_lat_condition(S_); }); }
  const std::vector<Ideal>& ideals() {
    if (!ideals_) ideals_ = enumerate_ideals(S_);
    return *ideals_;
  }
  const FiniteOrderedMonoid& latf_model() {
    if (!latf_) latf_ = latf(S_).model;
    return *latf_;
  }
  // Some scale consists of (2,ω)-divisible elements. Scales are downward
  // closed, so this holds iff the largest downward-closed set of divisible
  // elements generates S.
  bool divisible_scale() {
    if (!scale_) {
      auto D = largest_divisible_downset(S_, 2);
      const Element top = S_.infinity(sum_of(S_, D));
      scale_ = S_.down(top).count() == S_.size();
    }
    return *scale_;
  }

 private:
  template <class F>
  static const CheckResult& memo(std::map<int, CheckResult>& m, int key, F&& f) {
    auto it = m.find(key);
    if (it == m.end()) it = m.emplace(key, f()).first;
    return it->second;
  }
  template <class F>
  static const CheckResult& once(std::optional<CheckResult>& o, F&& f) {
    if (!o) o = f();
    return *o;
  }

  FiniteOrderedMonoid S_;
  std::optional<std::string> hash_;
  std::map<int, CheckResult> axioms_, div_, wdiv_, if_, cond2_;
  std::vector<bool> wdiv_elem_;
  std::optional<CheckResult> cond1_, v_, full_, sf_, rsf_, au_, ref_, dim0_, lat_;
  std::optional<std::vector<Ideal>> ideals_;
  std::optional<FiniteOrderedMonoid> latf_;
  std::optional<bool> scale_;
};

enum class RuleStatus { pass, vacuous, fail };

inline const char* to_string(RuleStatus s) noexcept {
  switch (s) {
    case RuleStatus::pass: return "pass";
    case RuleStatus::vacuous: return "vacuous";
    case RuleStatus::fail: return "FAIL";
  }
  return "?";
}

struct Verdict {
  bool holds = true;
  nlohmann::json certificate;  // null when there is nothing to report
};

struct Rule {
  std::string id;
  std::string statement;
  std::vector<std::pair<std::string, std::function<bool(ModelFacts&)>>> hypotheses;
  std::function<Verdict(ModelFacts&)> conclusion;
};

struct RuleReport {
  std::string model;  // canonical hash
  std::string name;
  std::string rule;
  RuleStatus status = RuleStatus::pass;
  nlohmann::json certificate;
};

inline RuleReport evaluate(const Rule& r, ModelFacts& f) {
  RuleReport rep{f.hash(), f.model().name(), r.id, RuleStatus::pass, nullptr};
  for (const auto& [name, h] : r.hypotheses)
    if (!h(f)) {
      rep.status = RuleStatus::vacuous;
      rep.certificate = {{"failed_hypothesis", name}};
      return rep;
    }
  Verdict v = r.conclusion(f);
  rep.status = v.holds ? RuleStatus::pass : RuleStatus::fail;
  rep.certificate = std::move(v.certificate);
  return rep;
}

namespace detail {

inline nlohmann::json cert_json(ModelFacts& f, const CheckResult& r) {
  if (!r.certificate) return nullptr;
  return to_json(f.model(), *r.certificate);
}

inline Verdict from_check(ModelFacts& f, const CheckResult& r) {
  if (r) return {true, nullptr};
  return {false, cert_json(f, r)};
}

inline Verdict iff(bool lhs, bool rhs, nlohmann::json detail) {
  if (lhs == rhs) return {true, nullptr};
  return {false, std::move(detail)};
}

inline nlohmann::json labels(const FiniteOrderedMonoid& S, const std::vector<Element>& xs) {
  nlohmann::json a = nlohmann::json::array();
  for (auto x : xs) a.push_back(S.label(x));
  return a;
}

using Hyp = std::pair<std::string, std::function<bool(ModelFacts&)>>;

inline Hyp ax(Axiom a) {
  return {to_string(a), [a](ModelFacts& f) { return f.axiom(a).holds; }};
}
inline Hyp div2() {
  return {"div:2", [](ModelFacts& f) { return f.div(2).holds; }};
}
inline Hyp wdiv2() {
  return {"wdiv:2", [](ModelFacts& f) { return f.wdiv(2).holds; }};
}
inline Hyp if_def() {
  return {"IF", [](ModelFacts& f) { return f.ideal_filtered().holds; }};
}

inline std::vector<Hyp> o5_to_o8() {
  return {ax(Axiom::O5), ax(Axiom::O6), ax(Axiom::O7), ax(Axiom::O8)};
}

template <class... Hs>
std::vector<Hyp> hyps(std::vector<Hyp> base, Hs... more) {
  (base.push_back(std::move(more)), ...);
  return base;
}

inline Verdict wit_fail(const std::string& why, nlohmann::json at) {
  at["reason"] = why;
  return {false, std::move(at)};
}

}  // namespace detail

// The rule table. Rules are listed in id order.
inline const std::vector<Rule>& rule_table() {
  using namespace detail;
  static const std::vector<Rule> table = [] {
    std::vector<Rule> t;

    t.push_back({"R-AUV", "O5-O8 and almost unperforated imply (V)",
                 hyps(o5_to_o8(), Hyp{"almost-unperforated", [](ModelFacts& f) { return f.almost_unperforated().holds; }}),
                 [](ModelFacts& f) { return from_check(f, f.V()); }});

    t.push_back({"R-CharIF", "IF(definition) iff IF(two_conditions)", {}, [](ModelFacts& f) {
                   bool a = f.ideal_filtered(IFFormulation::definition).holds;
                   bool b = f.ideal_filtered(IFFormulation::two_conditions).holds;
                   return iff(a, b, {{"definition", a}, {"two_conditions", b}});
                 }});

    t.push_back({"R-CharIF67", "under O6 and O7, IF(definition) iff IF(via_o6o7)",
                 {ax(Axiom::O6), ax(Axiom::O7)}, [](ModelFacts& f) {
                   bool a = f.ideal_filtered(IFFormulation::definition).holds;
                   bool b = f.ideal_filtered(IFFormulation::via_o6o7).holds;
                   return iff(a, b, {{"definition", a}, {"via_o6o7", b}});
                 }});

    t.push_back({"R-CharLatAlg", "under O6 and O7, the lattice condition iff Lat_f(S) is algebraic",
                 {ax(Axiom::O6), ax(Axiom::O7)}, [](ModelFacts& f) {
                   bool a = f.lat_condition().holds;
                   bool b = is_algebraic(f.latf_model());
                   return iff(a, b, {{"lat_condition", a}, {"latf_algebraic", b}});
                 }});

    t.push_back({"R-CharRSF", "O5-O8 and residually stably finite imply: div(2) iff wdiv(2) and IF",
                 hyps(o5_to_o8(), Hyp{"stably-finite:residual", [](ModelFacts& f) { return f.residually_stably_finite().holds; }}),
                 [](ModelFacts& f) {
                   bool d = f.div(2).holds, w = f.wdiv(2).holds, i = f.ideal_filtered().holds;
                   return iff(d, w && i, {{"div2", d}, {"wdiv2", w}, {"IF", i}});
                 }});

    t.push_back({"R-Claim2n", "condition (2) implies its 2^n-multiplier form, n <= 3",
                 {Hyp{"condition2", [](ModelFacts& f) { return f.cond2(1).holds; }}}, [](ModelFacts& f) {
                   for (std::size_t n = 2; n <= 3; ++n)
                     if (!f.cond2(n)) return from_check(f, f.cond2(n));
                   return Verdict{};
                 }});

    t.push_back({"R-Cond1", "O6 and O7 imply condition (1)", {ax(Axiom::O6), ax(Axiom::O7)},
                 [](ModelFacts& f) { return from_check(f, f.cond1()); }});

    t.push_back({"R-Dim0IF", "O7 and dim <= 0 imply IF",
                 {ax(Axiom::O7), Hyp{"dim:0", [](ModelFacts& f) { return f.dim0().holds; }}},
                 [](ModelFacts& f) { return from_check(f, f.ideal_filtered()); }});

    t.push_back({"R-Div2k", "div(2) implies div(k), k <= 4", {div2()}, [](ModelFacts& f) {
                   for (std::size_t k = 3; k <= 4; ++k)
                     if (!f.div(k)) return from_check(f, f.div(k));
                   return Verdict{};
                 }});

    t.push_back({"R-DivExt", "O5-O8 imply, for every ideal I: div(S) iff div(I) and div(S/I)", o5_to_o8(),
                 [](ModelFacts& f) {
                   const bool s = f.div(2).holds;
                   for (const auto& I : f.ideals()) {
                     bool i = is_divisible(restrict_to_ideal(I), 2).holds;
                     bool q = is_divisible(quotient(f.model(), I).model, 2).holds;
                     if (s != (i && q))
                       return Verdict{false,
                                      {{"ideal", labels(f.model(), I.members())}, {"div_S", s}, {"div_I", i}, {"div_quotient", q}}};
                   }
                   return Verdict{};
                 }});

    t.push_back({"R-DivIF", "O6, O7 and div(2) imply IF", {ax(Axiom::O6), ax(Axiom::O7), div2()},
                 [](ModelFacts& f) { return from_check(f, f.ideal_filtered()); }});

    t.push_back({"R-DivO5", "O5 implies the (k-1)x+y <= z <= ky witness exists whenever kx <= z, k <= 4",
                 {ax(Axiom::O5)}, [](ModelFacts& f) {
                   const auto& S = f.model();
                   for (std::size_t k = 1; k <= 4; ++k)
                     for (Element x : S.elements())
                       for (Element z : S.elements()) {
                         if (!S.leq(S.multiple(k, x), z)) continue;
                         nlohmann::json at = {{"k", k}, {"x", S.label(x)}, {"z", S.label(z)}};
                         auto y = witness_div_o5(S, x, z, k);
                         if (!y) return wit_fail("not found", at);
                         if (!verify::div_o5(S, x, z, k, *y)) return wit_fail("rejected by verifier", at);
                       }
                   return Verdict{};
                 }});

    t.push_back({"R-DivV", "div(2) implies (V)", {div2()}, [](ModelFacts& f) { return from_check(f, f.V()); }});

    t.push_back({"R-DivWeak", "div(2) implies wdiv(2)", {div2()},
                 [](ModelFacts& f) { return from_check(f, f.wdiv(2)); }});

    t.push_back({"R-FiltFull", "IF implies the full elements are filtered", {if_def()},
                 [](ModelFacts& f) { return from_check(f, f.full_filtered()); }});

    t.push_back({"R-Glimm45", "div(2) iff div(k) for every k <= 4", {}, [](ModelFacts& f) {
                   const bool d2 = f.div(2).holds;
                   for (std::size_t k = 3; k <= 4; ++k) {
                     bool dk = f.div(k).holds;
                     if (d2 != dk) return Verdict{false, {{"k", k}, {"div2", d2}, {"divk", dk}}};
                   }
                   return Verdict{};
                 }});

    t.push_back({"R-LatAlgIF", "O5, O6 and O7 imply IF (Lat_f of a finite model is algebraic)",
                 {ax(Axiom::O5), ax(Axiom::O6), ax(Axiom::O7)},
                 [](ModelFacts& f) { return from_check(f, f.ideal_filtered()); }});

    t.push_back({"R-MainThm", "O5-O8 imply: div(2) iff wdiv(2), IF and (V)", o5_to_o8(), [](ModelFacts& f) {
                   bool d = f.div(2).holds, w = f.wdiv(2).holds, i = f.ideal_filtered().holds, v = f.V().holds;
                   return iff(d, w && i && v, {{"div2", d}, {"wdiv2", w}, {"IF", i}, {"V", v}});
                 }});

    t.push_back({"R-RSFV", "O5 and residually stably finite imply (V)",
                 {ax(Axiom::O5), Hyp{"stably-finite:residual", [](ModelFacts& f) { return f.residually_stably_finite().holds; }}},
                 [](ModelFacts& f) { return from_check(f, f.V()); }});

    t.push_back({"R-RefEF", "refinement implies the (e,f) witness exists on every legal instance",
                 {Hyp{"refinement", [](ModelFacts& f) { return f.refinement().holds; }}}, [](ModelFacts& f) {
                   const auto& S = f.model();
                   const BitMatrix alg = algebraic_preorder(S.add_table());
                   for (Element a : S.elements())
                     for (Element b1 : S.elements()) {
                       if (!alg.test(b1, a)) continue;
                       for (Element b2 : S.elements()) {
                         if (!alg.test(b2, a)) continue;
                         for (Element c : S.elements()) {
                           if (!alg.test(S.add(a, b1), c) || !alg.test(S.add(a, b2), c)) continue;
                           nlohmann::json at = {{"a", S.label(a)}, {"b1", S.label(b1)}, {"b2", S.label(b2)}, {"c", S.label(c)}};
                           auto w = witness_refinement_ef(S, a, b1, b2, c);
                           if (!w) return wit_fail("not found", at);
                           if (!verify::refinement_ef(S, b1, b2, c, *w)) return wit_fail("rejected by verifier", at);
                         }
                       }
                     }
                   return Verdict{};
                 }});

    t.push_back({"R-RefO7", "O7 implies the interpolating x exists for lists of up to 3 elements below w",
                 {ax(Axiom::O7)}, [](ModelFacts& f) {
                   const auto& S = f.model();
                   for (Element w : S.elements()) {
                     std::vector<Element> below;
                     S.down(w).for_each([&](std::size_t e) { below.push_back(static_cast<Element>(e)); });
                     std::vector<Element> xs;
                     std::optional<Verdict> bad;
                     auto rec = [&](auto&& self, std::size_t from) -> void {
                       if (bad) return;
                       if (!xs.empty()) {
                         nlohmann::json at = {{"w", S.label(w)}, {"xs", labels(S, xs)}};
                         auto x = witness_ref_o7(S, xs, w);
                         if (!x) bad = wit_fail("not found", at);
                         else if (!verify::ref_o7(S, xs, w, *x)) bad = wit_fail("rejected by verifier", at);
                       }
                       if (xs.size() == 3) return;
                       for (std::size_t i = from; i < below.size() && !bad; ++i) {
                         xs.push_back(below[i]);
                         self(self, i);
                         xs.pop_back();
                       }
                     };
                     rec(rec, 0);
                     if (bad) return *bad;
                   }
                   return Verdict{};
                 }});

    t.push_back({"R-RephraseIF", "IF(definition) iff IF(rephrased)", {}, [](ModelFacts& f) {
                   bool a = f.ideal_filtered(IFFormulation::definition).holds;
                   bool b = f.ideal_filtered(IFFormulation::rephrased).holds;
                   return iff(a, b, {{"definition", a}, {"rephrased", b}});
                 }});

    t.push_back({"R-RieszIF", "O6 and Riesz interpolation imply IF", {ax(Axiom::O6), ax(Axiom::Riesz)},
                 [](ModelFacts& f) { return from_check(f, f.ideal_filtered()); }});

    t.push_back({"R-ScaleDiv", "O5, O6, O7 and a (2,ω)-divisible scale imply div(2)",
                 {ax(Axiom::O5), ax(Axiom::O6), ax(Axiom::O7),
                  Hyp{"divisible-scale", [](ModelFacts& f) { return f.divisible_scale(); }}},
                 [](ModelFacts& f) { return from_check(f, f.div(2)); }});

    t.push_back({"R-WDiv2k", "wdiv(2) implies wdiv(k), k <= 4", {wdiv2()}, [](ModelFacts& f) {
                   for (std::size_t k = 3; k <= 4; ++k)
                     if (!f.wdiv(k)) return from_check(f, f.wdiv(k));
                   return Verdict{};
                 }});

    t.push_back({"R-WkDiv1", "O5 and IF imply a (c, d list) decomposition for every weakly divisible x",
                 {ax(Axiom::O5), if_def()}, [](ModelFacts& f) {
                   const auto& S = f.model();
                   for (Element x : S.elements()) {
                     if (!f.wdiv_element(x)) continue;
                     nlohmann::json at = {{"x", S.label(x)}};
                     auto w = witness_wkdiv_decomposition(S, x);
                     if (!w) return wit_fail("not found", at);
                     if (!verify::wkdiv_decomposition(S, x, *w)) return wit_fail("rejected by verifier", at);
                   }
                   return Verdict{};
                 }});

    t.push_back({"R-WkDiv2", "O5-O8 and IF imply a (c, d1, d2) triple for every weakly divisible x, m <= 3",
                 hyps(o5_to_o8(), if_def()), [](ModelFacts& f) {
                   const auto& S = f.model();
                   for (Element x : S.elements()) {
                     if (!f.wdiv_element(x)) continue;
                     for (std::size_t m = 1; m <= 3; ++m) {
                       nlohmann::json at = {{"x", S.label(x)}, {"m", m}};
                       auto w = witness_wkdiv_pair(S, x, m);
                       if (!w) return wit_fail("not found", at);
                       if (!verify::wkdiv_pair(S, x, m, *w)) return wit_fail("rejected by verifier", at);
                     }
                   }
                   return Verdict{};
                 }});

    std::sort(t.begin(), t.end(), [](const Rule& a, const Rule& b) { return a.id < b.id; });
    return t;
  }();
  return table;
}

inline const Rule* find_rule(const std::string& id) {
  for (const auto& r : rule_table())
    if (r.id == id) return &r;
  return nullptr;
}

// Exploration tallies; reported, never asserted.
struct ExplorationCounters {
  std::size_t models = 0;
  // wdiv(2), IF and (V) hold, div(2) fails, and some of O5-O8 fails.
  std::size_t main_theorem_gap = 0;
  // As above with O5, O6, O7 holding, so only O8 fails.
  std::size_t only_o8_fails = 0;
  std::size_t without_V = 0;
  std::size_t stably_finite = 0;
  std::size_t maximal_divisible_ideal_not_unique = 0;

  nlohmann::json to_json() const {
    return {{"models", models},
            {"main_theorem_gap", main_theorem_gap},
            {"only_o8_fails", only_o8_fails},
            {"without_V", without_V},
            {"stably_finite", stably_finite},
            {"maximal_divisible_ideal_not_unique", maximal_divisible_ideal_not_unique}};
  }
};

struct RunResult {
  std::vector<RuleReport> reports;
  ExplorationCounters counters;
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const RuleReport& r) {
      return r.status == RuleStatus::fail;
    }));
  }
};

// Evaluates the given rules (all when empty) on every model. The output is
// sorted by (model hash, rule id, model name), independent of `jobs`.
inline RunResult run_rules(const std::vector<FiniteOrderedMonoid>& corpus,
                           const std::vector<std::string>& rule_ids = {}, unsigned jobs = 1,
                           bool counters = true) {
  std::vector<const Rule*> rules;
  if (rule_ids.empty()) {
    for (const auto& r : rule_table()) rules.push_back(&r);
  } else {
    for (const auto& id : rule_ids) {
      const Rule* r = find_rule(id);
      if (!r) throw PreconditionFailed("unknown rule \"" + id + "\"");
      rules.push_back(r);
    }
  }
  for (const auto& S : corpus) S.require_partial_order("run_rules");
  std::vector<std::vector<RuleReport>> per_model(corpus.size());
  std::vector<ExplorationCounters> per_counts(corpus.size());
  std::atomic<std::size_t> next{0};
  // First exception raised by a worker; rethrown after the join.
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
      ModelFacts f(corpus[i]);
      for (const Rule* r : rules) per_model[i].push_back(evaluate(*r, f));
      if (!counters) continue;
      auto& c = per_counts[i];
      c.models = 1;
      const bool o567 = f.axiom(Axiom::O5) && f.axiom(Axiom::O6) && f.axiom(Axiom::O7);
      const bool all = o567 && f.axiom(Axiom::O8);
      if (f.wdiv(2) && f.ideal_filtered() && f.V() && !f.div(2) && !all) {
        ++c.main_theorem_gap;
        if (o567) ++c.only_o8_fails;
      }
      if (!f.V()) ++c.without_V;
      if (f.stably_finite()) ++c.stably_finite;
      if (!maximal_divisible_ideals(f.model()).unique) ++c.maximal_divisible_ideal_not_unique;
    }
  };
  auto worker = [&] {
    try {
      work();
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      next.store(corpus.size());
    }
  };
  const unsigned n = std::max(1u, jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  RunResult out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (auto& r : per_model[i]) out.reports.push_back(std::move(r));
    const auto& c = per_counts[i];
    out.counters.models += c.models;
    out.counters.main_theorem_gap += c.main_theorem_gap;
    out.counters.only_o8_fails += c.only_o8_fails;
    out.counters.without_V += c.without_V;
    out.counters.stably_finite += c.stably_finite;
    out.counters.maximal_divisible_ideal_not_unique += c.maximal_divisible_ideal_not_unique;
  }
  std::stable_sort(out.reports.begin(), out.reports.end(), [](const RuleReport& a, const RuleReport& b) {
    return std::tie(a.model, a.rule, a.name) < std::tie(b.model, b.rule, b.name);
  });
  return out;
}

// {"certificate", "model", "name", "rule", "status"}, keys sorted.
inline std::string to_jsonl(const RuleReport& r) {
  nlohmann::json j;
  j["model"] = r.model;
  j["name"] = r.name.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.name);
  j["rule"] = r.rule;
  j["status"] = to_string(r.status);
  j["certificate"] = r.certificate;
  return j.dump();
}

inline std::string to_jsonl(const std::vector<RuleReport>& reports) {
  std::string s;
  for (const auto& r : reports) s += to_jsonl(r) + "\n";
  return s;
}

}  // namespace culab

#endif  // CULAB_RULES_HPP
