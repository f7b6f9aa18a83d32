#ifndef CULAB_CERTIFICATE_HPP
#define CULAB_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "culab/model.hpp"

namespace culab {

// Named variable bindings certifying either the failure of a universal
// statement (a counterexample) or the success of an existential one (a
// witness). Bindings keep insertion order, which is the quantifier order.
struct Certificate {
  std::string id;
  std::string form;
  std::vector<std::pair<std::string, Element>> bindings;
  std::vector<std::pair<std::string, std::vector<Element>>> lists;
  std::vector<std::pair<std::string, long long>> params;

  Certificate& bind(std::string name, Element e) {
    bindings.emplace_back(std::move(name), e);
    return *this;
  }
  Certificate& list(std::string name, std::vector<Element> es) {
    lists.emplace_back(std::move(name), std::move(es));
    return *this;
  }
  Certificate& param(std::string name, long long v) {
    params.emplace_back(std::move(name), v);
    return *this;
  }

  std::optional<Element> get(const std::string& name) const {
    for (const auto& [k, v] : bindings)
      if (k == name) return v;
    return std::nullopt;
  }
  Element at(const std::string& name) const {
    auto v = get(name);
    if (!v) throw InternalError("certificate " + id + " has no binding " + name);
    return *v;
  }
  const std::vector<Element>* get_list(const std::string& name) const {
    for (const auto& [k, v] : lists)
      if (k == name) return &v;
    return nullptr;
  }
  std::optional<long long> get_param(const std::string& name) const {
    for (const auto& [k, v] : params)
      if (k == name) return v;
    return std::nullopt;
  }
};

// Verdict of a decision procedure. For universal properties a failing result
// carries a counterexample; a passing result may carry a witness.
struct CheckResult {
  bool holds = true;
  std::optional<Certificate> certificate;

  explicit operator bool() const noexcept { return holds; }

  static CheckResult pass() { return {true, std::nullopt}; }
  static CheckResult pass(Certificate w) { return {true, std::move(w)}; }
  static CheckResult fail(Certificate c) { return {false, std::move(c)}; }
};

inline nlohmann::json to_json(const FiniteOrderedMonoid& S, const Certificate& c) {
  nlohmann::json j;
  j["id"] = c.id;
  if (!c.form.empty()) j["form"] = c.form;
  nlohmann::json b = nlohmann::json::object();
  for (const auto& [k, v] : c.bindings) b[k] = S.label(v);
  j["bindings"] = b;
  if (!c.lists.empty()) {
    nlohmann::json l = nlohmann::json::object();
    for (const auto& [k, v] : c.lists) {
      nlohmann::json arr = nlohmann::json::array();
      for (auto e : v) arr.push_back(S.label(e));
      l[k] = arr;
    }
    j["lists"] = l;
  }
  if (!c.params.empty()) {
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : c.params) p[k] = v;
    j["params"] = p;
  }
  return j;
}

// "x=p y=0 z=q" style rendering.
inline std::string format_bindings(const FiniteOrderedMonoid& S, const Certificate& c) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += ' ';
  };
  for (const auto& [k, v] : c.params) {
    sep();
    out += k + "=" + std::to_string(v);
  }
  for (const auto& [k, v] : c.bindings) {
    sep();
    out += k + "=" + S.label(v);
  }
  for (const auto& [k, v] : c.lists) {
    sep();
    out += k + "=[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += S.label(v[i]);
    }
    out += "]";
  }
  return out;
}

}  // namespace culab

#endif  // CULAB_CERTIFICATE_HPP
