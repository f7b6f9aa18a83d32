#ifndef CULAB_DOCUMENT_HPP
#define CULAB_DOCUMENT_HPP

// JSON model documents:
//
//   {"add": [[label...]...], "elements": [label...], "name": string,
//    "order": "algebraic" | {"pairs": [[label, label]...]},
//    "preorder_ok": bool (optional), "zero": label}
//
// add[i][j] is the label of elements[i] + elements[j]. Explicit order pairs
// generate the order: parsing keeps them verbatim, validation takes their
// reflexive-transitive closure. Emission is deterministic: sorted keys,
// two-space indentation, "\n" line endings and a trailing newline.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "culab/error.hpp"
#include "culab/model.hpp"

namespace culab {

struct ModelDocument {
  std::string name;
  std::vector<std::string> elements;
  std::string zero;
  std::vector<std::vector<std::string>> add;
  // nullopt means "algebraic".
  std::optional<std::vector<std::pair<std::string, std::string>>> order_pairs;
  std::optional<bool> preorder_ok;

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

namespace detail {

inline const nlohmann::json& expect_field(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::string expect_string(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace detail

inline ModelDocument parse_model(std::string_view bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("/: expected a JSON object");
  static const std::set<std::string> allowed = {"name", "elements", "zero", "add", "order",
                                                "preorder_ok"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.contains(it.key())) throw ParseError("unknown field \"" + it.key() + "\"");

  ModelDocument doc;
  doc.name = detail::expect_string(detail::expect_field(j, "name"), "/name");

  const auto& els = detail::expect_field(j, "elements");
  if (!els.is_array()) throw ParseError("/elements: expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < els.size(); ++i) {
    auto l = detail::expect_string(els[i], "/elements/" + std::to_string(i));
    if (l.empty()) throw ParseError("/elements/" + std::to_string(i) + ": empty label");
    if (!seen.insert(l).second)
      throw ParseError("/elements/" + std::to_string(i) + ": duplicate label \"" + l + "\"");
    doc.elements.push_back(std::move(l));
  }

  doc.zero = detail::expect_string(detail::expect_field(j, "zero"), "/zero");

  const auto& add = detail::expect_field(j, "add");
  if (!add.is_array()) throw ParseError("/add: expected an array");
  for (std::size_t i = 0; i < add.size(); ++i) {
    const auto where = "/add/" + std::to_string(i);
    if (!add[i].is_array()) throw ParseError(where + ": expected an array");
    std::vector<std::string> row;
    for (std::size_t k = 0; k < add[i].size(); ++k)
      row.push_back(detail::expect_string(add[i][k], where + "/" + std::to_string(k)));
    doc.add.push_back(std::move(row));
  }

  const auto& ord = detail::expect_field(j, "order");
  if (ord.is_string()) {
    if (ord.get<std::string>() != "algebraic")
      throw ParseError("/order: expected \"algebraic\" or {\"pairs\": [...]}");
  } else if (ord.is_object()) {
    if (ord.size() != 1 || !ord.contains("pairs"))
      throw ParseError("/order: object must have exactly the field \"pairs\"");
    const auto& pairs = ord["pairs"];
    if (!pairs.is_array()) throw ParseError("/order/pairs: expected an array");
    std::vector<std::pair<std::string, std::string>> ps;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto where = "/order/pairs/" + std::to_string(i);
      if (!pairs[i].is_array() || pairs[i].size() != 2)
        throw ParseError(where + ": expected a [label, label] pair");
      ps.emplace_back(detail::expect_string(pairs[i][0], where + "/0"),
                      detail::expect_string(pairs[i][1], where + "/1"));
    }
    doc.order_pairs = std::move(ps);
  } else {
    throw ParseError("/order: expected \"algebraic\" or {\"pairs\": [...]}");
  }

  if (auto it = j.find("preorder_ok"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("/preorder_ok: expected a boolean");
    doc.preorder_ok = it->get<bool>();
  }
  return doc;
}

inline std::string emit_model(const ModelDocument& doc) {
  nlohmann::json j;
  j["name"] = doc.name;
  j["elements"] = doc.elements;
  j["zero"] = doc.zero;
  j["add"] = doc.add;
  if (doc.order_pairs) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : *doc.order_pairs) pairs.push_back({a, b});
    j["order"] = {{"pairs", pairs}};
  } else {
    j["order"] = "algebraic";
  }
  if (doc.preorder_ok) j["preorder_ok"] = *doc.preorder_ok;
  return j.dump(2) + "\n";
}

inline FiniteOrderedMonoid validate(const ModelDocument& doc) {
  const std::size_t n = doc.elements.size();
  std::unordered_map<std::string, Element> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (!idx.emplace(doc.elements[i], static_cast<Element>(i)).second)
      throw ValidationError("shape", "duplicate label \"" + doc.elements[i] + "\"");
  auto lookup = [&](const std::string& l, const std::string& where) {
    auto it = idx.find(l);
    if (it == idx.end()) throw ValidationError("shape", where + ": unknown label \"" + l + "\"");
    return it->second;
  };
  Element zero = lookup(doc.zero, "zero");
  if (doc.add.size() != n)
    throw ValidationError("shape", "addition table has " + std::to_string(doc.add.size()) +
                                       " rows, expected " + std::to_string(n));
  AddTable add(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (doc.add[i].size() != n)
      throw ValidationError("shape", "addition table row \"" + doc.elements[i] + "\" has " +
                                         std::to_string(doc.add[i].size()) + " entries, expected " +
                                         std::to_string(n));
    for (std::size_t k = 0; k < n; ++k)
      add[i][k] = lookup(doc.add[i][k], "add[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  std::optional<BitMatrix> order;
  if (doc.order_pairs) {
    BitMatrix r(n);
    for (const auto& [a, b] : *doc.order_pairs) r.set(lookup(a, "order"), lookup(b, "order"));
    r.close_reflexive_transitive();
    order = std::move(r);
  }
  return FiniteOrderedMonoid::create(doc.name, doc.elements, zero, std::move(add), std::move(order),
                                     doc.preorder_ok.value_or(false));
}

inline ModelDocument to_document(const FiniteOrderedMonoid& S) {
  ModelDocument doc;
  doc.name = S.name();
  doc.elements = S.labels();
  doc.zero = S.label(S.zero());
  for (Element x : S.elements()) {
    std::vector<std::string> row;
    for (Element y : S.elements()) row.push_back(S.label(S.add(x, y)));
    doc.add.push_back(std::move(row));
  }
  if (S.order_mode() == OrderMode::explicit_order) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (Element x : S.elements())
      for (Element y : S.elements())
        if (x != y && S.leq(x, y)) pairs.emplace_back(S.label(x), S.label(y));
    doc.order_pairs = std::move(pairs);
  }
  if (S.preorder_ok()) doc.preorder_ok = true;
  return doc;
}

inline FiniteOrderedMonoid parse_and_validate(std::string_view bytes) {
  return validate(parse_model(bytes));
}

inline std::string emit_model(const FiniteOrderedMonoid& S) { return emit_model(to_document(S)); }

}  // namespace culab

#endif  // CULAB_DOCUMENT_HPP
