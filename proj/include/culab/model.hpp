#ifndef CULAB_MODEL_HPP
#define CULAB_MODEL_HPP

// Finite positively ordered monoids.
//
// A finite model is a Cu-semigroup: increasing sequences stabilise, so the
// way-below relation coincides with the order (constant sequences give one
// direction, stabilisation the other). Every property in this library is
// therefore evaluated with x << y read as x <= y, and primed variables
// x' << x become x' <= x.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "culab/bitset.hpp"
#include "culab/error.hpp"

namespace culab {

using Element = std::uint32_t;

enum class OrderMode { algebraic, explicit_order };

inline const char* to_string(OrderMode m) noexcept {
  return m == OrderMode::algebraic ? "algebraic" : "explicit";
}

using AddTable = std::vector<std::vector<Element>>;

class FiniteOrderedMonoid {
 public:
  // Validates the data and throws ValidationError naming the first violated
  // law with a concrete binding. When `order` is empty the algebraic order
  // (x <= y iff x + c = y for some c) is computed from the table.
  static FiniteOrderedMonoid create(std::string name, std::vector<std::string> labels,
                                    Element zero, AddTable add,
                                    std::optional<BitMatrix> order,
                                    bool preorder_ok = false);

  std::size_t size() const noexcept { return d_->n; }
  auto elements() const noexcept { return std::views::iota(Element{0}, static_cast<Element>(d_->n)); }
  Element zero() const noexcept { return d_->zero; }
  const std::string& name() const noexcept { return d_->name; }
  const std::vector<std::string>& labels() const noexcept { return d_->labels; }
  const std::string& label(Element x) const { return d_->labels[x]; }
  std::optional<Element> find(const std::string& label) const {
    auto it = d_->index.find(label);
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
  }
  // Like find() but throws PreconditionFailed for an unknown label.
  Element at(const std::string& label) const {
    auto e = find(label);
    if (!e) throw PreconditionFailed("unknown element label \"" + label + "\"");
    return *e;
  }

  OrderMode order_mode() const noexcept { return d_->mode; }
  bool preorder_ok() const noexcept { return d_->preorder_ok; }

  Element add(Element x, Element y) const noexcept { return d_->add[x][y]; }
  const AddTable& add_table() const noexcept { return d_->add; }
  bool leq(Element x, Element y) const noexcept { return d_->leq.test(x, y); }
  const BitMatrix& leq_matrix() const noexcept { return d_->leq; }
  // {y : x <= y}
  const Bitset& up(Element x) const noexcept { return d_->leq.row(x); }
  // {y : y <= x}
  const Bitset& down(Element x) const noexcept { return d_->geq.row(x); }

  // k·x, with 0·x = 0.
  Element multiple(std::size_t k, Element x) const noexcept {
    Element r = d_->zero;
    for (std::size_t i = 0; i < k; ++i) r = add(r, x);
    return r;
  }
  // Stabilised value of the increasing sequence k·x. Not defined for
  // pre-ordered models (the multiples of a group element cycle).
  Element infinity(Element x) const {
    require_partial_order("infinity");
    return d_->inf[x];
  }

  // Throws UnsupportedModel when the model only carries a pre-order.
  void require_partial_order(const char* op) const {
    if (d_->preorder_ok)
      throw UnsupportedModel(std::string(op) + ": model '" + d_->name +
                             "' is pre-ordered; only the refinement operations accept it");
  }

  // Same structure under a new name.
  FiniteOrderedMonoid renamed(std::string name) const {
    auto d = std::make_shared<Data>(*d_);
    d->name = std::move(name);
    return FiniteOrderedMonoid(std::move(d));
  }

 private:
  struct Data {
    std::string name;
    std::size_t n = 0;
    Element zero = 0;
    std::vector<std::string> labels;
    std::unordered_map<std::string, Element> index;
    AddTable add;
    BitMatrix leq;
    BitMatrix geq;
    OrderMode mode = OrderMode::algebraic;
    bool preorder_ok = false;
    std::vector<Element> inf;
  };
  explicit FiniteOrderedMonoid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

// Algebraic pre-order of a table: x <= y iff x + c = y for some c.
inline BitMatrix algebraic_preorder(const AddTable& add) {
  const std::size_t n = add.size();
  BitMatrix r(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < n; ++c) r.set(x, add[x][c]);
  return r;
}

inline FiniteOrderedMonoid FiniteOrderedMonoid::create(std::string name,
                                                       std::vector<std::string> labels,
                                                       Element zero, AddTable add,
                                                       std::optional<BitMatrix> order,
                                                       bool preorder_ok) {
  const std::size_t n = labels.size();
  auto fail = [](const char* law, const std::string& msg) -> void {
    throw ValidationError(law, msg);
  };
  if (n == 0) fail("shape", "model has no elements");
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->n = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].empty()) fail("shape", "element " + std::to_string(i) + " has an empty label");
    if (!d->index.emplace(labels[i], static_cast<Element>(i)).second)
      fail("shape", "duplicate label \"" + labels[i] + "\"");
  }
  if (zero >= n) fail("shape", "zero index out of range");
  if (add.size() != n) fail("shape", "addition table has " + std::to_string(add.size()) + " rows, expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n)
      fail("shape", "addition table row \"" + labels[i] + "\" has wrong length");
    for (auto v : add[i])
      if (v >= n) fail("shape", "addition table row \"" + labels[i] + "\" has an out-of-range entry");
  }
  const auto& L = labels;
  auto sum = [&](std::size_t a, std::size_t b) { return "\"" + L[a] + "+" + L[b] + "\""; };

  for (std::size_t x = 0; x < n; ++x)
    if (add[zero][x] != x || add[x][zero] != x)
      fail("neutral", "zero is not neutral: " + sum(zero, x) + " = " + L[add[zero][x]] + ", " +
                          sum(x, zero) + " = " + L[add[x][zero]]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (add[x][y] != add[y][x])
        fail("commutativity", "commutativity violated: " + sum(x, y) + " = " + L[add[x][y]] +
                                  " but " + sum(y, x) + " = " + L[add[y][x]]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (add[add[x][y]][z] != add[x][add[y][z]])
          fail("associativity", "associativity violated at (" + L[x] + ", " + L[y] + ", " + L[z] +
                                    "): (x+y)+z = " + L[add[add[x][y]][z]] +
                                    ", x+(y+z) = " + L[add[x][add[y][z]]]);

  d->mode = order ? OrderMode::explicit_order : OrderMode::algebraic;
  BitMatrix leq = order ? std::move(*order) : algebraic_preorder(add);
  if (leq.size() != n) fail("shape", "order relation has the wrong dimension");
  for (std::size_t x = 0; x < n; ++x)
    if (!leq.test(x, x)) fail("reflexivity", "reflexivity violated (" + L[x] + " ≰ " + L[x] + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq.test(x, y))
        for (std::size_t z = 0; z < n; ++z)
          if (leq.test(y, z) && !leq.test(x, z))
            fail("transitivity", "transitivity violated (" + L[x] + " ≤ " + L[y] + " ≤ " + L[z] +
                                     " but " + L[x] + " ≰ " + L[z] + ")");
  if (!preorder_ok)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y && leq.test(x, y) && leq.test(y, x))
          fail("antisymmetry", "antisymmetry violated (" + L[x] + " ≤ " + L[y] + " ≤ " + L[x] + ")");
  for (std::size_t x = 0; x < n; ++x)
    if (!leq.test(zero, x)) fail("positivity", "positivity violated (" + L[zero] + " ≰ " + L[x] + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      if (leq.test(x, x2))
        for (std::size_t y = 0; y < n; ++y)
          if (!leq.test(add[x][y], add[x2][y]))
            fail("monotonicity", "addition not monotone (" + L[x] + " ≤ " + L[x2] + " but " +
                                     sum(x, y) + " ≰ " + sum(x2, y) + ")");

  d->labels = std::move(labels);
  d->zero = zero;
  d->geq = leq.transposed();
  d->leq = std::move(leq);
  d->add = std::move(add);
  d->preorder_ok = preorder_ok;
  if (!preorder_ok) {
    d->inf.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      Element cur = zero;
      std::size_t k = 0;
      while (true) {
        Element next = d->add[cur][x];
        if (next == cur) break;
        cur = next;
        if (++k > n) throw InternalError("multiples of \"" + d->labels[x] + "\" do not stabilise");
      }
      d->inf[x] = cur;
    }
  }
  return FiniteOrderedMonoid(std::move(d));
}

// ∞x: the stabilised multiple of x.
inline Element infinity_multiple(const FiniteOrderedMonoid& S, Element x) { return S.infinity(x); }

// x is full iff the ideal it generates is all of S, i.e. y <= ∞x for all y.
inline bool is_full(const FiniteOrderedMonoid& S, Element x) {
  return S.down(S.infinity(x)).count() == S.size();
}

inline bool is_idempotent(const FiniteOrderedMonoid& S) {
  for (Element e : S.elements())
    if (S.add(e, e) != e) return false;
  return true;
}

// x << y from the chain definition: every increasing sequence whose supremum
// dominates y has a member above x. In a finite poset such a sequence is
// eventually constant at some c >= y, so this is "x <= c for every c >= y".
inline bool way_below(const FiniteOrderedMonoid& S, Element x, Element y) {
  return S.up(y).is_subset_of(S.up(x));
}

// Sum of a list of elements (0 for the empty list).
inline Element sum_of(const FiniteOrderedMonoid& S, const std::vector<Element>& xs) {
  Element s = S.zero();
  for (auto x : xs) s = S.add(s, x);
  return s;
}

}  // namespace culab

#endif  // CULAB_MODEL_HPP
