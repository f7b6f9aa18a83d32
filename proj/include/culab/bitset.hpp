#ifndef CULAB_BITSET_HPP
#define CULAB_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace culab {

// Fixed-width (after construction) bitset over element indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return nbits_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  // this ⊆ other
  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  // Smallest set index >= from, or size() when there is none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= nbits_) return nbits_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) {
        std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return i < nbits_ ? i : nbits_;
      }
      if (++wi >= words_.size()) return nbits_;
      w = words_[wi];
    }
  }
  std::size_t first() const noexcept { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = first(); i < nbits_; i = next(i + 1)) f(i);
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Square boolean relation stored row-wise.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : rows_(n, Bitset(n)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  bool test(std::size_t i, std::size_t j) const noexcept { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j) noexcept { rows_[i].set(j); }
  void reset(std::size_t i, std::size_t j) noexcept { rows_[i].reset(j); }
  const Bitset& row(std::size_t i) const noexcept { return rows_[i]; }

  BitMatrix transposed() const {
    BitMatrix t(size());
    for (std::size_t i = 0; i < size(); ++i) rows_[i].for_each([&](std::size_t j) { t.set(j, i); });
    return t;
  }

  // Reflexive-transitive closure (Warshall over bit rows).
  void close_reflexive_transitive() {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) rows_[i].set(i);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (rows_[i].test(k)) rows_[i] |= rows_[k];
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<Bitset> rows_;
};

}  // namespace culab

#endif  // CULAB_BITSET_HPP
