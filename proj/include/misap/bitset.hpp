#pragma once

// Dense bit-vector over a fixed universe of element ids. All set algebra is
// exact; binary operations require both operands to share the same universe.

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace misap {

using ElementId = std::uint32_t;

class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static ElementSet of(std::size_t universe, std::initializer_list<ElementId> ids) {
    ElementSet s(universe);
    for (ElementId e : ids) s.insert(e);
    return s;
  }

  static ElementSet single(std::size_t universe, ElementId e) {
    ElementSet s(universe);
    s.insert(e);
    return s;
  }

  std::size_t universe() const { return n_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  bool test(ElementId e) const {
    assert(e < n_);
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }

  ElementSet& insert(ElementId e) {
    assert(e < n_);
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
    return *this;
  }

  ElementSet& erase(ElementId e) {
    assert(e < n_);
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
    return *this;
  }

  ElementSet plus(ElementId e) const {
    ElementSet s(*this);
    s.insert(e);
    return s;
  }

  ElementSet minus(ElementId e) const {
    ElementSet s(*this);
    s.erase(e);
    return s;
  }

  ElementSet& operator|=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  ElementSet& operator^=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  // Set difference (elements of *this not in o).
  ElementSet& operator-=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    ElementSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool is_subset_of(const ElementSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const ElementSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  // Strict weak order so sets can key ordered containers; compares universes
  // then words.
  bool operator<(const ElementSet& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return words_ < o.words_;
  }

  // Visits members in increasing id order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        unsigned b = static_cast<unsigned>(std::countr_zero(w));
        f(static_cast<ElementId>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<ElementId> to_vector() const {
    std::vector<ElementId> v;
    v.reserve(count());
    for_each([&](ElementId e) { v.push_back(e); });
    return v;
  }

  // Smallest member; only valid on a nonempty set.
  ElementId front() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i])
        return static_cast<ElementId>(i * 64 + std::countr_zero(words_[i]));
    assert(false && "front() of empty set");
    return 0;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ n_;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for_each([&](ElementId e) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    });
    return s + "}";
  }

private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace misap

template <>
struct std::hash<misap::ElementSet> {
  std::size_t operator()(const misap::ElementSet& s) const noexcept { return s.hash(); }
};
