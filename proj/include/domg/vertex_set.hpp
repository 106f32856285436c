#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace domg {

// Set of vertices from a fixed universe 0..n-1, stored as packed bits.
// Operations between sets require equal universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.set(v);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }

  int universe_size() const { return n_; }

  bool test(int v) const {
    check_vertex(v);
    return (w_[size_t(v) >> 6] >> (v & 63)) & 1u;
  }

  VertexSet& set(int v) {
    check_vertex(v);
    w_[size_t(v) >> 6] |= uint64_t(1) << (v & 63);
    return *this;
  }

  VertexSet& reset(int v) {
    check_vertex(v);
    w_[size_t(v) >> 6] &= ~(uint64_t(1) << (v & 63));
    return *this;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool none() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool intersects(const VertexSet& o) const {
    check_universe(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_universe(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  // Lowest member, -1 when empty.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size_t(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_universe(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_universe(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  VertexSet& subtract(const VertexSet& o) {
    check_universe(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  bool operator==(const VertexSet&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        f(int(i * 64) + __builtin_ctzll(w));
        w &= w - 1;
      }
    }
  }

  // Low word of the bit representation; only meaningful when n <= 64.
  uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
  }
  void check_universe(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace domg
