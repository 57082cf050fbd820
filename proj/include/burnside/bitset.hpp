#pragma once

#include <cstdint>
#include <vector>

namespace burnside {

// Set of element ids on a fixed universe of size n, packed into 64-bit words.
// Subgroup membership, coset bookkeeping and lattice rows all live on this.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  bool subset_of(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // Orders sets by the smallest element where they differ: the set missing
  // that element compares smaller. Gives the deterministic subgroup order.
  bool operator<(const Bitset& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k] ^ o.w_[k];
      if (x) return (w_[k] & (x & -x)) == 0;
    }
    return false;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        f(int(k * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace burnside
