#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <bit>
#include <vector>

namespace tpplab {

// Fixed-capacity bitset over element indices. Capacity matches the table
// verification cap (512), so one mask type serves every group this library
// will load. Word 0 bit 0 is always the identity after normalization.
class ElemMask {
public:
  static constexpr std::size_t kCapacity = 512;
  static constexpr std::size_t kWords = kCapacity / 64;

  ElemMask() : w_{} {}

  static ElemMask identity_only() {
    ElemMask m;
    m.set(0);
    return m;
  }

  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::size_t(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  // True when the mask is exactly {identity}.
  bool is_identity_only() const {
    if (w_[0] != 1) return false;
    for (std::size_t k = 1; k < kWords; ++k)
      if (w_[k]) return false;
    return true;
  }

  bool contains(const ElemMask& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (other.w_[k] & ~w_[k]) return false;
    return true;
  }

  bool intersects_only_identity(const ElemMask& other) const {
    if ((w_[0] & other.w_[0]) != (w_[0] & other.w_[0] & 1)) return false;
    for (std::size_t k = 1; k < kWords; ++k)
      if (w_[k] & other.w_[k]) return false;
    return true;
  }

  ElemMask operator&(const ElemMask& o) const {
    ElemMask r;
    for (std::size_t k = 0; k < kWords; ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  ElemMask operator|(const ElemMask& o) const {
    ElemMask r;
    for (std::size_t k = 0; k < kWords; ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }
  ElemMask& operator|=(const ElemMask& o) {
    for (std::size_t k = 0; k < kWords; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  ElemMask& operator&=(const ElemMask& o) {
    for (std::size_t k = 0; k < kWords; ++k) w_[k] &= o.w_[k];
    return *this;
  }

  bool operator==(const ElemMask& o) const { return w_ == o.w_; }
  bool operator!=(const ElemMask& o) const { return w_ != o.w_; }

  // Canonical order used for lattice listings: the set containing the
  // smaller first-differing element sorts first. Together with a size key
  // this gives the (size, lexicographic) order the output formats pin down.
  static bool lex_less(const ElemMask& a, const ElemMask& b) {
    for (std::size_t k = 0; k < kWords; ++k) {
      std::uint64_t diff = a.w_[k] ^ b.w_[k];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.w_[k] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return std::size_t(h);
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < kWords; ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        unsigned bit = unsigned(std::countr_zero(w));
        fn(unsigned(k * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<unsigned> to_indices() const {
    std::vector<unsigned> out;
    out.reserve(count());
    for_each([&](unsigned i) { out.push_back(i); });
    return out;
  }

  static ElemMask from_indices(const std::vector<unsigned>& idx) {
    ElemMask m;
    for (unsigned i : idx) m.set(i);
    return m;
  }

  // Mask with bits [0, n) set.
  static ElemMask full(std::size_t n) {
    ElemMask m;
    for (std::size_t k = 0; k < kWords; ++k) {
      if (n >= (k + 1) * 64)
        m.w_[k] = ~std::uint64_t{0};
      else if (n > k * 64)
        m.w_[k] = (~std::uint64_t{0}) >> (64 - (n - k * 64));
    }
    return m;
  }

private:
  std::array<std::uint64_t, kWords> w_;
};

struct ElemMaskHash {
  std::size_t operator()(const ElemMask& m) const { return m.hash(); }
};

}  // namespace tpplab
