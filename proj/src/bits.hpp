#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumprod::detail {

// Dense bit table over [0, nbits).
class Bits {
 public:
  explicit Bits(std::uint64_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  std::uint64_t size() const { return nbits_; }

  // this |= src << shift (bits shifted past the end are dropped). Safe when
  // &src == this because words are visited from the top down.
  void or_shifted(const Bits& src, std::uint64_t shift) {
    const std::size_t word_shift = shift >> 6;
    const unsigned bit_shift = shift & 63;
    const std::size_t n = words_.size();
    if (word_shift >= n) return;
    for (std::size_t i = std::min(src.words_.size(), n - word_shift); i-- > 0;) {
      const std::uint64_t w = src.words_[i];
      if (w == 0) continue;
      words_[i + word_shift] |= w << bit_shift;
      if (bit_shift != 0 && i + word_shift + 1 < n) words_[i + word_shift + 1] |= w >> (64 - bit_shift);
    }
    trim();
  }

  void or_with(const Bits& src) {
    for (std::size_t i = 0; i < words_.size() && i < src.words_.size(); ++i) words_[i] |= src.words_[i];
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return c;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        f(static_cast<std::uint64_t>(i) * 64 + b);
        w &= w - 1;
      }
    }
  }

 private:
  void trim() {
    if (nbits_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
  }

  std::uint64_t nbits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace sumprod::detail
