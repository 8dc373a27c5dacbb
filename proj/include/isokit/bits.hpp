#ifndef ISOKIT_BITS_HPP
#define ISOKIT_BITS_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace isokit {

// Fixed-length bit vector. The first 64 bits live inline so that the common
// small-domain case never touches the heap.
//
// Ordering treats the vector as an unsigned binary number whose bit 0 is the
// least significant, i.e. position n-1 is compared first.
class Bits {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bits() = default;
  explicit Bits(std::size_t size) : size_(size) {
    if (size > 64) rest_.assign((size - 1) / 64, 0);
  }

  static Bits from_word(std::size_t size, std::uint64_t word) {
    Bits b(size);
    b.first_ = word & b.mask_for(0);
    return b;
  }

  // Character i of the string is bit i; only '0' and '1' are accepted by the
  // caller (parse layer validates).
  static Bits from_string(std::string_view text) {
    Bits b(text.size());
    for (std::size_t i = 0; i < text.size(); ++i)
      if (text[i] == '1') b.set(i);
    return b;
  }

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return size_ == 0 ? 0 : 1 + rest_.size(); }

  std::uint64_t word(std::size_t w) const { return w == 0 ? first_ : rest_[w - 1]; }
  std::uint64_t& word_ref(std::size_t w) { return w == 0 ? first_ : rest_[w - 1]; }

  bool test(std::size_t i) const { return (word(i / 64) >> (i % 64)) & 1U; }
  void set(std::size_t i) { word_ref(i / 64) |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { word_ref(i / 64) &= ~(std::uint64_t{1} << (i % 64)); }
  void assign(std::size_t i, bool v) {
    if (v)
      set(i);
    else
      reset(i);
  }

  void set_all() {
    for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) = mask_for(w);
  }
  void clear() {
    first_ = 0;
    for (auto& w : rest_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = static_cast<std::size_t>(std::popcount(first_));
    for (auto w : rest_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    if (first_ != 0) return false;
    for (auto w : rest_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool is_subset_of(const Bits& other) const {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (word(w) & ~other.word(w)) return false;
    return true;
  }
  bool intersects(const Bits& other) const {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (word(w) & other.word(w)) return true;
    return false;
  }

  std::size_t find_first() const { return find_from(0); }
  std::size_t find_next(std::size_t i) const { return find_from(i + 1); }

  Bits& operator&=(const Bits& o) {
    for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) &= o.word(w);
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) |= o.word(w);
    return *this;
  }
  // Clears every bit that is set in o.
  Bits& subtract(const Bits& o) {
    for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) &= ~o.word(w);
    return *this;
  }
  Bits complement() const {
    Bits r(size_);
    for (std::size_t w = 0; w < word_count(); ++w) r.word_ref(w) = ~word(w) & mask_for(w);
    return r;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = find_first(); i != npos; i = find_next(i)) s[i] = '1';
    return s;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
    for (std::size_t w = 0; w < word_count(); ++w) {
      h ^= word(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.size_ == b.size_ && a.first_ == b.first_ && a.rest_ == b.rest_;
  }
  friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    for (std::size_t w = a.word_count(); w-- > 0;) {
      if (auto c = a.word(w) <=> b.word(w); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::uint64_t mask_for(std::size_t w) const {
    std::size_t bits_in_word = (w + 1) * 64 <= size_ ? 64 : size_ - w * 64;
    return bits_in_word == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits_in_word) - 1);
  }

  std::size_t find_from(std::size_t i) const {
    if (i >= size_) return npos;
    std::size_t w = i / 64;
    std::uint64_t cur = word(w) & (~std::uint64_t{0} << (i % 64));
    while (true) {
      if (cur != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w >= word_count()) return npos;
      cur = word(w);
    }
  }

  std::size_t size_ = 0;
  std::uint64_t first_ = 0;
  std::vector<std::uint64_t> rest_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace isokit

#endif  // ISOKIT_BITS_HPP
