#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plport {

/// Arbitrary-precision signed integer, just large enough for a term model
/// that must never truncate. Supports construction, parsing in bases
/// 2/8/10/16, decimal printing, ordering, and big-endian magnitude export.
class BigInt {
public:
  BigInt() = default;

  BigInt(long long v) {
    negative_ = v < 0;
    // avoid overflow on LLONG_MIN
    unsigned long long m = negative_ ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
    append_u64(m);
  }

  BigInt(unsigned long long v) { append_u64(v); }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  /// Parses an unsigned digit string in the given base (2, 8, 10 or 16).
  /// Throws std::invalid_argument on an empty string or a bad digit.
  static BigInt parse(std::string_view digits, int base = 10) {
    if (digits.empty())
      throw std::invalid_argument("BigInt::parse: empty digit string");
    BigInt r;
    for (char c : digits) {
      int d = digit_value(c);
      if (d < 0 || d >= base)
        throw std::invalid_argument("BigInt::parse: invalid digit");
      r.mul_add(static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(d));
    }
    return r;
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }

  BigInt negated() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
  }

  bool operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
  }
  bool operator!=(const BigInt& o) const { return !(*this == o); }

  bool operator<(const BigInt& o) const { return compare(o) < 0; }
  bool operator>(const BigInt& o) const { return compare(o) > 0; }
  bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
  bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

  int compare(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_ ? -1 : 1;
    int m = compare_magnitude(o);
    return negative_ ? -m : m;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      for (int k = 0; k < 9 && !(work.empty() && rem == 0); ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    if (digits.empty()) digits.push_back('0');
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  /// Minimal big-endian magnitude bytes; empty for zero.
  std::vector<std::uint8_t> magnitude_bytes_be() const {
    std::vector<std::uint8_t> out;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::uint32_t limb = limbs_[i];
      for (int shift = 24; shift >= 0; shift -= 8) {
        std::uint8_t b = static_cast<std::uint8_t>((limb >> shift) & 0xFF);
        if (out.empty() && b == 0) continue;
        out.push_back(b);
      }
    }
    return out;
  }

  /// Value as int64 if representable.
  bool fits_int64(long long& out) const {
    if (limbs_.size() > 2) return false;
    unsigned long long m = 0;
    if (!limbs_.empty()) m = limbs_[0];
    if (limbs_.size() == 2) m |= static_cast<unsigned long long>(limbs_[1]) << 32;
    if (negative_) {
      if (m > 0x8000000000000000ULL) return false;
      out = -static_cast<long long>(m - 1) - 1;
    } else {
      if (m > 0x7FFFFFFFFFFFFFFFULL) return false;
      out = static_cast<long long>(m);
    }
    return true;
  }

private:
  static int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  }

  void append_u64(unsigned long long m) {
    if (m == 0) return;
    limbs_.push_back(static_cast<std::uint32_t>(m & 0xFFFFFFFFu));
    if (m >> 32) limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
  }

  void mul_add(std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
      limb = static_cast<std::uint32_t>(cur & 0xFFFFFFFFu);
      carry = cur >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry & 0xFFFFFFFFu));
      carry >>= 32;
    }
  }

  int compare_magnitude(const BigInt& o) const {
    if (limbs_.size() != o.limbs_.size())
      return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  // little-endian 32-bit limbs, no trailing zeros; zero has no limbs and
  // is never negative
  std::vector<std::uint32_t> limbs_;
  bool negative_ = false;
};

}  // namespace plport
