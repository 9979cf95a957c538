#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace astck {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a subtraction would leave the natural numbers.
class HyperNatUnderflow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * A natural number that is either finite or huge.
 *
 * Huge values are linear forms c*w + k over a single symbolic anchor w that
 * sits above every finite natural. The anchor is only a reference point:
 * w - k stays huge for every finite k, so the huge tier has no least element.
 *
 * Ordering is lexicographic on (omega_coeff, offset). Both components are
 * arbitrary precision.
 */
class HyperNat {
 public:
  HyperNat() = default;

  static HyperNat finite(BigInt k) {
    if (k < 0) {
      throw std::invalid_argument("finite natural must be nonnegative, got " +
                                  k.str());
    }
    return HyperNat(0, std::move(k));
  }

  static HyperNat huge(BigInt c, BigInt k = 0) {
    if (c <= 0) {
      throw std::invalid_argument("huge natural needs a positive w coefficient, got " +
                                  c.str());
    }
    return HyperNat(std::move(c), std::move(k));
  }

  /// Parses `k`, `w`, `w+k`, `w-k`, `c*w`, `c*w+k` or `c*w-k`.
  static HyperNat parse(std::string_view text);

  const BigInt& omega_coeff() const noexcept { return omega_; }
  const BigInt& offset() const noexcept { return offset_; }

  bool is_finite() const noexcept { return omega_ == 0; }
  bool is_huge() const noexcept { return omega_ != 0; }

  std::string to_string() const;

  friend bool operator==(const HyperNat&, const HyperNat&) = default;

  friend std::strong_ordering operator<=>(const HyperNat& x, const HyperNat& y) {
    if (x.omega_ != y.omega_) {
      return x.omega_ < y.omega_ ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    }
    if (x.offset_ != y.offset_) {
      return x.offset_ < y.offset_ ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend HyperNat operator+(const HyperNat& x, const HyperNat& y) {
    return HyperNat(x.omega_ + y.omega_, x.offset_ + y.offset_);
  }

  /// Throws HyperNatUnderflow if the difference is not a natural number.
  friend HyperNat operator-(const HyperNat& x, const HyperNat& y) {
    BigInt c = x.omega_ - y.omega_;
    BigInt k = x.offset_ - y.offset_;
    if (c < 0 || (c == 0 && k < 0)) {
      throw HyperNatUnderflow("hypernat underflow: " + x.to_string() + " - " +
                              y.to_string());
    }
    return HyperNat(std::move(c), std::move(k));
  }

  /// Scalar multiple; the scalar must be a nonnegative finite integer.
  friend HyperNat operator*(const BigInt& s, const HyperNat& x) {
    if (s < 0) {
      throw std::invalid_argument("hypernat scalar must be nonnegative");
    }
    if (s == 0) return HyperNat();
    return HyperNat(s * x.omega_, s * x.offset_);
  }

  HyperNat& operator+=(const HyperNat& y) { return *this = *this + y; }
  HyperNat& operator-=(const HyperNat& y) { return *this = *this - y; }

  HyperNat successor() const { return HyperNat(omega_, offset_ + 1); }
  HyperNat predecessor() const { return *this - HyperNat(0, 1); }

 private:
  HyperNat(BigInt c, BigInt k) : omega_(std::move(c)), offset_(std::move(k)) {}

  BigInt omega_ = 0;
  BigInt offset_ = 0;
};

inline HyperNat finite(BigInt k) { return HyperNat::finite(std::move(k)); }
inline HyperNat huge(BigInt c, BigInt k = 0) {
  return HyperNat::huge(std::move(c), std::move(k));
}

inline HyperNat add(const HyperNat& x, const HyperNat& y) { return x + y; }
inline HyperNat sub(const HyperNat& x, const HyperNat& y) { return x - y; }
inline std::strong_ordering cmp(const HyperNat& x, const HyperNat& y) {
  return x <=> y;
}
inline bool is_finite(const HyperNat& x) noexcept { return x.is_finite(); }

/// |x - y|, always defined.
inline HyperNat abs_diff(const HyperNat& x, const HyperNat& y) {
  return x < y ? y - x : x - y;
}

inline std::string HyperNat::to_string() const {
  if (is_finite()) return offset_.str();
  std::string out = omega_.str() + "*w";
  if (offset_ < 0) {
    BigInt magnitude = -offset_;
    out += "-" + magnitude.str();
  } else {
    out += "+" + offset_.str();
  }
  return out;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

inline BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed hypernat '" + std::string(whole) + "'");
  }
  return BigInt(std::string(s));
}

}  // namespace detail

inline HyperNat HyperNat::parse(std::string_view text) {
  const auto w = text.find('w');
  if (w == std::string_view::npos) {
    return HyperNat::finite(detail::parse_digits(text, text));
  }

  BigInt coeff = 1;
  const std::string_view head = text.substr(0, w);
  if (!head.empty()) {
    if (head.back() != '*') {
      throw std::invalid_argument("malformed hypernat '" + std::string(text) + "'");
    }
    coeff = detail::parse_digits(head.substr(0, head.size() - 1), text);
  }

  BigInt offset = 0;
  const std::string_view tail = text.substr(w + 1);
  if (!tail.empty()) {
    if (tail.front() != '+' && tail.front() != '-') {
      throw std::invalid_argument("malformed hypernat '" + std::string(text) + "'");
    }
    offset = detail::parse_digits(tail.substr(1), text);
    if (tail.front() == '-') offset = -offset;
  }

  if (coeff == 0) {
    throw std::invalid_argument("hypernat '" + std::string(text) +
                                "' has a zero w coefficient");
  }
  return HyperNat(std::move(coeff), std::move(offset));
}

}  // namespace astck
