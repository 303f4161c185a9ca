#pragma once

#include <charconv>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mpg {

/// Exact rational with 64-bit numerator and positive 64-bit denominator,
/// always kept in lowest terms. Comparisons and arithmetic run through
/// 128-bit intermediates; a reduced result outside 64-bit range throws
/// std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) { *this = reduced(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const __int128 num = static_cast<__int128>(a.num_) * b.den_ +
                         static_cast<__int128>(b.num_) * a.den_;
    const __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return reduced(num, den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator/(const Rational& a, std::int64_t divisor) {
    return reduced(a.num_, static_cast<__int128>(a.den_) * divisor);
  }

  /// "y/z", or just "y" when the denominator is 1.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  /// Parses "y" or "y/z" with optional sign. Throws std::invalid_argument.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
      return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

 private:
  static Rational reduced(__int128 num, __int128 den) {
    if (den == 0)
      throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    unsigned __int128 a = num < 0 ? static_cast<unsigned __int128>(-num)
                                  : static_cast<unsigned __int128>(num);
    unsigned __int128 b = static_cast<unsigned __int128>(den);
    while (b != 0) {
      const unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= static_cast<__int128>(a);
      den /= static_cast<__int128>(a);
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("rational exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    // from_chars rejects a leading '+', allow it for symmetry with '-'
    if (!s.empty() && s.front() == '+')
      s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    return value;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mpg
