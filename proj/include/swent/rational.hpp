#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator. Config literals
// such as "10/3" and the set-point switching breakpoints are kept exact until
// the final conversion to double.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swent {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return make(-i128(num_), den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <= i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  // Accepts "a/b", plain integers, and decimal/scientific literals whose
  // exact value fits. Throws std::invalid_argument on malformed input and
  // std::overflow_error when the exact value does not fit in 64/64 bits.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty number literal");
    if (auto pos = text.find('/'); pos != std::string_view::npos) {
      Rational n = parse_decimal(trim(text.substr(0, pos)));
      Rational d = parse_decimal(trim(text.substr(pos + 1)));
      return n / d;
    }
    return parse_decimal(text);
  }

 private:
  using i128 = __int128;

  static std::int64_t narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
      throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
  }
  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static Rational make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static Rational parse_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    }
    i128 mantissa = 0;
    long frac_digits = 0;
    long digits = 0;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (c == '.') {
        if (seen_dot) throw std::invalid_argument("malformed number");
        seen_dot = true;
        continue;
      }
      if (c == 'e' || c == 'E') break;
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument(std::string("malformed number: ") +
                                    std::string(s));
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > (i128(INT64_MAX) * 1000000000))
        throw std::overflow_error("rational overflow");
      ++digits;
      if (seen_dot) ++frac_digits;
    }
    if (digits == 0) throw std::invalid_argument("malformed number");
    long exp10 = 0;
    if (i < s.size()) {  // exponent part
      ++i;
      bool eneg = false;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        eneg = s[i] == '-';
        ++i;
      }
      if (i == s.size()) throw std::invalid_argument("malformed exponent");
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
          throw std::invalid_argument("malformed exponent");
        exp10 = exp10 * 10 + (s[i] - '0');
        if (exp10 > 100) throw std::overflow_error("rational overflow");
      }
      if (eneg) exp10 = -exp10;
    }
    i128 num = neg ? -mantissa : mantissa;
    i128 den = 1;
    long scale = exp10 - frac_digits;
    for (long k = 0; k < scale; ++k) {
      num *= 10;
      if (num > i128(INT64_MAX) || num < i128(INT64_MIN))
        throw std::overflow_error("rational overflow");
    }
    for (long k = 0; k < -scale; ++k) {
      den *= 10;
      if (den > i128(INT64_MAX)) throw std::overflow_error("rational overflow");
    }
    return make(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Config-style numeric parse: exact when possible, plain double otherwise.
inline double parse_number(const std::string& text) {
  try {
    return Rational::parse(text).value();
  } catch (const std::overflow_error&) {
    return std::stod(text);
  }
}

}  // namespace swent
