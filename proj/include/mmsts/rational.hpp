#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mmsts {

// Exact rational over 64-bit integers, always normalized: gcd(|num|,den) = 1,
// den > 0, zero stored as 0/1. Products and sums are formed in 128-bit
// arithmetic; a result whose normalized parts do not fit in 64 bits throws
// std::overflow_error. Comparisons cross-multiply in 128 bits and are exact.
class Rational {
public:
  Rational() = default;
  Rational(long long num) : num_(num) {}
  Rational(long long num, long long den) { *this = make(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  // Exact integer value; throws std::domain_error when the value is not integral.
  long long as_integer() const {
    if (den_ != 1) throw std::domain_error("rational " + str() + " is not an integer");
    return num_;
  }

  Rational operator+(const Rational& o) const {
    return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return make(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(num_) * o.den_, i128(den_) * o.num_);
  }
  Rational operator-() const { return make(-i128(num_), i128(den_)); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  // Canonical form "p/q", e.g. "30/13", "2/1", "-5/3".
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  // Accepts "p", "p/q", optional leading minus on p (and on q, normalized away).
  static Rational parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(parse_ll(text));
      return Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
    } catch (const std::domain_error&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse rational from \"" + text + "\"");
    }
  }

private:
  using i128 = __int128;

  long long num_ = 0;
  long long den_ = 1;

  static Rational make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      throw std::overflow_error("rational overflows 64 bits");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  static long long parse_ll(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  }
};

}  // namespace mmsts
