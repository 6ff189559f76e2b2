#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "metonym/errors.hpp"

namespace metonym {

// Exact rational arithmetic for candidate scores. Scores are compared
// exactly so that ties never depend on floating-point rounding.
class Rational {
public:
  Rational() = default;

  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw Error("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  // Accepts "p/q", decimal ("1.5"), or integer ("2") notation.
  static Rational parse(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw Error("empty rational");
    const auto slash = s.find('/');
    try {
      if (slash != std::string::npos) {
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
      }
      const auto dot = s.find('.');
      if (dot == std::string::npos) return Rational(parse_int(s));
      const std::string whole = s.substr(0, dot);
      const std::string frac = s.substr(dot + 1);
      if (frac.empty() || frac.size() > 9) throw Error("bad decimal: " + s);
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const bool neg = !whole.empty() && whole[0] == '-';
      const std::int64_t whole_val = whole.empty() || whole == "-" ? 0 : parse_int(whole);
      const std::int64_t frac_val = parse_int(frac);
      const std::int64_t mag = (neg ? -whole_val : whole_val) * den + frac_val;
      return Rational(neg ? -mag : mag, den);
    } catch (const std::invalid_argument&) {
      throw Error("not a rational: " + s);
    } catch (const std::out_of_range&) {
      throw Error("rational out of range: " + s);
    }
  }

  bool positive() const { return num_ > 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Rational operator*(const Rational& a, std::int64_t k) {
    return Rational(a.num_ * k, a.den_);
  }

  friend Rational operator*(std::int64_t k, const Rational& a) { return a * k; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  // Decimal string when the reduced denominator divides a power of ten
  // (e.g. 39/2 -> "19.5"), otherwise "p/q".
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    std::int64_t rest = den_;
    int twos = 0, fives = 0;
    while (rest % 2 == 0) {
      rest /= 2;
      ++twos;
    }
    while (rest % 5 == 0) {
      rest /= 5;
      ++fives;
    }
    if (rest != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    const int digits = twos > fives ? twos : fives;
    __int128 scaled = num_;
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= den_;
    const bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string mag;
    while (scaled > 0) {
      mag.insert(mag.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
      scaled /= 10;
    }
    while (mag.size() <= static_cast<std::size_t>(digits)) mag.insert(mag.begin(), '0');
    mag.insert(mag.size() - digits, ".");
    return (neg ? "-" : "") + mag;
  }

private:
  static std::int64_t parse_int(const std::string& s) {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace metonym
