#include "omuco/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace omuco {

namespace {

using i128 = __int128;

i128 gcd_wide(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

i128 pow10(int e) {
  i128 p = 1;
  for (int i = 0; i < e; ++i) {
    p *= 10;
    if (!fits(p)) throw std::overflow_error("decimal exponent too large");
  }
  return p;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) bad_number(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational p = parse(text.substr(0, slash));
    Rational q = parse(text.substr(slash + 1));
    if (!p.is_integer() || !q.is_integer()) bad_number(text);
    if (q.num_ == 0) bad_number(text);
    return from_wide(p.num_, q.num_);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  i128 mantissa = 0;
  int frac_digits = 0;
  int digits = 0;
  bool in_fraction = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (in_fraction) bad_number(text);
      in_fraction = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) break;
    mantissa = mantissa * 10 + (c - '0');
    if (!fits(mantissa)) throw std::overflow_error("decimal too long: " + std::string(text));
    ++digits;
    if (in_fraction) ++frac_digits;
  }
  if (digits == 0) bad_number(text);

  int exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') bad_number(text);
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size()) bad_number(text);
    for (; pos < text.size(); ++pos) {
      char c = text[pos];
      if (!std::isdigit(static_cast<unsigned char>(c))) bad_number(text);
      exponent = exponent * 10 + (c - '0');
      if (exponent > 36) throw std::overflow_error("decimal exponent too large");
    }
    if (exp_negative) exponent = -exponent;
  }

  int scale = exponent - frac_digits;
  i128 num = negative ? -mantissa : mantissa;
  if (scale >= 0) return from_wide(num * pow10(scale), 1);
  return from_wide(num, pow10(-scale));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);

  std::int64_t d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

  // Scale to a power-of-ten denominator and place the decimal point.
  int places = twos > fives ? twos : fives;
  i128 scaled = num_;
  for (int i = twos; i < places; ++i) scaled *= 2;
  for (int i = fives; i < places; ++i) scaled *= 5;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits;
  while (scaled > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return negative ? "-" + digits : digits;
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  *this = from_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                    static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = from_wide(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                    static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  i128 g = gcd_wide(a, b);
  i128 l = static_cast<i128>(a) / g * b;
  if (!fits(l)) throw std::overflow_error("common denominator overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace omuco
