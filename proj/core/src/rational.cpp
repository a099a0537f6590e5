#include "distidx/rational.hpp"

#include <charconv>
#include <limits>

namespace distidx {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kOverflow, "rational component exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorCode::kUsage, "not a rational: '" + whole + "'");
  }
  return value;
}

}  // namespace

void Rational::assign(__int128 num, __int128 den) {
  if (den == 0) throw Error(ErrorCode::kUsage, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = narrow(num);
  den_ = narrow(den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    return Rational(parse_int(std::string_view(text).substr(0, slash), text),
                    parse_int(std::string_view(text).substr(slash + 1), text));
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto places = text.size() - dot - 1;
    if (places > 17) throw Error(ErrorCode::kUsage, "too many decimals");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < places; ++i) den *= 10;
    return Rational(parse_int(digits, text), den);
  }
  return Rational(parse_int(text, text));
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  r.assign(static_cast<__int128>(a.num_) * b.den_ +
               static_cast<__int128>(b.num_) * a.den_,
           static_cast<__int128>(a.den_) * b.den_);
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  r.assign(static_cast<__int128>(a.num_) * b.num_,
           static_cast<__int128>(a.den_) * b.den_);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  Rational r;
  r.assign(static_cast<__int128>(a.num_) * b.den_,
           static_cast<__int128>(a.den_) * b.num_);
  return r;
}

}  // namespace distidx
