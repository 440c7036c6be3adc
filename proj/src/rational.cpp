#include "lincent/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lincent {

Rational rat(long long p, long long q) {
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(BigInt(p), BigInt(q));
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Parses an optionally signed integer literal.
BigInt parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw std::invalid_argument("bad rational literal '" + std::string(whole) + "'");
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(s.substr(0, slash), text);
    BigInt den = parse_int(s.substr(slash + 1), text);
    if (den == 0)
      throw std::invalid_argument("bad rational literal '" + std::string(text) + "': zero denominator");
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view head = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
      neg = head[0] == '-';
      head.remove_prefix(1);
    }
    if ((head.empty() && frac.empty()) || (!head.empty() && !all_digits(head)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    BigInt whole = head.empty() ? BigInt(0) : BigInt(std::string(head));
    BigInt scale = 1;
    BigInt fpart = 0;
    if (!frac.empty()) {
      fpart = BigInt(std::string(frac));
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    }
    Rational v = Rational(whole * scale + fpart, scale);
    return neg ? Rational(-v) : v;
  }

  return Rational(parse_int(s, text));
}

BigInt rational_floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

BigInt rational_ceil(const Rational& r) { return -rational_floor(Rational(-r)); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace lincent
