#include "gerrysolve/rational.hpp"

#include <cctype>

namespace gerrysolve {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ValidationError("bad rational literal: '" + std::string(whole) + "'");
  std::int64_t v = 0;
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-') {
    neg = true;
    i = 1;
    if (s.size() == 1) throw ValidationError("bad rational literal: '" + std::string(whole) + "'");
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ValidationError("bad rational literal: '" + std::string(whole) + "'");
    if (v > (INT64_MAX - 9) / 10) throw std::overflow_error("rational literal overflow");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t n = parse_int(text.substr(0, slash), text);
    std::int64_t d = parse_int(text.substr(slash + 1), text);
    return Rational(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15)
      throw ValidationError("bad decimal literal: '" + std::string(text) + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::string digits = std::string(text.substr(0, dot)) + std::string(frac);
    std::int64_t n = parse_int(digits, text);
    return Rational(n, den);
  }
  return Rational(parse_int(text, text));
}

}  // namespace gerrysolve
