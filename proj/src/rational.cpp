#include "sapp/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "sapp/errors.hpp"

namespace sapp {

namespace {

bool parse_integer(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtoll(s.c_str(), &end, 10);
  return errno == 0 && end == s.c_str() + s.size();
}

} // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  long long num = 0;
  long long den = 1;
  bool ok;
  if (slash == std::string::npos) {
    ok = parse_integer(text, num);
  } else {
    ok = parse_integer(text.substr(0, slash), num) &&
         parse_integer(text.substr(slash + 1), den);
  }
  if (!ok) throw Error("malformed rational '" + text + "'; expected \"p/q\"");
  if (den == 0) throw Error("zero denominator in rational '" + text + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace sapp
