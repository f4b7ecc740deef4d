#include "homkit/integer.hpp"

#include <cctype>
#include <string>

namespace homkit {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  std::size_t end = s.size();
  while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  s = s.substr(start, end - start);
  std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits_from) throw Error("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = digits_from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw Error("not an integer: '" + std::string(text) + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace homkit
