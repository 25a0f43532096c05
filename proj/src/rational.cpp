#include "sqa/rational.hpp"

#include "sqa/errors.hpp"

namespace sqa {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  auto e = s.find_last_not_of(" \t\n");
  if (b == std::string::npos) throw ParseError("empty rational");
  std::string t = s.substr(b, e - b + 1);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  Rational r;
  if (r.set_str(t, 10) != 0) throw ParseError("malformed rational \"" + s + "\"");
  if (r.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

}  // namespace sqa
