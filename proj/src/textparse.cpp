#include "valgraph/textparse.hpp"

#include <cctype>
#include <vector>

#include "valgraph/errors.hpp"

namespace valgraph {

std::string trim_copy(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

namespace {

long parse_long(const std::string& s, const std::string& whole) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw 0;
    return v;
  } catch (...) {
    fail(ErrorCode::Usage, "cannot parse number '" + s + "' in '" + whole + "'");
  }
}

}  // namespace

std::map<long, unsigned> parse_poly_terms(const std::string& text, bool allow_negative_exponents) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::map<long, unsigned> out;
  if (s.empty() || s == "0") return out;
  // split on '+' not following '^'
  std::string cur;
  std::vector<std::string> terms;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+' && i > 0 && s[i - 1] != '^') {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += s[i];
    }
  }
  terms.push_back(cur);
  for (const auto& term : terms) {
    if (term.empty()) fail(ErrorCode::Usage, "empty term in '" + text + "'");
    unsigned coef = 1;
    long expo = 0;
    auto tpos = term.find('t');
    if (tpos == std::string::npos) {
      coef = static_cast<unsigned>(parse_long(term, text));
    } else {
      std::string pre = term.substr(0, tpos);
      if (!pre.empty()) {
        if (pre.back() != '*') fail(ErrorCode::Usage, "expected '*' before t in '" + text + "'");
        pre.pop_back();
        coef = static_cast<unsigned>(parse_long(pre, text));
      }
      std::string post = term.substr(tpos + 1);
      if (post.empty()) {
        expo = 1;
      } else {
        if (post[0] != '^') fail(ErrorCode::Usage, "expected '^' after t in '" + text + "'");
        expo = parse_long(post.substr(1), text);
      }
    }
    if (expo < 0 && !allow_negative_exponents) fail(ErrorCode::Usage, "negative exponent in '" + text + "'");
    if (out.count(expo)) fail(ErrorCode::Usage, "repeated exponent in '" + text + "'");
    if (coef != 0) out[expo] = coef;
  }
  return out;
}

}  // namespace valgraph
