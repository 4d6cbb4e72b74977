#include "gchar/parse.hpp"

#include <cctype>
#include <charconv>

#include "gchar/error.hpp"

namespace gchar {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    else if (c == ')' || c == ']' || c == '}') {
      if (--depth < 0) fail(ErrorKind::Parse, "unbalanced '" + std::string(1, c) + "' at position " + std::to_string(i));
    } else if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) fail(ErrorKind::Parse, "unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string strip_enclosing(std::string_view s, char open, char close) {
  const std::string t = trim(s);
  if (t.size() < 2 || t.front() != open || t.back() != close) {
    fail(ErrorKind::Parse, "expected '" + std::string(1, open) + "' ... '" + std::string(1, close) + "' around '" + t + "'");
  }
  return t.substr(1, t.size() - 2);
}

long parse_long(std::string_view s) {
  const std::string t = trim(s);
  long v = 0;
  const char* first = t.data();
  if (!t.empty() && t[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    fail(ErrorKind::Parse, "expected an integer, got '" + t + "'");
  }
  return v;
}

std::vector<std::pair<std::string, std::string>> split_linear_combination(std::string_view s) {
  std::vector<std::pair<std::string, std::string>> out;
  const std::string t = trim(s);
  if (t.empty() || t == "0") return out;
  std::vector<std::string> pieces;
  std::vector<char> signs;
  int depth = 0;
  std::string cur;
  char sign = '+';
  for (std::size_t i = 0; i < t.size(); ++i) {
    const char c = t[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      // a sign directly after '*' or '/' belongs to the coefficient
      const std::string sofar = trim(cur);
      if (!sofar.empty() && sofar.back() != '*' && sofar.back() != '/') {
        pieces.push_back(sofar);
        signs.push_back(sign);
        cur.clear();
        sign = c;
        continue;
      }
      if (sofar.empty()) {
        sign = (sign == c) ? '+' : '-';
        continue;
      }
    }
    cur += c;
  }
  if (depth != 0) fail(ErrorKind::Parse, "unbalanced brackets in '" + t + "'");
  if (trim(cur).empty()) fail(ErrorKind::Parse, "dangling sign in '" + t + "'");
  pieces.push_back(trim(cur));
  signs.push_back(sign);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string& p = pieces[i];
    // coefficient and label are separated by the first '*' at depth zero
    std::size_t star = std::string::npos;
    int d = 0;
    for (std::size_t k = 0; k < p.size() && star == std::string::npos; ++k) {
      if (p[k] == '(' || p[k] == '[' || p[k] == '{') ++d;
      else if (p[k] == ')' || p[k] == ']' || p[k] == '}') --d;
      else if (p[k] == '*' && d == 0) star = k;
    }
    std::string coef = "1";
    std::string label = p;
    if (star != std::string::npos) {
      coef = trim(p.substr(0, star));
      label = trim(p.substr(star + 1));
      if (coef.empty() || label.empty()) fail(ErrorKind::Parse, "malformed term '" + p + "'");
    }
    out.emplace_back(std::string(1, signs[i]) + coef, label);
  }
  return out;
}

}  // namespace gchar
