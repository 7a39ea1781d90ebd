#include "refltk/scalar.hpp"

#include <cctype>
#include <cstddef>

namespace refltk {

namespace {

bool is_plain_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  bool digits = false, slash = false, digits_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? digits_after : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      return false;
    }
  }
  return digits && (!slash || digits_after);
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  require(is_plain_rational(text), ErrorCode::ParseError,
          "not a rational literal: '" + text + "'");
  mpq_class q(text);
  require(q.get_den() != 0, ErrorCode::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Scalar parse_scalar(const std::string& text, long field_tag) {
  require(!text.empty(), ErrorCode::ParseError, "empty scalar literal");
  std::size_t rpos = text.find('r');
  if (rpos == std::string::npos) return Scalar(parse_rational(text));

  require(field_tag > 1, ErrorCode::ParseError,
          "quadratic literal '" + text + "' needs a Q(sqrt d) field");
  require(rpos + 1 == text.size(), ErrorCode::ParseError,
          "'r' must terminate the literal: '" + text + "'");
  std::string body = text.substr(0, rpos);

  // Split "a+br" / "a-br" at the last sign that begins the radical coefficient.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  mpq_class a = 0, b;
  std::string bpart = body;
  if (split != std::string::npos) {
    a = parse_rational(body.substr(0, split));
    bpart = body.substr(split);
  }
  if (bpart.empty() || bpart == "+")
    b = 1;
  else if (bpart == "-")
    b = -1;
  else
    b = parse_rational(bpart[0] == '+' ? bpart.substr(1) : bpart);
  return Scalar(std::move(a), std::move(b), field_tag);
}

bool is_square_free(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace refltk
