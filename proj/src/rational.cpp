#include "icds/rational.hpp"

#include <cctype>

#include "icds/errors.hpp"

namespace icds {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_integer(std::string_view text, std::size_t offset,
                      bool allow_sign) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits", offset + i);
  cpp_int value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c +
                           "' in rational",
                       offset + i);
    value = value * 10 + (c - '0');
  }
  return negative ? cpp_int(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = Backend(cpp_int(num), cpp_int(den));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Rational r;
  if (slash == std::string_view::npos) {
    r.v_ = Backend(parse_integer(text, 0, true));
    return r;
  }
  const cpp_int num = parse_integer(text.substr(0, slash), 0, true);
  const cpp_int den = parse_integer(text.substr(slash + 1), slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  r.v_ = Backend(num, den);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (boost::multiprecision::denominator(v_) == 1) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

std::string Rational::numerator_str() const {
  return boost::multiprecision::numerator(v_).str();
}

std::string Rational::denominator_str() const {
  return boost::multiprecision::denominator(v_).str();
}

}  // namespace icds
