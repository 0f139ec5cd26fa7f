#include "wpl/numeric.hpp"

#include "wpl/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <limits>

namespace wpl {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) {
    throw Error("floor_div: division by zero");
  }
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

Int pos_mod(const Int& a, const Int& b) {
  const Int m = abs(b);
  return a - floor_div(a, m) * m;
}

Int lcm_int(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

Rat rat_pow(const Rat& base, const Int& exp) {
  if (exp == 0) {
    return Rat(1);
  }
  if (base == 0) {
    if (exp < 0) {
      throw Error("rat_pow: zero base with negative exponent");
    }
    return Rat(0);
  }
  Rat b = base;
  Int e = exp;
  if (e < 0) {
    b = Rat(1) / b;
    e = -e;
  }
  Rat acc(1);
  while (e > 0) {
    if (pos_mod(e, 2) == 1) {
      acc *= b;
    }
    b *= b;
    e = floor_div(e, 2);
  }
  return acc;
}

namespace {

bool parse_integer_token(const std::string& s, std::size_t& pos, Int& out) {
  std::size_t start = pos;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = (s[pos] == '-');
    ++pos;
  }
  std::size_t digits_start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
  if (pos == digits_start) {
    pos = start;
    return false;
  }
  out = Int(s.substr(digits_start, pos - digits_start));
  if (negative) {
    out = -out;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::size_t pos = 0;
  Int num;
  if (!parse_integer_token(text, pos, num)) {
    throw ParseError("expected integer", pos);
  }
  Int den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_pos = pos;
    if (!parse_integer_token(text, pos, den)) {
      throw ParseError("expected denominator", den_pos);
    }
    if (den == 0) {
      throw ParseError("zero denominator", den_pos);
    }
  }
  if (pos != text.size()) {
    throw ParseError("trailing characters after rational", pos);
  }
  return Rat(num, den);
}

std::string rat_to_string(const Rat& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::int64_t to_int64(const Int& value) {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max()) {
    throw SizeError("integer does not fit in 64 bits: " + value.str());
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace wpl
