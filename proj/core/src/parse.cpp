#include "wpl/parse.hpp"

#include "wpl/errors.hpp"

#include <cctype>
#include <string>

namespace wpl {

namespace {

/// Cursor over a byte string that skips whitespace and reports offsets.
class Scanner {
public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return text_[pos_];
  }

  void advance() { ++pos_; }

  std::size_t offset() {
    skip_ws();
    return pos_;
  }

  bool at_digit() { return !done() && std::isdigit(static_cast<unsigned char>(peek())); }

  Int read_integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      ++pos_;
    }
    if (digits.empty()) {
      throw ParseError("expected an integer", start);
    }
    return Int(digits);
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

PicElt parse_degree(const std::string& text, const WplData& w) {
  Scanner s(text);
  Int c_coeff(0);
  std::vector<Int> x_coeffs(w.n(), Int(0));

  Int sign(1);
  if (!s.done() && (s.peek() == '+' || s.peek() == '-')) {
    sign = s.peek() == '-' ? -1 : 1;
    s.advance();
  }

  while (true) {
    if (s.done()) {
      throw ParseError("expected a term", s.offset());
    }
    // term := integer ['*'] symbol | symbol | integer
    Int coeff(1);
    bool saw_integer = false;
    if (s.at_digit()) {
      coeff = s.read_integer();
      saw_integer = true;
      if (!s.done() && s.peek() == '*') {
        s.advance();
        if (s.done() || (s.peek() != 'c' && s.peek() != 'x')) {
          throw ParseError("expected a symbol after '*'", s.offset());
        }
      }
    }
    if (!s.done() && (s.peek() == 'c' || s.peek() == 'x')) {
      const char sym = s.peek();
      const std::size_t sym_offset = s.offset();
      s.advance();
      if (sym == 'c') {
        c_coeff += sign * coeff;
      } else {
        const std::size_t idx_offset = s.offset();
        if (!s.at_digit()) {
          throw ParseError("expected an arm index after 'x'", idx_offset);
        }
        const Int idx = s.read_integer();
        if (idx < 1 || idx > Int(static_cast<std::int64_t>(w.n()))) {
          throw DegreeIndexError("arm index " + idx.str() + " outside 1.." +
                                     std::to_string(w.n()),
                                 sym_offset);
        }
        x_coeffs[to_int64(idx) - 1] += sign * coeff;
      }
    } else if (saw_integer) {
      c_coeff += sign * coeff;  // bare integer: that multiple of c
    } else {
      throw ParseError("expected an integer or symbol", s.offset());
    }

    if (s.done()) {
      break;
    }
    const char sep = s.peek();
    if (sep != '+' && sep != '-') {
      throw ParseError("expected '+' or '-'", s.offset());
    }
    sign = sep == '-' ? -1 : 1;
    s.advance();
  }

  return w.normal_form(c_coeff, x_coeffs);
}

std::vector<Int> parse_weight_list(const std::string& text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    std::string digits;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos];
      ++pos;
    }
    if (digits.empty()) {
      throw ParseError("expected a positive integer weight", start);
    }
    out.emplace_back(digits);
    if (pos == text.size()) {
      break;
    }
    if (text[pos] != ',') {
      throw ParseError("expected ','", pos);
    }
    ++pos;
  }
  return out;
}

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    const std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    try {
      out.push_back(parse_rational(piece));
    } catch (const ParseError& e) {
      throw ParseError("entry " + std::to_string(out.size() + 1) + ": " + e.what(),
                       start + e.offset());
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace wpl
