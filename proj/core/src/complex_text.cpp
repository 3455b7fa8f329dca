#include "whlab/complex_text.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace whlab {

namespace {

// Consumes one signed float starting at pos. Also accepts a bare sign
// followed by 'i' (handled by the caller via unit=true).
struct NumTok {
  double value;
  size_t end;
  bool imag;  // trailing 'i'
};

NumTok read_term(std::string_view s, size_t pos) {
  size_t p = pos;
  double sign = 1.0;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
    if (s[p] == '-') sign = -1.0;
    ++p;
  }
  // bare "i" / "+i" / "-i"
  if (p < s.size() && (s[p] == 'i' || s[p] == 'I')) {
    return {sign, p + 1, true};
  }
  const char* first = s.data() + p;
  const char* last = s.data() + s.size();
  double mag = 0.0;
  auto res = std::from_chars(first, last, mag);
  if (res.ec != std::errc{} || res.ptr == first) {
    throw std::invalid_argument("malformed complex literal: '" +
                                std::string(s) + "'");
  }
  size_t end = static_cast<size_t>(res.ptr - s.data());
  bool imag = false;
  if (end < s.size() && (s[end] == 'i' || s[end] == 'I')) {
    imag = true;
    ++end;
  }
  return {sign * mag, end, imag};
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  // strip blanks
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  double re = 0.0, im = 0.0;
  size_t pos = 0;
  bool seen_re = false, seen_im = false;
  while (pos < s.size()) {
    NumTok t = read_term(s, pos);
    if (t.imag) {
      if (seen_im)
        throw std::invalid_argument("malformed complex literal: '" + s + "'");
      seen_im = true;
      im = t.value;
    } else {
      if (seen_re)
        throw std::invalid_argument("malformed complex literal: '" + s + "'");
      seen_re = true;
      re = t.value;
    }
    pos = t.end;
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      throw std::invalid_argument("malformed complex literal: '" + s + "'");
    }
  }
  return {re, im};
}

std::string format_complex(std::complex<double> z) {
  char buf[64];
  auto fmt = [&](double v) {
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
  };
  if (z.imag() == 0.0) return fmt(z.real());
  std::string out = fmt(z.real());
  out += (z.imag() < 0 || std::signbit(z.imag())) ? "-" : "+";
  out += fmt(std::abs(z.imag()));
  out += "i";
  return out;
}

}  // namespace whlab
