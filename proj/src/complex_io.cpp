#include "ellr/complex_io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ellr {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("cannot parse complex number '" + std::string(whole) + "'");
  return v;
}

}  // namespace

cplx parse_complex(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty complex number");
  const std::string_view v(t);
  if (v.back() != 'i' && v.back() != 'j') {
    const double re = parse_real(v, s);
    if (v == "+" || v == "-") throw std::invalid_argument("cannot parse complex number '" + std::string(s) + "'");
    return {re, 0.0};
  }
  const std::string_view body = v.substr(0, v.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(body, s)};
  const std::string_view re = body.substr(0, split);
  if (re.empty()) throw std::invalid_argument("cannot parse complex number '" + std::string(s) + "'");
  return {parse_real(re, s), parse_real(body.substr(split), s)};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of zero
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string format_complex(cplx z) {
  std::string im = format_double(z.imag());
  if (im.front() != '-') im = "+" + im;
  return format_double(z.real()) + im + "i";
}

}  // namespace ellr
