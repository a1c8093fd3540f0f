#include "rat.hpp"

#include "errors.hpp"

namespace armred {

Rat make_rat(Int num, Int den) {
  if (den == 0) fail(errc::invalid, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

std::string rat_str(const Rat& x) {
  const Int num = numerator(x);
  const Int den = denominator(x);
  std::string s = num.str();
  if (den != 1) {
    s += "/";
    s += den.str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
    if (!all_digits(den_part)) fail(errc::format, "invalid rational literal '" + std::string(text) + "'");
  }
  if (!all_digits(num_part)) fail(errc::format, "invalid rational literal '" + std::string(text) + "'");

  Int num{std::string(num_part)};
  Int den = den_part.empty() ? Int(1) : Int{std::string(den_part)};
  if (den == 0) fail(errc::format, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rat(num, den);
}

Rat parse_rat_strict(std::string_view text) {
  Rat value = parse_rat(text);
  if (rat_str(value) != text) {
    fail(errc::format, "non-canonical rational literal '" + std::string(text) + "' (expected '" +
                           rat_str(value) + "')");
  }
  return value;
}

sqrt_status rational_sqrt(const Rat& x, Rat& root) {
  if (x < 0) return sqrt_status::negative;
  if (x == 0) {
    root = 0;
    return sqrt_status::exact;
  }
  const Int num = numerator(x);
  const Int den = denominator(x);
  const Int sn = sqrt(num);
  const Int sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return sqrt_status::irrational;
  root = Rat(sn, sd);  // gcd(num, den) = 1 implies gcd(sn, sd) = 1
  return sqrt_status::exact;
}

std::size_t rat_bits(const Rat& x) {
  const auto bits = [](const Int& v) -> std::size_t {
    if (v == 0) return 1;
    return static_cast<std::size_t>(msb(abs(v))) + 1;
  };
  return bits(numerator(x)) + bits(denominator(x));
}

}  // namespace armred
