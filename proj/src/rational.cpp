#include "lambda_gs/rational.hpp"

#include <cctype>

#include "lambda_gs/errors.hpp"

namespace lambda_gs {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

cpp_int pow10(long exponent) {
  cpp_int out = 1;
  for (long i = 0; i < exponent; ++i) out *= 10;
  return out;
}

[[noreturn]] void fail(std::string_view text) {
  throw ParseError("not an exact decimal or fraction: '" + std::string(text) +
                   "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(original);
    const cpp_int d(std::string{den});
    if (d == 0) fail(original);
    Rational out(cpp_int(std::string{num}), d);
    return negative ? Rational(-out) : out;
  }

  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 4) fail(original);
    exponent = std::stol(std::string{exp_text});
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }

  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      fail(original);
    }
    digits = std::string{whole} + std::string{frac};
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) fail(original);
    digits = std::string{text};
  }

  Rational out = exponent >= 0
                     ? Rational(cpp_int(digits) * pow10(exponent))
                     : Rational(cpp_int(digits), pow10(-exponent));
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_decimal_string(const Rational& value) {
  cpp_int den = boost::multiprecision::denominator(value);
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return to_string(value);

  const int places = std::max(twos, fives);
  const cpp_int scaled =
      boost::multiprecision::numerator(value) * pow10(places) /
      boost::multiprecision::denominator(value);
  const bool negative = scaled < 0;
  std::string digits = (negative ? cpp_int(-scaled) : scaled).str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

}  // namespace lambda_gs
