#include "cutoffmatch/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cutoffmatch {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad(text);
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    result = Rational(digits, scale);
  } else {
    if (!all_digits(s)) bad(text);
    result = Rational(mpz_class(std::string(s), 10));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::optional<std::string> exact_decimal(const Rational& value) {
  mpz_class den = value.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  const unsigned long places = std::max(twos, fives);
  if (places == 0) return value.get_num().get_str();

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = value.get_num() * scale / value.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational floor(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational ceil(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

}  // namespace cutoffmatch
