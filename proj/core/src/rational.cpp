#include "cordlasso/rational.hpp"

#include <cctype>

#include "cordlasso/errors.hpp"

namespace cordlasso {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  mpz_class numerator;
  mpz_class denominator = 1;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InputError("malformed rational '" + original + "'");
    }
    numerator.set_str(std::string(num), 10);
    denominator.set_str(std::string(den), 10);
    if (denominator == 0) throw InputError("zero denominator in '" + original + "'");
  } else {
    const auto dot = text.find('.');
    const auto whole = text.substr(0, dot);
    const auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)) ||
        (dot != std::string_view::npos && frac.empty() && whole.empty())) {
      throw InputError("malformed number '" + original + "'");
    }
    std::string digits(whole);
    digits += frac;
    numerator.set_str(digits.empty() ? "0" : digits, 10);
    for (std::size_t i = 0; i < frac.size(); ++i) denominator *= 10;
  }

  Rational value(numerator, denominator);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  if (reduced.get_den() == 1) return reduced.get_num().get_str();
  return reduced.get_str();
}

}  // namespace cordlasso
