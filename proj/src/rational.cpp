#include "cburgers/rational.hpp"

#include <cctype>

namespace cburgers {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(const std::string& text) {
  // [+-]?digits[.digits][(e|E)[+-]?digits]
  std::string s = text;
  bool neg = false;
  size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  std::string int_part, frac_part, exp_part;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) int_part += s[pos++];
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac_part += s[pos++];
  }
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      eneg = s[pos] == '-';
      ++pos;
    }
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      exp_part += s[pos++];
    if (exp_part.empty()) throw std::invalid_argument("parse_rational: bad exponent in '" + text + "'");
    exp10 = std::stol(exp_part) * (eneg ? -1 : 1);
  }
  if (pos != s.size() || (int_part.empty() && frac_part.empty()))
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");

  mpz_class digits(int_part.empty() && frac_part.empty() ? "0" : int_part + frac_part, 10);
  long shift = exp10 - static_cast<long>(frac_part.size());
  mpz_class num = digits, den = 1;
  if (shift > 0) {
    mpz_class ten10;
    mpz_ui_pow_ui(ten10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    num *= ten10;
  } else if (shift < 0) {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
  }
  Rational q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return q;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    std::string num_abs = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
    if (!all_digits(num_abs) || !all_digits(den))
      throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    Rational q(text);
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos)
    return parse_decimal(text);
  std::string abs_part = (text[0] == '-' || text[0] == '+') ? text.substr(1) : text;
  if (!all_digits(abs_part)) throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
  Rational q(text);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::str() const {
  if (im == 0) return rational_str(re);
  if (re == 0) return rational_str(im) + "i";
  std::string s = rational_str(re);
  s += (im < 0) ? " - " : " + ";
  Rational a = im < 0 ? Rational(-im) : im;
  return s + rational_str(a) + "i";
}

}  // namespace cburgers
