#include "dcorr/rational.hpp"

#include <cctype>

#include "dcorr/errors.hpp"

namespace dcorr {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
    throw UsageError("malformed rational: '" + std::string(text) + "'");
  BigInt n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw UsageError("zero denominator in rational: '" + std::string(text) + "'");
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& value) { return value.get_str(); }

BigRational power(const BigRational& value, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (value == 0) throw DivisionByZero("0 raised to a negative power");
    return power(BigRational(value.get_den(), value.get_num()), -e);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(e));
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace dcorr
