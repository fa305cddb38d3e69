#include "evoalg/rational.hpp"

#include <cctype>
#include <ostream>

namespace evoalg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InputError("bad rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&text]() {
    return InputError("bad rational literal \"" + std::string(text) + "\"");
  };

  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (body.empty()) throw fail();

  std::string_view num = body;
  std::string_view den = "1";
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }

  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) throw fail();

  mpz_class den_z(std::string(den), 10);
  if (den_z == 0) throw fail();  // "p/0" is not a rational

  mpz_class num_z(std::string(num), 10);
  if (negative) num_z = -num_z;

  mpq_class value(num_z, den_z);
  value.canonicalize();
  return Rational(std::move(value));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InputError("rational division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace evoalg
