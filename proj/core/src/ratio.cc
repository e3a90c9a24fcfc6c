#include "fairdiv/ratio.h"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace fairdiv {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void BadRatio(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) +
                              "'");
}

}  // namespace

Ratio::Ratio(std::int64_t value) : value_(mpz_class(std::to_string(value))) {}

Ratio::Ratio(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)),
                     mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

Ratio::Ratio(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Ratio Ratio::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!IsDigits(num) || !IsDigits(den)) BadRatio(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) BadRatio(text);
    result = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !IsDigits(whole)) ||
        (!frac.empty() && !IsDigits(frac))) {
      BadRatio(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = mpq_class(mpz_class(digits.empty() ? "0" : digits, 10), scale);
  } else {
    if (!IsDigits(body)) BadRatio(text);
    result = mpq_class(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return Ratio(std::move(result));
}

std::string Ratio::ToString() const { return value_.get_str(); }

Ratio Ratio::Pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Ratio(mpq_class(num, den));
}

Ratio& Ratio::operator+=(const Ratio& other) {
  value_ += other.value_;
  return *this;
}

Ratio& Ratio::operator-=(const Ratio& other) {
  value_ -= other.value_;
  return *this;
}

Ratio& Ratio::operator*=(const Ratio& other) {
  value_ *= other.value_;
  return *this;
}

Ratio& Ratio::operator/=(const Ratio& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

Ratio operator-(const Ratio& a) { return Ratio(mpq_class(-a.value_)); }

std::ostream& operator<<(std::ostream& os, const Ratio& r) {
  return os << r.ToString();
}

bool AtMostGoldenRatioConjugate(const Ratio& alpha) {
  return alpha * alpha + alpha <= Ratio(1);
}

}  // namespace fairdiv
