#ifndef FAIRDIV_RATIO_H_
#define FAIRDIV_RATIO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fairdiv {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Every value comparison in the library goes through this type.
class Ratio {
 public:
  Ratio() = default;
  Ratio(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Ratio(std::int64_t numerator, std::int64_t denominator);
  explicit Ratio(mpq_class value);

  // Accepts "p", "p/q", "-p/q" and finite decimals such as "0.25".
  // Throws std::invalid_argument on anything else, including q == 0.
  static Ratio Parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  // "p" for integers, "p/q" otherwise.
  std::string ToString() const;
  // Approximate; for display only.
  double ToDouble() const { return value_.get_d(); }

  Ratio Pow(unsigned exponent) const;

  Ratio& operator+=(const Ratio& other);
  Ratio& operator-=(const Ratio& other);
  Ratio& operator*=(const Ratio& other);
  Ratio& operator/=(const Ratio& other);

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }
  friend Ratio operator-(const Ratio& a);

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return cmp(a.value_, b.value_) < 0;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) {
    return cmp(a.value_, b.value_) <= 0;
  }
  friend bool operator>(const Ratio& a, const Ratio& b) {
    return cmp(a.value_, b.value_) > 0;
  }
  friend bool operator>=(const Ratio& a, const Ratio& b) {
    return cmp(a.value_, b.value_) >= 0;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

inline Ratio Min(const Ratio& a, const Ratio& b) { return b < a ? b : a; }
inline Ratio Max(const Ratio& a, const Ratio& b) { return a < b ? b : a; }

// alpha <= phi - 1 holds exactly when alpha^2 + alpha <= 1 (for alpha >= 0).
bool AtMostGoldenRatioConjugate(const Ratio& alpha);

}  // namespace fairdiv

#endif  // FAIRDIV_RATIO_H_
