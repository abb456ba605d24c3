#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace ospcohom {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I n) : value_(static_cast<long>(n)) {}  // NOLINT(implicit)
  Scalar(long num, long den);
  explicit Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
  static Scalar parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  const mpq_class& raw() const { return value_; }
  /// Exact conversion; throws std::domain_error if not an integer that fits in long.
  long to_long() const;
  double to_double() const { return value_.get_d(); }

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

inline Scalar half() { return Scalar(1, 2); }

/// (-1)^n for a parity bit or any integer exponent.
inline int sign_pow(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace ospcohom
