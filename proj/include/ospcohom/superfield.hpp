#pragma once

// Grassmann-polynomial arithmetic on R^{1|2}: one even variable x and two odd
// variables t1, t2. The t2-free subalgebra doubles as R^{1|1}.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ospcohom/scalar.hpp"

namespace ospcohom {

/// Polynomial in x with exact coefficients; zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  Poly(Scalar c);  // NOLINT(implicit): constant polynomial
  static Poly monomial(int exponent, Scalar c = 1);
  static Poly x() { return monomial(1); }

  /// Highest stored exponent, or -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int exponent) const;
  const std::map<int, Scalar>& terms() const { return terms_; }

  void add_term(int exponent, const Scalar& c);

  Poly derivative(int times = 1) const;
  /// Antiderivative with zero constant term.
  Poly antiderivative() const;
  Scalar evaluate(const Scalar& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Ascending terms, e.g. "1 + 3*x - 1/2*x^2"; "0" for zero.
  std::string str() const;
  /// Inverse of str(); accepts the same grammar. Throws std::invalid_argument.
  static Poly parse(std::string_view text);

 private:
  std::map<int, Scalar> terms_;
};

enum class Parity { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_from_bit(int b) { return static_cast<Parity>(((b % 2) + 2) % 2); }
std::string to_string(Parity p);

/// Grassmann monomials indexed by bitmask: 0 -> 1, 1 -> t1, 2 -> t2, 3 -> t1 t2.
namespace theta {
inline constexpr int one = 0;
inline constexpr int t1 = 1;
inline constexpr int t2 = 2;
inline constexpr int t12 = 3;
inline int degree(int mask) { return (mask & 1) + ((mask >> 1) & 1); }
}  // namespace theta

/// Element of polynomial C^inf(R^{1|2}): c_1 + c_t1 t1 + c_t2 t2 + c_t12 t1 t2.
class SuperFunction {
 public:
  SuperFunction() = default;
  SuperFunction(Scalar c);  // NOLINT(implicit)
  SuperFunction(Poly p);    // NOLINT(implicit)
  SuperFunction(Poly c1, Poly ct1, Poly ct2, Poly ct12);

  static SuperFunction monomial(int mask, int x_exponent = 0, Scalar c = 1);
  static SuperFunction x() { return monomial(theta::one, 1); }
  static SuperFunction t1() { return monomial(theta::t1); }
  static SuperFunction t2() { return monomial(theta::t2); }
  static SuperFunction t12() { return monomial(theta::t12); }

  const Poly& component(int mask) const { return comps_[mask]; }
  Poly& component(int mask) { return comps_[mask]; }

  bool is_zero() const;
  bool is_theta2_free() const { return comps_[theta::t2].is_zero() && comps_[theta::t12].is_zero(); }
  /// Max x-degree across components, -1 for zero.
  int x_degree() const;

  SuperFunction even_part() const;
  SuperFunction odd_part() const;
  /// Parity involution: F -> (-1)^{|F|} F on homogeneous parts.
  SuperFunction sigma() const;

  SuperFunction operator-() const;
  SuperFunction& operator+=(const SuperFunction& o);
  SuperFunction& operator-=(const SuperFunction& o);
  SuperFunction& operator*=(const Scalar& c);
  friend SuperFunction operator+(SuperFunction a, const SuperFunction& b) { return a += b; }
  friend SuperFunction operator-(SuperFunction a, const SuperFunction& b) { return a -= b; }
  friend SuperFunction operator*(SuperFunction a, const Scalar& c) { return a *= c; }
  friend SuperFunction operator*(const Scalar& c, SuperFunction a) { return a *= c; }
  /// Canonical-order product (sf_mul).
  friend SuperFunction operator*(const SuperFunction& a, const SuperFunction& b);
  friend bool operator==(const SuperFunction&, const SuperFunction&) = default;

  std::string str() const;

 private:
  std::array<Poly, 4> comps_;
};

SuperFunction sf_mul(const SuperFunction& f, const SuperFunction& g);
SuperFunction partial_x(const SuperFunction& f, int times = 1);
/// Left odd derivation d/dt_i, i in {1, 2}.
SuperFunction partial_theta(const SuperFunction& f, int i);
/// eta_bar_i = d/dt_i - t_i d/dx.
SuperFunction eta_bar(const SuperFunction& f, int i);
/// Even, odd, or nullopt when mixed. Zero counts as even.
std::optional<Parity> parity_of(const SuperFunction& f);
/// Parity of a homogeneous element; throws std::invalid_argument when mixed.
Parity require_parity(const SuperFunction& f, std::string_view context);

nlohmann::json to_json(const SuperFunction& f);
SuperFunction superfunction_from_json(const nlohmann::json& j);

}  // namespace ospcohom
