#pragma once

#include <string>
#include <vector>

#include "vctk/linalg.hpp"

namespace vctk {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  /// t^d - 1
  static IntPolynomial t_power_minus_one(unsigned d);

  const std::vector<Integer>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Integer coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& leading() const;

  Integer evaluate(const Integer& t) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& s, const IntPolynomial& a);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Integer> c_;
};

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Division by a divisor with leading coefficient +-1.
PolyDivision divide(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient; throws ArithmeticError when b does not divide a.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Euler's totient.
unsigned long euler_phi(unsigned long d);

/// The d-th cyclotomic polynomial (d >= 1), memoised.
const IntPolynomial& cyclotomic(unsigned d);

/// det(t I - H) by fraction-free elimination over Z[t].
IntPolynomial char_poly(const IntMatrix& h);

/// Human-readable form, e.g. "t^2 + t + 1".
std::string to_string(const IntPolynomial& p);

struct CyclotomicFactorization {
  bool quasi_unipotent = false;
  /// Indices d of the factors Phi_d with multiplicity, ascending.
  std::vector<unsigned> factors;
  /// +-1 overall sign.
  int sign = 1;
};

/// True iff p is +- a product of cyclotomic polynomials. Throws InputError
/// unless the leading coefficient is +-1.
CyclotomicFactorization is_quasi_unipotent(const IntPolynomial& p);

}  // namespace vctk
