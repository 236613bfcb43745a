#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace arrchow {

using BigInt = mpz_class;

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// coeffs()[i] is the coefficient of t^i; trailing zeros are always trimmed,
// so the zero polynomial has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int degree);
  // (t + c)^k
  static IntPolynomial linear_power(long c, int k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Undefined for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int i) const;
  BigInt leading() const;
  BigInt evaluate(const BigInt& x) const;
  // Sum of coefficients, i.e. p(1).
  BigInt coeff_sum() const;

  // p(t + c)
  IntPolynomial shift(long c) const;
  // p(t) * t^k
  IntPolynomial times_power_of_t(int k) const;
  // Exact division by (t - c); returns false if the remainder is nonzero.
  bool divide_by_linear(long c, IntPolynomial& quotient) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  // "t^3 + 11*t^2 + 11*t + 1"; "0" for the zero polynomial.
  std::string to_string() const;
  // Decimal strings, lowest degree first.
  std::vector<std::string> to_decimal_strings() const;
  static IntPolynomial from_decimal_strings(const std::vector<std::string>& digits);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// gamma_to_h(g) = sum_i g.entries[i] * t^i (1+t)^(d-2i).
struct GammaVector {
  std::vector<BigInt> entries;
  int d = 0;

  std::string to_string() const;  // "(1, 8)"
  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

IntPolynomial f_to_h(const IntPolynomial& f);
IntPolynomial h_to_f(const IntPolynomial& h);
bool is_palindromic(const IntPolynomial& h);
// Uses d = degree(h).
GammaVector h_to_gamma(const IntPolynomial& h);
// Explicit d, for polynomials that are symmetric about d/2 but have h_0 = 0
// (differences of h-polynomials); the zero polynomial is accepted.
GammaVector h_to_gamma(const IntPolynomial& h, int d);
IntPolynomial gamma_to_h(const GammaVector& g);

// f-polynomial sum_i f_{i-1} t^{d-i} built from (f_{-1}, f_0, ..., f_{d-1}).
IntPolynomial f_polynomial(const std::vector<long long>& f_vector);

}  // namespace arrchow
