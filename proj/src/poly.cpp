#include "arrchow/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "arrchow/errors.hpp"

namespace arrchow {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<size_t>(degree) + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear_power(long c, int k) {
  // Binomial expansion of (t + c)^k.
  std::vector<BigInt> v(static_cast<size_t>(k) + 1);
  BigInt cpow = 1;
  for (int i = k; i >= 0; --i) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), k, k - i);
    v[i] = binom * cpow;
    cpow *= c;
  }
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

BigInt IntPolynomial::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPolynomial::coeff_sum() const {
  BigInt acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

IntPolynomial IntPolynomial::shift(long c) const {
  // Horner in the ring: acc = acc * (t + c) + a_i.
  std::vector<BigInt> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<BigInt> next(acc.size() + 1);
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] += acc[j] * c;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return IntPolynomial(std::move(acc));
}

IntPolynomial IntPolynomial::times_power_of_t(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<size_t>(k), BigInt(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

bool IntPolynomial::divide_by_linear(long c, IntPolynomial& quotient) const {
  if (is_zero()) {
    quotient = {};
    return true;
  }
  // Synthetic division, highest degree first.
  std::vector<BigInt> q(coeffs_.size() - 1);
  BigInt carry = 0;
  for (int i = degree(); i >= 1; --i) {
    carry = coeffs_[i] + carry * c;
    q[i - 1] = carry;
  }
  BigInt remainder = coeffs_[0] + carry * c;
  quotient = IntPolynomial(std::move(q));
  return remainder == 0;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::vector<std::string> IntPolynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

IntPolynomial IntPolynomial::from_decimal_strings(const std::vector<std::string>& digits) {
  std::vector<BigInt> v;
  v.reserve(digits.size());
  for (const auto& s : digits) {
    BigInt x;
    if (s.empty() || x.set_str(s, 10) != 0) throw ParseError("not a decimal integer: '" + s + "'");
    v.push_back(x);
  }
  return IntPolynomial(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

std::string GammaVector::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].get_str();
  }
  return out + ")";
}

IntPolynomial f_to_h(const IntPolynomial& f) { return f.shift(-1); }

IntPolynomial h_to_f(const IntPolynomial& h) { return h.shift(1); }

bool is_palindromic(const IntPolynomial& h) {
  const auto& c = h.coeffs();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

GammaVector h_to_gamma(const IntPolynomial& h) {
  if (h.is_zero()) throw NonPalindromic("zero polynomial has no gamma expansion");
  if (!is_palindromic(h)) throw NonPalindromic("h-polynomial is not palindromic: " + h.to_string());
  return h_to_gamma(h, h.degree());
}

GammaVector h_to_gamma(const IntPolynomial& h, int d) {
  if (d < 0 || (!h.is_zero() && h.degree() > d)) throw InvalidParams("degree bound below polynomial degree");
  for (int i = 0; i <= d; ++i) {
    if (h.coeff(i) != h.coeff(d - i)) throw NonPalindromic("coefficients not symmetric about d/2: " + h.to_string());
  }
  GammaVector g;
  g.d = d;
  IntPolynomial rest = h;
  // Lowest index first: t^i (1+t)^(d-2i) is the only basis element still
  // contributing to t^i once lower ones have been subtracted.
  for (int i = 0; 2 * i <= d; ++i) {
    BigInt gi = rest.coeff(i);
    g.entries.push_back(gi);
    if (gi != 0) rest -= (IntPolynomial::linear_power(1, d - 2 * i) * gi).times_power_of_t(i);
  }
  if (!rest.is_zero()) throw NonPalindromic("gamma expansion left a remainder: " + rest.to_string());
  return g;
}

IntPolynomial gamma_to_h(const GammaVector& g) {
  IntPolynomial h;
  for (size_t i = 0; i < g.entries.size(); ++i) {
    if (g.entries[i] == 0) continue;
    h += (IntPolynomial::linear_power(1, g.d - 2 * static_cast<int>(i)) * g.entries[i])
             .times_power_of_t(static_cast<int>(i));
  }
  return h;
}

IntPolynomial f_polynomial(const std::vector<long long>& f_vector) {
  const int d = static_cast<int>(f_vector.size()) - 1;
  std::vector<BigInt> v(f_vector.size());
  for (int i = 0; i <= d; ++i) v[d - i] = BigInt(std::to_string(f_vector[i]));
  return IntPolynomial(std::move(v));
}

}  // namespace arrchow
