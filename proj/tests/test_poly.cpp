#include <doctest.h>

#include "arrchow/errors.hpp"
#include "arrchow/poly.hpp"
#include "generators.hpp"

using namespace arrchow;

namespace {

BigInt binomial(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// h_k = sum_i f_i C(d-i, k-i)(-1)^(k-i), written against the f-polynomial coefficients directly.
IntPolynomial f_to_h_oracle(const IntPolynomial& f) {
  const int d = f.degree();
  std::vector<BigInt> h(d + 1);
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k <= j; ++k) {
      BigInt term = f.coeff(j) * binomial(j, k);
      if ((j - k) % 2) term = -term;
      h[k] += term;
    }
  }
  return IntPolynomial(h);
}

}  // namespace

TEST_CASE("poly: construction trims and renders") {
  CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(IntPolynomial{1, 11, 11, 1}.to_string() == "t^3 + 11*t^2 + 11*t + 1");
  CHECK(IntPolynomial{-3, 0, -1}.to_string() == "-t^2 - 3");
  CHECK(IntPolynomial{0, 1}.to_string() == "t");
  CHECK(IntPolynomial::linear_power(1, 3) == IntPolynomial{1, 3, 3, 1});
  CHECK(IntPolynomial::linear_power(-1, 2) == IntPolynomial{1, -2, 1});
}

TEST_CASE("poly: decimal strings round trip with big coefficients") {
  const std::vector<std::string> digits{"1", "-123456789012345678901234567890", "0", "7"};
  const IntPolynomial p = IntPolynomial::from_decimal_strings(digits);
  CHECK(p.to_decimal_strings() == digits);
  CHECK_THROWS_AS(IntPolynomial::from_decimal_strings({"12x"}), ParseError);
}

TEST_CASE("poly: f_to_h and h_to_f examples") {
  CHECK(f_to_h(IntPolynomial{1}) == IntPolynomial{1});
  CHECK(f_to_h(IntPolynomial{24, 36, 14, 1}) == IntPolynomial{1, 11, 11, 1});
  CHECK(f_to_h(IntPolynomial{8, 8, 1}) == IntPolynomial{1, 6, 1});
  CHECK(h_to_f(IntPolynomial{1}) == IntPolynomial{1});
  CHECK(h_to_f(IntPolynomial{1, 11, 11, 1}) == IntPolynomial{24, 36, 14, 1});
  CHECK(h_to_f(IntPolynomial{1, 6, 1}) == IntPolynomial{8, 8, 1});
}

TEST_CASE("poly: gamma examples") {
  CHECK(h_to_gamma(IntPolynomial{1, 11, 11, 1}).to_string() == "(1, 8)");
  CHECK(h_to_gamma(IntPolynomial{1}).entries == std::vector<BigInt>{1});
  CHECK(h_to_gamma(IntPolynomial{1, 23, 23, 1}).to_string() == "(1, 20)");
  CHECK(gamma_to_h(GammaVector{{1}, 0}) == IntPolynomial{1});
  CHECK(gamma_to_h(GammaVector{{1, 8}, 3}) == IntPolynomial{1, 11, 11, 1});
  CHECK(gamma_to_h(GammaVector{{1, 40, 16}, 4}) == IntPolynomial{1, 44, 102, 44, 1});
  CHECK_THROWS_AS(h_to_gamma(IntPolynomial{3, 5, 1}), NonPalindromic);
}

TEST_CASE("poly: palindromicity") {
  CHECK(is_palindromic(IntPolynomial{1, 6, 1}));
  CHECK_FALSE(is_palindromic(IntPolynomial{3, 5, 1}));
}

TEST_CASE("poly: exact division by linear factors") {
  IntPolynomial q;
  CHECK(IntPolynomial{3, -4, 1}.divide_by_linear(1, q));
  CHECK(q == IntPolynomial{-3, 1});
  CHECK_FALSE(IntPolynomial{3, -4, 2}.divide_by_linear(1, q));
}

TEST_CASE("poly property: f -> h -> f round trip matches a binomial oracle") {
  gen::Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial p = gen::polynomial(rng, 12, 1000);
    CHECK(h_to_f(f_to_h(p)) == p);
    if (!p.is_zero()) CHECK(f_to_h(p) == f_to_h_oracle(p));
  }
}

TEST_CASE("poly property: gamma round trip on palindromic polynomials") {
  gen::Rng rng(202);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial h = gen::palindromic(rng, 12, 500);
    CHECK(gamma_to_h(h_to_gamma(h)) == h);
  }
}

TEST_CASE("poly property: ring laws and evaluation") {
  gen::Rng rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial a = gen::polynomial(rng, 8, 50);
    const IntPolynomial b = gen::polynomial(rng, 8, 50);
    const BigInt x = gen::uniform(rng, -5, 5);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    CHECK((a - a).is_zero());
    CHECK(a.shift(2).evaluate(x) == a.evaluate(x + 2));
    IntPolynomial q;
    const IntPolynomial prod = a * IntPolynomial{-3, 1};
    CHECK(prod.divide_by_linear(3, q));
    CHECK(q == a);
  }
}

TEST_CASE("poly: f_polynomial orders the f-vector by codimension") {
  CHECK(f_polynomial({1, 14, 36, 24}) == IntPolynomial{24, 36, 14, 1});
  // Sum rule: h(1) counts the facets.
  CHECK(f_to_h(f_polynomial({1, 14, 36, 24})).coeff_sum() == 24);
}
