#include "arrchow/permstats.hpp"

#include <algorithm>
#include <numeric>

#include "arrchow/errors.hpp"

namespace arrchow {

Permutation::Permutation(std::vector<int> one_line) : u_(std::move(one_line)) {
  std::vector<int> sorted = u_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < size(); ++i) {
    if (sorted[i] != i + 1) throw InvalidParams("not a permutation of 1..n");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> u(n);
  std::iota(u.begin(), u.end(), 1);
  return Permutation(std::move(u));
}

bool Permutation::next() { return std::next_permutation(u_.begin(), u_.end()); }

int descents(const std::vector<int>& a) {
  int d = 0;
  for (size_t i = 0; i + 1 < a.size(); ++i) d += a[i] > a[i + 1];
  return d;
}

namespace {

int interior_peaks(const Permutation& u, int left, int right) {
  const int n = u.size();
  int p = 0;
  for (int i = 1; i <= n; ++i) {
    const int before = i == 1 ? left : u.at(i - 1);
    const int after = i == n ? right : u.at(i + 1);
    p += before < u.at(i) && u.at(i) > after;
  }
  return p;
}

// sum over S_n of weight(u) * (4t)^{stat(u)} (1+t)^{n - 2 stat(u)}, by census.
template <class Stat, class Weight>
IntPolynomial peak_sum(int perm_size, int n, Stat stat, Weight weight) {
  std::vector<BigInt> census(n + 1);
  Permutation u = Permutation::identity(perm_size);
  do {
    const long w = weight(u);
    if (w != 0) census[stat(u)] += w;
  } while (u.next());
  IntPolynomial total;
  BigInt four_pow = 1;
  for (int k = 0; 2 * k <= n; ++k) {
    if (census[k] != 0) {
      total += (IntPolynomial::linear_power(1, n - 2 * k) * (census[k] * four_pow)).times_power_of_t(k);
    }
    four_pow *= 4;
  }
  return total;
}

IntPolynomial halve(const IntPolynomial& p) {
  std::vector<BigInt> c = p.coeffs();
  for (auto& x : c) {
    if (!mpz_divisible_ui_p(x.get_mpz_t(), 2)) throw OddSum("sum is not divisible by 2: " + p.to_string());
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 2);
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

int peaks(const Permutation& u) { return interior_peaks(u, 0, u.size() + 1); }

int maxima(const Permutation& u) { return interior_peaks(u, 0, 0); }

Permutation horizontal_flip(const Permutation& u) {
  std::vector<int> v(u.one_line());
  for (auto& x : v) x = u.size() + 1 - x;
  return Permutation(std::move(v));
}

std::vector<int> inversion_sequence(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> a(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) a[i - 1] += sigma.at(j) <= sigma.at(i);
  }
  return a;
}

IntPolynomial h_b_closed(int n) {
  if (n < 1) throw InvalidParams("n must be at least 1");
  return peak_sum(n, n, peaks, [](const Permutation&) { return 1L; });
}

IntPolynomial h_d_closed(int n) {
  if (n < 3) throw InvalidParams("closed form for type D needs n >= 3");
  auto phi = [](const Permutation& u) -> long {
    if (u.at(1) < u.at(2) && u.at(2) < u.at(3)) return 2;
    if (u.at(2) < u.at(1) && u.at(1) < u.at(3)) return 0;
    return 1;
  };
  return halve(peak_sum(n, n, peaks, phi));
}

IntPolynomial increment_closed(int n) {
  if (n < 2) throw InvalidParams("increment needs n >= 2");
  return halve(peak_sum(n - 1, n, maxima, [](const Permutation&) { return 1L; }));
}

GammaVector gamma_b_closed(int n) {
  if (n < 1) throw InvalidParams("n must be at least 1");
  GammaVector g;
  g.d = n;
  g.entries.assign(n / 2 + 1, 0);
  Permutation u = Permutation::identity(n);
  do {
    g.entries[peaks(u)] += 1;
  } while (u.next());
  BigInt four_pow = 1;
  for (auto& e : g.entries) {
    e *= four_pow;
    four_pow *= 4;
  }
  return g;
}

std::vector<BigInt> gamma_increment_closed(int n) {
  if (n < 2) throw InvalidParams("increment needs n >= 2");
  std::vector<BigInt> g(n / 2 + 1, 0);
  Permutation u = Permutation::identity(n - 1);
  do {
    g[maxima(u)] += 1;
  } while (u.next());
  BigInt four_pow = 1;
  for (auto& e : g) {
    e *= four_pow;
    if (!mpz_divisible_ui_p(e.get_mpz_t(), 2)) throw OddSum("gamma increment is odd");
    e /= 2;
    four_pow *= 4;
  }
  return g;
}

}  // namespace arrchow
