#pragma once

#include <vector>

#include "arrchow/poly.hpp"

namespace arrchow {

// One-line notation u_1..u_n of a bijection on {1..n}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);  // throws InvalidParams if not a bijection
  static Permutation identity(int n);

  int size() const { return static_cast<int>(u_.size()); }
  // One-based: at(i) = u_i.
  int at(int i) const { return u_[i - 1]; }
  const std::vector<int>& one_line() const { return u_; }
  // Advance to the next permutation in lexicographic order; false after the last.
  bool next();

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> u_;
};

int descents(const std::vector<int>& a);
// Peaks with boundary u_0 = 0, u_{n+1} = n+1.
int peaks(const Permutation& u);
// Peaks with boundary u_0 = u_{n+1} = 0.
int maxima(const Permutation& u);
Permutation horizontal_flip(const Permutation& u);
// a_i = #{ j >= i : sigma(j) <= sigma(i) }
std::vector<int> inversion_sequence(const Permutation& sigma);

IntPolynomial h_b_closed(int n);
// n >= 3.
IntPolynomial h_d_closed(int n);
// h(B_n) - h(D_{n,n-1}); n >= 2.
IntPolynomial increment_closed(int n);
GammaVector gamma_b_closed(int n);
// gamma-vector step in s: entry k is (1/2) #{u in S_{n-1} : maxima(u) = k} 4^k.
std::vector<BigInt> gamma_increment_closed(int n);

}  // namespace arrchow
