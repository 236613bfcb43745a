#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "arrchow/arrangement.hpp"
#include "arrchow/labeling.hpp"
#include "arrchow/lattice.hpp"
#include "arrchow/poly.hpp"

namespace arrchow {

struct MoebiusTable {
  int base = 0;
  // values[x] = mu(base, x); zero outside [base, top].
  std::vector<BigInt> values;
  std::vector<bool> in_interval;
};

MoebiusTable moebius(const GradedLattice& lat, int base);

// sum over a in [lo, hi] of mu(lo, a) t^(rank hi - rank a).
IntPolynomial characteristic_poly(const GradedLattice& lat, int lo, int hi);
// characteristic_poly / (t - 1); NonDivisible if the division is inexact.
IntPolynomial reduced_characteristic_poly(const GradedLattice& lat, int lo, int hi);
IntPolynomial reduce_by_t_minus_1(const IntPolynomial& chi);

// Subset sum over all 2^m subsets; TooLarge above 20 hyperplanes.
IntPolynomial char_poly_bruteforce(const Arrangement& a);

// sum_k census[k] t^k (t+1)^(rank-1-2k); 1 for rank 0.
IntPolynomial chow_from_census(const std::vector<uint64_t>& census, int rank);
IntPolynomial chow_via_chains(const GradedLattice& lat, const EdgeLabeling& labels, ChainConvention c, int jobs = 1);

IntPolynomial chow_type_a(int n);
IntPolynomial chow_type_b(int n);

// Memo of H([F, top]) keyed by F.
class FlagCache {
 public:
  bool lookup(int f, IntPolynomial& out) const;
  void store(int f, const IntPolynomial& h);
  size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<int, IntPolynomial> memo_;
};

// H = sum over F > bottom of reducedchi([bottom, F]) H([F, top]), H(point) = 1.
IntPolynomial chow_recursive(const GradedLattice& lat, FlagCache* cache);
IntPolynomial chow_recursive(const GradedLattice& lat);

struct CheckReport {
  std::string check;
  bool passed = true;
  std::vector<std::string> details;

  void fail(std::string why) {
    passed = false;
    details.push_back(std::move(why));
  }
};

// H(D_{n,s}) by EL-labelled chains on the signed partition lattice.
IntPolynomial chow_dns(int n, int s, int jobs = 1);

CheckReport verify_chow_arithmetic(int n, int jobs = 1);
CheckReport verify_gamma_arithmetic(int n, int jobs = 1);

}  // namespace arrchow
