#pragma once

#include <cstdint>
#include <vector>

#include "arrchow/poly.hpp"

namespace arrchow {

// Fixed-size bitset sized at runtime.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int n) : n_(n), w_((n + 63) / 64, 0) {}
  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  DynBitset& operator|=(const DynBitset& o);
  DynBitset& operator&=(const DynBitset& o);
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  int count() const;
  // Calls f(i) for each set bit in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t word = w_[k];
      while (word) {
        const int b = __builtin_ctzll(word);
        f(static_cast<int>(k * 64 + b));
        word &= word - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Finite graded lattice given by ranks and cover relations.  Elements are
// indexed in non-decreasing rank order, so index 0 is the bottom and the last
// index is the top.
class GradedLattice {
 public:
  GradedLattice() = default;
  // up[x] lists the elements covering x.  Validates gradedness and the
  // unique bottom/top; throws InvalidParams otherwise.
  GradedLattice(std::vector<int> rank, std::vector<std::vector<int>> up);

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(int x) const { return rank_[x]; }
  int height() const { return rank_.back(); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  const std::vector<int>& up(int x) const { return up_[x]; }
  const std::vector<int>& down(int x) const { return down_[x]; }
  std::vector<int> atoms() const { return up_[0]; }
  bool covers(int x, int y) const;  // x <. y
  // Position of y in up(x), or -1.
  int cover_index(int x, int y) const;
  int num_covers() const;

 private:
  std::vector<int> rank_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
};

// Transitive closure of the cover relation, as bitsets.
class OrderRelation {
 public:
  explicit OrderRelation(const GradedLattice& lat);
  bool leq(int x, int y) const { return above_[x].test(y); }
  const DynBitset& above(int x) const { return above_[x]; }
  const DynBitset& below(int y) const { return below_[y]; }
  int join(int x, int y) const;
  int meet(int x, int y) const;

 private:
  const GradedLattice* lat_;
  std::vector<DynBitset> above_;
  std::vector<DynBitset> below_;
};

// [lo, hi] with ranks shifted so lo has rank 0.  original[k] is the index in
// the source lattice of element k of the interval.
struct Interval {
  GradedLattice lattice;
  std::vector<int> original;
};

Interval contract_interval(const GradedLattice& lat, int lo, int hi);
Interval contract_interval(const GradedLattice& lat, const OrderRelation& order, int lo, int hi);

// Number of maximal chains bottom -> top, by dynamic programming.
BigInt count_maximal_chains(const GradedLattice& lat);

// Graded-poset isomorphism test: colour refinement on (rank, up/down
// colour multisets), then backtracking over colour classes.
bool lattice_isomorphic(const GradedLattice& a, const GradedLattice& b);

// Geometric-lattice axioms; return the number of violations found.
int atomicity_violations(const GradedLattice& lat, const OrderRelation& order);
int semimodularity_violations(const GradedLattice& lat, const OrderRelation& order);

}  // namespace arrchow
