#include <doctest.h>

#include "arrchow/errors.hpp"
#include "arrchow/lattice.hpp"

using namespace arrchow;

namespace {

GradedLattice chain(int length) {
  std::vector<int> rank(length + 1);
  std::vector<std::vector<int>> up(length + 1);
  for (int i = 0; i <= length; ++i) {
    rank[i] = i;
    if (i < length) up[i] = {i + 1};
  }
  return GradedLattice(rank, up);
}

// Boolean lattice on k atoms; element index is the subset mask, sorted by popcount.
GradedLattice boolean_lattice(int k) {
  std::vector<int> order;
  for (int pc = 0; pc <= k; ++pc) {
    for (int m = 0; m < (1 << k); ++m) {
      if (__builtin_popcount(m) == pc) order.push_back(m);
    }
  }
  std::vector<int> pos(1 << k);
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<int> rank;
  std::vector<std::vector<int>> up;
  for (int m : order) {
    rank.push_back(__builtin_popcount(m));
    std::vector<int> u;
    for (int b = 0; b < k; ++b) {
      if (!(m >> b & 1)) u.push_back(pos[m | 1 << b]);
    }
    std::sort(u.begin(), u.end());
    up.push_back(u);
  }
  return GradedLattice(rank, up);
}

}  // namespace

TEST_CASE("lattice: validation") {
  CHECK_THROWS_AS(GradedLattice({0, 2}, {{1}, {}}), InvalidParams);
  CHECK_THROWS_AS(GradedLattice({0, 1, 1}, {{1, 2}, {}, {}}), InvalidParams);
}

TEST_CASE("lattice: chain and boolean basics") {
  const GradedLattice c = chain(3);
  CHECK(c.height() == 3);
  CHECK(count_maximal_chains(c) == 1);
  const GradedLattice b = boolean_lattice(3);
  CHECK(b.size() == 8);
  CHECK(count_maximal_chains(b) == 6);
  const OrderRelation order(b);
  CHECK(atomicity_violations(b, order) == 0);
  CHECK(semimodularity_violations(b, order) == 0);
  CHECK(order.join(1, 2) == 4);
  CHECK(order.meet(4, 5) == 1);
}

TEST_CASE("lattice: intervals") {
  const GradedLattice b = boolean_lattice(3);
  const Interval point = contract_interval(b, 0, 0);
  CHECK(point.lattice.size() == 1);
  const Interval whole = contract_interval(b, b.bottom(), b.top());
  CHECK(whole.lattice.size() == b.size());
  CHECK(lattice_isomorphic(whole.lattice, b));
  const Interval upper = contract_interval(b, 1, b.top());
  CHECK(lattice_isomorphic(upper.lattice, boolean_lattice(2)));
  CHECK_THROWS_AS(contract_interval(b, 1, 2), NotComparable);
}

TEST_CASE("lattice: isomorphism distinguishes non-isomorphic lattices of equal size") {
  const GradedLattice m3({0, 1, 1, 1, 2}, {{1, 2, 3}, {4}, {4}, {4}, {}});
  CHECK(lattice_isomorphic(m3, m3));
  CHECK_FALSE(lattice_isomorphic(m3, boolean_lattice(2)));
  // Two rank-3 lattices with the same rank sizes but different cover structure.
  const GradedLattice a({0, 1, 1, 2, 2, 3}, {{1, 2}, {3, 4}, {3, 4}, {5}, {5}, {}});
  const GradedLattice b({0, 1, 1, 2, 2, 3}, {{1, 2}, {3, 4}, {4}, {5}, {5}, {}});
  CHECK_FALSE(lattice_isomorphic(a, b));
  // Relabelled copy of b.
  const GradedLattice b2({0, 1, 1, 2, 2, 3}, {{1, 2}, {3}, {3, 4}, {5}, {5}, {}});
  CHECK(lattice_isomorphic(b, b2));
}

TEST_CASE("lattice: geometric-lattice axioms catch a non-geometric lattice") {
  // Two disjoint 2-chains glued at bottom and top: the atoms join at rank 3.
  const GradedLattice n({0, 1, 1, 2, 2, 3}, {{1, 2}, {3}, {4}, {5}, {5}, {}});
  const OrderRelation order(n);
  CHECK(semimodularity_violations(n, order) > 0);
  CHECK(atomicity_violations(n, order) > 0);
}
