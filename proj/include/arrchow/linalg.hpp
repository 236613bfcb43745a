#pragma once

#include <cstdint>
#include <vector>

namespace arrchow {

using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;

long long dot(const IntVector& a, const IntVector& b);

// Divide by the gcd of the entries and make the first nonzero entry positive.
IntVector make_primitive(IntVector v);

// Rank over Q of the given rows (each of length dim).
int rank_of(const IntMatrix& rows, int dim);

// Integer basis (over Q) of { x in Q^dim : row . x = 0 for every row }.
// Each basis vector is primitive.
IntMatrix nullspace_basis(const IntMatrix& rows, int dim);

// Incremental row-echelon basis for repeated independence queries over Q.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}
  int rank() const { return static_cast<int>(rows_.size()); }
  // Adds v if independent of the current span; returns whether it was added.
  bool add(const IntVector& v);
  bool in_span(const IntVector& v) const;
  // Undo the last successful add.
  void pop() { rows_.pop_back(); pivots_.pop_back(); }

 private:
  IntVector reduce(IntVector v) const;
  int dim_;
  IntMatrix rows_;
  std::vector<int> pivots_;
};

}  // namespace arrchow
