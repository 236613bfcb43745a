#pragma once

#include <cstdint>
#include <vector>

#include "arrchow/linalg.hpp"
#include "arrchow/poly.hpp"

namespace arrchow {

// Exact decision procedure for homogeneous strict systems { y : M y > 0 }.
//
// By Gordan's alternative the system is infeasible iff some u >= 0, u != 0
// has M^T u = 0.  That is a phase-1 LP over u; it is solved with a
// fraction-free (integer pivoting) simplex under Bland's rule, in 64-bit
// arithmetic with overflow detection and a GMP retry.  The optimal dual
// gives a witness y, which is re-checked before being returned.
class StrictSystemSolver {
 public:
  // rows: m row vectors of length r.
  bool feasible(const IntMatrix& rows, int r, std::vector<BigInt>* witness = nullptr);

  // Statistics, for tests.
  long long solves() const { return solves_; }
  long long bignum_retries() const { return retries_; }

 private:
  long long solves_ = 0;
  long long retries_ = 0;
};

bool strictly_feasible(const IntMatrix& rows, int r, std::vector<BigInt>* witness = nullptr);

// Is { x : sign(normal_i . x) = signs[i] for all i } nonempty?  signs are -1, 0, +1.
bool sign_vector_realizable(const IntMatrix& normals, int dim, const std::vector<int8_t>& signs);

}  // namespace arrchow
