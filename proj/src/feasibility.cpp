#include "arrchow/feasibility.hpp"

#include <stdexcept>

namespace arrchow {

namespace {

struct Overflow {};

struct I64Arith {
  using Z = long long;
  static Z from(long long v) { return v; }
  // (p*a - c*b) / d, exact by the integer-pivoting invariant.
  static Z update(Z p, Z a, Z c, Z b, Z d) {
    const __int128 v = (static_cast<__int128>(p) * a - static_cast<__int128>(c) * b) / d;
    if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
    return static_cast<Z>(v);
  }
  // sign(n1*d2 - n2*d1)
  static int cross_sign(Z n1, Z d1, Z n2, Z d2) {
    const __int128 l = static_cast<__int128>(n1) * d2;
    const __int128 r = static_cast<__int128>(n2) * d1;
    return (l > r) - (l < r);
  }
  static int sign(Z v) { return (v > 0) - (v < 0); }
  static BigInt big(Z v) { return BigInt(std::to_string(v)); }
};

struct BigArith {
  using Z = BigInt;
  static Z from(long long v) { return BigInt(std::to_string(v)); }
  static Z update(const Z& p, const Z& a, const Z& c, const Z& b, const Z& d) {
    Z v = p * a - c * b;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    return v;
  }
  static int cross_sign(const Z& n1, const Z& d1, const Z& n2, const Z& d2) {
    return cmp(Z(n1 * d2), Z(n2 * d1));
  }
  static int sign(const Z& v) { return sgn(v); }
  static BigInt big(const Z& v) { return v; }
};

// Phase-1 LP:  minimise sum(a)  s.t.  M^T u + a_{0..r-1} = 0,  1^T u + a_r = 1.
// Returns true iff the optimum is positive, i.e. M y > 0 is feasible.
template <class A>
bool gordan_phase1(const IntMatrix& m_rows, int r, std::vector<BigInt>* witness) {
  using Z = typename A::Z;
  const int m = static_cast<int>(m_rows.size());
  const int nrows = r + 1;
  const int ncols = m + nrows;
  const int rhs = ncols;
  const int width = ncols + 1;
  const int obj = nrows;
  std::vector<Z> t(static_cast<size_t>(nrows + 1) * width, A::from(0));
  auto at = [&](int i, int j) -> Z& { return t[static_cast<size_t>(i) * width + j]; };

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < m; ++j) at(i, j) = A::from(m_rows[j][i]);
  }
  for (int j = 0; j < m; ++j) at(r, j) = A::from(1);
  at(r, rhs) = A::from(1);
  for (int i = 0; i < nrows; ++i) at(i, m + i) = A::from(1);
  for (int j = 0; j < m; ++j) {
    Z s = A::from(0);
    for (int i = 0; i < nrows; ++i) s = s - at(i, j);
    at(obj, j) = s;
  }
  at(obj, rhs) = A::from(-1);

  std::vector<int> basis(nrows);
  for (int i = 0; i < nrows; ++i) basis[i] = m + i;
  Z denom = A::from(1);

  for (;;) {
    int q = -1;
    for (int j = 0; j < ncols; ++j) {
      if (A::sign(at(obj, j)) < 0) {
        q = j;
        break;
      }
    }
    if (q < 0) break;
    int p = -1;
    for (int i = 0; i < nrows; ++i) {
      if (A::sign(at(i, q)) <= 0) continue;
      if (p < 0) {
        p = i;
        continue;
      }
      const int c = A::cross_sign(at(i, rhs), at(i, q), at(p, rhs), at(p, q));
      if (c < 0 || (c == 0 && basis[i] < basis[p])) p = i;
    }
    if (p < 0) throw std::logic_error("phase-1 objective unbounded below");
    const Z piv = at(p, q);
    for (int i = 0; i <= nrows; ++i) {
      if (i == p) continue;
      const Z iq = at(i, q);
      for (int j = 0; j < width; ++j) at(i, j) = A::update(piv, at(i, j), iq, at(p, j), denom);
    }
    denom = piv;
    basis[p] = q;
  }

  if (A::sign(at(obj, rhs)) == 0) return false;
  if (witness) {
    // Reduced cost of artificial k is 1 - w_k; y = -w up to the factor denom.
    witness->assign(r, BigInt(0));
    for (int k = 0; k < r; ++k) (*witness)[k] = A::big(at(obj, m + k)) - A::big(denom);
    for (const auto& row : m_rows) {
      BigInt s = 0;
      for (int k = 0; k < r; ++k) s += BigInt(std::to_string(row[k])) * (*witness)[k];
      if (s <= 0) throw std::logic_error("strict feasibility witness failed verification");
    }
  }
  return true;
}

}  // namespace

bool StrictSystemSolver::feasible(const IntMatrix& rows, int r, std::vector<BigInt>* witness) {
  ++solves_;
  try {
    return gordan_phase1<I64Arith>(rows, r, witness);
  } catch (const Overflow&) {
    ++retries_;
    return gordan_phase1<BigArith>(rows, r, witness);
  }
}

bool strictly_feasible(const IntMatrix& rows, int r, std::vector<BigInt>* witness) {
  StrictSystemSolver solver;
  return solver.feasible(rows, r, witness);
}

bool sign_vector_realizable(const IntMatrix& normals, int dim, const std::vector<int8_t>& signs) {
  if (normals.size() != signs.size()) throw std::invalid_argument("sign vector length mismatch");
  IntMatrix equalities;
  for (size_t i = 0; i < normals.size(); ++i) {
    if (signs[i] == 0) equalities.push_back(normals[i]);
  }
  // Parametrise the equality subspace as x = N y.
  const IntMatrix basis = nullspace_basis(equalities, dim);
  const int k = static_cast<int>(basis.size());
  IntMatrix strict;
  for (size_t i = 0; i < normals.size(); ++i) {
    if (signs[i] == 0) continue;
    IntVector row(k);
    for (int c = 0; c < k; ++c) row[c] = signs[i] * dot(normals[i], basis[c]);
    strict.push_back(std::move(row));
  }
  return strictly_feasible(strict, k);
}

}  // namespace arrchow
