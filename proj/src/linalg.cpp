#include "arrchow/linalg.hpp"

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>

namespace arrchow {

namespace {

long long narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer row reduction overflowed 64 bits");
  return static_cast<long long>(v);
}

}  // namespace

long long dot(const IntVector& a, const IntVector& b) {
  __int128 acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
  return narrow(acc);
}

IntVector make_primitive(IntVector v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) return v;
  long long sign = 1;
  for (long long x : v) {
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  }
  for (auto& x : v) x = x / g * sign;
  return v;
}

IntVector EchelonBasis::reduce(IntVector v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (v[p] == 0) continue;
    const long long a = rows_[k][p];
    const long long b = v[p];
    for (int j = 0; j < dim_; ++j) {
      v[j] = narrow(static_cast<__int128>(a) * v[j] - static_cast<__int128>(b) * rows_[k][j]);
    }
    v = make_primitive(std::move(v));
  }
  return v;
}

bool EchelonBasis::in_span(const IntVector& v) const {
  IntVector r = reduce(v);
  for (long long x : r) {
    if (x != 0) return false;
  }
  return true;
}

bool EchelonBasis::add(const IntVector& v) {
  IntVector r = reduce(v);
  int pivot = -1;
  for (int j = 0; j < dim_; ++j) {
    if (r[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  // r vanishes on all earlier pivots, so a single forward pass in reduce()
  // never reintroduces them.
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

int rank_of(const IntMatrix& rows, int dim) {
  EchelonBasis basis(dim);
  for (const auto& row : rows) {
    basis.add(row);
    if (basis.rank() == dim) break;
  }
  return basis.rank();
}

IntMatrix nullspace_basis(const IntMatrix& rows, int dim) {
  std::vector<std::vector<mpq_class>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<mpq_class> r(dim);
    for (int j = 0; j < dim; ++j) r[j] = mpq_class(static_cast<long>(row[j]));
    a.push_back(std::move(r));
  }
  // Reduced row echelon form.
  std::vector<int> pivot_col;
  size_t prow = 0;
  for (int col = 0; col < dim && prow < a.size(); ++col) {
    size_t sel = prow;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[prow]);
    const mpq_class inv = 1 / a[prow][col];
    for (auto& x : a[prow]) x *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == prow || a[i][col] == 0) continue;
      const mpq_class f = a[i][col];
      for (int j = 0; j < dim; ++j) a[i][j] -= f * a[prow][j];
    }
    pivot_col.push_back(col);
    ++prow;
  }
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivot_col) is_pivot[c] = true;

  IntMatrix basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(dim);
    x[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -a[r][free];
    mpz_class lcm = 1;
    for (const auto& q : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    IntVector v(dim);
    for (int j = 0; j < dim; ++j) {
      mpz_class z = x[j].get_num() * (lcm / x[j].get_den());
      if (!z.fits_slong_p()) throw std::overflow_error("null space basis entry exceeds 64 bits");
      v[j] = z.get_si();
    }
    basis.push_back(make_primitive(std::move(v)));
  }
  return basis;
}

}  // namespace arrchow
