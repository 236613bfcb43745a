#include "arrchow/chow.hpp"

#include <functional>

#include "arrchow/errors.hpp"
#include "arrchow/permstats.hpp"
#include "arrchow/signed_partition.hpp"
#include "arrchow/topegraph.hpp"

namespace arrchow {

MoebiusTable moebius(const GradedLattice& lat, int base) {
  if (base < 0 || base >= lat.size()) throw InvalidParams("base element out of range");
  const OrderRelation order(lat);
  MoebiusTable t;
  t.base = base;
  t.values.assign(lat.size(), 0);
  t.in_interval.assign(lat.size(), false);
  const DynBitset& up = order.above(base);
  up.for_each([&](int y) {
    t.in_interval[y] = true;
    if (y == base) {
      t.values[y] = 1;
      return;
    }
    BigInt s = 0;
    (up & order.below(y)).for_each([&](int z) {
      if (z != y) s += t.values[z];
    });
    t.values[y] = -s;
  });
  return t;
}

IntPolynomial characteristic_poly(const GradedLattice& lat, int lo, int hi) {
  const OrderRelation order(lat);
  if (!order.leq(lo, hi)) throw NotComparable("characteristic polynomial needs lo <= hi");
  const MoebiusTable mu = moebius(lat, lo);
  std::vector<BigInt> c(lat.rank(hi) - lat.rank(lo) + 1);
  (order.above(lo) & order.below(hi)).for_each([&](int a) { c[lat.rank(hi) - lat.rank(a)] += mu.values[a]; });
  return IntPolynomial(std::move(c));
}

IntPolynomial reduce_by_t_minus_1(const IntPolynomial& chi) {
  IntPolynomial q;
  if (!chi.divide_by_linear(1, q)) throw NonDivisible("(t - 1) does not divide " + chi.to_string());
  return q;
}

IntPolynomial reduced_characteristic_poly(const GradedLattice& lat, int lo, int hi) {
  return reduce_by_t_minus_1(characteristic_poly(lat, lo, hi));
}

IntPolynomial char_poly_bruteforce(const Arrangement& a) {
  const int m = a.size();
  if (m > 20) throw TooLarge("subset enumeration is limited to 20 hyperplanes");
  const int k = a.rank();
  std::vector<long long> coef(k + 1, 0);
  EchelonBasis basis(a.dim());
  std::function<void(int, int)> dfs = [&](int start, int size) {
    coef[k - basis.rank()] += (size % 2 == 0) ? 1 : -1;
    for (int i = start; i < m; ++i) {
      const bool added = basis.add(a.normal(i));
      dfs(i + 1, size + 1);
      if (added) basis.pop();
    }
  };
  dfs(0, 0);
  std::vector<BigInt> c;
  for (long long x : coef) c.emplace_back(static_cast<long>(x));
  return IntPolynomial(std::move(c));
}

IntPolynomial chow_from_census(const std::vector<uint64_t>& census, int rank) {
  if (rank == 0) return IntPolynomial{1};
  IntPolynomial h;
  for (size_t k = 0; k < census.size(); ++k) {
    if (census[k] == 0) continue;
    const int e = rank - 1 - 2 * static_cast<int>(k);
    if (e < 0) throw std::logic_error("descent count exceeds the rank bound");
    BigInt mult;
    mpz_import(mult.get_mpz_t(), 1, 1, sizeof(uint64_t), 0, 0, &census[k]);
    h += (IntPolynomial::linear_power(1, e) * mult).times_power_of_t(static_cast<int>(k));
  }
  return h;
}

IntPolynomial chow_via_chains(const GradedLattice& lat, const EdgeLabeling& labels, ChainConvention c, int jobs) {
  return chow_from_census(filtered_descent_census(lat, labels, c, jobs), lat.height());
}

namespace {

// Tuples a_i in {1..n+1-i} with a_1 <= a_2 and no two consecutive descents.
IntPolynomial tuple_sum(int n, const std::function<long(int)>& weight) {
  if (n < 1) throw InvalidParams("n must be at least 1");
  std::vector<BigInt> census(n, 0);
  std::vector<int> a;
  std::function<void(int, BigInt, int, bool)> rec = [&](int i, BigInt w, int des, bool prev_descent) {
    if (i == n + 1) {
      census[des] += w;
      return;
    }
    for (int v = 1; v <= n + 1 - i; ++v) {
      bool descent = false;
      if (i >= 2) {
        descent = a.back() > v;
        if (i == 2 && descent) continue;
        if (descent && prev_descent) continue;
      }
      a.push_back(v);
      rec(i + 1, w * weight(v), des + descent, descent);
      a.pop_back();
    }
  };
  rec(1, BigInt(1), 0, false);
  IntPolynomial h;
  for (int k = 0; k < n; ++k) {
    if (census[k] == 0) continue;
    h += (IntPolynomial::linear_power(1, n - 1 - 2 * k) * census[k]).times_power_of_t(k);
  }
  return h;
}

struct Overflow {};

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// reduced chi([f, g]) for every g > f, via mu(f, .) over the up-set.
template <class Z, class Add>
std::vector<std::pair<int, std::vector<Z>>> interval_chis(const GradedLattice& lat, const OrderRelation& order, int f,
                                                         Add add) {
  std::vector<std::pair<int, std::vector<Z>>> out;
  std::vector<Z> mu(lat.size(), Z(0));
  const DynBitset& up = order.above(f);
  up.for_each([&](int g) {
    if (g == f) {
      mu[g] = Z(1);
      return;
    }
    const int rg = lat.rank(g);
    std::vector<Z> chi(rg - lat.rank(f) + 1, Z(0));
    Z s(0);
    (up & order.below(g)).for_each([&](int k) {
      if (k == g) return;
      s = add(s, mu[k]);
      chi[rg - lat.rank(k)] = add(chi[rg - lat.rank(k)], mu[k]);
    });
    mu[g] = Z(0) - s;
    chi[0] = add(chi[0], mu[g]);
    out.emplace_back(g, std::move(chi));
  });
  return out;
}

IntPolynomial to_poly(const std::vector<long long>& c) {
  std::vector<BigInt> v;
  for (long long x : c) v.emplace_back(std::to_string(x));
  return IntPolynomial(std::move(v));
}

IntPolynomial to_poly(const std::vector<BigInt>& c) { return IntPolynomial(c); }

std::vector<std::pair<int, IntPolynomial>> reduced_chis_above(const GradedLattice& lat, const OrderRelation& order,
                                                              int f) {
  std::vector<std::pair<int, IntPolynomial>> out;
  auto convert = [&](const auto& raw) {
    for (const auto& [g, chi] : raw) out.emplace_back(g, reduce_by_t_minus_1(to_poly(chi)));
  };
  try {
    convert(interval_chis<long long>(lat, order, f, checked_add));
  } catch (const Overflow&) {
    out.clear();
    convert(interval_chis<BigInt>(lat, order, f, [](const BigInt& a, const BigInt& b) { return BigInt(a + b); }));
  }
  return out;
}

}  // namespace

IntPolynomial chow_type_a(int n) {
  return tuple_sum(n, [](int a) { return static_cast<long>(a); });
}

IntPolynomial chow_type_b(int n) {
  return tuple_sum(n, [](int a) { return static_cast<long>(2 * a - 1); });
}

bool FlagCache::lookup(int f, IntPolynomial& out) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(f);
  if (it == memo_.end()) return false;
  out = it->second;
  return true;
}

void FlagCache::store(int f, const IntPolynomial& h) {
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(f, h);
}

size_t FlagCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

IntPolynomial chow_recursive(const GradedLattice& lat, FlagCache* cache) {
  const OrderRelation order(lat);
  std::function<IntPolynomial(int)> h_above = [&](int f) -> IntPolynomial {
    if (f == lat.top()) return IntPolynomial{1};
    IntPolynomial memo;
    if (cache && cache->lookup(f, memo)) return memo;
    IntPolynomial h;
    for (const auto& [g, rchi] : reduced_chis_above(lat, order, f)) h += rchi * h_above(g);
    if (cache) cache->store(f, h);
    return h;
  };
  return h_above(lat.bottom());
}

IntPolynomial chow_recursive(const GradedLattice& lat) {
  FlagCache cache;
  return chow_recursive(lat, &cache);
}

IntPolynomial chow_dns(int n, int s, int jobs) {
  const PartitionLattice lat = enumerate_lattice(LatticeVariant::Dns(n, s), jobs);
  return chow_via_chains(lat.lattice, el_labeling(lat), ChainConvention::Strict, jobs);
}

CheckReport verify_chow_arithmetic(int n, int jobs) {
  if (n < 2) throw InvalidParams("arithmeticity check needs n >= 2");
  CheckReport r;
  r.check = "chow-arithmetic n=" + std::to_string(n);
  std::vector<IntPolynomial> h;
  for (int s = 0; s <= n; ++s) {
    h.push_back(chow_dns(n, s, jobs));
    if (!is_palindromic(h.back())) r.fail("H(D" + std::to_string(n) + "," + std::to_string(s) + ") not palindromic");
  }
  const IntPolynomial step = h[1] - h[0];
  for (int s = 1; s <= n; ++s) {
    if (h[s] - h[s - 1] != step) r.fail("increment at s=" + std::to_string(s) + " differs");
  }
  for (int s = 0; s <= n; ++s) {
    if (h[s] * BigInt(n) != h[n] * BigInt(s) + h[0] * BigInt(n - s)) {
      r.fail("interpolation fails at s=" + std::to_string(s));
    }
  }
  r.details.push_back("increment " + step.to_string());
  return r;
}

CheckReport verify_gamma_arithmetic(int n, int jobs) {
  if (n < 2 || n > 6) throw InvalidParams("gamma arithmeticity check supports 2 <= n <= 6");
  CheckReport r;
  r.check = "gamma-arithmetic n=" + std::to_string(n);
  std::vector<GammaVector> g;
  for (int s = 0; s <= n; ++s) {
    const Arrangement a = make_family(Family::Dns, n, s);
    const SignVector base{std::vector<int8_t>(a.size(), 1)};
    g.push_back(h_to_gamma(h_via_indegree(a, base, jobs)));
  }
  const std::vector<BigInt> closed = gamma_increment_closed(n);
  const GammaVector from_h = h_to_gamma(increment_closed(n), n);
  if (from_h.entries != closed) r.fail("closed increment h-polynomial disagrees with the maxima census");
  for (int s = 1; s <= n; ++s) {
    std::vector<BigInt> diff;
    for (size_t k = 0; k < g[s].entries.size(); ++k) diff.push_back(g[s].entries[k] - g[s - 1].entries[k]);
    if (diff != closed) {
      GammaVector shown{diff, n};
      r.fail("increment at s=" + std::to_string(s) + " is " + shown.to_string());
    }
  }
  r.details.push_back("increment " + GammaVector{closed, n}.to_string());
  return r;
}

}  // namespace arrchow
