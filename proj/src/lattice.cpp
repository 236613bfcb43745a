#include "arrchow/lattice.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <tuple>

#include "arrchow/errors.hpp"

namespace arrchow {

DynBitset& DynBitset::operator|=(const DynBitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

DynBitset& DynBitset::operator&=(const DynBitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

int DynBitset::count() const {
  int c = 0;
  for (uint64_t w : w_) c += __builtin_popcountll(w);
  return c;
}

GradedLattice::GradedLattice(std::vector<int> rank, std::vector<std::vector<int>> up)
    : rank_(std::move(rank)), up_(std::move(up)) {
  const int n = size();
  if (n == 0 || static_cast<int>(up_.size()) != n) throw InvalidParams("lattice needs matching rank and cover lists");
  if (rank_[0] != 0) throw InvalidParams("bottom element must have rank 0");
  down_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    if (x > 0 && rank_[x] < rank_[x - 1]) throw InvalidParams("elements must be listed in rank order");
    std::sort(up_[x].begin(), up_[x].end());
    for (int y : up_[x]) {
      if (y <= x || y >= n || rank_[y] != rank_[x] + 1) throw InvalidParams("cover relation must raise rank by one");
      down_[y].push_back(x);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (x > 0 && down_[x].empty()) throw InvalidParams("lattice has more than one minimal element");
    if (x < n - 1 && up_[x].empty()) throw InvalidParams("lattice has more than one maximal element");
  }
}

bool GradedLattice::covers(int x, int y) const { return cover_index(x, y) >= 0; }

int GradedLattice::cover_index(int x, int y) const {
  const auto& u = up_[x];
  auto it = std::lower_bound(u.begin(), u.end(), y);
  if (it == u.end() || *it != y) return -1;
  return static_cast<int>(it - u.begin());
}

int GradedLattice::num_covers() const {
  int c = 0;
  for (const auto& u : up_) c += static_cast<int>(u.size());
  return c;
}

OrderRelation::OrderRelation(const GradedLattice& lat) : lat_(&lat) {
  const int n = lat.size();
  above_.assign(n, DynBitset(n));
  below_.assign(n, DynBitset(n));
  for (int x = n - 1; x >= 0; --x) {
    above_[x].set(x);
    for (int y : lat.up(x)) above_[x] |= above_[y];
  }
  for (int y = 0; y < n; ++y) {
    below_[y].set(y);
    for (int x : lat.down(y)) below_[y] |= below_[x];
  }
}

int OrderRelation::join(int x, int y) const {
  int result = -1;
  (above_[x] & above_[y]).for_each([&](int z) {
    if (result < 0) result = z;
  });
  return result;
}

int OrderRelation::meet(int x, int y) const {
  int result = -1;
  (below_[x] & below_[y]).for_each([&](int z) { result = z; });
  return result;
}

Interval contract_interval(const GradedLattice& lat, const OrderRelation& order, int lo, int hi) {
  if (!order.leq(lo, hi)) throw NotComparable("interval bounds are not comparable");
  Interval out;
  std::vector<int> local(lat.size(), -1);
  (order.above(lo) & order.below(hi)).for_each([&](int z) {
    local[z] = static_cast<int>(out.original.size());
    out.original.push_back(z);
  });
  std::vector<int> rank;
  std::vector<std::vector<int>> up;
  for (int z : out.original) {
    rank.push_back(lat.rank(z) - lat.rank(lo));
    std::vector<int> u;
    for (int w : lat.up(z)) {
      if (local[w] >= 0) u.push_back(local[w]);
    }
    up.push_back(std::move(u));
  }
  out.lattice = GradedLattice(std::move(rank), std::move(up));
  return out;
}

Interval contract_interval(const GradedLattice& lat, int lo, int hi) {
  OrderRelation order(lat);
  return contract_interval(lat, order, lo, hi);
}

BigInt count_maximal_chains(const GradedLattice& lat) {
  std::vector<BigInt> ways(lat.size());
  ways[0] = 1;
  for (int x = 0; x < lat.size(); ++x) {
    for (int y : lat.up(x)) ways[y] += ways[x];
  }
  return ways[lat.top()];
}

namespace {

// Colour refinement run jointly on both lattices so colours are comparable.
// Returns false as soon as the colour histograms differ.
bool refine_colours(const GradedLattice& a, const GradedLattice& b, std::vector<int>& ca, std::vector<int>& cb) {
  using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
  auto signature = [](const GradedLattice& l, const std::vector<int>& c, int x) {
    std::vector<int> u, d;
    for (int y : l.up(x)) u.push_back(c[y]);
    for (int y : l.down(x)) d.push_back(c[y]);
    std::sort(u.begin(), u.end());
    std::sort(d.begin(), d.end());
    return Sig{c[x], std::move(u), std::move(d)};
  };
  int classes = -1;
  for (;;) {
    std::map<Sig, std::pair<int, int>> palette;  // signature -> (count in a, count in b)
    std::vector<Sig> sa, sb;
    for (int x = 0; x < a.size(); ++x) sa.push_back(signature(a, ca, x));
    for (int x = 0; x < b.size(); ++x) sb.push_back(signature(b, cb, x));
    for (const auto& sig : sa) ++palette[sig].first;
    for (const auto& sig : sb) ++palette[sig].second;
    std::map<Sig, int> id;
    for (const auto& [sig, counts] : palette) {
      if (counts.first != counts.second) return false;
      id.emplace(sig, static_cast<int>(id.size()));
    }
    for (int x = 0; x < a.size(); ++x) ca[x] = id[sa[x]];
    for (int x = 0; x < b.size(); ++x) cb[x] = id[sb[x]];
    const int next = static_cast<int>(id.size());
    if (next == classes) return true;
    classes = next;
  }
}

// Individualise-and-refine search for a colour-preserving bijection.
bool search(const GradedLattice& a, const GradedLattice& b, std::vector<int> ca, std::vector<int> cb) {
  if (!refine_colours(a, b, ca, cb)) return false;
  std::map<int, std::vector<int>> class_a, class_b;
  for (int x = 0; x < a.size(); ++x) class_a[ca[x]].push_back(x);
  for (int y = 0; y < b.size(); ++y) class_b[cb[y]].push_back(y);
  int pick = -1;
  size_t best = 0;
  for (const auto& [c, xs] : class_a) {
    if (xs.size() > 1 && (pick < 0 || xs.size() < best)) {
      pick = c;
      best = xs.size();
    }
  }
  if (pick < 0) {
    // Discrete colouring: the colour map is the only candidate.
    std::vector<int> f(a.size());
    for (const auto& [c, xs] : class_a) f[xs[0]] = class_b[c][0];
    for (int x = 0; x < a.size(); ++x) {
      std::vector<int> img;
      for (int z : a.up(x)) img.push_back(f[z]);
      std::sort(img.begin(), img.end());
      if (img != b.up(f[x])) return false;
    }
    return true;
  }
  const int fresh = static_cast<int>(class_a.size());
  const int x = class_a[pick][0];
  for (int y : class_b[pick]) {
    std::vector<int> na = ca, nb = cb;
    na[x] = fresh;
    nb[y] = fresh;
    if (search(a, b, std::move(na), std::move(nb))) return true;
  }
  return false;
}

}  // namespace

bool lattice_isomorphic(const GradedLattice& a, const GradedLattice& b) {
  if (a.size() != b.size() || a.num_covers() != b.num_covers()) return false;
  std::vector<int> ca(a.size()), cb(b.size());
  for (int x = 0; x < a.size(); ++x) ca[x] = a.rank(x);
  for (int y = 0; y < b.size(); ++y) cb[y] = b.rank(y);
  return search(a, b, std::move(ca), std::move(cb));
}

int atomicity_violations(const GradedLattice& lat, const OrderRelation& order) {
  int bad = 0;
  for (int x = 1; x < lat.size(); ++x) {
    int j = 0;
    for (int atom : lat.atoms()) {
      if (order.leq(atom, x)) j = order.join(j, atom);
    }
    if (j != x) ++bad;
  }
  return bad;
}

int semimodularity_violations(const GradedLattice& lat, const OrderRelation& order) {
  int bad = 0;
  for (int x = 0; x < lat.size(); ++x) {
    for (int y = x + 1; y < lat.size(); ++y) {
      const int j = order.join(x, y);
      const int m = order.meet(x, y);
      if (j < 0 || m < 0 || lat.rank(j) + lat.rank(m) > lat.rank(x) + lat.rank(y)) ++bad;
    }
  }
  return bad;
}

}  // namespace arrchow
