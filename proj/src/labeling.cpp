#include "arrchow/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "arrchow/errors.hpp"

namespace arrchow {

std::string Label::to_string() const {
  if (!is_pair) return std::to_string(first);
  return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
}

std::string word_to_string(const std::vector<Label>& word) {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) out += (i ? "," : "") + word[i].to_string();
  return out;
}

Label r_label(const SignedPartition& x, const SignedPartition& y) {
  const CoverMerge m = describe_cover(x, y);
  return Label::scalar(std::max(m.rep_a, m.rep_b));
}

Label el_label(const SignedPartition& x, const SignedPartition& y) {
  const CoverMerge m = describe_cover(x, y);
  switch (m.cls) {
    case EdgeClass::Signed:
      return Label::pair(1, 1);
    case EdgeClass::Coherent:
      return Label::pair(0, std::max(m.rep_a, m.rep_b));
    case EdgeClass::NonCoherent:
      return Label::pair(2, std::min(m.rep_a, m.rep_b));
  }
  throw std::logic_error("unknown edge class");
}

namespace {

template <class F>
EdgeLabeling label_partition_lattice(const PartitionLattice& lat, F&& f) {
  EdgeLabeling out(lat.lattice.size());
  for (int x = 0; x < lat.lattice.size(); ++x) {
    for (int y : lat.lattice.up(x)) out[x].push_back(f(lat.elements[x], lat.elements[y]));
  }
  return out;
}

}  // namespace

EdgeLabeling r_labeling(const PartitionLattice& lat) { return label_partition_lattice(lat, r_label); }

EdgeLabeling el_labeling(const PartitionLattice& lat) { return label_partition_lattice(lat, el_label); }

EdgeLabeling braid_labeling(const FlatLattice& lat, const Arrangement& braid) {
  const int n = braid.dim();
  // Hyperplane -> edge of the complete graph on {1, ..., n+1}.
  std::vector<std::pair<int, int>> edge(braid.size());
  for (int h = 0; h < braid.size(); ++h) {
    const IntVector& v = braid.normal(h);
    std::vector<int> plus, minus;
    for (int i = 0; i < n; ++i) {
      if (v[i] == 1) plus.push_back(i + 1);
      else if (v[i] == -1) minus.push_back(i + 1);
      else if (v[i] != 0) throw InvalidParams("not a braid arrangement normal");
    }
    if (plus.size() == 1 && minus.size() == 1) edge[h] = {plus[0], minus[0]};
    else if (plus.size() == 1 && minus.empty()) edge[h] = {plus[0], n + 1};
    else throw InvalidParams("not a braid arrangement normal");
  }
  // Block minimum of each point, per flat.
  std::vector<std::vector<int>> block_min(lat.flats.size());
  for (size_t f = 0; f < lat.flats.size(); ++f) {
    std::vector<int> parent(n + 2);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (int h : lat.flats[f].hyperplanes) {
      const int a = find(edge[h].first), b = find(edge[h].second);
      parent[std::max(a, b)] = std::min(a, b);
    }
    block_min[f].resize(n + 2);
    for (int p = 1; p <= n + 1; ++p) block_min[f][p] = find(p);
  }
  EdgeLabeling out(lat.lattice.size());
  for (int x = 0; x < lat.lattice.size(); ++x) {
    for (int y : lat.lattice.up(x)) {
      // The merged blocks of x are those whose minima change or absorb others.
      std::set<int> merged;
      for (int p = 1; p <= n + 1; ++p) {
        if (block_min[x][p] != block_min[x][block_min[y][p]]) {
          merged.insert(block_min[x][p]);
          merged.insert(block_min[x][block_min[y][p]]);
        }
      }
      if (merged.size() != 2) throw NotACover("braid cover does not merge exactly two blocks");
      out[x].push_back(Label::scalar(*merged.rbegin()));
    }
  }
  return out;
}

bool is_ascent(const Label& a, const Label& b, ChainConvention c) { return c == ChainConvention::Weak ? a <= b : a < b; }

std::set<int> label_set(const SignedPartition& x, const SignedPartition& y) {
  if (!x.refines(y)) throw NotComparable(x.to_string() + " does not refine " + y.to_string());
  const int n = x.n();
  // For each block of y: absolute minima of the x-blocks inside it.
  std::vector<std::set<int>> minima(y.num_blocks());
  for (int v = -n; v <= n; ++v) {
    const int xb = x.block_id(v);
    const int yb = y.block_id(v);
    int m = 0;
    if (xb != 0) {
      m = n + 1;
      for (int u : x.block(xb)) m = std::min(m, std::abs(u));
    }
    minima[yb].insert(m);
  }
  std::set<int> out;
  for (const auto& ms : minima) {
    auto it = ms.begin();
    if (it == ms.end()) continue;
    for (++it; it != ms.end(); ++it) out.insert(*it);
  }
  return out;
}

uint64_t count_chains_with_word(const SignedPartition& x, const SignedPartition& y, const std::vector<int>& sigma) {
  const std::set<int> ls = label_set(x, y);
  const std::vector<int> sorted(ls.begin(), ls.end());
  if (sigma.size() != sorted.size()) throw InvalidParams("sigma length differs from the label set size");
  std::vector<int> target;
  for (int s : sigma) {
    if (s < 1 || s > static_cast<int>(sorted.size())) throw InvalidParams("sigma is not a permutation");
    target.push_back(sorted[s - 1]);
  }
  std::function<uint64_t(const SignedPartition&, size_t)> dfs = [&](const SignedPartition& p, size_t depth) -> uint64_t {
    if (depth == target.size()) return p == y ? 1 : 0;
    uint64_t total = 0;
    for (const auto& q : covers(p)) {
      if (!q.refines(y)) continue;
      if (r_label(p, q).first != target[depth]) continue;
      total += dfs(q, depth + 1);
    }
    return total;
  };
  return dfs(x, 0);
}

std::vector<IntervalViolation> verify_el(const GradedLattice& lat, const EdgeLabeling& labels, ChainConvention c) {
  std::vector<IntervalViolation> out;
  const int n = lat.size();
  struct Stats {
    int increasing = 0;
    bool seen = false;
    std::vector<Label> min_word, inc_word;
  };
  std::vector<Stats> stats;
  std::vector<Label> word;
  for (int x = 0; x < n; ++x) {
    stats.assign(n, Stats{});
    word.clear();
    std::function<void(int, bool)> dfs = [&](int y, bool increasing) {
      if (y != x) {
        Stats& s = stats[y];
        if (!s.seen || word < s.min_word) s.min_word = word;
        s.seen = true;
        if (increasing) {
          ++s.increasing;
          s.inc_word = word;
        }
      }
      const auto& up = lat.up(y);
      for (size_t k = 0; k < up.size(); ++k) {
        const Label& l = labels[y][k];
        const bool inc = increasing && (word.empty() || is_ascent(word.back(), l, c));
        word.push_back(l);
        dfs(up[k], inc);
        word.pop_back();
      }
    };
    dfs(x, true);
    for (int y = 0; y < n; ++y) {
      const Stats& s = stats[y];
      if (!s.seen) continue;
      if (s.increasing != 1) {
        out.push_back({x, y, std::to_string(s.increasing) + " increasing maximal chains"});
      } else if (s.inc_word != s.min_word) {
        out.push_back({x, y, "increasing chain " + word_to_string(s.inc_word) + " is not lexicographically first (" +
                                 word_to_string(s.min_word) + ")"});
      }
    }
  }
  return out;
}

namespace {

class ChainWalker {
 public:
  ChainWalker(const GradedLattice& lat, const EdgeLabeling& labels, ChainConvention c)
      : lat_(lat), conv_(c), census_(std::max(1, lat.height()), 0) {
    // Collapse each label to one integer key preserving order.
    codes_.resize(labels.size());
    for (size_t x = 0; x < labels.size(); ++x) {
      for (const Label& l : labels[x]) codes_[x].push_back(static_cast<long long>(l.first) * (1LL << 32) + l.second);
    }
  }

  // Walk all chains whose first cover is bottom -> up(bottom)[first].
  void walk_from_atom(size_t first) {
    if (lat_.height() == 0) return;
    const int atom = lat_.up(0)[first];
    step(atom, 1, codes_[0][first], false, 0);
  }

  void walk_trivial() {
    if (lat_.height() == 0) census_[0] += 1;
  }

  const std::vector<uint64_t>& census() const { return census_; }

 private:
  void step(int x, int depth, long long prev, bool prev_descent, int des) {
    if (x == lat_.top()) {
      census_[des] += 1;
      return;
    }
    const auto& up = lat_.up(x);
    const auto& codes = codes_[x];
    for (size_t k = 0; k < up.size(); ++k) {
      const long long l = codes[k];
      const bool ascent = conv_ == ChainConvention::Weak ? prev <= l : prev < l;
      if (depth == 1) {
        if (!ascent) continue;
        step(up[k], 2, l, false, des);
      } else if (ascent) {
        step(up[k], depth + 1, l, false, des);
      } else if (!prev_descent) {
        step(up[k], depth + 1, l, true, des + 1);
      }
    }
  }

  const GradedLattice& lat_;
  ChainConvention conv_;
  std::vector<std::vector<long long>> codes_;
  std::vector<uint64_t> census_;
};

}  // namespace

std::vector<uint64_t> filtered_descent_census(const GradedLattice& lat, const EdgeLabeling& labels, ChainConvention c,
                                              int jobs) {
  const size_t atoms = lat.height() == 0 ? 0 : lat.up(0).size();
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<size_t>(atoms, 1))));
  if (jobs == 1) {
    ChainWalker w(lat, labels, c);
    w.walk_trivial();
    for (size_t a = 0; a < atoms; ++a) w.walk_from_atom(a);
    return w.census();
  }
  std::vector<std::vector<uint64_t>> partial(jobs);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      ChainWalker w(lat, labels, c);
      for (size_t a = j; a < atoms; a += jobs) w.walk_from_atom(a);
      partial[j] = w.census();
    });
  }
  for (auto& t : pool) t.join();
  std::vector<uint64_t> total(partial[0].size(), 0);
  for (const auto& p : partial) {
    for (size_t k = 0; k < p.size(); ++k) total[k] += p[k];
  }
  return total;
}

void enumerate_filtered_chains(const GradedLattice& lat, const EdgeLabeling& labels, ChainConvention c,
                               const ChainVisitor& visit) {
  std::vector<int> elements{0};
  std::vector<Label> word;
  std::function<void(int, bool, int)> dfs = [&](int x, bool prev_descent, int des) {
    if (x == lat.top()) {
      visit(elements, word, des);
      return;
    }
    const auto& up = lat.up(x);
    for (size_t k = 0; k < up.size(); ++k) {
      const Label& l = labels[x][k];
      bool descent = false;
      if (!word.empty()) {
        const bool ascent = is_ascent(word.back(), l, c);
        if (word.size() == 1 && !ascent) continue;
        descent = !ascent;
        if (descent && prev_descent) continue;
      }
      elements.push_back(up[k]);
      word.push_back(l);
      dfs(up[k], descent, des + (descent ? 1 : 0));
      word.pop_back();
      elements.pop_back();
    }
  };
  dfs(0, false, 0);
}

uint64_t count_maximal_chains_dfs(const GradedLattice& lat) {
  std::function<uint64_t(int)> dfs = [&](int x) -> uint64_t {
    if (x == lat.top()) return 1;
    uint64_t total = 0;
    for (int y : lat.up(x)) total += dfs(y);
    return total;
  };
  return dfs(0);
}

}  // namespace arrchow
