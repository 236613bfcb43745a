#include "arrchow/signed_partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "arrchow/errors.hpp"

namespace arrchow {

namespace {

int mirror_id(int c) {
  if (c == 0) return 0;
  return (c % 2 == 1) ? c + 1 : c - 1;
}

}  // namespace

SignedPartition SignedPartition::from_labels(int n, const std::vector<int>& labels) {
  if (n < 0 || n > 60 || static_cast<int>(labels.size()) != 2 * n + 1) {
    throw InvalidParams("labelling must cover -n..n");
  }
  auto lab = [&](int v) { return labels[v + n]; };
  std::unordered_map<int, int> canon;
  canon[lab(0)] = 0;
  int pairs = 0;
  for (int v = 1; v <= n; ++v) {
    const int l = lab(v);
    if (canon.count(l)) continue;
    const int m = lab(-v);
    if (m == l) throw InvalidParams("i and -i share a block without 0");
    if (canon.count(m)) throw InvalidParams("labelling is not mirror symmetric");
    ++pairs;
    canon[l] = 2 * pairs - 1;
    canon[m] = 2 * pairs;
  }
  SignedPartition p;
  p.n_ = n;
  p.pairs_ = pairs;
  p.code_.resize(2 * n + 1);
  for (int v = -n; v <= n; ++v) {
    auto it = canon.find(lab(v));
    if (it == canon.end()) throw InvalidParams("labelling is not mirror symmetric");
    p.code_[v + n] = static_cast<int8_t>(it->second);
  }
  for (int v = -n; v <= n; ++v) {
    if (mirror_id(p.code_[v + n]) != p.code_[-v + n]) throw InvalidParams("labelling is not mirror symmetric");
  }
  return p;
}

SignedPartition SignedPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(2 * n + 1, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (int v : blocks[b]) {
      if (std::abs(v) > n || labels[v + n] != -1) throw InvalidParams("blocks must partition -n..n");
      labels[v + n] = static_cast<int>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
    throw InvalidParams("blocks must partition -n..n");
  }
  return from_labels(n, labels);
}

SignedPartition SignedPartition::parse(int n, const std::string& text) {
  if (n > 9) throw InvalidParams("text form supports n <= 9");
  std::vector<int> labels(2 * n + 1, -1);
  int block = 0;
  size_t i = 0;
  auto fail = [&](const std::string& why) { throw ParseError("signed partition '" + text + "': " + why); };
  while (i <= text.size()) {
    if (i == text.size() || text[i] == '|') {
      ++block;
      ++i;
      continue;
    }
    int sign = 1;
    if (text[i] == '-') {
      sign = -1;
      ++i;
    }
    if (i >= text.size() || text[i] < '0' || text[i] > '9') fail("expected a digit");
    const int v = sign * (text[i] - '0');
    ++i;
    if (std::abs(v) > n) fail("element out of range");
    if (labels[v + n] != -1) fail("element listed twice");
    labels[v + n] = block;
  }
  if (labels[n] == -1) labels[n] = block + 1;
  for (int v = -n; v <= n; ++v) {
    if (labels[v + n] == -1) fail("element " + std::to_string(v) + " missing");
  }
  try {
    return from_labels(n, labels);
  } catch (const InvalidParams& e) {
    fail(e.what());
  }
  return {};
}

SignedPartition SignedPartition::bottom(int n) {
  std::vector<int> labels(2 * n + 1);
  for (int v = -n; v <= n; ++v) labels[v + n] = v;
  return from_labels(n, labels);
}

SignedPartition SignedPartition::top(int n) { return from_labels(n, std::vector<int>(2 * n + 1, 0)); }

int SignedPartition::zero_block_size() const {
  return static_cast<int>(std::count(code_.begin(), code_.end(), int8_t{0}));
}

std::vector<int> SignedPartition::block(int id) const {
  std::vector<int> out;
  for (int v = -n_; v <= n_; ++v) {
    if (code_[v + n_] == id) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> SignedPartition::blocks() const {
  std::vector<std::vector<int>> out;
  for (int id = 0; id < num_blocks(); ++id) out.push_back(block(id));
  return out;
}

bool SignedPartition::refines(const SignedPartition& other) const {
  if (other.n_ != n_) return false;
  std::vector<int> target(num_blocks(), -1);
  for (size_t i = 0; i < code_.size(); ++i) {
    int& t = target[code_[i]];
    if (t == -1) t = other.code_[i];
    else if (t != other.code_[i]) return false;
  }
  return true;
}

std::string SignedPartition::to_string() const {
  std::vector<std::string> parts;
  if (zero_block_size() > 1) {
    std::string z;
    for (int v = 1; v <= n_; ++v) {
      if (code_[v + n_] == 0) z += std::to_string(v);
    }
    z += "0";
    for (int v = 1; v <= n_; ++v) {
      if (code_[-v + n_] == 0) z += std::to_string(-v);
    }
    parts.push_back(z);
  }
  for (int id = 1; id < num_blocks(); ++id) {
    std::string b;
    for (int a = 1; a <= n_; ++a) {
      if (code_[a + n_] == id) b += std::to_string(a);
      if (code_[-a + n_] == id) b += std::to_string(-a);
    }
    parts.push_back(b);
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += "|" + parts[i];
  return out;
}

int representative(const std::vector<int>& block) {
  if (block.empty()) throw InvalidParams("empty block");
  int best = 0;
  for (int v : block) {
    if (v == 0) throw ZeroBlock("the zero block has no representative");
    if (best == 0 || std::abs(v) < best) best = std::abs(v);
  }
  return best;
}

bool is_normalized(const std::vector<int>& block) {
  const int r = representative(block);
  return std::find(block.begin(), block.end(), r) != block.end();
}

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Signed:
      return "signed";
    case EdgeClass::Coherent:
      return "coherent";
    case EdgeClass::NonCoherent:
      return "non-coherent";
  }
  return "?";
}

bool is_cover(const SignedPartition& x, const SignedPartition& y) {
  return x.n() == y.n() && y.pairs() + 1 == x.pairs() && x.refines(y);
}

CoverMerge describe_cover(const SignedPartition& x, const SignedPartition& y) {
  if (!is_cover(x, y)) throw NotACover(x.to_string() + " is not covered by " + y.to_string());
  const int n = x.n();
  // Representative of each x pair: the first positive value met in it.
  std::vector<int> rep(x.pairs() + 1, 0);
  std::vector<int> target(x.num_blocks(), -1);
  for (int v = -n; v <= n; ++v) target[x.block_id(v)] = y.block_id(v);
  for (int a = 1; a <= n; ++a) {
    const int c = x.block_id(a);
    if (c != 0 && rep[(c + 1) / 2] == 0) rep[(c + 1) / 2] = a;
  }
  if (y.zero_block_size() > x.zero_block_size()) {
    for (int c = 1; c < x.num_blocks(); ++c) {
      if (target[c] == 0) return CoverMerge{EdgeClass::Signed, rep[(c + 1) / 2], rep[(c + 1) / 2]};
    }
  }
  for (int c1 = 1; c1 < x.num_blocks(); ++c1) {
    for (int c2 = c1 + 1; c2 < x.num_blocks(); ++c2) {
      if (target[c1] != target[c2] || target[c1] == 0) continue;
      const bool coherent = (c1 % 2) == (c2 % 2);
      return CoverMerge{coherent ? EdgeClass::Coherent : EdgeClass::NonCoherent, rep[(c1 + 1) / 2],
                        rep[(c2 + 1) / 2]};
    }
  }
  throw NotACover("no merged blocks found");
}

EdgeClass classify_edge(const SignedPartition& x, const SignedPartition& y) { return describe_cover(x, y).cls; }

LatticeVariant LatticeVariant::B(int n) {
  LatticeVariant v = Dns(n, n);
  v.kind = Kind::B;
  return v;
}

LatticeVariant LatticeVariant::D(int n) {
  LatticeVariant v = Dns(n, 0);
  v.kind = Kind::D;
  return v;
}

LatticeVariant LatticeVariant::Dns(int n, int s) {
  if (n < 1 || s < 0 || s > n) throw InvalidParams("variant needs n >= 1 and 0 <= s <= n");
  LatticeVariant v;
  v.kind = Kind::Dns;
  v.n = n;
  v.s = s;
  for (int k = 1; k <= s; ++k) v.allowed.push_back(k);
  return v;
}

LatticeVariant LatticeVariant::DnS(int n, std::vector<int> coords) {
  if (n < 1) throw InvalidParams("variant needs n >= 1");
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  for (int k : coords) {
    if (k < 1 || k > n) throw InvalidParams("coordinate out of range");
  }
  LatticeVariant v;
  v.kind = Kind::DnS;
  v.n = n;
  v.s = static_cast<int>(coords.size());
  v.allowed = std::move(coords);
  return v;
}

bool LatticeVariant::contains(const SignedPartition& p) const {
  if (p.n() != n) return false;
  if (p.zero_block_size() != 3) return true;
  for (int k = 1; k <= n; ++k) {
    if (p.block_id(k) == 0) return std::binary_search(allowed.begin(), allowed.end(), k);
  }
  return true;
}

std::string LatticeVariant::name() const {
  switch (kind) {
    case Kind::B:
      return "B" + std::to_string(n);
    case Kind::D:
      return "D" + std::to_string(n);
    case Kind::Dns:
      return "D" + std::to_string(n) + "," + std::to_string(s);
    case Kind::DnS: {
      std::string out = "D" + std::to_string(n) + ",{";
      for (size_t i = 0; i < allowed.size(); ++i) out += (i ? "," : "") + std::to_string(allowed[i]);
      return out + "}";
    }
  }
  return "?";
}

std::vector<SignedPartition> covers(const SignedPartition& p) {
  const int n = p.n();
  const int k = p.pairs();
  std::vector<int> base(p.code().begin(), p.code().end());
  std::vector<SignedPartition> out;
  out.reserve(static_cast<size_t>(k) * k);
  auto relabel = [&](auto&& f) {
    std::vector<int> labels(base.size());
    for (size_t i = 0; i < base.size(); ++i) labels[i] = f(base[i]);
    out.push_back(SignedPartition::from_labels(n, labels));
  };
  for (int a = 1; a <= k; ++a) {
    const int pa = 2 * a - 1, ma = 2 * a;
    relabel([&](int c) { return (c == pa || c == ma) ? 0 : c; });
    for (int b = a + 1; b <= k; ++b) {
      const int pb = 2 * b - 1, mb = 2 * b;
      relabel([&](int c) { return c == pb ? pa : (c == mb ? ma : c); });
      relabel([&](int c) { return c == mb ? pa : (c == pb ? ma : c); });
    }
  }
  return out;
}

std::vector<SignedPartition> covers(const SignedPartition& p, const LatticeVariant& v) {
  std::vector<SignedPartition> all = covers(p);
  std::vector<SignedPartition> out;
  for (auto& q : all) {
    if (v.contains(q)) out.push_back(std::move(q));
  }
  return out;
}

int PartitionLattice::index_of(const SignedPartition& p) const {
  auto it = index.find(p.key());
  return it == index.end() ? -1 : it->second;
}

PartitionLattice enumerate_lattice(const LatticeVariant& v, int jobs) {
  jobs = std::max(1, jobs);
  PartitionLattice out;
  out.variant = v;
  std::vector<int> ranks;
  std::vector<std::vector<int>> up;
  auto add = [&](SignedPartition p, int rank) {
    out.index.emplace(p.key(), static_cast<int>(out.elements.size()));
    out.elements.push_back(std::move(p));
    ranks.push_back(rank);
    up.emplace_back();
  };
  add(SignedPartition::bottom(v.n), 0);
  size_t level_begin = 0;
  for (int r = 0; r < v.n; ++r) {
    const size_t level_end = out.elements.size();
    const size_t count = level_end - level_begin;
    std::vector<std::vector<SignedPartition>> generated(count);
    const int workers = static_cast<int>(std::min<size_t>(jobs, count));
    auto work = [&](int w, int stride) {
      for (size_t i = w; i < count; i += stride) generated[i] = covers(out.elements[level_begin + i], v);
    };
    if (workers <= 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
      for (auto& t : pool) t.join();
    }
    std::vector<SignedPartition> next;
    for (const auto& g : generated) next.insert(next.end(), g.begin(), g.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (auto& p : next) add(std::move(p), r + 1);
    for (size_t i = 0; i < count; ++i) {
      auto& u = up[level_begin + i];
      for (const auto& q : generated[i]) u.push_back(out.index.at(q.key()));
    }
    level_begin = level_end;
  }
  out.lattice = GradedLattice(std::move(ranks), std::move(up));
  return out;
}

}  // namespace arrchow
