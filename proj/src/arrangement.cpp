#include "arrchow/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "arrchow/errors.hpp"
#include "arrchow/feasibility.hpp"

namespace arrchow {

int SignVector::minus_count() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), int8_t{-1}));
}

bool SignVector::full_support() const { return std::find(signs.begin(), signs.end(), int8_t{0}) == signs.end(); }

SignVector SignVector::negated() const {
  SignVector out = *this;
  for (auto& s : out.signs) s = static_cast<int8_t>(-s);
  return out;
}

SignVector SignVector::flipped(int i) const {
  SignVector out = *this;
  out.signs[i] = static_cast<int8_t>(-out.signs[i]);
  return out;
}

std::string SignVector::to_string() const {
  std::string out;
  out.reserve(signs.size());
  for (int8_t s : signs) out.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
  return out;
}

SignVector SignVector::from_string(const std::string& s) {
  SignVector v;
  for (char c : s) {
    if (c == '+') v.signs.push_back(1);
    else if (c == '-') v.signs.push_back(-1);
    else if (c == '0') v.signs.push_back(0);
    else throw ParseError(std::string("bad sign character '") + c + "'");
  }
  return v;
}

Arrangement::Arrangement(int dim, IntMatrix normals) : dim_(dim) {
  if (dim < 1) throw InvalidParams("arrangement dimension must be positive");
  if (normals.empty()) throw InvalidParams("arrangement needs at least one hyperplane");
  std::set<IntVector> seen;
  for (auto& v : normals) {
    if (static_cast<int>(v.size()) != dim) throw InvalidParams("normal has wrong length");
    v = make_primitive(std::move(v));
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) {
      throw InvalidParams("zero normal vector");
    }
    if (!seen.insert(v).second) throw InvalidParams("repeated hyperplane");
  }
  normals_ = std::move(normals);
  rank_ = rank_of(normals_, dim_);
}

Arrangement Arrangement::deduplicated(int dim, IntMatrix normals) {
  IntMatrix kept;
  std::set<IntVector> seen;
  for (auto& v : normals) {
    IntVector p = make_primitive(v);
    if (seen.insert(p).second) kept.push_back(std::move(p));
  }
  return Arrangement(dim, std::move(kept));
}

Arrangement make_family(Family family, int n, std::optional<int> s) {
  if (n < 1) throw InvalidParams("n must be at least 1");
  int coords = 0;
  bool plus = true;
  switch (family) {
    case Family::A:
      coords = n;
      plus = false;
      break;
    case Family::B:
      coords = n;
      break;
    case Family::D:
      coords = 0;
      break;
    case Family::Dns:
      if (!s || *s < 0 || *s > n) throw InvalidParams("D_{n,s} needs 0 <= s <= n");
      coords = *s;
      break;
  }
  IntMatrix normals;
  auto unit = [n](int i) {
    IntVector v(n, 0);
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      IntVector v = unit(i);
      v[j] = -1;
      normals.push_back(v);
    }
  }
  if (plus) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        IntVector v = unit(i);
        v[j] = 1;
        normals.push_back(v);
      }
    }
  }
  for (int i = 0; i < coords; ++i) normals.push_back(unit(i));
  if (normals.empty()) throw InvalidParams("family is empty for this n");
  return Arrangement(n, std::move(normals));
}

std::optional<Arrangement> restrict_to(const Arrangement& a, const std::vector<int>& hyperplanes) {
  IntMatrix eq;
  for (int h : hyperplanes) eq.push_back(a.normal(h));
  const IntMatrix basis = nullspace_basis(eq, a.dim());
  const int k = static_cast<int>(basis.size());
  if (k == 0) return std::nullopt;
  IntMatrix induced;
  for (int j = 0; j < a.size(); ++j) {
    IntVector v(k);
    bool nonzero = false;
    for (int c = 0; c < k; ++c) {
      v[c] = dot(a.normal(j), basis[c]);
      nonzero |= v[c] != 0;
    }
    if (nonzero) induced.push_back(std::move(v));
  }
  if (induced.empty()) return std::nullopt;
  return Arrangement::deduplicated(k, std::move(induced));
}

Arrangement restrict(const Arrangement& a, int h) {
  if (h < 0 || h >= a.size()) throw InvalidParams("hyperplane index out of range");
  auto r = restrict_to(a, {h});
  if (!r) throw InvalidParams("restriction to this hyperplane is empty");
  return *r;
}

int matroid_rank(const Arrangement& a, const std::vector<int>& subset) {
  IntMatrix rows;
  for (int i : subset) rows.push_back(a.normal(i));
  return rank_of(rows, a.dim());
}

FlatLattice intersection_lattice(const Arrangement& a) {
  FlatLattice out;
  std::map<std::vector<int>, int> index;
  std::vector<int> ranks;
  std::vector<std::vector<int>> up;
  out.flats.push_back(Flat{{}, 0});
  index[{}] = 0;
  ranks.push_back(0);
  up.emplace_back();
  size_t level_begin = 0;
  for (int r = 0; r < a.rank(); ++r) {
    const size_t level_end = out.flats.size();
    for (size_t f = level_begin; f < level_end; ++f) {
      EchelonBasis basis(a.dim());
      std::vector<bool> in_flat(a.size(), false);
      for (int h : out.flats[f].hyperplanes) {
        basis.add(a.normal(h));
        in_flat[h] = true;
      }
      for (int h = 0; h < a.size(); ++h) {
        if (in_flat[h]) continue;
        basis.add(a.normal(h));
        std::vector<int> closure;
        for (int j = 0; j < a.size(); ++j) {
          if (in_flat[j] || j == h || basis.in_span(a.normal(j))) closure.push_back(j);
        }
        basis.pop();
        auto [it, fresh] = index.emplace(closure, static_cast<int>(out.flats.size()));
        if (fresh) {
          out.flats.push_back(Flat{closure, r + 1});
          ranks.push_back(r + 1);
          up.emplace_back();
        }
        auto& u = up[f];
        if (std::find(u.begin(), u.end(), it->second) == u.end()) u.push_back(it->second);
      }
    }
    level_begin = level_end;
  }
  out.lattice = GradedLattice(std::move(ranks), std::move(up));
  return out;
}

WallOracle::WallOracle(const Arrangement& a) : a_(&a) {
  const int m = a.size();
  const int n = a.dim();
  circuits_.assign(m, {});
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      const IntVector& aj = a.normal(j);
      const IntVector& ak = a.normal(k);
      int p = -1, q = -1;
      long long det = 0;
      for (int x = 0; x < n && det == 0; ++x) {
        for (int y = x + 1; y < n; ++y) {
          det = aj[x] * ak[y] - aj[y] * ak[x];
          if (det != 0) {
            p = x;
            q = y;
            break;
          }
        }
      }
      if (det == 0) continue;
      for (int i = 0; i < m; ++i) {
        if (i == j || i == k) continue;
        const IntVector& ai = a.normal(i);
        // det * a_i = an * a_j + bn * a_k, if a_i lies in the span.
        const long long an = ai[p] * ak[q] - ai[q] * ak[p];
        const long long bn = aj[p] * ai[q] - aj[q] * ai[p];
        bool in_span = true;
        for (int x = 0; x < n && in_span; ++x) in_span = det * ai[x] == an * aj[x] + bn * ak[x];
        if (!in_span || an == 0 || bn == 0) continue;
        const int ds = det > 0 ? 1 : -1;
        circuits_[i].push_back(
            Circuit{j, k, static_cast<int8_t>((an > 0 ? 1 : -1) * ds), static_cast<int8_t>((bn > 0 ? 1 : -1) * ds)});
      }
    }
  }
  projected_.assign(m, {});
  for (int i = 0; i < m; ++i) {
    const IntMatrix basis = nullspace_basis({a.normal(i)}, n);
    IntMatrix rows;
    for (int j = 0; j < m; ++j) {
      IntVector v(basis.size());
      for (size_t c = 0; c < basis.size(); ++c) v[c] = dot(a.normal(j), basis[c]);
      rows.push_back(std::move(v));
    }
    projected_[i] = std::move(rows);
  }
}

bool WallOracle::is_wall_lp(const std::vector<int8_t>& signs, int i) {
  ++lp_calls_;
  IntMatrix rows;
  rows.reserve(a_->size() - 1);
  for (int j = 0; j < a_->size(); ++j) {
    if (j == i) continue;
    IntVector r = projected_[i][j];
    for (auto& x : r) x *= signs[j];
    rows.push_back(std::move(r));
  }
  return strictly_feasible(rows, a_->dim() - 1);
}

bool WallOracle::is_chamber(const std::vector<int8_t>& signs) {
  ++lp_calls_;
  IntMatrix rows;
  for (int j = 0; j < a_->size(); ++j) {
    IntVector r = a_->normal(j);
    for (auto& x : r) x *= signs[j];
    rows.push_back(std::move(r));
  }
  return strictly_feasible(rows, a_->dim());
}

std::vector<int> WallOracle::walls(const std::vector<int8_t>& signs) {
  std::vector<int> candidates;
  for (int i = 0; i < a_->size(); ++i) {
    bool refuted = false;
    for (const auto& c : circuits_[i]) {
      if (signs[i] * signs[c.j] == c.sj && signs[i] * signs[c.k] == c.sk) {
        refuted = true;
        break;
      }
    }
    if (!refuted) candidates.push_back(i);
  }
  if (static_cast<int>(candidates.size()) == a_->dim() && a_->is_essential()) return candidates;
  std::vector<int> out;
  for (int i : candidates) {
    if (is_wall_lp(signs, i)) out.push_back(i);
  }
  return out;
}

namespace {

using Key = std::vector<uint64_t>;

Key pack(const std::vector<int8_t>& signs) {
  Key k((signs.size() + 63) / 64, 0);
  for (size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] < 0) k[i >> 6] |= uint64_t{1} << (i & 63);
  }
  return k;
}

struct KeyHash {
  size_t operator()(const Key& k) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t w : k) h = (h ^ w) * 0xff51afd7ed558ccdULL;
    return static_cast<size_t>(h ^ (h >> 33));
  }
};

std::vector<int8_t> generic_signs(const Arrangement& a) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long long> dist(-1000003, 1000003);
  for (;;) {
    IntVector x(a.dim());
    for (auto& v : x) v = dist(rng);
    std::vector<int8_t> s(a.size());
    bool generic = true;
    for (int i = 0; i < a.size() && generic; ++i) {
      const long long d = dot(a.normal(i), x);
      generic = d != 0;
      s[i] = d > 0 ? 1 : -1;
    }
    if (generic) return s;
  }
}

}  // namespace

ChamberSearch explore_chambers(const Arrangement& a, int jobs) {
  if (!a.is_essential()) throw NotEssential("arrangement rank is below its dimension");
  jobs = std::max(1, jobs);
  ChamberSearch out;
  std::unordered_map<Key, int, KeyHash> seen;
  const std::vector<int8_t> seed = generic_signs(a);
  out.chambers.push_back(SignVector{seed});
  seen.emplace(pack(seed), 0);
  WallOracle base_oracle(a);
  size_t level_begin = 0;
  while (level_begin < out.chambers.size()) {
    const size_t level_end = out.chambers.size();
    const size_t count = level_end - level_begin;
    std::vector<std::vector<int>> level_walls(count);
    const int workers = static_cast<int>(std::min<size_t>(jobs, count));
    if (workers <= 1) {
      for (size_t c = 0; c < count; ++c) level_walls[c] = base_oracle.walls(out.chambers[level_begin + c].signs);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          WallOracle oracle = base_oracle;
          for (size_t c = w; c < count; c += workers) {
            level_walls[c] = oracle.walls(out.chambers[level_begin + c].signs);
          }
        });
      }
      for (auto& t : pool) t.join();
    }
    for (size_t c = 0; c < count; ++c) {
      const size_t idx = level_begin + c;
      for (int i : level_walls[c]) {
        std::vector<int8_t> next = out.chambers[idx].signs;
        next[i] = static_cast<int8_t>(-next[i]);
        auto [it, fresh] = seen.emplace(pack(next), static_cast<int>(out.chambers.size()));
        if (fresh) out.chambers.push_back(SignVector{std::move(next)});
      }
      out.walls.push_back(std::move(level_walls[c]));
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<SignVector> chambers(const Arrangement& a, int jobs) {
  auto found = std::move(explore_chambers(a, jobs).chambers);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<long long> f_vector(const Arrangement& a, int jobs) {
  if (!a.is_essential()) throw NotEssential("arrangement rank is below its dimension");
  const FlatLattice lat = intersection_lattice(a);
  const int d = a.dim();
  std::vector<long long> f(d + 1, 0);
  for (const Flat& x : lat.flats) {
    const int flat_dim = d - x.rank;
    if (flat_dim == 0) {
      f[0] += 1;
      continue;
    }
    auto induced = restrict_to(a, x.hyperplanes);
    if (!induced) throw std::logic_error("proper flat with empty induced arrangement");
    f[flat_dim] += static_cast<long long>(explore_chambers(*induced, jobs).chambers.size());
  }
  return f;
}

Arrangement parse_arrangement(std::istream& in) {
  std::string line;
  int dim = -1;
  IntMatrix normals;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (dim < 0) {
      std::string word;
      if (!(ls >> word >> dim) || word != "dim" || dim < 1) {
        throw ParseError("line " + std::to_string(lineno) + ": expected 'dim <n>'");
      }
      std::string rest;
      if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing text after dim");
      continue;
    }
    IntVector v;
    long long x;
    while (ls >> x) v.push_back(x);
    if (!ls.eof() || static_cast<int>(v.size()) != dim) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(dim) + " integers");
    }
    normals.push_back(std::move(v));
  }
  if (dim < 0) throw ParseError("missing 'dim' header");
  return Arrangement(dim, std::move(normals));
}

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open arrangement file: " + path);
  return parse_arrangement(in);
}

std::string format_arrangement(const Arrangement& a) {
  std::ostringstream os;
  os << "dim " << a.dim() << '\n';
  for (const auto& v : a.normals()) {
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace arrchow
