#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arrchow/lattice.hpp"
#include "arrchow/linalg.hpp"

namespace arrchow {

enum class Family { A, B, D, Dns };

// Sign vector over {+1, 0, -1}, one entry per hyperplane.
struct SignVector {
  std::vector<int8_t> signs;

  int size() const { return static_cast<int>(signs.size()); }
  int minus_count() const;
  bool full_support() const;
  SignVector negated() const;
  SignVector flipped(int i) const;
  std::string to_string() const;  // "+-+", zeros as '0'
  static SignVector from_string(const std::string& s);
  friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

// Central arrangement of distinct hyperplanes, given by primitive integer normals.
class Arrangement {
 public:
  // Normals are reduced to primitive form; zero or repeated normals throw InvalidParams.
  Arrangement(int dim, IntMatrix normals);
  // Same, but repeated hyperplanes are dropped (first occurrence kept).
  static Arrangement deduplicated(int dim, IntMatrix normals);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(normals_.size()); }
  const IntVector& normal(int i) const { return normals_[i]; }
  const IntMatrix& normals() const { return normals_; }
  int rank() const { return rank_; }
  bool is_essential() const { return rank_ == dim_; }

 private:
  Arrangement() = default;
  int dim_ = 0;
  int rank_ = 0;
  IntMatrix normals_;
};

// Normal order: e_i - e_j (i<j, lex), then e_i + e_j (lex), then e_1..e_s.
// A(n) is the essential braid arrangement of rank n: {e_i - e_j} and {e_i} in R^n.
Arrangement make_family(Family family, int n, std::optional<int> s = std::nullopt);

// Induced arrangement on the hyperplane h, written in an integer basis of h.
Arrangement restrict(const Arrangement& a, int h);
// Induced arrangement on the intersection of the given hyperplanes.  Returns
// std::nullopt when no hyperplane meets the subspace properly.
std::optional<Arrangement> restrict_to(const Arrangement& a, const std::vector<int>& hyperplanes);

struct Flat {
  std::vector<int> hyperplanes;  // closure-complete, ascending
  int rank = 0;
};

struct FlatLattice {
  GradedLattice lattice;
  std::vector<Flat> flats;  // parallel to lattice elements
};

FlatLattice intersection_lattice(const Arrangement& a);

int matroid_rank(const Arrangement& a, const std::vector<int>& subset);

// Exact wall detection for chambers of a fixed arrangement.
class WallOracle {
 public:
  explicit WallOracle(const Arrangement& a);
  // Hyperplanes carrying a facet of the chamber with these (full-support)
  // signs, ascending.  A cheap rank-2 circuit test discards most non-walls;
  // when the survivors already number dim they are the walls (a pointed
  // cone needs at least dim facets), otherwise each survivor goes to the LP.
  std::vector<int> walls(const std::vector<int8_t>& signs);
  // LP-only test, no shortcuts.
  bool is_wall_lp(const std::vector<int8_t>& signs, int i);
  // Is the open region with these full-support signs nonempty?
  bool is_chamber(const std::vector<int8_t>& signs);

  long long lp_calls() const { return lp_calls_; }

 private:
  struct Circuit {
    int j, k;
    int8_t sj, sk;  // refutes i when sigma_i*sigma_j == sj and sigma_i*sigma_k == sk
  };
  const Arrangement* a_;
  std::vector<std::vector<Circuit>> circuits_;
  std::vector<IntMatrix> projected_;  // projected_[i][j] = normal_j restricted to H_i
  long long lp_calls_ = 0;
};

struct ChamberSearch {
  std::vector<SignVector> chambers;   // BFS discovery order from the seed
  std::vector<std::vector<int>> walls;  // walls[c], ascending hyperplane indices
};

// BFS over wall crossings from the chamber of a sampled generic point.
ChamberSearch explore_chambers(const Arrangement& a, int jobs = 1);

// All chambers, sorted.
std::vector<SignVector> chambers(const Arrangement& a, int jobs = 1);

// (f_{-1}, f_0, ..., f_{d-1}) of the simplicial complex cut out on the sphere.
std::vector<long long> f_vector(const Arrangement& a, int jobs = 1);

// Text format: "dim n" line, then one normal per line; '#' starts a comment line.
Arrangement parse_arrangement(std::istream& in);
Arrangement read_arrangement_file(const std::string& path);
std::string format_arrangement(const Arrangement& a);

}  // namespace arrchow
