#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "arrchow/arrangement.hpp"
#include "arrchow/lattice.hpp"
#include "arrchow/poly.hpp"
#include "arrchow/signed_partition.hpp"

namespace arrchow {

// Scalar labels compare by value, pair labels lexicographically.  The two
// kinds are never mixed within one labelling.
struct Label {
  int first = 0;
  int second = 0;
  bool is_pair = false;

  static Label scalar(int v) { return Label{v, 0, false}; }
  static Label pair(int a, int b) { return Label{a, b, true}; }
  std::string to_string() const;
  friend bool operator==(const Label& a, const Label& b) { return a.first == b.first && a.second == b.second; }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.first <=> b.first; c != 0) return c;
    return a.second <=> b.second;
  }
};

std::string word_to_string(const std::vector<Label>& word);

// Weak: ascent means <=, descent means >.  Strict: ascent means <, anything
// else is a descent.
enum class ChainConvention { Weak, Strict };

// labels[x][k] labels the cover x -> lat.up(x)[k].
using EdgeLabeling = std::vector<std::vector<Label>>;

Label r_label(const SignedPartition& x, const SignedPartition& y);
Label el_label(const SignedPartition& x, const SignedPartition& y);

EdgeLabeling r_labeling(const PartitionLattice& lat);
EdgeLabeling el_labeling(const PartitionLattice& lat);
// Maximum-of-minima labelling of the braid lattice, reading each flat of the
// rank-n braid arrangement as a set partition of {1, ..., n+1}.
EdgeLabeling braid_labeling(const FlatLattice& lat, const Arrangement& braid);

bool is_ascent(const Label& a, const Label& b, ChainConvention c);

std::set<int> label_set(const SignedPartition& x, const SignedPartition& y);

// Saturated chains x -> y (inside the full signed partition lattice) whose
// r_label word is (b_sigma(1), ..., b_sigma(k)), b the sorted label set.
// sigma is one-based.  Exhaustive search.
uint64_t count_chains_with_word(const SignedPartition& x, const SignedPartition& y, const std::vector<int>& sigma);

struct IntervalViolation {
  int lo, hi;
  std::string reason;
};

// Checks every interval for a unique increasing maximal chain that is also
// lexicographically first.
std::vector<IntervalViolation> verify_el(const GradedLattice& lat, const EdgeLabeling& labels, ChainConvention c);

// Chains surviving the filter: first step ascends, no two consecutive descents.
using ChainVisitor = std::function<void(const std::vector<int>& elements, const std::vector<Label>& word, int des)>;
void enumerate_filtered_chains(const GradedLattice& lat, const EdgeLabeling& labels, ChainConvention c,
                               const ChainVisitor& visit);

// census[k] = number of surviving chains with k descents.  Parallel over the
// atoms when jobs > 1; the result does not depend on jobs.
std::vector<uint64_t> filtered_descent_census(const GradedLattice& lat, const EdgeLabeling& labels,
                                              ChainConvention c, int jobs = 1);

// Unfiltered DFS count of maximal chains.
uint64_t count_maximal_chains_dfs(const GradedLattice& lat);

}  // namespace arrchow
