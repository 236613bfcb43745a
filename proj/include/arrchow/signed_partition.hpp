#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "arrchow/lattice.hpp"

namespace arrchow {

// Mirror-symmetric set partition of {-n, ..., n}.  Stored canonically as a
// block id per element: the zero block is id 0, and the k-th mirrored pair
// (ordered by representative) has its normalized block at 2k-1 and the
// mirror image at 2k.
class SignedPartition {
 public:
  SignedPartition() = default;
  // labels[v + n] is an arbitrary block label for v.  Throws InvalidParams if
  // the labelling is not mirror symmetric or pairs some i with -i outside
  // the zero block.
  static SignedPartition from_labels(int n, const std::vector<int>& labels);
  static SignedPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  // Blocks separated by '|', elements as single digits with optional '-'.
  // Unlisted 0 forms the trivial zero block.  Requires n <= 9.
  static SignedPartition parse(int n, const std::string& text);
  static SignedPartition bottom(int n);
  static SignedPartition top(int n);

  int n() const { return n_; }
  int pairs() const { return pairs_; }
  int num_blocks() const { return 2 * pairs_ + 1; }
  int rank() const { return n_ - pairs_; }
  int block_id(int v) const { return code_[v + n_]; }
  int zero_block_size() const;
  // Block by id, ascending.
  std::vector<int> block(int id) const;
  std::vector<int> zero_block() const { return block(0); }
  std::vector<std::vector<int>> blocks() const;
  // Is every block of *this contained in a block of other?
  bool refines(const SignedPartition& other) const;

  const std::vector<int8_t>& code() const { return code_; }
  std::string key() const { return std::string(code_.begin(), code_.end()); }
  std::string to_string() const;

  friend bool operator==(const SignedPartition& a, const SignedPartition& b) { return a.code_ == b.code_; }
  friend bool operator<(const SignedPartition& a, const SignedPartition& b) { return a.code_ < b.code_; }

 private:
  int n_ = 0;
  int pairs_ = 0;
  std::vector<int8_t> code_;
};

// Minimal absolute value in a non-zero block.  ZeroBlock if 0 is in it.
int representative(const std::vector<int>& block);
bool is_normalized(const std::vector<int>& block);

enum class EdgeClass { Signed, Coherent, NonCoherent };
const char* to_string(EdgeClass c);

// What a cover x <. y merges.
struct CoverMerge {
  EdgeClass cls;
  int rep_a, rep_b;  // representatives of the merged x-blocks; equal for signed steps
};

bool is_cover(const SignedPartition& x, const SignedPartition& y);
// Throws NotACover.
CoverMerge describe_cover(const SignedPartition& x, const SignedPartition& y);
EdgeClass classify_edge(const SignedPartition& x, const SignedPartition& y);

struct LatticeVariant {
  enum class Kind { B, D, Dns, DnS };
  Kind kind = Kind::B;
  int n = 0;
  int s = 0;
  std::vector<int> allowed;  // coordinates k allowed as zero block {k, 0, -k}

  static LatticeVariant B(int n);
  static LatticeVariant D(int n);
  static LatticeVariant Dns(int n, int s);
  static LatticeVariant DnS(int n, std::vector<int> coords);
  bool contains(const SignedPartition& p) const;
  std::string name() const;
};

std::vector<SignedPartition> covers(const SignedPartition& p);
std::vector<SignedPartition> covers(const SignedPartition& p, const LatticeVariant& v);

struct PartitionLattice {
  LatticeVariant variant;
  GradedLattice lattice;
  std::vector<SignedPartition> elements;
  std::unordered_map<std::string, int> index;

  int index_of(const SignedPartition& p) const;  // -1 if absent
};

// Rank-synchronous enumeration; each rank is sorted by canonical code.
PartitionLattice enumerate_lattice(const LatticeVariant& v, int jobs = 1);

}  // namespace arrchow
