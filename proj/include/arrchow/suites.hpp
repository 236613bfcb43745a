#pragma once

#include <string>
#include <vector>

#include "arrchow/chow.hpp"
#include "arrchow/labeling.hpp"

namespace arrchow {

// Suites: "el", "chow", "arithmetic", "chains", or "all".  n_max bounds the
// rank; each suite also applies its own cap (4 for el and chains, 5 for chow,
// 7 for Chow arithmeticity, 6 for gamma arithmeticity).
std::vector<CheckReport> run_verify_suite(const std::string& suite, int n_max, int jobs = 1);
bool is_known_suite(const std::string& suite);

// Swaps the two labels of the increasing chain of some rank-2 interval above
// the bottom, which leaves that interval without an increasing chain.
// Returns false if the lattice has rank < 2.
bool corrupt_labeling(const GradedLattice& lat, EdgeLabeling& labels, ChainConvention c);

CheckReport check_el(const PartitionLattice& lat);
CheckReport check_chain_words(int n);

}  // namespace arrchow
