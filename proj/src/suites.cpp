#include "arrchow/suites.hpp"

#include <algorithm>
#include <numeric>

#include "arrchow/arrangement.hpp"
#include "arrchow/errors.hpp"
#include "arrchow/permstats.hpp"
#include "arrchow/signed_partition.hpp"

namespace arrchow {

namespace {

const std::vector<std::string> kSuites = {"el", "chow", "arithmetic", "chains"};

std::string poly_pair(const IntPolynomial& a, const IntPolynomial& b) { return a.to_string() + " vs " + b.to_string(); }

}  // namespace

bool is_known_suite(const std::string& suite) {
  return suite == "all" || std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end();
}

bool corrupt_labeling(const GradedLattice& lat, EdgeLabeling& labels, ChainConvention c) {
  for (int a = 0; a < static_cast<int>(lat.up(0).size()); ++a) {
    const int x = lat.up(0)[a];
    for (size_t k = 0; k < lat.up(x).size(); ++k) {
      Label& first = labels[0][a];
      Label& second = labels[x][k];
      if (is_ascent(first, second, c) && !(first == second)) {
        std::swap(first, second);
        return true;
      }
    }
  }
  return false;
}

CheckReport check_el(const PartitionLattice& lat) {
  CheckReport r;
  r.check = "el-labeling " + lat.variant.name();
  for (const auto& v : verify_el(lat.lattice, el_labeling(lat), ChainConvention::Strict)) {
    r.fail("[" + lat.elements[v.lo].to_string() + ", " + lat.elements[v.hi].to_string() + "]: " + v.reason);
    if (r.details.size() > 10) break;
  }
  return r;
}

CheckReport check_chain_words(int n) {
  CheckReport r;
  r.check = "chain-words B" + std::to_string(n);
  const SignedPartition bottom = SignedPartition::bottom(n);
  const SignedPartition top = SignedPartition::top(n);
  uint64_t total = 0;
  Permutation sigma = Permutation::identity(n);
  do {
    const uint64_t dfs = count_chains_with_word(bottom, top, sigma.one_line());
    uint64_t formula = 1;
    for (int a : inversion_sequence(sigma)) formula *= 2 * a - 1;
    if (dfs != formula) {
      r.fail("sigma " + std::to_string(sigma.at(1)) + "...: dfs " + std::to_string(dfs) + " formula " +
             std::to_string(formula));
    }
    total += dfs;
  } while (sigma.next());
  uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  const PartitionLattice lat = enumerate_lattice(LatticeVariant::B(n));
  const uint64_t all = count_maximal_chains_dfs(lat.lattice);
  if (total != fact * fact || all != fact * fact) {
    r.fail("maximal chains " + std::to_string(all) + ", word total " + std::to_string(total) + ", expected " +
           std::to_string(fact * fact));
  }
  return r;
}

std::vector<CheckReport> run_verify_suite(const std::string& suite, int n_max, int jobs) {
  if (!is_known_suite(suite)) throw InvalidParams("unknown suite: " + suite);
  std::vector<CheckReport> out;
  auto wants = [&](const std::string& s) { return suite == "all" || suite == s; };

  if (wants("el")) {
    for (int n = 1; n <= std::min(n_max, 4); ++n) {
      for (int s = 0; s <= n; ++s) out.push_back(check_el(enumerate_lattice(LatticeVariant::Dns(n, s), jobs)));
      // R-labelling: unique weakly increasing chain per interval.
      const PartitionLattice b = enumerate_lattice(LatticeVariant::B(n), jobs);
      CheckReport r;
      r.check = "r-labeling B" + std::to_string(n);
      for (const auto& v : verify_el(b.lattice, r_labeling(b), ChainConvention::Weak)) {
        if (v.reason.find("increasing maximal chains") != std::string::npos) r.fail(v.reason);
      }
      out.push_back(std::move(r));
    }
    if (n_max >= 2) {
      const int n = std::min(n_max, 3);
      const PartitionLattice b = enumerate_lattice(LatticeVariant::B(n), jobs);
      EdgeLabeling bad = el_labeling(b);
      CheckReport r;
      r.check = "el negative control B" + std::to_string(n);
      if (!corrupt_labeling(b.lattice, bad, ChainConvention::Strict)) r.fail("could not corrupt labelling");
      if (verify_el(b.lattice, bad, ChainConvention::Strict).empty()) r.fail("corrupted labelling was accepted");
      out.push_back(std::move(r));
    }
  }

  if (wants("chow")) {
    for (int n = 1; n <= std::min(n_max, 5); ++n) {
      for (int s = 0; s <= n; ++s) {
        const PartitionLattice lat = enumerate_lattice(LatticeVariant::Dns(n, s), jobs);
        const IntPolynomial chains = chow_via_chains(lat.lattice, el_labeling(lat), ChainConvention::Strict, jobs);
        const IntPolynomial rec = chow_recursive(lat.lattice);
        CheckReport r;
        r.check = "chow chains=recursive " + lat.variant.name();
        if (chains != rec) r.fail(poly_pair(chains, rec));
        if (s == n && chains != chow_type_b(n)) r.fail("type B closed form: " + poly_pair(chains, chow_type_b(n)));
        if (!is_palindromic(chains)) r.fail("not palindromic: " + chains.to_string());
        out.push_back(std::move(r));
      }
      const Arrangement braid = make_family(Family::A, n);
      const FlatLattice flats = intersection_lattice(braid);
      const IntPolynomial chains =
          chow_via_chains(flats.lattice, braid_labeling(flats, braid), ChainConvention::Weak, jobs);
      const IntPolynomial rec = chow_recursive(flats.lattice);
      CheckReport r;
      r.check = "chow braid A" + std::to_string(n);
      if (chains != chow_type_a(n)) r.fail("chains vs closed form: " + poly_pair(chains, chow_type_a(n)));
      if (rec != chow_type_a(n)) r.fail("recursion vs closed form: " + poly_pair(rec, chow_type_a(n)));
      out.push_back(std::move(r));
    }
  }

  if (wants("arithmetic")) {
    for (int n = 2; n <= std::min(n_max, 7); ++n) out.push_back(verify_chow_arithmetic(n, jobs));
    for (int n = 3; n <= std::min(n_max, 6); ++n) out.push_back(verify_gamma_arithmetic(n, jobs));
  }

  if (wants("chains")) {
    for (int n = 1; n <= std::min(n_max, 4); ++n) out.push_back(check_chain_words(n));
  }
  return out;
}

}  // namespace arrchow
