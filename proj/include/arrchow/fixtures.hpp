#pragma once

#include <string_view>
#include <vector>

#include "arrchow/poly.hpp"

namespace arrchow {

struct ChowFixture {
  int n, s;
  IntPolynomial h;
};

struct GammaFixture {
  int n, s;
  std::vector<BigInt> gamma;
};

// Reference tables compiled in from data/*.json.
const std::vector<ChowFixture>& chow_fixtures();
const std::vector<GammaFixture>& gamma_fixtures();
std::string_view chow_fixture_json();
std::string_view gamma_fixture_json();

}  // namespace arrchow
