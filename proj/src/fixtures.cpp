#include "arrchow/fixtures.hpp"

#include <json.hpp>

namespace arrchow {

namespace detail {
extern const std::string_view kChowJson;
extern const std::string_view kGammaJson;
}  // namespace detail

std::string_view chow_fixture_json() { return detail::kChowJson; }
std::string_view gamma_fixture_json() { return detail::kGammaJson; }

const std::vector<ChowFixture>& chow_fixtures() {
  static const std::vector<ChowFixture> rows = [] {
    std::vector<ChowFixture> out;
    const auto doc = nlohmann::json::parse(detail::kChowJson);
    for (const auto& r : doc.at("rows")) {
      out.push_back({r.at("n").get<int>(), r.at("s").get<int>(),
                     IntPolynomial::from_decimal_strings(r.at("coeffs").get<std::vector<std::string>>())});
    }
    return out;
  }();
  return rows;
}

const std::vector<GammaFixture>& gamma_fixtures() {
  static const std::vector<GammaFixture> rows = [] {
    std::vector<GammaFixture> out;
    const auto doc = nlohmann::json::parse(detail::kGammaJson);
    for (const auto& r : doc.at("rows")) {
      GammaFixture f{r.at("n").get<int>(), r.at("s").get<int>(), {}};
      for (const auto& g : r.at("gamma")) f.gamma.emplace_back(g.get<long>());
      out.push_back(std::move(f));
    }
    return out;
  }();
  return rows;
}

}  // namespace arrchow
