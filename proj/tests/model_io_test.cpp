#include "chaosrates/model_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace chaosrates {
namespace {

using nlohmann::json;

TEST(ModelIoTest, CoherentRoundTrip) {
  const json j = json::parse(R"({"n": 3, "sf": {"family": "exponential", "lambda": 0.2}})");
  const auto model = std::get<CoherentModel>(model_from_json(j));
  EXPECT_EQ(model.order(), 3);
  EXPECT_NEAR(model.structure().q_at(5.0), 1.0 - std::exp(-1.0), 1e-15);
  const json out = to_json(model);
  EXPECT_EQ(out["schema"], kSchemaTag);
  const auto again = std::get<CoherentModel>(model_from_json(out));
  EXPECT_EQ(again.structure().q_at(3.0), model.structure().q_at(3.0));
}

TEST(ModelIoTest, AtomAndPiecewiseFamilies) {
  const auto atoms = structure_from_json(
      json::parse(R"({"family": "atoms", "times": [1, 4, 9], "weights": [0.25, 0.5, 0.25]})"));
  EXPECT_EQ(atoms.q_at(4.0), 0.75);
  const auto grid = atom_grid_from(atoms);
  EXPECT_EQ(grid.maturities(), (std::vector<double>{1.0, 4.0}));
  EXPECT_EQ(grid.horizon(), 9.0);
  EXPECT_EQ(structure_from_json(to_json(atoms)).q_at(9.0), 1.0);

  const auto pw = structure_from_json(
      json::parse(R"({"family": "piecewise", "breaks": [0, 1, 3], "values": [2, 1]})"));
  EXPECT_NEAR(pw.q_at(1.0), 0.5, 1e-15);
  EXPECT_NEAR(structure_from_json(to_json(pw)).q_at(2.0), 0.75, 1e-15);
  EXPECT_THROW(atom_grid_from(pw), ModelFormatError);
}

TEST(ModelIoTest, IncoherentRoundTrip) {
  const json j = json::parse(R"({"terms": [
      {"c": 0.7, "n": 2, "sf": {"family": "exponential", "lambda": 0.3}},
      {"c": 0.4, "n": 2, "sf": {"family": "exponential", "lambda": 0.05}}]})");
  const auto model = std::get<IncoherentModel>(model_from_json(j));
  EXPECT_EQ(model.terms().size(), 2u);
  const auto again = std::get<IncoherentModel>(model_from_json(to_json(model)));
  EXPECT_EQ(incoherent_initial_bond_price(again, 4.0), incoherent_initial_bond_price(model, 4.0));
}

TEST(ModelIoTest, RejectsMalformedDocuments) {
  EXPECT_THROW(model_from_json(json::parse(R"({"n": 2})")), ModelFormatError);
  EXPECT_THROW(model_from_json(json::parse(R"({"n": "two", "sf": {}})")), ModelFormatError);
  EXPECT_THROW(model_from_json(json::parse(
                   R"({"n": 2, "sf": {"family": "exponential", "lambda": -1}})")),
               ModelFormatError);
  EXPECT_THROW(structure_from_json(json::parse(R"({"family": "gamma"})")), ModelFormatError);
  EXPECT_THROW(option_spec_from_json(json::parse(
                   R"({"option_maturity": 2, "bond_maturity": 1, "strike": 0.9})")),
               ModelFormatError);
  EXPECT_THROW(swaption_spec_from_json(json::parse(R"({"option_maturity": 1})")),
               ModelFormatError);
}

TEST(ModelIoTest, SpecsParse) {
  const auto o = option_spec_from_json(
      json::parse(R"({"option_maturity": 1, "bond_maturity": 2, "strike": 0.9})"));
  EXPECT_EQ(o.bond_maturity, 2.0);
  const auto s = swaption_spec_from_json(
      json::parse(R"({"option_maturity": 1, "payment_dates": [2, 3], "strike": 0.05})"));
  EXPECT_EQ(s.payment_dates.size(), 2u);
}

TEST(CsvTest, MarketCurveRoundTrip) {
  const DiscountCurve curve{{1.0, 4.0}, {35.0 / 36, 5.0 / 9}};
  std::stringstream buf;
  write_curve_csv(buf, curve);
  const auto back = read_market_csv(buf);
  EXPECT_EQ(back.maturities, curve.maturities);
  EXPECT_EQ(back.prices, curve.prices);
}

TEST(CsvTest, MarketCurveErrors) {
  std::istringstream no_header("1,0.9\n");
  EXPECT_THROW(read_market_csv(no_header), ModelFormatError);
  std::istringstream bad_row("maturity,price\n1,abc\n");
  EXPECT_THROW(read_market_csv(bad_row), ModelFormatError);
}

TEST(CsvTest, PathsLongFormat) {
  SimplePath p{{0.0, 1.0}, {0.0, 0.5}, {0.0, 0.2}, {0.5, 0.4}, {0.9, 1.0}};
  std::ostringstream out;
  write_paths_csv(out, {p, p});
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("path_id,time,R,Q,pi,P\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

}  // namespace
}  // namespace chaosrates
