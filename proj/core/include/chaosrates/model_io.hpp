#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "chaosrates/coherent_model.hpp"
#include "chaosrates/finite_dim.hpp"
#include "chaosrates/incoherent_model.hpp"
#include "chaosrates/polynomial_pricer.hpp"

namespace chaosrates {

/// Tag written into every JSON document this library produces.
inline constexpr const char* kSchemaTag = "chaos-rates/1";

/// Malformed or inconsistent model, spec or market input.
class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structure functions:
//   {"family": "exponential", "lambda": 0.1, "amplitude": 0.1}   amplitude optional
//   {"family": "piecewise", "breaks": [0, 1, 5], "values": [0.2, 0.1]}
//   {"family": "atoms", "times": [1, 4, 9], "weights": [0.25, 0.5, 0.25]}
StructureFunction structure_from_json(const nlohmann::json& j);
nlohmann::json to_json(const StructureFunction& sf);

// Coherent: {"n": 2, "sf": {...}}. Incoherent: {"terms": [{"c": 0.7, "n": 2, "sf": {...}}, ...]}.
using AnyModel = std::variant<CoherentModel, IncoherentModel>;
AnyModel model_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CoherentModel& model);
nlohmann::json to_json(const IncoherentModel& model);

// {"option_maturity": 1, "bond_maturity": 2, "strike": 0.9}
OptionSpec option_spec_from_json(const nlohmann::json& j);
// {"option_maturity": 1, "payment_dates": [2, 3], "strike": 0.05}
SwaptionSpec swaption_spec_from_json(const nlohmann::json& j);

/// The atom grid behind an atom structure function: its last atom is taken
/// as the horizon. Throws ModelFormatError for other families.
AtomGrid atom_grid_from(const StructureFunction& sf);

/// Reads a curve CSV with the header `maturity,price`.
DiscountCurve read_market_csv(std::istream& in);
void write_curve_csv(std::ostream& out, const DiscountCurve& curve);

/// Long format: path_id,time,R,Q,pi,P.
void write_paths_csv(std::ostream& out, const std::vector<SimplePath>& paths);

}  // namespace chaosrates
