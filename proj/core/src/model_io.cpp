#include "chaosrates/model_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace chaosrates {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ModelFormatError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ModelFormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw ModelFormatError(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

int integer(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw ModelFormatError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<double> numbers(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw ModelFormatError(std::string("field \"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number()) {
      throw ModelFormatError(std::string("field \"") + key + "\" must hold numbers only");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

// Re-raise construction failures as format errors so callers see one type.
template <typename F>
auto checked(F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const std::invalid_argument& e) {
    throw ModelFormatError(e.what());
  } catch (const std::domain_error& e) {
    throw ModelFormatError(e.what());
  }
}

double parse_double(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double v = 0.0;
  in >> v;
  if (!in || !(in >> std::ws).eof()) {
    throw ModelFormatError("market CSV line " + std::to_string(line) + ": bad number '" + text + "'");
  }
  return v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

StructureFunction structure_from_json(const json& j) {
  const json& fam = field(j, "family");
  if (!fam.is_string()) throw ModelFormatError("field \"family\" must be a string");
  const auto family = fam.get<std::string>();
  if (family == "exponential") {
    const double rate = number(j, "lambda");
    const double amplitude = j.contains("amplitude") ? number(j, "amplitude") : rate;
    return checked([&] { return StructureFunction::exponential(rate, amplitude); });
  }
  if (family == "piecewise") {
    return checked([&] { return StructureFunction::piecewise(numbers(j, "breaks"), numbers(j, "values")); });
  }
  if (family == "atoms") {
    return checked([&] { return StructureFunction::atoms(numbers(j, "times"), numbers(j, "weights")); });
  }
  throw ModelFormatError("unknown structure function family \"" + family + "\"");
}

json to_json(const StructureFunction& sf) {
  if (const auto* e = sf.as_exponential()) {
    return {{"family", "exponential"},
            {"lambda", e->rate},
            {"amplitude", sf.normalisation_scale() * e->rate}};
  }
  if (const auto* p = sf.as_piecewise()) {
    std::vector<double> raw = p->values;
    for (double& v : raw) v *= sf.normalisation_scale();
    return {{"family", "piecewise"}, {"breaks", p->breaks}, {"values", raw}};
  }
  const auto& a = *sf.as_atoms();
  return {{"family", "atoms"}, {"times", a.times}, {"weights", a.weights}};
}

AnyModel model_from_json(const json& j) {
  if (!j.is_object()) throw ModelFormatError("model must be a JSON object");
  if (j.contains("terms")) {
    const json& terms = j["terms"];
    if (!terms.is_array()) throw ModelFormatError("field \"terms\" must be an array");
    std::vector<CoherentTerm> out;
    for (const auto& t : terms) {
      out.push_back({number(t, "c"), integer(t, "n"), structure_from_json(field(t, "sf"))});
    }
    return checked([&] { return AnyModel(IncoherentModel(std::move(out))); });
  }
  const int n = integer(j, "n");
  auto sf = structure_from_json(field(j, "sf"));
  return checked([&] { return AnyModel(CoherentModel(n, std::move(sf))); });
}

json to_json(const CoherentModel& model) {
  return {{"schema", kSchemaTag}, {"n", model.order()}, {"sf", to_json(model.structure())}};
}

json to_json(const IncoherentModel& model) {
  json terms = json::array();
  for (const auto& t : model.terms()) {
    terms.push_back({{"c", t.weight}, {"n", t.order}, {"sf", to_json(t.sf)}});
  }
  return {{"schema", kSchemaTag}, {"terms", terms}};
}

OptionSpec option_spec_from_json(const json& j) {
  OptionSpec s{number(j, "option_maturity"), number(j, "bond_maturity"), number(j, "strike")};
  checked([&] { s.validate(); return 0; });
  return s;
}

SwaptionSpec swaption_spec_from_json(const json& j) {
  SwaptionSpec s{number(j, "option_maturity"), numbers(j, "payment_dates"), number(j, "strike")};
  checked([&] { s.validate(); return 0; });
  return s;
}

AtomGrid atom_grid_from(const StructureFunction& sf) {
  const auto* a = sf.as_atoms();
  if (!a) throw ModelFormatError("an atom structure function is required");
  if (a->times.size() < 2) {
    throw ModelFormatError("atom structure function needs at least one maturity plus a horizon");
  }
  std::vector<double> maturities(a->times.begin(), a->times.end() - 1);
  return checked([&] { return AtomGrid(std::move(maturities), a->times.back(), a->weights); });
}

DiscountCurve read_market_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "maturity,price") {
    throw ModelFormatError("market CSV must start with the header 'maturity,price'");
  }
  DiscountCurve curve;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ModelFormatError("market CSV line " + std::to_string(lineno) + ": expected two columns");
    }
    curve.maturities.push_back(parse_double(trim(line.substr(0, comma)), lineno));
    curve.prices.push_back(parse_double(trim(line.substr(comma + 1)), lineno));
  }
  if (curve.maturities.empty()) throw ModelFormatError("market CSV has no rows");
  return curve;
}

void write_curve_csv(std::ostream& out, const DiscountCurve& curve) {
  out << "maturity,price\n";
  for (std::size_t i = 0; i < curve.maturities.size(); ++i) {
    out << fmt(curve.maturities[i]) << ',' << fmt(curve.prices[i]) << '\n';
  }
}

void write_paths_csv(std::ostream& out, const std::vector<SimplePath>& paths) {
  out << "path_id,time,R,Q,pi,P\n";
  for (std::size_t id = 0; id < paths.size(); ++id) {
    const auto& p = paths[id];
    for (std::size_t k = 0; k < p.times.size(); ++k) {
      out << id << ',' << fmt(p.times[k]) << ',' << fmt(p.R[k]) << ',' << fmt(p.Q[k]) << ','
          << fmt(p.pi[k]) << ',' << fmt(p.P[k]) << '\n';
    }
  }
}

}  // namespace chaosrates
