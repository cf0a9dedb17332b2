#include "chaosrates_cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chaosrates/chaosrates.hpp"

namespace chaosrates::cli {

namespace {

using nlohmann::json;

/// Input problem that maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& arg) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || arg[first] != '{') {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

// "t0:t1:steps" -> steps + 1 equally spaced times.
std::vector<double> parse_grid(const std::string& spec) {
  double t0 = 0.0, t1 = 0.0;
  long steps = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  in.imbue(std::locale::classic());
  if (!(in >> t0 >> c1 >> t1 >> c2 >> steps) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof() ||
      steps < 1 || !(t0 >= 0.0) || !(t1 >= t0)) {
    throw UsageError("--grid expects t0:t1:steps with 0 <= t0 <= t1 and steps >= 1");
  }
  std::vector<double> t;
  for (long i = 0; i <= steps; ++i) t.push_back(t0 + (t1 - t0) * static_cast<double>(i) / steps);
  t.back() = t1;
  return t;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json tagged(json j) {
  j["schema"] = kSchemaTag;
  return j;
}

int curve_command(const std::string& model_arg, const std::optional<std::string>& grid,
                  std::ostream& out) {
  const AnyModel model = model_from_json(load_json(model_arg));
  DiscountCurve curve;
  if (const auto* m = std::get_if<CoherentModel>(&model)) {
    std::vector<double> times;
    if (grid) {
      times = parse_grid(*grid);
    } else if (const auto* a = m->structure().as_atoms()) {
      times.push_back(0.0);
      times.insert(times.end(), a->times.begin(), a->times.end());
    } else {
      times = parse_grid("0:30:30");
    }
    for (double t : times) {
      curve.maturities.push_back(t);
      curve.prices.push_back(m->initial_bond_price(t));
    }
  } else {
    const auto& im = std::get<IncoherentModel>(model);
    for (double t : parse_grid(grid.value_or("0:30:30"))) {
      curve.maturities.push_back(t);
      curve.prices.push_back(incoherent_initial_bond_price(im, t));
    }
  }
  write_curve_csv(out, curve);
  return kExitOk;
}

int price_command(const std::string& kind, const std::string& model_arg, const std::string& spec_arg,
                  const std::string& method, std::size_t samples, std::uint64_t seed,
                  std::ostream& out) {
  const AnyModel model = model_from_json(load_json(model_arg));
  const json spec_json = load_json(spec_arg);
  Contract contract;
  if (kind == "call") {
    contract = option_spec_from_json(spec_json);
  } else {
    contract = swaption_spec_from_json(spec_json);
  }

  json result{{"contract", kind}, {"method", method}};
  if (method == "mc") {
    const McEstimate est = std::visit(
        [&](const auto& m) { return mc_price(m, contract, samples, seed); }, model);
    result["price"] = est.value;
    result["stderr"] = est.std_error;
    result["samples"] = samples;
    result["seed"] = seed;
    print_json(out, tagged(result));
    return kExitOk;
  }

  const auto* m = std::get_if<CoherentModel>(&model);
  if (!m) throw UsageError("incoherent models are priced with --method mc only");
  const double qt = std::holds_alternative<OptionSpec>(contract)
                        ? m->structure().q_at(std::get<OptionSpec>(contract).option_maturity)
                        : m->structure().q_at(std::get<SwaptionSpec>(contract).option_maturity);

  double price = 0.0;
  if (method == "analytic" || qt == 0.0) {
    // With Q_t = 0 the state at expiry is deterministic; both methods agree.
    price = kind == "call" ? price_bond_call(*m, std::get<OptionSpec>(contract))
                           : price_swaption(*m, std::get<SwaptionSpec>(contract));
  } else {
    const RealPolynomial payoff =
        kind == "call" ? call_payoff_polynomial(*m, std::get<OptionSpec>(contract))
                       : swaption_payoff_polynomial(*m, std::get<SwaptionSpec>(contract));
    price = quadrature_price(payoff, m->order());
  }
  result["price"] = price;
  print_json(out, tagged(result));
  return kExitOk;
}

int simulate_command(const std::string& model_arg, std::size_t paths, std::uint64_t seed,
                     const std::string& out_dir, std::optional<double> maturity, std::ostream& out) {
  if (paths == 0) throw UsageError("--paths must be positive");
  const AnyModel model = model_from_json(load_json(model_arg));
  const auto* m = std::get_if<CoherentModel>(&model);
  if (!m || !m->structure().as_atoms()) {
    throw UsageError("simulate requires a coherent model with an atom structure function");
  }
  const AtomGrid grid = atom_grid_from(m->structure());
  const double T = maturity.value_or(grid.maturities().back());
  const auto sims = simulate_paths(grid, m->order(), T, paths, seed);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw UsageError("cannot create output directory '" + out_dir + "': " + ec.message());
  const auto file = std::filesystem::path(out_dir) / "paths.csv";
  std::ofstream csv(file);
  if (!csv) throw UsageError("cannot write '" + file.string() + "'");
  write_paths_csv(csv, sims);
  csv.close();
  if (!csv) throw std::runtime_error("failed while writing '" + file.string() + "'");

  print_json(out, tagged({{"paths", paths},
                          {"seed", seed},
                          {"bond_maturity", T},
                          {"segments", sims.front().times.size() - 1},
                          {"file", file.string()}}));
  return kExitOk;
}

int calibrate_command(const std::string& market, int order, std::optional<double> horizon,
                      std::ostream& out) {
  std::ifstream in(market);
  if (!in) throw UsageError("cannot open '" + market + "'");
  const DiscountCurve curve = read_market_csv(in);
  const AtomGrid grid = calibrate_weights(curve, order, horizon);
  json j{{"n", order},
         {"sf", {{"family", "atoms"}, {"times", grid.atom_times()}, {"weights", grid.weights()}}}};
  print_json(out, tagged(j));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chaos-expansion interest rate models: curves, prices, paths, calibration",
               "chaosrates"};
  app.require_subcommand(1);

  std::string model_arg;
  std::optional<std::string> grid;
  auto* curve = app.add_subcommand("curve", "Initial discount curve as maturity,price CSV");
  curve->add_option("--model", model_arg, "Model JSON file or inline JSON")->required();
  curve->add_option("--grid", grid, "Maturity grid t0:t1:steps");

  std::string kind, spec_arg, method = "analytic";
  std::size_t samples = 200000;
  std::uint64_t seed = 20240101;
  auto* price = app.add_subcommand("price", "Price a bond call or a payer swaption");
  price->add_option("kind", kind, "call or swaption")
      ->required()
      ->check(CLI::IsMember({"call", "swaption"}));
  price->add_option("--model", model_arg, "Model JSON file or inline JSON")->required();
  price->add_option("--spec", spec_arg, "Contract JSON file or inline JSON")->required();
  price->add_option("--method", method, "analytic, mc or quadrature")
      ->check(CLI::IsMember({"analytic", "mc", "quadrature"}));
  price->add_option("--samples", samples, "Monte Carlo sample count")->check(CLI::Range(2ul, 1ul << 40));
  price->add_option("--seed", seed, "Monte Carlo seed");

  std::size_t paths = 0;
  std::string out_dir;
  std::optional<double> maturity;
  auto* simulate = app.add_subcommand("simulate", "Simulate finite-dimensional sample paths");
  simulate->add_option("--model", model_arg, "Atom model JSON file or inline JSON")->required();
  simulate->add_option("--paths", paths, "Number of paths")->required();
  simulate->add_option("--seed", seed, "Random seed")->required();
  simulate->add_option("--out", out_dir, "Output directory for paths.csv")->required();
  simulate->add_option("--maturity", maturity, "Bond maturity (default: last market maturity)");

  std::string market;
  int order = 0;
  std::optional<double> horizon;
  auto* calibrate = app.add_subcommand("calibrate", "Calibrate atom weights to a market curve");
  calibrate->add_option("--market", market, "CSV with header maturity,price")->required();
  calibrate->add_option("--order", order, "Chaos order n")->required()->check(CLI::Range(1, 20));
  calibrate->add_option("--horizon", horizon, "Auxiliary horizon T_{N+1} (default T_N + 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*curve) return curve_command(model_arg, grid, out);
    if (*price) return price_command(kind, model_arg, spec_arg, method, samples, seed, out);
    if (*simulate) return simulate_command(model_arg, paths, seed, out_dir, maturity, out);
    if (*calibrate) return calibrate_command(market, order, horizon, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ModelFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace chaosrates::cli
