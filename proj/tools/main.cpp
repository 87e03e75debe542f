#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "feprob/accuracy.hpp"
#include "feprob/errors.hpp"
#include "feprob/io.hpp"
#include "feprob/laws.hpp"
#include "feprob/pk_basis.hpp"
#include "feprob/seminorms.hpp"
#include "feprob/simplex.hpp"

namespace {

using nlohmann::json;

/// JSON config files: a flat object for top-level flags plus one nested
/// object per subcommand, keyed by long option names without dashes, e.g.
///   {"laws": {"hstar": 1.0, "q": 2, "h-min": 0.1, "h-max": 3, "steps": 100}}
/// Command-line flags take precedence over config values.
class JsonConfig : public CLI::Config {
public:
  std::string to_config(const CLI::App* app, bool default_also, bool,
                        std::string) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

std::string scalar_to_string(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  return value.dump();
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(std::istream& input) const {
  json parsed = json::parse(input, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object())
    throw CLI::ConfigError("config file must hold a JSON object");
  std::vector<CLI::ConfigItem> items;
  const std::function<void(const json&, std::vector<std::string>)> walk =
      [&](const json& node, std::vector<std::string> parents) {
        for (auto it = node.begin(); it != node.end(); ++it) {
          const json& value = it.value();
          if (value.is_object()) {
            auto deeper = parents;
            deeper.push_back(it.key());
            walk(value, std::move(deeper));
            continue;
          }
          CLI::ConfigItem item;
          item.parents = parents;
          item.name = it.key();
          if (value.is_array())
            for (const auto& entry : value)
              item.inputs.push_back(scalar_to_string(entry));
          else
            item.inputs.push_back(scalar_to_string(value));
          items.push_back(std::move(item));
        }
      };
  walk(parsed, {});
  return items;
}

std::string JsonConfig::to_config(const CLI::App* app, bool default_also, bool,
                                  std::string) const {
  json out = json::object();
  for (const CLI::Option* opt : app->get_options({})) {
    if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
    if (!opt->count() && !default_also) continue;
    const std::string name = opt->get_lnames()[0];
    if (opt->count())
      out[name] = opt->results().size() == 1 ? json(opt->results()[0])
                                             : json(opt->results());
    else
      out[name] = opt->get_default_str();
  }
  return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw feprob::UsageError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw feprob::UsageError("cannot open output file: " + path);
  out << text;
}

std::string dump_json(const json& payload) { return payload.dump(2) + "\n"; }

// ---------------------------------------------------------------- basis ----

struct BasisOptions {
  int n = 1;
  int k = 1;
  std::vector<double> eval;
  bool nodes = false;
  std::string format = "json";
  std::string output;
};

int run_basis(const BasisOptions& opt) {
  const feprob::PkBasis basis(opt.n, opt.k);

  if (!opt.nodes) {
    if (opt.eval.empty())
      throw feprob::UsageError("pass either --eval or --nodes");
    if (static_cast<int>(opt.eval.size()) != opt.n + 1)
      throw feprob::UsageError("--eval needs n + 1 = " +
                               std::to_string(opt.n + 1) + " coordinates");
    const auto point = feprob::BarycentricPoint::checked(opt.eval);
    const std::vector<double> values = basis.eval_all(point);

    if (opt.format == "json") {
      json payload{{"n", opt.n}, {"k", opt.k}};
      payload["point"] = opt.eval;
      payload["values"] = values;
      write_output(opt.output, dump_json(payload));
    } else {
      std::ostringstream text;
      feprob::CsvWriter csv(text);
      csv.row({"i", "value"});
      for (std::size_t i = 0; i < values.size(); ++i)
        csv.row({std::to_string(i), feprob::format_double(values[i])});
      write_output(opt.output, text.str());
    }
    return 0;
  }

  // full lattice with an exact Kronecker check (integer arithmetic)
  const auto& nodes = basis.nodes();
  bool kronecker_exact = true;
  for (std::size_t i = 0; i < nodes.size() && kronecker_exact; ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const long long expected = i == j ? 1 : 0;
      if (feprob::basis_eval_lattice(nodes[i].index, nodes[j].index) !=
          expected) {
        kronecker_exact = false;
        break;
      }
    }

  if (opt.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      json row{{"i", i}};
      row["multi_index"] = nodes[i].index.entries();
      row["lambda"] = nodes[i].point.lambdas;
      rows.push_back(std::move(row));
    }
    json payload{{"n", opt.n},
                 {"k", opt.k},
                 {"count", nodes.size()},
                 {"kronecker_exact", kronecker_exact}};
    payload["nodes"] = std::move(rows);
    write_output(opt.output, dump_json(payload));
  } else {
    std::ostringstream text;
    feprob::CsvWriter csv(text);
    std::vector<std::string> header{"i"};
    for (int j = 0; j <= opt.n; ++j)
      header.push_back("m" + std::to_string(j + 1));
    for (int j = 0; j <= opt.n; ++j)
      header.push_back("lambda" + std::to_string(j + 1));
    csv.row(header);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::vector<std::string> row{std::to_string(i)};
      for (int entry : nodes[i].index.entries())
        row.push_back(std::to_string(entry));
      for (double lambda : nodes[i].point.lambdas)
        row.push_back(feprob::format_double(lambda));
      csv.row(row);
    }
    write_output(opt.output, text.str());
    std::cerr << "kronecker_exact=" << (kronecker_exact ? "true" : "false")
              << " count=" << nodes.size() << "\n";
  }
  return kronecker_exact ? 0 : 4;
}

// --------------------------------------------------------------- bounds ----

struct BoundsOptions {
  int n = 1;
  int k = 1;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::string output;
};

int run_bounds(const BoundsOptions& opt) {
  const feprob::LocalBoundsReport report =
      feprob::verify_local_bounds(opt.n, opt.k, opt.samples, opt.seed);

  // companion check: the equispaced Lagrange numerator on [0, 1] never
  // exceeds (np + 1)! h^{np + 1} with h = 1 / np
  double product_max_ratio = 0.0;
  constexpr int grid = 10000;
  for (int np = 1; np <= 10; ++np) {
    double factorial = 1.0;
    for (int c = 2; c <= np + 1; ++c) factorial *= c;
    const double bound = factorial * std::pow(1.0 / np, np + 1);
    for (int g = 0; g <= grid; ++g) {
      const double x = static_cast<double>(g) / grid;
      const double value =
          std::abs(feprob::lagrange_numerator_product(np, 0.0, 1.0, x));
      product_max_ratio = std::max(product_max_ratio, value / bound);
    }
  }
  const bool product_ok = product_max_ratio <= 1.0 + 1e-12;
  const bool pass = report.pass() && product_ok;

  json payload{{"n", report.n},
               {"k", report.k},
               {"samples", report.samples},
               {"seed", report.seed},
               {"max_abs_value", report.max_abs_value},
               {"value_bound", report.value_bound},
               {"value_ok", report.value_ok},
               {"max_abs_partial", report.max_abs_partial},
               {"partial_bound", report.partial_bound},
               {"partial_ok", report.partial_ok},
               {"product_max_ratio", product_max_ratio},
               {"product_ok", product_ok},
               {"pass", pass}};
  write_output(opt.output, dump_json(payload));
  return pass ? 0 : 4;
}

// ------------------------------------------------------------ seminorms ----

struct SeminormsOptions {
  int n = 1;
  int k = 1;
  std::string vertices_path;
  std::string format = "csv";
  std::string output;
};

int run_seminorms(const SeminormsOptions& opt) {
  const feprob::SimplexGeometry geometry =
      opt.vertices_path.empty()
          ? feprob::reference_simplex(opt.n)
          : feprob::simplex_from_json_text(read_file(opt.vertices_path));
  if (geometry.dimension != opt.n)
    throw feprob::UsageError("--n disagrees with the vertices file dimension");

  const feprob::PkBasis basis(opt.n, opt.k);
  const feprob::QuadratureRule rule =
      feprob::quadrature_rule(opt.n, 2 * opt.k + 2);
  std::vector<double> l2(basis.size()), h1(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    l2[i] = feprob::seminorm_l2(basis, i, geometry, rule);
    h1[i] = feprob::seminorm_h1(basis, i, geometry, rule);
  }
  const feprob::SeminormSumsReport report =
      feprob::seminorm_sums(opt.n, opt.k, geometry);

  if (opt.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < basis.size(); ++i)
      rows.push_back(json{{"i", i}, {"l2", l2[i]}, {"h1", h1[i]}});
    json payload{{"n", opt.n}, {"k", opt.k}};
    payload["rows"] = std::move(rows);
    payload["summary"] = json{{"sum_l2", report.sum_l2},
                              {"bound_l2", report.bound_l2},
                              {"l2_ok", report.l2_ok},
                              {"sum_h1", report.sum_h1},
                              {"bound_h1", report.bound_h1},
                              {"h1_ok", report.h1_ok},
                              {"hypothesis_ok", report.hypothesis_ok},
                              {"pass", report.pass()}};
    write_output(opt.output, dump_json(payload));
  } else {
    std::ostringstream text;
    feprob::CsvWriter csv(text);
    csv.row({"i", "l2", "h1"});
    for (std::size_t i = 0; i < basis.size(); ++i)
      csv.row({std::to_string(i), feprob::format_double(l2[i]),
               feprob::format_double(h1[i])});
    write_output(opt.output, text.str());
    std::cerr << "sum_l2=" << feprob::format_double(report.sum_l2)
              << " bound_l2=" << feprob::format_double(report.bound_l2)
              << " l2_ok=" << (report.l2_ok ? "true" : "false") << "\n"
              << "sum_h1=" << feprob::format_double(report.sum_h1)
              << " bound_h1=" << feprob::format_double(report.bound_h1)
              << " h1_ok=" << (report.h1_ok ? "true" : "false") << "\n"
              << "hypothesis_ok=" << (report.hypothesis_ok ? "true" : "false")
              << "\n";
  }
  return report.pass() ? 0 : 4;
}

// ---------------------------------------------------------------- hstar ----

struct HstarOptions {
  int k = 2;
  int q_max = 100;
  std::string model = "builtin-sine";
  double continuity = 1.0;
  double ellipticity = 1.0;
  double diameter = 1.0;
  double sigma = 1.0;
  double lambda = 1.0;
  int n = 2;
  std::string format = "csv";
  std::string output;
};

int run_hstar(const HstarOptions& opt) {
  std::unique_ptr<feprob::SeminormProvider> provider;
  if (opt.model == "builtin-sine")
    provider = std::make_unique<feprob::ModelSeminormProvider>();
  else
    provider = feprob::provider_from_json_text(read_file(opt.model));

  const feprob::EllipticityData e{opt.continuity, opt.ellipticity};
  const feprob::DomainData d{opt.diameter, opt.sigma, opt.lambda, opt.n};
  std::vector<int> q_values(static_cast<std::size_t>(opt.q_max));
  for (int q = 1; q <= opt.q_max; ++q)
    q_values[static_cast<std::size_t>(q - 1)] = q;
  const feprob::AsymptoticModel model =
      feprob::build_asymptotic_model(opt.k, q_values, e, d, *provider);

  // hstar_q carries an explicit "inf" sentinel once exp(log) leaves double
  // range; ratio = hstar_q / asymptote stays finite in log arithmetic.
  if (opt.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < model.q_values.size(); ++i) {
      const double value = std::exp(model.log_hstar_q[i]);
      const double ratio =
          std::exp(model.log_hstar_q[i] - std::log(model.asymptote[i]));
      json row{{"q", model.q_values[i]},
               {"log_hstar_q", model.log_hstar_q[i]},
               {"asymptote", model.asymptote[i]},
               {"ratio", ratio}};
      if (std::isinf(value))
        row["hstar_q"] = "inf";
      else
        row["hstar_q"] = value;
      rows.push_back(std::move(row));
    }
    json payload{{"k", model.k},
                 {"model", provider->label()},
                 {"ratio_limit", model.ratio_limit}};
    payload["rows"] = std::move(rows);
    write_output(opt.output, dump_json(payload));
  } else {
    std::ostringstream text;
    feprob::CsvWriter csv(text);
    csv.row({"q", "log_hstar_q", "hstar_q", "asymptote", "ratio"});
    for (std::size_t i = 0; i < model.q_values.size(); ++i) {
      const double value = std::exp(model.log_hstar_q[i]);
      const double ratio =
          std::exp(model.log_hstar_q[i] - std::log(model.asymptote[i]));
      csv.row({std::to_string(model.q_values[i]),
               feprob::format_double(model.log_hstar_q[i]),
               std::isinf(value) ? std::string("inf")
                                 : feprob::format_double(value),
               feprob::format_double(model.asymptote[i]),
               feprob::format_double(ratio)});
    }
    write_output(opt.output, text.str());
  }
  return 0;
}

// ----------------------------------------------------------------- laws ----

struct LawsOptions {
  double h_star = 1.0;
  int q = 1;
  double h_min = 0.1;
  double h_max = 1.0;
  int steps = 2;
  std::uint64_t montecarlo = 0; // 0 = closed-form columns only
  double c_k = 1.0;
  double c_m = 1.0;
  int k = 1;
  int m = 2;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string output;
};

int run_laws(const LawsOptions& opt) {
  if (!(opt.h_max >= opt.h_min))
    throw feprob::UsageError("--h-max must be >= --h-min");

  feprob::LawParameters params;
  if (opt.montecarlo > 0) {
    params = feprob::LawParameters::make(opt.k, opt.m, opt.c_k, opt.c_m);
    if (params.q() != opt.q)
      throw feprob::UsageError("--q must equal m - k = " +
                               std::to_string(params.q()));
    if (std::abs(params.h_star - opt.h_star) > 1e-9 * params.h_star)
      throw feprob::UsageError(
          "--hstar disagrees with (ck/cm)^(1/(m-k)) = " +
          feprob::format_double(params.h_star));
  }

  std::vector<double> grid(static_cast<std::size_t>(opt.steps));
  for (int i = 0; i < opt.steps; ++i)
    grid[static_cast<std::size_t>(i)] =
        opt.steps == 1 ? opt.h_min
                       : opt.h_min + i * (opt.h_max - opt.h_min) / (opt.steps - 1);

  std::vector<feprob::MonteCarloResult> mc;
  if (opt.montecarlo > 0) {
    mc.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double a = opt.c_k * std::pow(grid[i], opt.k);
      const double b = opt.c_m * std::pow(grid[i], opt.m);
      mc.push_back(feprob::monte_carlo_prob(a, b, opt.montecarlo,
                                            opt.seed + i));
    }
  }

  if (opt.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      json row{{"h", grid[i]},
               {"p_step", feprob::step_law(grid[i], opt.h_star)},
               {"p_sigmoid", feprob::sigmoid_law(grid[i], opt.h_star, opt.q)}};
      if (opt.montecarlo > 0) {
        row["p_montecarlo"] = mc[i].estimate;
        row["stderr"] = mc[i].standard_error;
      }
      rows.push_back(std::move(row));
    }
    json payload{{"hstar", opt.h_star}, {"q", opt.q}};
    if (opt.montecarlo > 0) {
      payload["montecarlo_samples"] = opt.montecarlo;
      payload["seed"] = opt.seed;
    }
    payload["rows"] = std::move(rows);
    write_output(opt.output, dump_json(payload));
  } else {
    std::ostringstream text;
    feprob::CsvWriter csv(text);
    std::vector<std::string> header{"h", "p_step", "p_sigmoid"};
    if (opt.montecarlo > 0) {
      header.push_back("p_montecarlo");
      header.push_back("stderr");
    }
    csv.row(header);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::vector<std::string> row{
          feprob::format_double(grid[i]),
          feprob::format_double(feprob::step_law(grid[i], opt.h_star)),
          feprob::format_double(
              feprob::sigmoid_law(grid[i], opt.h_star, opt.q))};
      if (opt.montecarlo > 0) {
        row.push_back(feprob::format_double(mc[i].estimate));
        row.push_back(feprob::format_double(mc[i].standard_error));
      }
      csv.row(row);
    }
    write_output(opt.output, text.str());
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"P_k Lagrange bases, interpolation error constants, critical "
               "mesh sizes, and the accuracy probability laws"};
  app.set_config("--config", "", "JSON config file supplying any flag");
  app.config_formatter(std::make_shared<JsonConfig>());
  app.require_subcommand(1);

  BasisOptions basis_opt;
  CLI::App* basis_cmd = app.add_subcommand(
      "basis", "Evaluate the P_k basis or list its lattice nodes");
  basis_cmd->configurable();
  basis_cmd->add_option("--n", basis_opt.n, "simplex dimension")
      ->required()
      ->check(CLI::Range(1, 3));
  basis_cmd->add_option("--k", basis_opt.k, "polynomial degree")
      ->required()
      ->check(CLI::Range(1, 64));
  CLI::Option* eval_opt =
      basis_cmd
          ->add_option("--eval", basis_opt.eval,
                       "barycentric coordinates, comma separated")
          ->delimiter(',');
  basis_cmd->add_flag("--nodes", basis_opt.nodes, "list the lattice nodes")
      ->excludes(eval_opt);
  basis_cmd->add_option("--format", basis_opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  basis_cmd->add_option("--output", basis_opt.output, "output file (default stdout)");

  BoundsOptions bounds_opt;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "Verify the pointwise envelopes of the basis and its partials");
  bounds_cmd->configurable();
  bounds_cmd->add_option("--n", bounds_opt.n, "simplex dimension")
      ->required()
      ->check(CLI::Range(1, 3));
  bounds_cmd->add_option("--k", bounds_opt.k, "polynomial degree")
      ->required()
      ->check(CLI::Range(1, 64));
  bounds_cmd->add_option("--samples", bounds_opt.samples,
                         "random simplex points to scan")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{100000000}));
  bounds_cmd->add_option("--seed", bounds_opt.seed, "random stream seed");
  bounds_cmd->add_option("--output", bounds_opt.output,
                         "output file (default stdout)");

  SeminormsOptions seminorms_opt;
  CLI::App* seminorms_cmd = app.add_subcommand(
      "seminorms", "Per-function L2/H1 semi-norms on a simplex, with the "
                   "summed-envelope report");
  seminorms_cmd->configurable();
  seminorms_cmd->add_option("--n", seminorms_opt.n, "simplex dimension")
      ->required()
      ->check(CLI::Range(1, 3));
  seminorms_cmd->add_option("--k", seminorms_opt.k, "polynomial degree")
      ->required()
      ->check(CLI::Range(1, 10));
  seminorms_cmd->add_option("--vertices", seminorms_opt.vertices_path,
                            "JSON file {\"vertices\": [[...], ...]}; "
                            "default: reference simplex");
  seminorms_cmd->add_option("--format", seminorms_opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  seminorms_cmd->add_option("--output", seminorms_opt.output,
                            "output file (default stdout)");

  HstarOptions hstar_opt;
  CLI::App* hstar_cmd = app.add_subcommand(
      "hstar", "Critical mesh size h*_q growth table with its linear asymptote");
  hstar_cmd->configurable();
  hstar_cmd->add_option("--k", hstar_opt.k, "base polynomial degree")
      ->required()
      ->check(CLI::Range(1, 100));
  hstar_cmd->add_option("--q-max", hstar_opt.q_max, "largest order gap q")
      ->required()
      ->check(CLI::Range(1, 100000));
  hstar_cmd->add_option(
      "--model", hstar_opt.model,
      "semi-norm source: builtin-sine or a JSON provider file");
  hstar_cmd->add_option("--M", hstar_opt.continuity, "continuity constant")
      ->check(CLI::PositiveNumber);
  hstar_cmd->add_option("--alpha", hstar_opt.ellipticity, "ellipticity constant")
      ->check(CLI::PositiveNumber);
  hstar_cmd->add_option("--diam", hstar_opt.diameter, "domain diameter")
      ->check(CLI::PositiveNumber);
  hstar_cmd->add_option("--sigma", hstar_opt.sigma, "mesh regularity bound")
      ->check(CLI::Range(1.0, 1e9));
  hstar_cmd->add_option("--lambda", hstar_opt.lambda,
                        "barycentric gradient bound")
      ->check(CLI::PositiveNumber);
  hstar_cmd->add_option("--n", hstar_opt.n, "space dimension")
      ->check(CLI::Range(1, 10));
  hstar_cmd->add_option("--format", hstar_opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  hstar_cmd->add_option("--output", hstar_opt.output,
                        "output file (default stdout)");

  LawsOptions laws_opt;
  CLI::App* laws_cmd = app.add_subcommand(
      "laws", "Step and sigmoid accuracy laws on an h grid, with optional "
              "Monte Carlo reconstruction");
  laws_cmd->configurable();
  laws_cmd->add_option("--hstar", laws_opt.h_star, "critical mesh size")
      ->required()
      ->check(CLI::PositiveNumber);
  laws_cmd->add_option("--q", laws_opt.q, "order gap m - k")
      ->required()
      ->check(CLI::Range(1, 100000));
  laws_cmd->add_option("--h-min", laws_opt.h_min, "grid start")
      ->required()
      ->check(CLI::PositiveNumber);
  laws_cmd->add_option("--h-max", laws_opt.h_max, "grid end")
      ->required()
      ->check(CLI::PositiveNumber);
  laws_cmd->add_option("--steps", laws_opt.steps, "grid size")
      ->required()
      ->check(CLI::Range(1, 1000000));
  CLI::Option* mc_opt =
      laws_cmd
          ->add_option("--montecarlo", laws_opt.montecarlo,
                       "Monte Carlo samples per grid point")
          ->check(CLI::Range(std::uint64_t{100}, std::uint64_t{1000000000}));
  CLI::Option* ck_opt = laws_cmd->add_option("--ck", laws_opt.c_k,
                                             "error constant of order k")
                            ->check(CLI::PositiveNumber)
                            ->needs(mc_opt);
  CLI::Option* cm_opt = laws_cmd->add_option("--cm", laws_opt.c_m,
                                             "error constant of order m")
                            ->check(CLI::PositiveNumber)
                            ->needs(mc_opt);
  CLI::Option* k_opt = laws_cmd->add_option("--k", laws_opt.k, "lower degree")
                           ->check(CLI::Range(1, 100000))
                           ->needs(mc_opt);
  CLI::Option* m_opt = laws_cmd->add_option("--m", laws_opt.m, "higher degree")
                           ->check(CLI::Range(2, 200000))
                           ->needs(mc_opt);
  mc_opt->needs(ck_opt)->needs(cm_opt)->needs(k_opt)->needs(m_opt);
  laws_cmd->add_option("--seed", laws_opt.seed, "Monte Carlo seed");
  laws_cmd->add_option("--format", laws_opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  laws_cmd->add_option("--output", laws_opt.output,
                       "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (*basis_cmd) return run_basis(basis_opt);
    if (*bounds_cmd) return run_bounds(bounds_opt);
    if (*seminorms_cmd) return run_seminorms(seminorms_opt);
    if (*hstar_cmd) return run_hstar(hstar_opt);
    if (*laws_cmd) return run_laws(laws_opt);
    throw feprob::UsageError("no subcommand selected");
  } catch (const CLI::Success& e) {
    return app.exit(e); // help and friends: exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const feprob::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const feprob::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
