#include "sgl/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sgl/contour.hpp"
#include "sgl/convergence_lab.hpp"
#include "sgl/eigs.hpp"
#include "sgl/generator_checks.hpp"
#include "sgl/operator_core.hpp"
#include "sgl/resolvent.hpp"
#include "sgl/semigroup.hpp"
#include "sgl/spectral_maps.hpp"

namespace sgl {

namespace {

using Params = std::map<std::string, std::string>;

std::string get(const Params& p, const std::string& key,
                const std::string& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

bool has(const Params& p, const std::string& key) { return p.count(key) > 0; }

double get_double(const Params& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : std::stod(it->second);
}

std::size_t get_size(const Params& p, const std::string& key,
                     std::size_t fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback
                       : static_cast<std::size_t>(std::stoull(it->second));
}

cplx parse_cplx(const std::string& text) {
  // "re" or "re+imi" / "re-imi" / "imi"
  std::string s = text;
  if (!s.empty() && (s.back() == 'i' || s.back() == 'I')) {
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) {
      if (s.empty() || s == "+") return {0.0, 1.0};
      if (s == "-") return {0.0, -1.0};
      return {0.0, std::stod(s)};
    }
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return {std::stod(s.substr(0, split)), std::stod(im)};
  }
  return {std::stod(s), 0.0};
}

cplx get_cplx(const Params& p, const std::string& key, cplx fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : parse_cplx(it->second);
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& text, Parse parse) {
  std::vector<T> out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) out.push_back(parse(piece));
  return out;
}

std::vector<double> get_doubles(const Params& p, const std::string& key,
                                std::vector<double> fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  return parse_list<double>(it->second,
                            [](const std::string& s) { return std::stod(s); });
}

std::vector<std::size_t> get_sizes(const Params& p, const std::string& key,
                                   std::vector<std::size_t> fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  return parse_list<std::size_t>(it->second, [](const std::string& s) {
    return static_cast<std::size_t>(std::stoull(s));
  });
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!content.empty() && content.back() != '\n') out << "\n";
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(count - 1);
  return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  std::vector<double> g(count);
  const double llo = std::log10(lo), lhi = std::log10(hi);
  for (std::size_t i = 0; i < count; ++i)
    g[i] = std::pow(10.0, llo + (lhi - llo) * static_cast<double>(i) /
                               static_cast<double>(count - 1));
  return g;
}

OperatorHandle required_operator(const RunConfig& config) {
  if (config.operator_spec.empty())
    throw std::invalid_argument("missing --op");
  return make_operator(config.operator_spec);
}

void write_matrix(const Matrix& m, const std::string& path,
                  const std::string& format) {
  if (format == "csv")
    write_matrix_csv(m, path);
  else
    write_matrix_json(m, path);
}

int finish_report(const CheckReport& report, const std::string& path) {
  write_text(path, report.to_json());
  std::printf("%s: %s (%s)\n", report.name.c_str(),
              report.pass ? "PASS" : "FAIL", path.c_str());
  return report.pass ? 0 : 2;
}

int run_expm(const RunConfig& config) {
  const OperatorHandle op = required_operator(config);
  const double t = get_double(config.params, "t", 1.0);
  const std::string method = get(config.params, "method", "oracle");
  const std::string path = config.output_path.empty()
                               ? "expm." + config.format
                               : config.output_path;
  Matrix result;
  if (method == "oracle") {
    result = expm_oracle(op, t);
  } else if (method == "taylor") {
    result = expm_taylor(op, t, get_double(config.params, "tol", 1e-14));
  } else if (method == "euler") {
    result = euler_product(op, t, get_size(config.params, "n", 64));
  } else if (method == "exp-formula") {
    result = exp_formula(op, t, get_size(config.params, "n", 64));
  } else if (method == "yosida") {
    const double lambda = get_double(config.params, "ylambda", 64.0);
    result = expm_oracle(
        operator_from_matrix(yosida_generator(op, cplx{lambda, 0.0}), "yosida"),
        t);
  } else if (method == "dunford") {
    ContourSpec contour;
    if (has(config.params, "contour")) {
      contour = ContourSpec::parse(config.params.at("contour"));
    } else {
      contour.radius = std::max(1.26 * operator_norm(op).value, 1.0);
      contour.nodes = 64;
    }
    result = dunford_exp(op, t, contour);
  } else if (method == "bromwich") {
    if (has(config.params, "contour")) {
      const ContourSpec c = ContourSpec::parse(config.params.at("contour"));
      result = bromwich_exp(op, t, c.a, c.y_cut, c.nodes);
    } else {
      result = bromwich_exp_auto(op, t, get_double(config.params, "tol", 1e-7))
                   .value;
    }
  } else {
    throw std::invalid_argument("expm: unknown method " + method);
  }
  write_matrix(result, path, config.format);
  std::printf("expm %s t=%g |result|=%s -> %s\n", method.c_str(), t,
              format_sci(spectral_norm(result)).c_str(), path.c_str());
  return 0;
}

int run_resolvent(const RunConfig& config) {
  const OperatorHandle op = required_operator(config);
  const cplx lambda = get_cplx(config.params, "lambda", cplx{1.0, 0.0});
  const std::string method = get(config.params, "method", "lu");
  const std::string path =
      config.output_path.empty() ? "resolvent.json" : config.output_path;

  nlohmann::ordered_json j;
  j["lambda_re"] = lambda.real();
  j["lambda_im"] = lambda.imag();
  j["method"] = method;
  if (method == "neumann") {
    const NeumannResolvent nr =
        neumann_resolvent(op, lambda, get_double(config.params, "tol", 1e-12));
    j["in_resolvent_set"] = true;
    j["terms"] = nr.terms;
    j["norm_estimate"] = nr.sample.norm_estimate;
  } else {
    const ResolventSample sample = resolvent(op, lambda);
    j["in_resolvent_set"] = sample.in_resolvent_set;
    j["norm_estimate"] = sample.norm_estimate;
    j["condition_estimate"] = sample.condition_estimate;
  }
  write_text(path, j.dump(2));
  std::printf("resolvent lambda=%g%+gi -> %s\n", lambda.real(), lambda.imag(),
              path.c_str());
  return 0;
}

int run_converge(const RunConfig& config) {
  const std::string method = get(config.params, "method", "exp-formula");
  const OperatorHandle op = required_operator(config);
  const std::vector<double> t_grid =
      get_doubles(config.params, "t", {1.0});
  const std::vector<std::size_t> n_seq =
      get_sizes(config.params, "n", {10, 20, 40, 80});
  const std::string path =
      config.output_path.empty() ? "converge.csv" : config.output_path;

  ConvergenceTable table;
  if (method == "trotter") {
    if (config.operator2_spec.empty())
      throw std::invalid_argument("converge trotter: missing --op2");
    table = converge_table_trotter(op, make_operator(config.operator2_spec),
                                   t_grid, n_seq);
  } else if (method == "chernoff") {
    const std::string step = get(config.params, "chernoff-f", "backward-euler");
    StepFamily family;
    OperatorHandle target = op;
    if (step == "backward-euler") {
      family = backward_euler_family(op);
    } else if (step == "exp") {
      auto oracle = std::make_shared<SemigroupOracle>(op);
      family = [oracle](double h) -> StepAction {
        auto e = std::make_shared<Matrix>(oracle->at(h));
        return [e](std::span<const cplx> x, std::span<cplx> y) {
          matvec(*e, x, y);
        };
      };
    } else if (step == "splitting") {
      if (config.operator2_spec.empty())
        throw std::invalid_argument("converge chernoff splitting: missing --op2");
      const OperatorHandle op2 = make_operator(config.operator2_spec);
      family = trotter_family(op, op2);
      target = operator_from_matrix(op.densified() + op2.densified(), "sum");
    } else if (step == "euler2") {
      // F(h) = I + hA + h^2 A^2, the perturbed-Euler family
      Matrix dense = op.densified();
      auto a1 = std::make_shared<Matrix>(dense);
      auto a2 = std::make_shared<Matrix>(multiply(dense, dense));
      family = [a1, a2](double h) -> StepAction {
        auto step_m = std::make_shared<Matrix>(
            Matrix::identity(a1->rows()) + *a1 * cplx{h, 0.0} +
            *a2 * cplx{h * h, 0.0});
        return [step_m](std::span<const cplx> x, std::span<cplx> y) {
          matvec(*step_m, x, y);
        };
      };
    } else {
      throw std::invalid_argument("converge chernoff: unknown family " + step);
    }
    table = converge_table_chernoff(family, target, t_grid, n_seq);
  } else {
    table = converge_table(method, op, t_grid, n_seq);
  }

  write_text(path, table.to_csv());
  std::printf("converge %s order=%s%s -> %s\n", method.c_str(),
              table.exact ? "exact" : format_sci(table.empirical_order()).c_str(),
              table.exact ? " (errors at rounding floor)" : "", path.c_str());
  return 0;
}

int run_check(const RunConfig& config) {
  const std::string name = config.subcommand;
  const std::string path =
      config.output_path.empty() ? "check.json" : config.output_path;

  if (name == "resolvent-identity") {
    const OperatorHandle op = required_operator(config);
    return finish_report(
        check_resolvent_identity(op,
                                 get_cplx(config.params, "lambda", {1.0, 0.0}),
                                 get_cplx(config.params, "mu", {2.0, 0.0})),
        path);
  }
  if (name == "pseudo-resolvent") {
    const OperatorHandle op = required_operator(config);
    std::vector<cplx> lambdas{{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}};
    if (has(config.params, "lambdas"))
      lambdas = parse_list<cplx>(config.params.at("lambdas"), parse_cplx);
    return finish_report(
        check_pseudo_resolvent(pseudo_resolvent_from(op, lambdas)), path);
  }
  if (name == "hille-yosida") {
    const OperatorHandle op = required_operator(config);
    const GrowthEnvelope env = estimate_growth_envelope(
        op, get_double(config.params, "t-max", 10.0), 48);
    std::vector<cplx> grid;
    if (has(config.params, "lambdas")) {
      grid = parse_list<cplx>(config.params.at("lambdas"), parse_cplx);
    } else {
      for (double re : {0.5, 1.0, 2.0, 4.0})
        for (double im : {0.0, 1.0, -2.0})
          grid.emplace_back(env.omega + re, im);
    }
    CheckReport report = check_hille_yosida_bounds(
        op, env, grid, get_size(config.params, "n-max", 6));
    report.info("envelope_M", env.M);
    report.info("envelope_omega", env.omega);
    return finish_report(report, path);
  }
  if (name == "growth-envelope") {
    const OperatorHandle op = required_operator(config);
    const double t_max = get_double(config.params, "t-max", 10.0);
    const GrowthEnvelope env =
        estimate_growth_envelope(op, t_max, get_size(config.params, "grid", 64));
    // certification on a fresh deterministic grid, factor 1.01
    CheckReport report;
    report.name = "growth-envelope";
    const SemigroupOracle oracle(op);
    const auto fresh = probe_vectors(16, 1, 0x454E56)[0];
    double worst = 0.0;
    for (const auto& z : fresh) {
      const double t = 0.5 * (z.real() + 1.0) * t_max;  // fold into [0, t_max]
      if (t < 0.0 || t > t_max) continue;
      const double ratio =
          spectral_norm(oracle.at(t)) / (env.M * std::exp(env.omega * t));
      worst = std::max(worst, ratio);
    }
    report.info("M", env.M);
    report.info("omega", env.omega);
    report.require("fresh_grid_ratio", worst, 1.01);
    return finish_report(report, path);
  }
  if (name == "dissipative") {
    const OperatorHandle op = required_operator(config);
    const auto alphas =
        get_doubles(config.params, "alphas", {0.5, 1.0, 2.0, 4.0});
    return finish_report(
        check_dissipative(op, get_size(config.params, "probes", 100), alphas)
            .to_check_report(),
        path);
  }
  if (name == "lumer-phillips") {
    const OperatorHandle op = required_operator(config);
    return finish_report(
        check_lumer_phillips(
            op, uniform_grid(0.0, get_double(config.params, "t-max", 5.0), 33)),
        path);
  }
  if (name == "contraction") {
    const OperatorHandle op = required_operator(config);
    return finish_report(
        check_contraction_hy(op,
                             get_doubles(config.params, "lambdas",
                                         {0.5, 1.0, 2.0, 4.0}),
                             get_size(config.params, "n-max", 6)),
        path);
  }
  if (name == "sectorial") {
    const OperatorHandle op = required_operator(config);
    SectorReport sector = check_sectorial(
        op, get_doubles(config.params, "etas", {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}),
        get_doubles(config.params, "gammas",
                    {1e-4, 1e-3, 1e-2, 1e-1, 1.0}),
        has(config.params, "t-grid")
            ? get_doubles(config.params, "t-grid", {})
            : log_grid(1e-4, 1.0, 65));
    return finish_report(sector.to_check_report(), path);
  }
  if (name == "differentiable") {
    const OperatorHandle op = required_operator(config);
    return finish_report(
        check_differentiable_identities(op, get_double(config.params, "t", 1.0),
                                        get_size(config.params, "n-max", 3)),
        path);
  }
  if (name == "commuting") {
    const OperatorHandle op = required_operator(config);
    Matrix f;
    if (has(config.params, "f-op")) {
      f = make_operator(config.params.at("f-op")).densified();
    } else {
      // polynomial in A commutes: A^2 + 3A + I
      const Matrix dense = op.densified();
      f = multiply(dense, dense) + dense * cplx{3.0, 0.0} +
          Matrix::identity(op.dim);
    }
    return finish_report(
        check_commuting_bounded(
            op, f,
            uniform_grid(0.0, get_double(config.params, "t-max", 2.0), 17)),
        path);
  }
  if (name == "taylor-remainder") {
    const OperatorHandle op = required_operator(config);
    return finish_report(
        taylor_remainder_check(op, get_double(config.params, "t", 1.0),
                               get_size(config.params, "n", 3),
                               get_size(config.params, "quad", 32)),
        path);
  }
  if (name == "b-lambda") {
    const OperatorHandle op = required_operator(config);
    const BLambdaOperator b =
        b_lambda(op, get_cplx(config.params, "lambda", {1.0, 0.0}),
                 get_double(config.params, "t", 1.0),
                 get_size(config.params, "quad", 48));
    return finish_report(b.report, path);
  }
  if (name == "bridge") {
    const OperatorHandle op = required_operator(config);
    if (config.operator2_spec.empty())
      throw std::invalid_argument("check bridge: missing --op2");
    return finish_report(
        bridge_identity_check(op, make_operator(config.operator2_spec),
                              get_cplx(config.params, "lambda", {1.0, 0.0}),
                              get_double(config.params, "t", 1.0),
                              get_size(config.params, "quad", 48)),
        path);
  }
  if (name == "chernoff-bound") {
    const OperatorHandle op = required_operator(config);
    return finish_report(
        chernoff_lemma_check(op, get_double(config.params, "h", 0.1),
                             get_size(config.params, "n", 8),
                             get_size(config.params, "probes", 50)),
        path);
  }
  throw std::invalid_argument("unknown check: " + name);
}

int run_spectrum_map(const RunConfig& config) {
  const OperatorHandle op = required_operator(config);
  const std::string mode = get(config.params, "mode", "map");
  const std::string path =
      config.output_path.empty() ? "spectrum-map.json" : config.output_path;

  if (mode == "spectrum") {
    const SpectrumReport spec = spectrum(op);
    nlohmann::ordered_json j;
    j["spectral_radius"] = spec.spectral_radius;
    j["spectral_abscissa"] = spec.spectral_abscissa;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& ev : spec.eigenvalues) {
      nlohmann::ordered_json e;
      e["re"] = ev.real();
      e["im"] = ev.imag();
      arr.push_back(e);
    }
    j["eigenvalues"] = arr;
    write_text(path, j.dump(2));
    std::printf("spectrum r=%s -> %s\n",
                format_sci(spec.spectral_radius).c_str(), path.c_str());
    return 0;
  }

  MultisetMatch match;
  if (mode == "map") {
    match = spectral_mapping_check(op, get_double(config.params, "t", 1.0));
  } else if (mode == "derivative") {
    match = derivative_spectral_mapping_check(
        op, get_double(config.params, "t", 1.0),
        get_size(config.params, "n", 1));
  } else if (mode == "resolvent") {
    match = resolvent_spectrum_check(
        op, get_cplx(config.params, "lambda", {1.0, 0.0}));
  } else {
    throw std::invalid_argument("spectrum-map: unknown mode " + mode);
  }
  write_text(path, match.to_json());
  std::printf("spectrum-map %s: %s bottleneck=%s -> %s\n", mode.c_str(),
              match.pass ? "PASS" : "FAIL",
              format_sci(match.max_pair_distance).c_str(), path.c_str());
  return match.pass ? 0 : 2;
}

int run_dunford(const RunConfig& config) {
  const OperatorHandle op = required_operator(config);
  const double t = get_double(config.params, "t", 1.0);
  ContourSpec contour;
  if (has(config.params, "contour")) {
    contour = ContourSpec::parse(config.params.at("contour"));
  } else {
    contour.radius = std::max(1.26 * operator_norm(op).value, 1.0);
    contour.nodes = 64;
  }
  const std::string path = config.output_path.empty()
                               ? "dunford." + config.format
                               : config.output_path;
  const Matrix result = dunford_exp(op, t, contour);
  write_matrix(result, path, config.format);
  std::printf("dunford %s t=%g -> %s\n", contour.to_string().c_str(), t,
              path.c_str());
  return 0;
}

int run_bromwich(const RunConfig& config) {
  const OperatorHandle op = required_operator(config);
  const double t = get_double(config.params, "t", 1.0);

  if (has(config.params, "time-integral")) {
    std::vector<cplx> x(op.dim, cplx{});
    if (has(config.params, "x")) {
      const auto vals = parse_list<cplx>(config.params.at("x"), parse_cplx);
      if (vals.size() != op.dim)
        throw std::invalid_argument("bromwich: --x has wrong length");
      x = vals;
    } else {
      x[0] = 1.0;
    }
    ContourSpec c;
    c.a = 0.5;
    c.y_cut = 100.0;
    c.nodes = 4000;
    if (has(config.params, "contour"))
      c = ContourSpec::parse(config.params.at("contour"));
    const auto result =
        bromwich_time_integral(op, x, t, c.a, c.y_cut, c.nodes);
    nlohmann::ordered_json j;
    std::vector<double> re, im;
    for (const auto& v : result) {
      re.push_back(v.real());
      im.push_back(v.imag());
    }
    j["re"] = re;
    j["im"] = im;
    const std::string path = config.output_path.empty()
                                 ? "bromwich-integral.json"
                                 : config.output_path;
    write_text(path, j.dump(2));
    std::printf("bromwich time-integral t=%g -> %s\n", t, path.c_str());
    return 0;
  }

  const std::string path = config.output_path.empty()
                               ? "bromwich." + config.format
                               : config.output_path;
  Matrix result;
  if (has(config.params, "contour")) {
    const ContourSpec c = ContourSpec::parse(config.params.at("contour"));
    result = bromwich_exp(op, t, c.a, c.y_cut, c.nodes);
  } else {
    const auto auto_result =
        bromwich_exp_auto(op, t, get_double(config.params, "tol", 1e-7));
    result = auto_result.value;
    std::printf("bromwich auto a=%g Y=%g nodes=%zu tail=%s\n", auto_result.a,
                auto_result.y, auto_result.nodes,
                format_sci(auto_result.tail_estimate).c_str());
  }
  write_matrix(result, path, config.format);
  std::printf("bromwich t=%g -> %s\n", t, path.c_str());
  return 0;
}

int run_lab(const RunConfig& config) {
  if (config.subcommand != "trotter-kato")
    throw std::invalid_argument("lab: unknown experiment " + config.subcommand);
  const std::string family_spec = get(config.params, "family", "perturb:p=1");
  const cplx lambda = get_cplx(config.params, "lambda", {1.0, 0.0});
  const double t0 = get_double(config.params, "t0", 1.0);
  const std::string base =
      config.output_path.empty() ? "trotter-kato" : config.output_path;

  const auto colon = family_spec.find(':');
  const std::string family_name = family_spec.substr(0, colon);
  std::map<std::string, std::string> fparams;
  if (colon != std::string::npos) {
    std::istringstream in(family_spec.substr(colon + 1));
    std::string piece;
    while (std::getline(in, piece, ',')) {
      const auto eq = piece.find('=');
      if (eq != std::string::npos)
        fparams[piece.substr(0, eq)] = piece.substr(eq + 1);
    }
  }

  if (family_name == "laplacian-refine") {
    const std::size_t levels =
        fparams.count("levels") ? std::stoull(fparams["levels"]) : 5;
    const RefinementTables tables =
        laplacian_refinement_tables(levels, lambda, t0);
    write_text(base + ".resolvent.csv", tables.resolvent_table.to_csv());
    write_text(base + ".semigroup.csv", tables.semigroup_table.to_csv());
    std::printf("lab laplacian-refine orders: resolvent=%s semigroup=%s\n",
                format_sci(tables.resolvent_table.empirical_order()).c_str(),
                format_sci(tables.semigroup_table.empirical_order()).c_str());
    return 0;
  }

  OperatorHandle a = config.operator_spec.empty()
                         ? op_diag({cplx{-1.0, 0.0}, cplx{-2.0, 0.0}})
                         : make_operator(config.operator_spec);
  GeneratorSequence seq;
  if (family_name == "perturb") {
    const int p = fparams.count("p") ? std::stoi(fparams["p"]) : 1;
    OperatorHandle b;
    if (!config.operator2_spec.empty())
      b = make_operator(config.operator2_spec);
    else if (fparams.count("seed"))
      b = op_random_bounded(a.dim,
                            static_cast<unsigned>(std::stoul(fparams["seed"])),
                            1.0);
    else
      b = a.dim == 2 ? op_rotation2() : op_random_bounded(a.dim, 7, 1.0);
    seq = perturbation_family(a, b, p, {2, 4, 8, 16, 32, 64});
  } else if (family_name == "yosida") {
    seq = yosida_family(a, 3, 8);
  } else if (family_name == "stagnant") {
    seq = stagnant_family(a, 5);
  } else {
    throw std::invalid_argument("lab: unknown family " + family_name);
  }

  TkEquivalenceResult result = check_tk_equivalence(seq, lambda, t0);
  write_text(base + ".resolvent.csv", result.resolvent_table.to_csv());
  write_text(base + ".semigroup.csv", result.semigroup_table.to_csv());
  write_text(base + ".json", result.report.to_json());
  std::printf("lab trotter-kato %s: %s%s\n", family_name.c_str(),
              result.report.pass ? "PASS" : "FAIL",
              result.no_convergence ? " (no-convergence flag)" : "");
  return result.report.pass ? 0 : 2;
}

}  // namespace

int run(const RunConfig& config) {
  if (config.command == "expm") return run_expm(config);
  if (config.command == "resolvent") return run_resolvent(config);
  if (config.command == "converge") return run_converge(config);
  if (config.command == "check") return run_check(config);
  if (config.command == "spectrum-map") return run_spectrum_map(config);
  if (config.command == "dunford") return run_dunford(config);
  if (config.command == "bromwich") return run_bromwich(config);
  if (config.command == "lab") return run_lab(config);
  throw std::invalid_argument("unknown command: " + config.command);
}

}  // namespace sgl
