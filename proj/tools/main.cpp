#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgl/cli.hpp"

namespace {

// flags every subcommand forwards into RunConfig.params
struct CommonOpts {
  std::string op, op2, output, format = "json";
  long seed = 42;
  std::vector<std::pair<std::string, std::string>> extra;
};

void add_param_option(CLI::App* cmd, sgl::RunConfig* config,
                      const std::string& flag, const std::string& key,
                      const std::string& help) {
  auto setter = [config, key](const std::string& value) {
    config->params[key] = value;
  };
  cmd->add_option_function<std::string>(flag, setter, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for operator semigroups"};
  app.require_subcommand(1);

  sgl::RunConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--op", config.operator_spec,
                    "operator spec or matrix file");
    cmd->add_option("--op2", config.operator2_spec, "second operator spec");
    cmd->add_option("--output", config.output_path, "artifact path");
    cmd->add_option("--format", config.format, "csv or json (matrices)");
    cmd->add_option("--seed", config.seed, "probe seed (default 42)");
    add_param_option(cmd, &config, "--t", "t", "time or comma list");
    add_param_option(cmd, &config, "--lambda", "lambda", "complex shift");
    add_param_option(cmd, &config, "--mu", "mu", "second complex shift");
    add_param_option(cmd, &config, "--n", "n", "product count or comma list");
    add_param_option(cmd, &config, "--n-max", "n-max", "max power");
    add_param_option(cmd, &config, "--tol", "tol", "tolerance");
    add_param_option(cmd, &config, "--method", "method", "method id");
    add_param_option(cmd, &config, "--contour", "contour",
                     "circle:r=..,n=.. or line:a=..,Y=..,n=..");
    add_param_option(cmd, &config, "--quad", "quad", "quadrature nodes");
    add_param_option(cmd, &config, "--probes", "probes", "probe count");
    add_param_option(cmd, &config, "--alphas", "alphas", "alpha grid");
    add_param_option(cmd, &config, "--lambdas", "lambdas", "shift grid");
    add_param_option(cmd, &config, "--etas", "etas", "eta grid");
    add_param_option(cmd, &config, "--gammas", "gammas", "gamma grid");
    add_param_option(cmd, &config, "--t-max", "t-max", "grid endpoint");
    add_param_option(cmd, &config, "--t0", "t0", "compact interval endpoint");
    add_param_option(cmd, &config, "--grid", "grid", "grid size");
    add_param_option(cmd, &config, "--mode", "mode",
                     "spectrum-map mode: map|derivative|resolvent|spectrum");
    add_param_option(cmd, &config, "--family", "family",
                     "lab family: perturb:p=1|yosida|laplacian-refine:levels=5");
    add_param_option(cmd, &config, "--h", "h", "step for chernoff bound");
    add_param_option(cmd, &config, "--x", "x", "probe vector, comma list");
    add_param_option(cmd, &config, "--ylambda", "ylambda", "yosida shift");
    add_param_option(cmd, &config, "--chernoff-f", "chernoff-f",
                     "chernoff family: backward-euler|exp|splitting|euler2");
    add_param_option(cmd, &config, "--f-op", "f-op", "commuting check operand");
    cmd->add_flag_callback("--time-integral", [&config]() {
      config.params["time-integral"] = "1";
    });
    cmd->add_flag_callback("--auto", [&config]() {
      config.params["auto"] = "1";
    });
  };

  for (const char* name : {"expm", "resolvent", "converge", "spectrum-map",
                           "dunford", "bromwich"}) {
    auto* cmd = app.add_subcommand(name);
    add_common(cmd);
    cmd->callback([&config, name]() { config.command = name; });
  }
  {
    auto* cmd = app.add_subcommand("check", "identity / theorem checks");
    cmd->add_option("name", config.subcommand, "check name")->required();
    add_common(cmd);
    cmd->callback([&config]() { config.command = "check"; });
  }
  {
    auto* cmd = app.add_subcommand("lab", "convergence experiments");
    cmd->add_option("experiment", config.subcommand, "experiment name")
        ->required();
    add_common(cmd);
    cmd->callback([&config]() { config.command = "lab"; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return sgl::run(config);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
