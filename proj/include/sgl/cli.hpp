#pragma once
#include <map>
#include <string>

namespace sgl {

// One CLI invocation. Exit codes: 0 success / check passed, 2 check ran and
// failed, 1 usage error (thrown as std::invalid_argument by run()).
struct RunConfig {
  std::string command;     // expm resolvent converge check spectrum-map bromwich dunford lab
  std::string subcommand;  // check name or lab experiment
  std::string operator_spec;
  std::string operator2_spec;
  std::map<std::string, std::string> params;
  std::string output_path;  // default chosen per command
  std::string format = "json";
  long seed = 42;
};

int run(const RunConfig& config);

}  // namespace sgl
