#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "config.hpp"

namespace betalab::cli {

/// Process exit codes.
enum ExitCode : int {
  kCertified = 0,
  kRefuted = 1,
  kInputError = 2,
};

struct EvalArgs {
  std::string generator;
  double x = 0.0;
  double y = 0.0;
};

struct CheckArgs {
  std::string generator;
  std::string degree = "auto";  // number or "auto"
};

struct DualityArgs {
  std::string function;
  double p = 0.0;
  bool heuvers = false;
};

int cmd_eval(const EvalArgs& args, const RunConfig& cfg, std::ostream& out);
int cmd_fit(const std::string& path, const RunConfig& cfg, std::ostream& out);
int cmd_check(const CheckArgs& args, const RunConfig& cfg, std::ostream& out);
int cmd_classify(const std::string& generator, const RunConfig& cfg, std::ostream& out);
int cmd_duality(const DualityArgs& args, const RunConfig& cfg, std::ostream& out);

/// Runs `body`, mapping library errors to kInputError with a message on err.
template <class Body>
int guarded(std::ostream& err, Body&& body);

}  // namespace betalab::cli

#include "commands_inl.hpp"
