#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"
#include "config.hpp"

namespace {

constexpr const char* kGrammar = R"(Generator specs (--gen):
  canonical:b,p,a   f(x) = b * x^p * a^x   (b > 0, a > 0)
  gamma             f = Euler Gamma
  harmonic:a        f(x) = 2x * a^x
  file:<path.csv>   tabulated x,fx samples (no interpolation)
Function specs (--g):
  affine-log:c,d,p  g(x) = c*x + d - p*log(x)
  log | klog:k | identity | square | exp | lgamma | file:<path.csv>
Exit codes: 0 property certified, 1 property refuted, 2 input error.
Environment: BETALAB_GRID=min,max,count[,log|linear] sets the default grid.)";

}  // namespace

int main(int argc, char** argv) {
  using namespace betalab::cli;

  CLI::App app{"betalab: beta-type functions B_f(x,y) = f(x)f(y)/f(x+y)"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string grid_spec;
  std::optional<double> identity_tol;
  std::optional<double> classify_tol;
  std::string format;
  app.add_option("--config", config_path, "key=value config file")->check(CLI::ExistingFile);
  app.add_option("--grid", grid_spec, "grid for all axes: min,max,count[,log|linear]");
  app.add_option("--identity-tol", identity_tol, "tolerance for identity checks (1e-9)")
      ->check(CLI::PositiveNumber);
  app.add_option("--classify-tol", classify_tol, "tolerance for harmonic classification (1e-6)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate B_f(x, y)");
  eval->add_option("--gen", eval_args.generator, "generator spec")->required();
  eval->add_option("--x", eval_args.x, "first argument")->required();
  eval->add_option("--y", eval_args.y, "second argument")->required();

  std::string fit_path;
  auto* fit = app.add_subcommand("fit", "fit b * x^p * a^x to a sample CSV");
  fit->add_option("input", fit_path, "CSV with columns x,fx")->required();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "measure the p-homogeneity defect");
  check->add_option("--gen", check_args.generator, "generator spec")->required();
  check->add_option("--p", check_args.degree, "degree to test, or 'auto'");

  std::string classify_gen;
  auto* classify = app.add_subcommand("classify", "classify B_f against the harmonic mean");
  classify->add_option("--gen", classify_gen, "generator spec")->required();

  DualityArgs duality_args;
  auto* duality = app.add_subcommand("duality", "Cauchy-difference / beta-type duality checks");
  duality->add_option("--g", duality_args.function, "function spec")->required();
  duality->add_option("--p", duality_args.p, "degree of the Cauchy-side law");
  duality->add_flag("--heuvers", duality_args.heuvers,
                    "check C_f(x,y) = f(1/x + 1/y) and f(xy) = f(x) + f(y)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  return guarded(std::cerr, [&]() -> int {
    RunConfig cfg = default_config();
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (!grid_spec.empty()) cfg.x = cfg.y = cfg.t = parse_axis_spec(grid_spec);
    if (identity_tol) cfg.tol.identity = *identity_tol;
    if (classify_tol) cfg.tol.classify = *classify_tol;
    if (!format.empty()) cfg.format = parse_format(format);

    if (*eval) return cmd_eval(eval_args, cfg, std::cout);
    if (*fit) return cmd_fit(fit_path, cfg, std::cout);
    if (*check) return cmd_check(check_args, cfg, std::cout);
    if (*classify) return cmd_classify(classify_gen, cfg, std::cout);
    return cmd_duality(duality_args, cfg, std::cout);
  });
}
