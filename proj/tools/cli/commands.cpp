#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string_view>
#include <system_error>

#include "betalab/beta_type.hpp"
#include "betalab/cauchy.hpp"
#include "betalab/error.hpp"
#include "betalab/homogeneity.hpp"
#include "betalab/means.hpp"
#include "betalab/report_json.hpp"
#include "spec.hpp"

namespace betalab::cli {
namespace {

// Shortest round-trip representation.
std::string num(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("?");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

void text_triple(std::ostream& out, const Triple& t) {
  out << "(" << num(t.x) << ", " << num(t.y) << ", " << num(t.t) << ")";
}

}  // namespace

int cmd_eval(const EvalArgs& args, const RunConfig& cfg, std::ostream& out) {
  const auto f = parse_generator_spec(args.generator);
  const double value = eval_beta_type(f, args.x, args.y);
  std::optional<double> closed;
  if (const auto params = f.canonical_params()) {
    closed = canonical_beta_value(params->b, params->p, args.x, args.y);
  }
  if (cfg.format == Format::Json) {
    nlohmann::json j = {{"generator", f.describe()},
                        {"x", args.x},
                        {"y", args.y},
                        {"value", value}};
    if (closed) j["closed_form"] = *closed;
    emit_json(out, j);
  } else {
    out << "B_f(" << num(args.x) << ", " << num(args.y) << ") = " << num(value) << '\n';
    if (closed) out << "b(xy/(x+y))^p     = " << num(*closed) << '\n';
  }
  return kCertified;
}

int cmd_fit(const std::string& path, const RunConfig& cfg, std::ostream& out) {
  const auto f = Generator::sampled(load_samples_csv(path));
  const auto report = fit_generator(f);
  const bool canonical = report.residual_rms <= cfg.tol.identity;
  if (cfg.format == Format::Json) {
    auto j = to_json(report);
    j["canonical"] = canonical;
    emit_json(out, j);
  } else {
    out << "b = " << num(report.b_hat) << "\np = " << num(report.p_hat)
        << "\na = " << num(report.a_hat) << "\nresidual_rms = " << num(report.residual_rms)
        << "\nresidual_max = " << num(report.residual_max)
        << "\ncondition = " << num(report.condition_estimate)
        << "\ncanonical form: " << yes_no(canonical) << '\n';
    if (!canonical) {
      out << "per-point log residuals:\n";
      for (const auto& [x, r] : report.per_point) out << "  " << num(x) << "  " << num(r) << '\n';
    }
  }
  return canonical ? kCertified : kRefuted;
}

int cmd_check(const CheckArgs& args, const RunConfig& cfg, std::ostream& out) {
  const auto f = parse_generator_spec(args.generator);
  const auto grid = cfg.grid();
  const HomogeneityProbe probe(f, grid);
  std::optional<DegreeEstimate> estimate;
  double p = 0.0;
  if (args.degree == "auto") {
    estimate = probe.estimate_degree();
    p = estimate->p_hat;
  } else {
    const std::string_view text = args.degree;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
      throw Error(ErrorKind::ParseError,
                  "--p expects a number or 'auto', got '" + args.degree + "'");
    }
  }
  const auto report = probe.defect(p);
  const bool holds = report.max_defect <= cfg.tol.identity;
  if (cfg.format == Format::Json) {
    auto j = to_json(report);
    if (estimate) j["estimate"] = to_json(*estimate);
    j["homogeneous"] = holds;
    emit_json(out, j);
  } else {
    if (estimate) {
      out << "estimated degree p_hat = " << num(estimate->p_hat)
          << " (rms residual " << num(estimate->residual) << ")\n";
    }
    out << "p tested = " << num(report.p_tested) << "\nmax defect = " << num(report.max_defect)
        << "\nmean defect = " << num(report.mean_defect) << "\nworst triple (x, y, t) = ";
    text_triple(out, report.argmax);
    out << "\n" << (holds ? "homogeneous" : "not homogeneous") << " of degree "
        << num(report.p_tested) << " on the grid\n";
  }
  return holds ? kCertified : kRefuted;
}

int cmd_classify(const std::string& generator, const RunConfig& cfg, std::ostream& out) {
  const auto f = parse_generator_spec(generator);
  const auto c = classify_beta_type(f, cfg.grid(), cfg.tol);
  if (cfg.format == Format::Json) {
    emit_json(out, to_json(c));
  } else {
    out << "degree = " << num(c.degree_estimate) << " (residual " << num(c.degree_residual)
        << ")\nhomogeneous: " << yes_no(c.is_homogeneous)
        << "\nreflexive: " << yes_no(c.is_reflexive) << "\npre-mean: " << yes_no(c.is_pre_mean)
        << "\nmean: " << yes_no(c.is_mean) << "\nharmonic: " << yes_no(c.is_harmonic) << '\n';
    if (c.canonical_params) {
      out << "params: b = " << num(c.canonical_params->b) << ", p = "
          << num(c.canonical_params->p) << ", a = " << num(c.canonical_params->a) << '\n';
    }
    for (const auto& note : c.notes) out << "note: " << note << '\n';
  }
  return c.is_harmonic ? kCertified : kRefuted;
}

int cmd_duality(const DualityArgs& args, const RunConfig& cfg, std::ostream& out) {
  const auto g = parse_function_spec(args.function);
  const auto grid = cfg.grid();
  if (args.heuvers) {
    const auto pairs = grid.pairs();
    const auto heuvers = heuvers_residual(g, pairs);
    const auto logarithmic = logarithmic_check(g, pairs);
    const bool h_ok = heuvers.max_residual <= cfg.tol.identity;
    const bool l_ok = logarithmic.max_residual <= cfg.tol.identity;
    if (cfg.format == Format::Json) {
      emit_json(out, {{"function", g.name},
                      {"heuvers", to_json(heuvers)},
                      {"logarithmic", to_json(logarithmic)},
                      {"heuvers_holds", h_ok},
                      {"logarithmic_holds", l_ok}});
    } else {
      out << "function: " << g.name << "\nheuvers residual |C_f(x,y) - f(1/x+1/y)| = "
          << num(heuvers.max_residual) << " at (" << num(heuvers.witness.first) << ", "
          << num(heuvers.witness.second) << ")\nlogarithmic residual |f(xy) - f(x) - f(y)| = "
          << num(logarithmic.max_residual) << " at (" << num(logarithmic.witness.first)
          << ", " << num(logarithmic.witness.second) << ")\n";
    }
    return h_ok && l_ok ? kCertified : kRefuted;
  }
  const auto report = duality_bridge(g, args.p, grid, cfg.tol.identity);
  if (cfg.format == Format::Json) {
    auto j = to_json(report);
    j["function"] = g.name;
    emit_json(out, j);
  } else {
    out << "function: " << g.name << "\nCauchy side: max |C_g(tx,ty) - C_g(x,y) - p log t| = "
        << num(report.cauchy_defect) << " at p = " << num(report.p)
        << "\nbeta side:   max |B(tx,ty) / (t^q B(x,y)) - 1| = " << num(report.beta_defect)
        << " at q = " << num(0.0 - report.p) << " (log units " << num(report.beta_log_defect)
        << ")\nsides agree: " << yes_no(report.agree) << '\n';
  }
  return report.cauchy_holds && report.beta_holds ? kCertified : kRefuted;
}

}  // namespace betalab::cli
