#include "spec.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "betalab/cauchy.hpp"
#include "betalab/error.hpp"
#include "betalab/special.hpp"

namespace betalab::cli {
namespace {

[[noreturn]] void fail(std::string_view spec, std::size_t pos, const std::string& msg) {
  std::ostringstream os;
  os << "spec '" << spec << "', position " << pos << ": " << msg;
  throw Error(ErrorKind::ParseError, os.str());
}

struct Head {
  std::string_view name;
  std::string_view args;
  std::size_t args_pos = 0;
  bool has_args = false;
};

Head split_head(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return Head{spec, {}, spec.size(), false};
  return Head{spec.substr(0, colon), spec.substr(colon + 1), colon + 1, true};
}

std::vector<double> parse_numbers(std::string_view spec, const Head& head,
                                  std::size_t expected) {
  std::vector<double> out;
  std::size_t pos = 0;
  const auto args = head.args;
  while (true) {
    const auto comma = args.find(',', pos);
    const auto field = args.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                        : comma - pos);
    double value = 0.0;
    const auto* begin = field.data();
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
      fail(spec, head.args_pos + pos + static_cast<std::size_t>(ptr - begin),
           "expected a number");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.size() != expected) {
    fail(spec, head.args_pos,
         "expected " + std::to_string(expected) + " comma-separated numbers, got " +
             std::to_string(out.size()));
  }
  return out;
}

void no_args(std::string_view spec, const Head& head) {
  if (head.has_args) fail(spec, head.args_pos, "'" + std::string(head.name) + "' takes no arguments");
}

std::string require_path(std::string_view spec, const Head& head) {
  if (head.args.empty()) fail(spec, head.args_pos, "expected a file path");
  return std::string(head.args);
}

}  // namespace

Generator parse_generator_spec(std::string_view spec) {
  const auto head = split_head(spec);
  if (head.name == "canonical") {
    const auto v = parse_numbers(spec, head, 3);
    return Generator::canonical(v[0], v[1], v[2]);
  }
  if (head.name == "gamma") {
    no_args(spec, head);
    return Generator::gamma();
  }
  if (head.name == "harmonic") {
    const auto v = parse_numbers(spec, head, 1);
    return Generator::harmonic(v[0]);
  }
  if (head.name == "file") {
    return Generator::sampled(load_samples_csv(require_path(spec, head)));
  }
  fail(spec, 0, "unknown generator '" + std::string(head.name) +
                    "' (expected canonical, gamma, harmonic or file)");
}

RealFunction parse_function_spec(std::string_view spec) {
  const auto head = split_head(spec);
  if (head.name == "affine-log") {
    const auto v = parse_numbers(spec, head, 3);
    auto form = cauchy_closed_form(v[0], v[1], v[2]);
    form.g.name = std::string(spec);
    return form.g;
  }
  if (head.name == "klog") {
    const double k = parse_numbers(spec, head, 1)[0];
    return RealFunction{std::string(spec), [k](double x) { return k * std::log(x); }};
  }
  if (head.name == "file") {
    const auto samples = load_samples_csv(require_path(spec, head));
    auto table = std::make_shared<std::map<double, double>>();
    for (const auto& s : samples) {
      if (!table->emplace(s.x, s.fx).second) {
        throw Error(ErrorKind::ParseError, "duplicate abscissa in " + std::string(head.args));
      }
    }
    return RealFunction{std::string(spec), [table](double x) {
                          const auto it = table->find(x);
                          if (it == table->end()) {
                            std::ostringstream os;
                            os.precision(17);
                            os << "x=" << x << " is not tabulated";
                            throw Error(ErrorKind::SampleMiss, os.str());
                          }
                          return it->second;
                        }};
  }
  no_args(spec, head);
  if (head.name == "log") return RealFunction{"log", [](double x) { return std::log(x); }};
  if (head.name == "identity") return RealFunction{"identity", [](double x) { return x; }};
  if (head.name == "square") return RealFunction{"square", [](double x) { return x * x; }};
  if (head.name == "exp") return RealFunction{"exp", [](double x) { return std::exp(x); }};
  if (head.name == "lgamma") {
    return RealFunction{"lgamma", [](double x) { return special::log_gamma(x); }};
  }
  fail(spec, 0, "unknown function '" + std::string(head.name) + "'");
}

}  // namespace betalab::cli
