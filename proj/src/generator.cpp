#include "betalab/generator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "betalab/error.hpp"
#include "betalab/special.hpp"

namespace betalab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_domain(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << "generator argument must be a finite positive real, got " << x;
    throw Error(ErrorKind::NonPositiveInput, os.str());
  }
}

void validate_canonical(double b, double p, double a) {
  if (!(b > 0.0) || !std::isfinite(b) || !(a > 0.0) || !std::isfinite(a) ||
      !std::isfinite(p)) {
    std::ostringstream os;
    os << "canonical generator needs b > 0, a > 0 and finite p; got b=" << b
       << " p=" << p << " a=" << a;
    throw Error(ErrorKind::InvalidGenerator, os.str());
  }
}

double canonical_log(double b, double p, double a, double x) {
  return (std::log(b) + p * std::log(x)) + std::log(a) * x;
}

const Sample& find_sample(const std::vector<Sample>& samples, double x) {
  const auto it = std::lower_bound(
      samples.begin(), samples.end(), x,
      [](const Sample& s, double v) { return s.x < v; });
  if (it == samples.end() || it->x != x) {
    std::ostringstream os;
    os.precision(17);
    os << "x=" << x
       << " is not a tabulated abscissa (sampled generators do not "
          "interpolate)";
    throw Error(ErrorKind::SampleMiss, os.str());
  }
  return *it;
}

double sampled_log(const std::vector<Sample>& samples, double x) {
  return std::log(find_sample(samples, x).fx);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end && !text.empty();
}

}  // namespace

Generator Generator::canonical(double b, double p, double a) {
  validate_canonical(b, p, a);
  return Generator{Canonical{b, p, a}};
}

Generator Generator::gamma() { return Generator{Gamma{}}; }

Generator Generator::harmonic(double a) {
  validate_canonical(2.0, 1.0, a);
  return Generator{Harmonic{a}};
}

Generator Generator::sampled(std::vector<Sample> samples) {
  for (const auto& s : samples) {
    if (!(s.x > 0.0) || !std::isfinite(s.x)) {
      std::ostringstream os;
      os << "sample abscissa must be positive, got x=" << s.x;
      throw Error(ErrorKind::NonPositiveInput, os.str());
    }
    if (!(s.fx > 0.0) || !std::isfinite(s.fx)) {
      std::ostringstream os;
      os << "sample value must be positive, got f(" << s.x << ")=" << s.fx;
      throw Error(ErrorKind::NonPositiveSample, os.str());
    }
  }
  std::sort(samples.begin(), samples.end(),
            [](const Sample& l, const Sample& r) { return l.x < r.x; });
  const auto dup = std::adjacent_find(
      samples.begin(), samples.end(),
      [](const Sample& l, const Sample& r) { return l.x == r.x; });
  if (dup != samples.end()) {
    std::ostringstream os;
    os << "duplicate abscissa x=" << dup->x;
    throw Error(ErrorKind::InvalidGenerator, os.str());
  }
  if (samples.size() < 3) {
    throw Error(ErrorKind::RankDeficient,
                "sampled generator needs at least 3 distinct abscissae, got " +
                    std::to_string(samples.size()));
  }
  return Generator{Sampled{std::move(samples)}};
}

Generator Generator::from_log(RealFunction log_f) {
  if (!log_f.fn) {
    throw Error(ErrorKind::InvalidGenerator, "callable generator is empty");
  }
  return Generator{Callable{std::move(log_f)}};
}

bool Generator::is_sampled() const noexcept {
  return std::holds_alternative<Sampled>(v_);
}

std::span<const Sample> Generator::samples() const {
  if (const auto* s = std::get_if<Sampled>(&v_)) return s->samples;
  return {};
}

std::optional<CanonicalParams> Generator::canonical_params() const noexcept {
  if (const auto* c = std::get_if<Canonical>(&v_)) {
    return CanonicalParams{c->b, c->p, c->a};
  }
  if (const auto* h = std::get_if<Harmonic>(&v_)) {
    return CanonicalParams{2.0, 1.0, h->a};
  }
  return std::nullopt;
}

double Generator::log_eval(double x) const {
  require_domain(x);
  return std::visit(
      Overloaded{
          [x](const Canonical& c) { return canonical_log(c.b, c.p, c.a, x); },
          [x](const Gamma&) { return special::log_gamma(x); },
          [x](const Harmonic& h) { return canonical_log(2.0, 1.0, h.a, x); },
          [x](const Sampled& s) { return sampled_log(s.samples, x); },
          [x](const Callable& c) { return c.log_f(x); },
      },
      v_);
}

double Generator::eval(double x) const {
  if (const auto* s = std::get_if<Sampled>(&v_)) {
    require_domain(x);
    return find_sample(s->samples, x).fx;
  }
  const double lf = log_eval(x);
  const double value = std::exp(lf);
  if (!std::isfinite(value) || value == 0.0) {
    std::ostringstream os;
    os << "f(" << x << ") = exp(" << lf
       << ") is outside double range; use the log-domain evaluation";
    throw Error(ErrorKind::Overflow, os.str());
  }
  return value;
}

std::string Generator::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const Canonical& c) {
                   os << "canonical(b=" << c.b << ", p=" << c.p
                      << ", a=" << c.a << ")";
                 },
                 [&](const Gamma&) { os << "gamma"; },
                 [&](const Harmonic& h) { os << "harmonic(a=" << h.a << ")"; },
                 [&](const Sampled& s) {
                   os << "sampled(" << s.samples.size() << " points)";
                 },
                 [&](const Callable& c) { os << "exp(" << c.log_f.name << ")"; },
             },
             v_);
  return os.str();
}

double eval_generator(const Generator& f, double x) { return f.eval(x); }

RealFunction LogGenerator::as_function() const {
  return RealFunction{"log(" + f_.describe() + ")",
                      [f = f_](double x) { return f.log_eval(x); }};
}

std::vector<Sample> parse_samples_csv(std::istream& in) {
  std::vector<Sample> out;
  std::string line;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos ||
        row.find(',', comma + 1) != std::string_view::npos) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) +
                      ": expected exactly two comma-separated columns");
    }
    const auto lhs = trim(row.substr(0, comma));
    const auto rhs = trim(row.substr(comma + 1));
    if (first_content && lhs == "x" && rhs == "fx") {
      first_content = false;
      continue;
    }
    first_content = false;
    Sample s{};
    if (!parse_double(lhs, s.x)) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ", column 1: cannot parse '" +
                      std::string(lhs) + "' as a number");
    }
    if (!parse_double(rhs, s.fx)) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ", column 2: cannot parse '" +
                      std::string(rhs) + "' as a number");
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Sample> load_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  return parse_samples_csv(in);
}

}  // namespace betalab
