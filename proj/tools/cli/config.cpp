#include "config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "betalab/error.hpp"

namespace betalab::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw Error(ErrorKind::ParseError,
                "cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

double parse_tolerance(std::string_view text, std::string_view key) {
  const double v = parse_number<double>(trim(text), key);
  if (!(v > 0.0)) {
    throw Error(ErrorKind::ParseError, std::string(key) + " must be positive");
  }
  return v;
}

}  // namespace

AxisSpec parse_axis_spec(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3 && parts.size() != 4) {
    throw Error(ErrorKind::ParseError,
                "grid spec '" + std::string(text) +
                    "' must be min,max,count[,log|linear]");
  }
  AxisSpec spec;
  spec.min = parse_number<double>(parts[0], "grid min");
  spec.max = parse_number<double>(parts[1], "grid max");
  spec.count = parse_number<std::size_t>(parts[2], "grid count");
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      spec.spacing = Spacing::Log;
    } else if (parts[3] == "linear") {
      spec.spacing = Spacing::Linear;
    } else {
      throw Error(ErrorKind::ParseError,
                  "grid spacing must be 'log' or 'linear', got '" +
                      std::string(parts[3]) + "'");
    }
  }
  if (!(spec.min > 0.0) || !(spec.min < spec.max) || spec.count < 3) {
    throw Error(ErrorKind::ParseError,
                "grid spec '" + std::string(text) +
                    "' needs 0 < min < max and count >= 3");
  }
  return spec;
}

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  throw Error(ErrorKind::ParseError,
              "format must be 'text' or 'json', got '" + std::string(text) + "'");
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::ParseError,
                  "config line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    try {
      if (key == "grid") {
        cfg.x = cfg.y = cfg.t = parse_axis_spec(value);
      } else if (key == "grid.x") {
        cfg.x = parse_axis_spec(value);
      } else if (key == "grid.y") {
        cfg.y = parse_axis_spec(value);
      } else if (key == "grid.t") {
        cfg.t = parse_axis_spec(value);
      } else if (key == "identity_tol") {
        cfg.tol.identity = parse_tolerance(value, key);
      } else if (key == "classify_tol") {
        cfg.tol.classify = parse_tolerance(value, key);
      } else if (key == "format") {
        cfg.format = parse_format(value);
      } else {
        throw Error(ErrorKind::ParseError, "unknown key '" + std::string(key) + "'");
      }
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError,
                  "config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open config '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(cfg, buffer.str());
}

RunConfig default_config() {
  RunConfig cfg;
  if (const char* env = std::getenv("BETALAB_GRID"); env && *env) {
    try {
      cfg.x = cfg.y = cfg.t = parse_axis_spec(env);
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, std::string("BETALAB_GRID: ") + e.what());
    }
  }
  return cfg;
}

}  // namespace betalab::cli
