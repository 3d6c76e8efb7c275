#include "betalab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "betalab/error.hpp"

namespace betalab {
namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
  for (double v : axis) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      std::ostringstream os;
      os << "grid axis " << name << " has non-positive entry " << v;
      throw Error(ErrorKind::InvalidGrid, os.str());
    }
  }
  const std::set<double> distinct(axis.begin(), axis.end());
  if (distinct.size() < 3) {
    std::ostringstream os;
    os << "grid axis " << name << " needs at least 3 distinct values, has "
       << distinct.size();
    throw Error(ErrorKind::InvalidGrid, os.str());
  }
}

}  // namespace

std::vector<double> make_axis(const AxisSpec& spec) {
  if (!(spec.min > 0.0) || !(spec.max > spec.min) || !std::isfinite(spec.max) ||
      spec.count < 3) {
    std::ostringstream os;
    os << "axis spec needs 0 < min < max and count >= 3; got min=" << spec.min
       << " max=" << spec.max << " count=" << spec.count;
    throw Error(ErrorKind::InvalidGrid, os.str());
  }
  std::vector<double> axis(spec.count);
  const double last = static_cast<double>(spec.count - 1);
  if (spec.spacing == Spacing::Log) {
    const double lo = std::log(spec.min);
    const double hi = std::log(spec.max);
    for (std::size_t i = 0; i < spec.count; ++i) {
      axis[i] = std::exp(lo + (hi - lo) * (static_cast<double>(i) / last));
    }
  } else {
    for (std::size_t i = 0; i < spec.count; ++i) {
      axis[i] = spec.min + (spec.max - spec.min) * (static_cast<double>(i) / last);
    }
  }
  // pin the endpoints exactly
  axis.front() = spec.min;
  axis.back() = spec.max;
  return axis;
}

AnalysisGrid AnalysisGrid::make(std::vector<double> xs, std::vector<double> ys,
                                std::vector<double> ts) {
  check_axis(xs, "x");
  check_axis(ys, "y");
  check_axis(ts, "t");
  if (std::all_of(ts.begin(), ts.end(), [](double t) { return t == 1.0; })) {
    throw Error(ErrorKind::InvalidGrid, "grid axis t needs some t != 1");
  }
  return AnalysisGrid(std::move(xs), std::move(ys), std::move(ts));
}

AnalysisGrid AnalysisGrid::from_specs(const AxisSpec& x, const AxisSpec& y,
                                      const AxisSpec& t) {
  return make(make_axis(x), make_axis(y), make_axis(t));
}

AnalysisGrid AnalysisGrid::default_grid() {
  const AxisSpec spec{};
  return from_specs(spec, spec, spec);
}

std::vector<Pair> AnalysisGrid::pairs() const {
  std::vector<Pair> out;
  out.reserve(xs_.size() * ys_.size());
  for (double x : xs_) {
    for (double y : ys_) out.emplace_back(x, y);
  }
  return out;
}

}  // namespace betalab
