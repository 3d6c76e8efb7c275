#pragma once

#include <cstddef>
#include <vector>

#include "betalab/function.hpp"

namespace betalab {

enum class Spacing { Log, Linear };

struct AxisSpec {
  double min = 0.1;
  double max = 10.0;
  std::size_t count = 16;
  Spacing spacing = Spacing::Log;
};

std::vector<double> make_axis(const AxisSpec& spec);

/// Evaluation lattice of (x, y, t) triples. All entries positive, at least 3
/// distinct values per axis, at least one t ≠ 1.
class AnalysisGrid {
 public:
  static AnalysisGrid make(std::vector<double> xs, std::vector<double> ys,
                           std::vector<double> ts);
  static AnalysisGrid from_specs(const AxisSpec& x, const AxisSpec& y,
                                 const AxisSpec& t);
  /// 16 log-spaced points per axis on [0.1, 10].
  static AnalysisGrid default_grid();

  const std::vector<double>& xs() const noexcept { return xs_; }
  const std::vector<double>& ys() const noexcept { return ys_; }
  const std::vector<double>& ts() const noexcept { return ts_; }

  std::size_t triple_count() const noexcept {
    return xs_.size() * ys_.size() * ts_.size();
  }
  /// xs × ys in row-major order (x outer).
  std::vector<Pair> pairs() const;

 private:
  AnalysisGrid(std::vector<double> xs, std::vector<double> ys,
               std::vector<double> ts)
      : xs_(std::move(xs)), ys_(std::move(ys)), ts_(std::move(ts)) {}

  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<double> ts_;
};

}  // namespace betalab
