#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "pcore/graph.hpp"

namespace pcore {

inline constexpr double kDefaultTau1 = 5.0;
inline constexpr int kDefaultTau2 = 10;
inline constexpr double kStage1Percentile = 0.75;
inline constexpr double kStage2Percentile = 0.80;

// A fit is accepted when it lowers the single-line SSE by at least this
// fraction.
inline constexpr double kMinSseImprovement = 0.01;
// Candidates within this fraction of the best SSE count as ties; the largest
// rank among them wins.
inline constexpr double kSseTieWindow = 0.001;

// Nearest-rank percentile: the ceil(q n)-th smallest value. Throws Error on an
// empty input or q outside (0,1).
double percentile(std::vector<double> values, double q);

struct BreakpointFit {
  std::size_t breakpoint_rank = 0;  // 1-based rank in the sorted sample
  double threshold_value = 0.0;     // sample value at that rank
  double sse_single = 0.0;
  double sse_segmented = 0.0;
  double slope_left = 0.0;          // per rank, log scale
  double slope_right = 0.0;
  bool accepted = false;
};

// Sorts the sample and regresses log(value) on rank with a continuous
// two-piece linear model, scanning the hinge over ranks 2..n-2. Throws Error
// for fewer than 10 values or non-positive values.
BreakpointFit segmented_breakpoint(std::vector<double> values);

struct ThresholdSuggestion {
  double value = 0.0;
  double percentile = 0.0;        // of the full sample
  std::optional<BreakpointFit> fit;  // present when the percentile rule did not bind
  bool from_fit = false;
};

// Percentile rule on the expected degrees, falling back to a breakpoint fit.
// Zero values (isolated vertices) are left out of the fit.
ThresholdSuggestion suggest_stage1_from_sums(const std::vector<double>& expected_degrees);
ThresholdSuggestion suggest_stage2_from_bounds(const std::vector<int>& bounds);

double suggest_stage1(const ProbabilisticGraph& g);
int suggest_stage2(const ProbabilisticGraph& g, double eta);

// Per-vertex sum of incident probabilities.
std::vector<double> expected_degrees(const ProbabilisticGraph& g);
// Normal-approximation eta-degree estimates with every vertex treated as a
// stage-1 survivor.
std::vector<int> initial_bounds_full_graph(const ProbabilisticGraph& g, double eta);

void write_suggestion(std::ostream& out, const char* prefix, const ThresholdSuggestion& s);

}  // namespace pcore
