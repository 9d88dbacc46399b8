#include "pcore/thresholds.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "pcore/report_io.hpp"
#include "pcore/screening.hpp"

namespace pcore {

double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw Error("percentile of an empty sample");
  if (!(q > 0.0 && q < 1.0)) throw Error("percentile level must lie in (0,1)");
  const std::size_t n = values.size();
  // The small slack keeps exact products such as 0.8 * 5 from rounding up.
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n) - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, n);
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(rank - 1),
                   values.end());
  return values[rank - 1];
}

namespace {

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double hinge = 0.0;
};

double direct_sse(const std::vector<double>& y, const std::vector<double>& x, const LineFit& f,
                  double knot) {
  double sse = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double fit = f.intercept + f.slope * x[i] + f.hinge * std::max(0.0, x[i] - knot);
    sse += (y[i] - fit) * (y[i] - fit);
  }
  return sse;
}

}  // namespace

BreakpointFit segmented_breakpoint(std::vector<double> values) {
  const std::size_t n = values.size();
  if (n < 10) throw Error("segmented regression needs at least 10 values");
  for (double v : values)
    if (!(v > 0.0)) throw Error("segmented regression needs positive values");
  std::sort(values.begin(), values.end());

  // x = rank / n keeps the normal equations well scaled; y is centred.
  const double scale = static_cast<double>(n);
  std::vector<double> x(n), y(n);
  double y_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>(i + 1) / scale;
    y[i] = std::log(values[i]);
    y_mean += y[i];
  }
  y_mean /= scale;
  for (double& yi : y) yi -= y_mean;

  // Suffix sums over ranks > r give every hinge term in O(1).
  std::vector<double> s1(n + 1, 0.0), sx(n + 1, 0.0), sxx(n + 1, 0.0), sy(n + 1, 0.0),
      sxy(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    s1[i] = s1[i + 1] + 1.0;
    sx[i] = sx[i + 1] + x[i];
    sxx[i] = sxx[i + 1] + x[i] * x[i];
    sy[i] = sy[i + 1] + y[i];
    sxy[i] = sxy[i + 1] + x[i] * y[i];
  }
  double syy = 0.0;
  for (double yi : y) syy += yi * yi;

  const double N = s1[0], Sx = sx[0], Sxx = sxx[0], Sy = sy[0], Sxy = sxy[0];

  LineFit single;
  {
    const double det = N * Sxx - Sx * Sx;
    single.slope = (N * Sxy - Sx * Sy) / det;
    single.intercept = (Sy - single.slope * Sx) / N;
  }
  const double sse_single = direct_sse(y, x, single, 1.0);

  std::vector<double> sse(n + 1, std::numeric_limits<double>::infinity());
  std::vector<LineFit> fits(n + 1);
  for (std::size_t r = 2; r + 2 <= n; ++r) {
    const double k = static_cast<double>(r) / scale;
    // Ranks r+1..n sit at indices r..n-1.
    const double h1 = sx[r] - k * s1[r];
    const double hh = sxx[r] - 2.0 * k * sx[r] + k * k * s1[r];
    const double xh = sxx[r] - k * sx[r];
    const double yh = sxy[r] - k * sy[r];
    Eigen::Matrix3d m;
    m << N, Sx, h1, Sx, Sxx, xh, h1, xh, hh;
    const Eigen::Vector3d rhs(Sy, Sxy, yh);
    const Eigen::Vector3d beta = m.ldlt().solve(rhs);
    fits[r] = {beta[0], beta[1], beta[2]};
    sse[r] = std::max(0.0, syy - beta.dot(rhs));
  }

  const double best = *std::min_element(sse.begin(), sse.end());
  const double window = best * (1.0 + kSseTieWindow) + 1e-12 * syy;
  std::size_t chosen = 2;
  for (std::size_t r = 2; r + 2 <= n; ++r)
    if (sse[r] <= window) chosen = r;

  BreakpointFit fit;
  fit.breakpoint_rank = chosen;
  fit.threshold_value = values[chosen - 1];
  fit.sse_single = sse_single;
  fit.sse_segmented =
      std::min(sse_single, direct_sse(y, x, fits[chosen], static_cast<double>(chosen) / scale));
  fit.slope_left = fits[chosen].slope / scale;
  fit.slope_right = (fits[chosen].slope + fits[chosen].hinge) / scale;
  // A residual at rounding level means the data is already a straight line.
  const bool has_residual = sse_single > 1e-9 * std::max(syy, 1e-300);
  fit.accepted =
      has_residual && (sse_single - fit.sse_segmented) >= kMinSseImprovement * sse_single;
  return fit;
}

namespace {

template <typename T>
std::vector<double> positive_only(const std::vector<T>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (T v : values)
    if (v > 0) out.push_back(static_cast<double>(v));
  return out;
}

}  // namespace

ThresholdSuggestion suggest_stage1_from_sums(const std::vector<double>& expected) {
  if (expected.empty()) throw Error("cannot suggest a threshold for an empty graph");
  ThresholdSuggestion s;
  s.percentile = percentile(expected, kStage1Percentile);
  s.value = kDefaultTau1;
  if (s.percentile <= kDefaultTau1) return s;
  auto sample = positive_only(expected);
  if (sample.size() < 10) return s;
  s.fit = segmented_breakpoint(std::move(sample));
  if (s.fit->accepted) {
    s.value = s.fit->threshold_value;
    s.from_fit = true;
  }
  return s;
}

ThresholdSuggestion suggest_stage2_from_bounds(const std::vector<int>& bounds) {
  if (bounds.empty()) throw Error("cannot suggest a threshold for an empty graph");
  ThresholdSuggestion s;
  s.percentile = percentile(std::vector<double>(bounds.begin(), bounds.end()), kStage2Percentile);
  s.value = kDefaultTau2;
  if (s.percentile <= kDefaultTau2) return s;
  auto sample = positive_only(bounds);
  if (sample.size() < 10) return s;
  s.fit = segmented_breakpoint(std::move(sample));
  if (s.fit->accepted) {
    s.value = std::floor(s.fit->threshold_value);
    s.from_fit = true;
  }
  return s;
}

std::vector<double> expected_degrees(const ProbabilisticGraph& g) {
  std::vector<double> out(g.vertex_count(), 0.0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const Neighbor& nb : g.neighbors(v)) out[v] += nb.prob;
  return out;
}

std::vector<int> initial_bounds_full_graph(const ProbabilisticGraph& g, double eta) {
  return stage2_filter(g, VertexSet::all(g.vertex_count()), eta, 0).initial_bounds;
}

double suggest_stage1(const ProbabilisticGraph& g) {
  return suggest_stage1_from_sums(expected_degrees(g)).value;
}

int suggest_stage2(const ProbabilisticGraph& g, double eta) {
  return static_cast<int>(suggest_stage2_from_bounds(initial_bounds_full_graph(g, eta)).value);
}

void write_suggestion(std::ostream& out, const char* prefix, const ThresholdSuggestion& s) {
  out << prefix << '\t' << format_number(s.value) << '\n';
  out << prefix << ".source\t" << (s.from_fit ? "segmented_regression" : "default") << '\n';
  out << prefix << ".percentile\t" << format_number(s.percentile) << '\n';
  if (!s.fit) return;
  const BreakpointFit& f = *s.fit;
  out << prefix << ".fit.breakpoint_rank\t" << f.breakpoint_rank << '\n';
  out << prefix << ".fit.threshold_value\t" << format_number(f.threshold_value) << '\n';
  out << prefix << ".fit.log_threshold\t" << format_number(std::log(f.threshold_value)) << '\n';
  out << prefix << ".fit.sse_single\t" << format_number(f.sse_single) << '\n';
  out << prefix << ".fit.sse_segmented\t" << format_number(f.sse_segmented) << '\n';
  out << prefix << ".fit.slope_left\t" << format_number(f.slope_left) << '\n';
  out << prefix << ".fit.slope_right\t" << format_number(f.slope_right) << '\n';
  out << prefix << ".fit.accepted\t" << (f.accepted ? "true" : "false") << '\n';
  out << prefix << ".fit.min_improvement\t" << format_number(kMinSseImprovement) << '\n';
  out << prefix << ".fit.tie_window\t" << format_number(kSseTieWindow) << '\n';
}

}  // namespace pcore
