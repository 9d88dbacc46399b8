#include "pcore/degree.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pcore/graph.hpp"

namespace pcore {

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw Error("eta must lie in [0,1], got " + std::to_string(eta));
}

DegreeDistribution degree_pmf(std::span<const double> probs) {
  const std::size_t d = probs.size();
  DegreeDistribution out;
  out.pmf.assign(d + 1, 0.0);
  out.pmf[0] = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double p = probs[i];
    const double q = 1.0 - p;
    for (std::size_t t = i + 1; t > 0; --t) out.pmf[t] = p * out.pmf[t - 1] + q * out.pmf[t];
    out.pmf[0] *= q;
  }
  out.tail.assign(d + 1, 0.0);
  double acc = 0.0;
  for (std::size_t t = d + 1; t-- > 0;) {
    acc += out.pmf[t];
    out.tail[t] = acc;
  }
  out.tail[0] = 1.0;
  return out;
}

namespace {

int largest_t_with_tail(const std::vector<double>& tail, double eta) {
  for (std::size_t t = tail.size(); t-- > 1;)
    if (tail[t] >= eta) return static_cast<int>(t);
  return 0;
}

}  // namespace

int eta_degree_exact(std::span<const double> probs, double eta) {
  check_eta(eta);
  if (eta == 0.0) return static_cast<int>(probs.size());
  return largest_t_with_tail(degree_pmf(probs).tail, eta);
}

std::vector<double> tail_bruteforce(std::span<const double> probs) {
  const std::size_t d = probs.size();
  if (d > kMaxBruteforceDegree)
    throw Error("degree " + std::to_string(d) + " too large for enumeration");
  std::vector<double> pmf(d + 1, 0.0);
  for (std::uint64_t world = 0; world < (std::uint64_t{1} << d); ++world) {
    double pr = 1.0;
    int present = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (world >> i & 1) {
        pr *= probs[i];
        ++present;
      } else {
        pr *= 1.0 - probs[i];
      }
    }
    pmf[static_cast<std::size_t>(present)] += pr;
  }
  std::vector<double> tail(d + 1, 0.0);
  double acc = 0.0;
  for (std::size_t t = d + 1; t-- > 0;) {
    acc += pmf[t];
    tail[t] = acc;
  }
  tail[0] = 1.0;
  return tail;
}

int eta_degree_bruteforce(std::span<const double> probs, double eta) {
  check_eta(eta);
  if (eta == 0.0) return static_cast<int>(probs.size());
  return largest_t_with_tail(tail_bruteforce(probs), eta);
}

double tail_at_least(std::span<const double> probs, std::size_t t) {
  if (t == 0) return 1.0;
  const std::size_t d = probs.size();
  if (t > d) return 0.0;
  std::vector<double> below(t, 0.0);  // Pr[count = j], j < t
  below[0] = 1.0;
  double reached = 0.0;               // Pr[count >= t]
  for (std::size_t i = 0; i < d; ++i) {
    const double p = probs[i];
    const double q = 1.0 - p;
    const std::size_t top = std::min(i + 1, t);
    if (top == t) reached += p * below[t - 1];
    for (std::size_t j = std::min(i + 1, t - 1); j > 0; --j) below[j] = p * below[j - 1] + q * below[j];
    below[0] *= q;
  }
  return reached;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_quantile(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw Error("normal quantile requires q in (0,1), got " + std::to_string(q));

  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;

  double x;
  if (q < kLow) {
    double r = std::sqrt(-2.0 * std::log(q));
    x = (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
        ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  } else if (q <= 1.0 - kLow) {
    double s = q - 0.5;
    double r = s * s;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * s /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double r = std::sqrt(-2.0 * std::log1p(-q));
    x = -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
        ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  }

  // Halley refinement; the upper tail is evaluated directly to avoid 1-q loss.
  const double e =
      (q < 0.5) ? normal_cdf(x) - q : (1.0 - q) - 0.5 * std::erfc(x / std::sqrt(2.0));
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  x = x - u / (1.0 + 0.5 * x * u);
  return x;
}

int eta_degree_clt_bound(std::span<const double> probs, double eta) {
  check_eta(eta);
  const int d = static_cast<int>(probs.size());
  double mu = 0.0;
  double var = 0.0;
  for (double p : probs) {
    mu += p;
    var += p * (1.0 - p);
  }
  if (var <= 0.0 || eta == 0.0) return d;
  if (eta == 1.0) return 0;
  const double estimate = std::floor(mu + std::sqrt(var) * normal_quantile(1.0 - eta));
  if (!(estimate > 0.0)) return 0;
  if (estimate >= d) return d;
  return static_cast<int>(estimate);
}

}  // namespace pcore
