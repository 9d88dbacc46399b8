#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pcore {

// Distribution of the number of existing edges among a vertex's incident
// edges (a Poisson binomial variable).
struct DegreeDistribution {
  std::vector<double> pmf;   // pmf[t] = Pr[deg = t], t = 0..d
  std::vector<double> tail;  // tail[t] = Pr[deg >= t], t = 0..d
};

// Exact pmf and tails by the edge-at-a-time recurrence
//   X(i,t) = p_i X(i-1,t-1) + (1-p_i) X(i-1,t),  X(0,0) = 1,
// kept in a single row updated from high t to low t. Tails are accumulated
// from the top so small upper tails keep full relative precision.
DegreeDistribution degree_pmf(std::span<const double> probs);

// Largest t in [0,d] with Pr[deg >= t] >= eta.
int eta_degree_exact(std::span<const double> probs, double eta);

// Same contract as eta_degree_exact, by enumerating all 2^d possible worlds.
// Throws Error for d > kMaxBruteforceDegree.
inline constexpr std::size_t kMaxBruteforceDegree = 20;
int eta_degree_bruteforce(std::span<const double> probs, double eta);
// Tail vector by enumeration; used as a test oracle.
std::vector<double> tail_bruteforce(std::span<const double> probs);

// Pr[deg >= t] alone. Only the states 0..t-1 are tracked, plus an absorbing
// ">= t" state, so the cost is O(d * min(t, d)).
double tail_at_least(std::span<const double> probs, std::size_t t);

// Standard normal CDF via erfc.
double normal_cdf(double z);

// Inverse of normal_cdf on (0,1): Acklam's rational approximation followed by
// one Halley step against normal_cdf. Throws Error outside (0,1).
double normal_quantile(double q);

// Normal-approximation estimate floor(mu + sigma * Phi^-1(1 - eta)) with
// mu = sum p_i and sigma^2 = sum p_i (1 - p_i), clamped into [0, d]. When
// sigma is zero the degree is deterministic and d is returned. No continuity
// correction is applied.
int eta_degree_clt_bound(std::span<const double> probs, double eta);

// Throws Error unless 0 <= eta <= 1.
void check_eta(double eta);

}  // namespace pcore
