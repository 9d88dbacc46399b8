#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "pcore/graph.hpp"

namespace pcore {

// Recorded in run metadata so benchmark graphs can be reproduced.
inline constexpr const char* kGeneratorName = "mt19937_64/pcore-sampling-v1";

struct ProbabilityLaw {
  enum class Kind { kUniform, kConstant, kBeta };
  Kind kind = Kind::kUniform;
  double a = 0.0;  // constant value, or beta alpha
  double b = 0.0;  // beta beta

  static ProbabilityLaw uniform() { return {}; }
  static ProbabilityLaw constant(double c) { return {Kind::kConstant, c, 0.0}; }
  static ProbabilityLaw beta(double alpha, double beta) { return {Kind::kBeta, alpha, beta}; }

  // "uniform", "const:<c>" or "beta:<alpha>,<beta>".
  static ProbabilityLaw parse(const std::string& text);
  std::string to_string() const;
};

// Samples exactly m distinct unordered pairs over n vertices with i.i.d.
// probabilities drawn from `law`. Output is bit-identical for a given seed on
// every platform: all variates are derived from raw mt19937_64 words without
// going through std:: distributions.
ProbabilisticGraph generate_random(std::size_t n, std::size_t m, const ProbabilityLaw& law,
                                   std::uint64_t seed);

namespace sampling {

// Uniform in [0,1) with 53 random bits.
double unit_interval(std::mt19937_64& rng);
// Uniform integer in [0, bound) by rejection.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound);
double standard_normal(std::mt19937_64& rng);
double gamma(std::mt19937_64& rng, double shape);

}  // namespace sampling

}  // namespace pcore
