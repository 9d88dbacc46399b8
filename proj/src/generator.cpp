#include "pcore/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace pcore {

namespace sampling {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  // Largest multiple of bound that fits; values above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double standard_normal(std::mt19937_64& rng) {
  // Marsaglia polar method, one variate per accepted pair.
  double u, v, s;
  do {
    u = 2.0 * unit_interval(rng) - 1.0;
    v = 2.0 * unit_interval(rng) - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  return u * std::sqrt(-2.0 * std::log(s) / s);
}

double gamma(std::mt19937_64& rng, double shape) {
  if (shape < 1.0) {
    // Boost from shape+1: G(a) = G(a+1) * U^(1/a).
    double u;
    do {
      u = unit_interval(rng);
    } while (u == 0.0);
    return gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = unit_interval(rng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace sampling

ProbabilityLaw ProbabilityLaw::parse(const std::string& text) {
  if (text == "uniform") return uniform();
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error("bad probability law '" + text + "'");
    return x;
  };
  if (text.rfind("const:", 0) == 0) {
    double c = number(text.substr(6));
    if (!(c > 0.0 && c <= 1.0)) throw Error("constant probability must lie in (0,1]");
    return constant(c);
  }
  if (text.rfind("beta:", 0) == 0) {
    auto rest = text.substr(5);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw Error("bad probability law '" + text + "'");
    double alpha = number(rest.substr(0, comma));
    double beta_ = number(rest.substr(comma + 1));
    if (!(alpha > 0.0 && beta_ > 0.0)) throw Error("beta parameters must be positive");
    return beta(alpha, beta_);
  }
  throw Error("bad probability law '" + text + "' (expected uniform, const:<c>, beta:<a>,<b>)");
}

std::string ProbabilityLaw::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kUniform: os << "uniform"; break;
    case Kind::kConstant: os << "const:" << a; break;
    case Kind::kBeta: os << "beta:" << a << ',' << b; break;
  }
  return os.str();
}

namespace {

double draw_probability(std::mt19937_64& rng, const ProbabilityLaw& law) {
  switch (law.kind) {
    case ProbabilityLaw::Kind::kConstant:
      return law.a;
    case ProbabilityLaw::Kind::kBeta:
      while (true) {
        double x = sampling::gamma(rng, law.a);
        double y = sampling::gamma(rng, law.b);
        double p = x / (x + y);
        if (p > 0.0 && p <= 1.0) return p;
      }
    case ProbabilityLaw::Kind::kUniform:
    default:
      // (0,1]
      return 1.0 - sampling::unit_interval(rng);
  }
}

// Inverse of the row-major enumeration of pairs (u < v).
std::pair<VertexId, VertexId> pair_from_index(std::uint64_t idx, std::uint64_t n) {
  std::uint64_t u = 0;
  std::uint64_t row = n - 1;
  while (idx >= row) {
    idx -= row;
    ++u;
    --row;
  }
  return {static_cast<VertexId>(u), static_cast<VertexId>(u + 1 + idx)};
}

}  // namespace

ProbabilisticGraph generate_random(std::size_t n, std::size_t m, const ProbabilityLaw& law,
                                   std::uint64_t seed) {
  const std::uint64_t max_pairs =
      n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > max_pairs)
    throw Error("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) +
                " vertices (max " + std::to_string(max_pairs) + ")");

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);

  if (2 * m > max_pairs) {
    // Dense request: partial Fisher-Yates over all pair indices.
    std::vector<std::uint64_t> pool(max_pairs);
    for (std::uint64_t i = 0; i < max_pairs; ++i) pool[i] = i;
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t j = i + sampling::below(rng, max_pairs - i);
      std::swap(pool[i], pool[j]);
      auto [u, v] = pair_from_index(pool[i], n);
      edges.push_back({u, v, draw_probability(rng, law)});
    }
  } else {
    std::unordered_set<std::uint64_t> used;
    used.reserve(m * 2);
    while (edges.size() < m) {
      auto u = static_cast<VertexId>(sampling::below(rng, n));
      auto v = static_cast<VertexId>(sampling::below(rng, n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (!used.insert((static_cast<std::uint64_t>(u) << 32) | v).second) continue;
      edges.push_back({u, v, draw_probability(rng, law)});
    }
  }
  return ProbabilisticGraph::from_edges(n, edges);
}

}  // namespace pcore
