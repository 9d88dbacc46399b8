#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pcore/degree.hpp"

using namespace pcore;
using Probs = std::vector<double>;

TEST_CASE("example vertex tails and eta-degree") {
  const Probs p{0.3, 0.4, 0.6};
  const auto dist = degree_pmf(p);
  REQUIRE(dist.tail.size() == 4);
  CHECK(std::fabs(dist.tail[3] - 0.072) < 1e-12);
  CHECK(std::fabs(dist.tail[2] - 0.396) < 1e-12);
  CHECK(std::fabs(dist.tail[0] - 1.0) < 1e-12);
  CHECK(eta_degree_exact(p, 0.2) == 2);
  CHECK(eta_degree_exact(Probs{0.4, 0.6}, 0.2) == 2);
  CHECK(eta_degree_exact(Probs{0.3}, 0.2) == 1);
  CHECK(eta_degree_exact(Probs{0.3}, 0.5) == 0);
  CHECK(eta_degree_bruteforce(Probs{0.9, 0.9, 0.9}, 0.5) == 3);
  CHECK_THROWS_AS(eta_degree_bruteforce(Probs(kMaxBruteforceDegree + 1, 0.5), 0.5), Error);
}

TEST_CASE("edge cases of the eta-degree") {
  CHECK(eta_degree_exact(Probs{}, 0.5) == 0);
  CHECK(degree_pmf(Probs{}).tail == std::vector<double>{1.0});
  CHECK(eta_degree_exact(Probs{1, 1, 1, 1}, 1.0) == 4);
  CHECK(eta_degree_exact(Probs{0.5, 0.5}, 0.0) == 2);
  CHECK(eta_degree_exact(Probs{0.5, 0.5}, 1.0) == 0);
  CHECK(eta_degree_exact(Probs{0.5, 0.5}, 0.25) == 2);  // tie counts
  CHECK_THROWS_AS(eta_degree_exact(Probs{0.5}, 1.5), Error);
  CHECK_THROWS_AS(check_eta(-0.1), Error);
}

TEST_CASE("dynamic programme matches enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = oracle::random_probs(rng, rng() % 14);
    const auto ref = oracle::enumerate_tails(p);
    const auto dist = degree_pmf(p);
    double pmf_sum = 0.0;
    for (double x : dist.pmf) pmf_sum += x;
    CHECK(std::fabs(pmf_sum - 1.0) < 1e-12);
    for (std::size_t t = 0; t < ref.size(); ++t) {
      CHECK(std::fabs(dist.tail[t] - ref[t]) < 1e-10);
      CHECK(std::fabs(tail_at_least(p, t) - ref[t]) < 1e-10);
      if (t > 0) CHECK(std::fabs(dist.tail[t] - (dist.tail[t - 1] - dist.pmf[t - 1])) < 1e-12);
    }
    for (double eta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      CHECK(eta_degree_exact(p, eta) == oracle::eta_degree(p, eta));
      CHECK(eta_degree_bruteforce(p, eta) == oracle::eta_degree(p, eta));
    }
  }
}

TEST_CASE("eta-degree is monotone in eta and in added edges") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::random_probs(rng, 1 + rng() % 40);
    int prev = static_cast<int>(p.size());
    for (double eta = 0.05; eta < 1.0; eta += 0.05) {
      const int k = eta_degree_exact(p, eta);
      CHECK(k <= prev);
      prev = k;
    }
    const int before = eta_degree_exact(p, 0.5);
    p.push_back(0.5);
    CHECK(eta_degree_exact(p, 0.5) >= before);
  }
}

TEST_CASE("normal quantile against tabulated values") {
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(normal_quantile(0.1) == doctest::Approx(-1.2815515655446004).epsilon(1e-12));
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(normal_quantile(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-9));
  for (double q = 0.001; q < 1.0; q += 0.0137)
    CHECK(normal_cdf(normal_quantile(q)) == doctest::Approx(q).epsilon(1e-12));
  CHECK_THROWS_AS(normal_quantile(0.0), Error);
  CHECK_THROWS_AS(normal_quantile(1.0), Error);
}

TEST_CASE("normal-approximation bound") {
  CHECK(eta_degree_clt_bound(Probs(100, 0.5), 0.5) == 50);
  CHECK(eta_degree_clt_bound(Probs(100, 0.5), 0.9) == 43);  // floor(50 - 1.281552 * 5)
  // 1.3 + 0.8307 * 0.8416 just misses 2.
  CHECK(eta_degree_clt_bound(Probs{0.3, 0.4, 0.6}, 0.2) == 1);
  CHECK(eta_degree_clt_bound(Probs{1, 1, 1}, 0.9) == 3);  // sigma = 0
  CHECK(eta_degree_clt_bound(Probs{0.5, 0.5}, 0.0) == 2);
  CHECK(eta_degree_clt_bound(Probs{0.5, 0.5}, 1.0) == 0);
  CHECK(eta_degree_clt_bound(Probs{}, 0.5) == 0);
  CHECK(eta_degree_clt_bound(Probs(4, 0.01), 0.001) <= 4);  // clamped to d

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_probs(rng, rng() % 60);
    for (double eta : {0.1, 0.5, 0.9}) {
      const int b = eta_degree_clt_bound(p, eta);
      CHECK(b >= 0);
      CHECK(b <= static_cast<int>(p.size()));
    }
  }
}

TEST_CASE("normal-approximation bound is close on heavy vertices") {
  std::mt19937_64 rng(23);
  int close = 0, total = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto p = oracle::random_probs(rng, 10 + rng() % 40);
    double s = 0.0, q = 0.0;
    for (double x : p) {
      s += x;
      q += 1.0 - x;
    }
    if (s < 5.0 || q < 5.0) continue;
    ++total;
    if (std::abs(eta_degree_clt_bound(p, 0.5) - eta_degree_exact(p, 0.5)) <= 2) ++close;
  }
  REQUIRE(total > 100);
  CHECK(close >= 0.95 * total);
}
