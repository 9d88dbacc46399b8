#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pcore/degree.hpp"
#include "pcore/generator.hpp"
#include "pcore/peeling.hpp"

using namespace pcore;

namespace {

const PeelOptions kChecked{true};

std::vector<int> cores_by_token(const ProbabilisticGraph& g, const Decomposition& dec) {
  std::vector<int> out;
  for (const char* t : {"0", "1", "2", "3", "4", "5"}) out.push_back(dec.core[g.find(t).value()]);
  return out;
}

std::vector<int> exact_bounds(const ProbabilisticGraph& g, double eta, const VertexSet& alive) {
  std::vector<int> b(g.vertex_count(), 0);
  for (VertexId v : alive.members()) {
    std::vector<double> p;
    for (const auto& nb : g.neighbors(v))
      if (alive.contains(nb.id)) p.push_back(nb.prob);
    b[v] = eta_degree_exact(p, eta);
  }
  return b;
}

std::vector<int> full_degree_bounds(const ProbabilisticGraph& g, const VertexSet& alive) {
  std::vector<int> b(g.vertex_count(), 0);
  for (VertexId v : alive.members())
    for (const auto& nb : g.neighbors(v))
      if (alive.contains(nb.id)) ++b[v];
  return b;
}

}  // namespace

TEST_CASE("six-edge core numbers") {
  const auto g = parse_edge_list_string(fixtures::kSixEdge);
  const std::vector<int> expected{1, 2, 2, 2, 2, 1};
  const auto pa = run_pa(g, 0.2, kChecked);
  CHECK(cores_by_token(g, pa) == expected);
  CHECK(pa.k_max == 2);
  const auto all = VertexSet::all(6);
  CHECK(cores_by_token(g, core_compute(g, 0.2, all, exact_bounds(g, 0.2, all), kChecked)) ==
        expected);
  CHECK(cores_by_token(g, run_mpa(g, 0.2, 0, 0, kChecked).decomposition) == expected);
  const auto screened = run_mpa(g, 0.2, 5, 10).decomposition;
  CHECK(screened.reported_count() == 0);
  CHECK(screened.k_max == 0);
}

TEST_CASE("core numbers match the peeling-by-definition oracle") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto g = generate_random(60, 60 + 25 * seed, ProbabilityLaw::uniform(), seed);
    for (double eta : {0.05, 0.3, 0.5, 0.8, 1.0}) {
      CAPTURE(seed);
      CAPTURE(eta);
      CHECK(run_pa(g, eta, kChecked).core == oracle::core_numbers(g, eta));
    }
  }
}

TEST_CASE("screened decomposition matches the oracle on the survivors") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto g = generate_random(150, 1500, ProbabilityLaw::uniform(), seed);
    for (double eta : {0.1, 0.5}) {
      const auto r = run_mpa(g, eta, 3, 4, kChecked);
      std::vector<bool> alive(g.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) alive[v] = r.screening.survivors.contains(v);
      CHECK(r.decomposition.core == oracle::core_numbers(g, eta, alive));
    }
  }
}

TEST_CASE("all-ones probabilities reduce to deterministic cores") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = generate_random(400, 2000, ProbabilityLaw::constant(1.0), seed);
    const auto ref = oracle::deterministic_cores(g);
    CHECK(deterministic_core_numbers(g) == ref);
    CHECK(run_pa(g, 0.5, kChecked).core == ref);
  }
}

TEST_CASE("the result does not depend on the initial bounds") {
  std::mt19937_64 rng(77);
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto g = generate_random(120, 700, ProbabilityLaw::uniform(), seed);
    const auto all = VertexSet::all(g.vertex_count());
    for (double eta : {0.1, 0.5, 0.9}) {
      const auto ref = core_compute(g, eta, all, exact_bounds(g, eta, all), kChecked).core;
      CHECK(core_compute(g, eta, all, full_degree_bounds(g, all), kChecked).core == ref);
      auto random_bounds = full_degree_bounds(g, all);
      for (int& b : random_bounds) b = b ? static_cast<int>(rng() % (b + 1)) : 0;
      CHECK(core_compute(g, eta, all, random_bounds, kChecked).core == ref);
      CHECK(core_compute(g, eta, all, std::vector<int>(g.vertex_count(), 0), kChecked).core == ref);
    }
  }
}

TEST_CASE("overshooting bounds in one component do not leak into another") {
  // A certain edge gives level 1 early; the star's leaves must still get 0.
  const auto g = parse_edge_list_string("a b 1\nc x1 0.1\nc x2 0.1\nc x3 0.1\nc x4 0.1\n");
  const auto all = VertexSet::all(g.vertex_count());
  const auto dec = core_compute(g, 0.5, all, full_degree_bounds(g, all), kChecked);
  CHECK(dec.core == oracle::core_numbers(g, 0.5));
  CHECK(dec.core[g.find("x1").value()] == 0);
  CHECK(dec.stats.bounds_overshoot > 0);
}

TEST_CASE("core_compute rejects bounds outside the alive degree") {
  const auto g = parse_edge_list_string(fixtures::kSixEdge);
  const auto all = VertexSet::all(6);
  std::vector<int> bounds(6, 0);
  bounds[g.find("0").value()] = 2;
  CHECK_THROWS_AS(core_compute(g, 0.2, all, bounds), Error);
  bounds[g.find("0").value()] = -1;
  CHECK_THROWS_AS(core_compute(g, 0.2, all, bounds), Error);
}

TEST_CASE("monotonicity in eta and screening dominance") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto g = generate_random(1500, 9000, ProbabilityLaw::uniform(), seed);
    std::vector<int> prev;
    for (double eta = 0.1; eta < 0.95; eta += 0.1) {
      const auto pa = run_pa(g, eta);
      if (!prev.empty())
        for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(pa.core[v] <= prev[v]);
      prev = pa.core;
      const auto mpa = run_mpa(g, eta, 5, 10).decomposition;
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (mpa.reported(v)) CHECK(mpa.core[v] <= pa.core[v]);
    }
  }
}

TEST_CASE("decomposition file round trip") {
  const auto g = parse_edge_list_string(fixtures::kSixEdge);
  const auto dec = run_mpa(g, 0.2, 0, 0).decomposition;
  std::ostringstream out;
  write_decomposition(out, g, dec);
  std::istringstream in(out.str());
  const auto table = read_core_table(in);
  CHECK(table.eta == 0.2);
  CHECK(table.mode == "mpa");
  CHECK(cores_for_graph(g, table) == dec.core);

  std::istringstream bad("0\t1\nz\t2\n");
  CHECK_THROWS_AS(cores_for_graph(g, read_core_table(bad)), Error);
  std::istringstream malformed("0\tone\n");
  CHECK_THROWS_AS(read_core_table(malformed), ParseError);
}

TEST_CASE("mode names") {
  CHECK(parse_mode("pa") == Mode::kPa);
  CHECK(to_string(Mode::kMpa) == "mpa");
  CHECK_THROWS_AS(parse_mode("fast"), Error);
}
