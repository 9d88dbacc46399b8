#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pcore/generator.hpp"
#include "pcore/graph.hpp"

using namespace pcore;

TEST_CASE("parse six-edge fixture") {
  const auto g = parse_edge_list_string(fixtures::kSixEdge);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  const auto v1 = g.find("1").value();
  CHECK(g.degree(v1) == 3);
  CHECK(g.edge_probability(v1, g.find("3").value()) == doctest::Approx(0.6));
  CHECK(g.edge_probability(v1, g.find("5").value()) == 0.0);
  CHECK(g.max_degree() == 3);
}

TEST_CASE("comments, blank lines and CRLF are accepted") {
  const auto g = parse_edge_list_string("# header\n\na b 1\r\n  b c 0.25 \n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("malformed input reports the line") {
  struct Case {
    const char* text;
    std::size_t line;
  };
  const Case cases[] = {
      {"0 1 0.5\n0 0 0.5\n", 2},      // self-loop
      {"0 1 0.5\n1 0 0.7\n", 2},      // duplicate in reverse order
      {"0 1 1.5\n", 1},               // probability out of range
      {"0 1 0\n", 1},                 // zero probability
      {"0 1 abc\n", 1},               // not a number
      {"# c\n0 1\n", 2},              // missing field
      {"0 1 0.5 extra\n", 1},         // extra field
      {"0 1 nan\n", 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    try {
      parse_edge_list_string(c.text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == c.line);
    }
  }
}

TEST_CASE("adjacency is sorted by neighbour id and symmetric") {
  const auto g = generate_random(200, 1500, ProbabilityLaw::uniform(), 11);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 1; i < nbrs.size(); ++i) CHECK(nbrs[i - 1].id < nbrs[i].id);
    for (const auto& nb : nbrs) CHECK(g.edge_probability(nb.id, v) == nb.prob);
  }
}

TEST_CASE("write then parse round-trips") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto g = generate_random(120, 600, ProbabilityLaw::beta(2.0, 5.0), seed);
    std::ostringstream out;
    write_edge_list(out, g);
    const auto h = parse_edge_list_string(out.str());
    CHECK(equal_by_label(g, h));
  }
}

TEST_CASE("induced subgraph keeps the 4-cycle of the six-edge graph") {
  const auto g = parse_edge_list_string(fixtures::kSixEdge);
  VertexSet s(g.vertex_count());
  for (const char* t : {"1", "2", "3", "4"}) s.insert(g.find(t).value());
  std::vector<VertexId> ids;
  const auto h = induced_subgraph(g, s, ids);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 4);
  double sum = 0.0;
  for (const auto& e : h.edges()) sum += e.prob;
  CHECK(sum == doctest::Approx(2.0));
  for (VertexId v = 0; v < h.vertex_count(); ++v) CHECK(h.token(v) == g.token(ids[v]));
}

TEST_CASE("components match breadth-first search") {
  CHECK(connected_components(parse_edge_list_string(fixtures::kSixEdge)).size() == 1);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = generate_random(300, 200 + 20 * seed, ProbabilityLaw::uniform(), seed);
    std::size_t count = 0;
    const auto labels = component_labels(g, count);
    const auto ref = oracle::bfs_components(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(labels[v] == static_cast<std::size_t>(ref[v]));
    const auto comps = connected_components(g);
    CHECK(comps.size() == count);
    std::size_t total = 0;
    for (const auto& c : comps) total += c.size();
    CHECK(total == g.vertex_count());
  }
}

TEST_CASE("generator is deterministic and respects the law") {
  const auto a = generate_random(500, 3000, ProbabilityLaw::uniform(), 42);
  const auto b = generate_random(500, 3000, ProbabilityLaw::uniform(), 42);
  const auto c = generate_random(500, 3000, ProbabilityLaw::uniform(), 43);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(a.edge_count() == 3000);
  CHECK(a.average_probability() == doctest::Approx(0.5).epsilon(0.05));

  const auto k = generate_random(20, 190, ProbabilityLaw::constant(0.25), 1);
  CHECK(k.edge_count() == 190);
  for (const auto& e : k.edges()) CHECK(e.prob == 0.25);

  CHECK_THROWS_AS(generate_random(10, 46, ProbabilityLaw::uniform(), 1), Error);
  CHECK(ProbabilityLaw::parse("beta:2,5").to_string() == "beta:2,5");
  CHECK(ProbabilityLaw::parse("const:0.3").kind == ProbabilityLaw::Kind::kConstant);
  CHECK_THROWS_AS(ProbabilityLaw::parse("const:1.5"), Error);
  CHECK_THROWS_AS(ProbabilityLaw::parse("gauss"), Error);
}
