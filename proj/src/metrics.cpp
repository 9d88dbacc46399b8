#include "pcore/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pcore/report_io.hpp"

namespace pcore {

double probabilistic_density(const ProbabilisticGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error("density is undefined for fewer than two vertices");
  double mass = 0.0;
  for (const Edge& e : g.edges()) mass += e.prob;
  return mass / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

namespace {

double wedge_mass_at(const ProbabilisticGraph& g, VertexId u) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const Neighbor& nb : g.neighbors(u)) {
    sum += nb.prob;
    sum_sq += nb.prob * nb.prob;
  }
  return 0.5 * (sum * sum - sum_sq);
}

// Mass of the triangles whose smallest vertex is u.
double triangle_mass_from(const ProbabilisticGraph& g, VertexId u) {
  double mass = 0.0;
  auto above = [](VertexId id, const Neighbor& x) { return id < x.id; };
  auto nu = g.neighbors(u);
  for (const Neighbor& uv : nu) {
    const VertexId v = uv.id;
    if (v <= u) continue;
    auto nv = g.neighbors(v);
    auto a = std::upper_bound(nu.begin(), nu.end(), v, above);
    auto b = std::upper_bound(nv.begin(), nv.end(), v, above);
    while (a != nu.end() && b != nv.end()) {
      if (a->id < b->id) {
        ++a;
      } else if (b->id < a->id) {
        ++b;
      } else {
        mass += uv.prob * a->prob * b->prob;
        ++a;
        ++b;
      }
    }
  }
  return mass;
}

}  // namespace

ClusteringTerms clustering_terms(const ProbabilisticGraph& g) {
  ClusteringTerms terms;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    terms.wedge_mass += wedge_mass_at(g, u);
    terms.triangle_mass += triangle_mass_from(g, u);
  }
  return terms;
}

double probabilistic_clustering_coefficient(const ProbabilisticGraph& g) {
  bool has_wedge = false;
  for (VertexId v = 0; v < g.vertex_count() && !has_wedge; ++v) has_wedge = g.degree(v) >= 2;
  if (!has_wedge) throw Error("clustering coefficient is undefined for a graph without wedges");
  const ClusteringTerms terms = clustering_terms(g);
  return 3.0 * terms.triangle_mass / terms.wedge_mass;
}

CohesionReport max_core_report(const ProbabilisticGraph& g, const std::vector<int>& core) {
  if (core.size() != g.vertex_count()) throw Error("core map does not match the graph");
  int k_max = kNotReported;
  for (int c : core) k_max = std::max(k_max, c);
  if (k_max == kNotReported) throw Error("decomposition is empty");

  VertexSet top(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (core[v] == k_max) top.insert(v);

  std::vector<VertexId> original;
  const ProbabilisticGraph sub = induced_subgraph(g, top, original);

  std::size_t part_count = 0;
  const std::vector<std::size_t> part_of = component_labels(sub, part_count);
  std::vector<std::vector<VertexId>> parts(part_count);
  for (VertexId v = 0; v < sub.vertex_count(); ++v) parts[part_of[v]].push_back(original[v]);

  // One pass over the induced subgraph; every edge, wedge and triangle lies
  // inside a single component.
  std::vector<double> edge_mass(parts.size(), 0.0);
  std::vector<ClusteringTerms> terms(parts.size());
  std::vector<bool> has_wedge(parts.size(), false);
  for (VertexId u = 0; u < sub.vertex_count(); ++u) {
    const std::size_t c = part_of[u];
    for (const Neighbor& nb : sub.neighbors(u))
      if (u < nb.id) edge_mass[c] += nb.prob;
    if (sub.degree(u) >= 2) has_wedge[c] = true;
    terms[c].wedge_mass += wedge_mass_at(sub, u);
    terms[c].triangle_mass += triangle_mass_from(sub, u);
  }

  CohesionReport report;
  report.k_max = k_max;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ComponentCohesion c;
    c.members = std::move(parts[i]);
    const auto size = static_cast<double>(c.members.size());
    c.pd = c.members.size() >= 2 ? edge_mass[i] / (0.5 * size * (size - 1.0)) : 0.0;
    c.wedge_free = !has_wedge[i];
    c.pcc = c.wedge_free ? 0.0 : 3.0 * terms[i].triangle_mass / terms[i].wedge_mass;
    report.components.push_back(std::move(c));
  }
  for (const auto& c : report.components) {
    report.pd_avg += c.pd;
    report.pcc_avg += c.pcc;
  }
  const auto count = static_cast<double>(report.components.size());
  report.pd_avg /= count;
  report.pcc_avg /= count;
  return report;
}

CohesionReport max_core_report(const ProbabilisticGraph& g, const Decomposition& dec) {
  return max_core_report(g, dec.core);
}

void write_cohesion_report(std::ostream& out, const CohesionReport& report) {
  out << "k_max\t" << report.k_max << '\n';
  out << "component_count\t" << report.components.size() << '\n';
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const auto& c = report.components[i];
    out << "component." << i << ".size\t" << c.members.size() << '\n';
    out << "component." << i << ".pd\t" << format_number(c.pd) << '\n';
    out << "component." << i << ".pcc\t" << format_number(c.pcc)
        << (c.wedge_free ? "\twedge_free" : "") << '\n';
  }
  out << "pd_avg\t" << format_number(report.pd_avg) << '\n';
  out << "pcc_avg\t" << format_number(report.pcc_avg) << '\n';
}

double relative_change_percent(double baseline, double candidate) {
  if (baseline == 0.0) {
    if (candidate == 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  return 100.0 * (candidate - baseline) / baseline;
}

}  // namespace pcore
