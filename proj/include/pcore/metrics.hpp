#pragma once

#include <ostream>
#include <vector>

#include "pcore/graph.hpp"
#include "pcore/peeling.hpp"

namespace pcore {

// Sum of edge probabilities over n(n-1)/2. Throws Error when n < 2.
double probabilistic_density(const ProbabilisticGraph& g);

struct ClusteringTerms {
  double triangle_mass = 0.0;  // sum over triangles of p(uv) p(vw) p(uw), each once
  double wedge_mass = 0.0;     // sum over centres u and pairs {v,w} of p(uv) p(uw)
};

// Triangles by intersecting id-sorted adjacency lists (u < v < w), wedges in
// closed form per centre from the sum and sum of squares of its probabilities.
ClusteringTerms clustering_terms(const ProbabilisticGraph& g);

// 3 * triangle_mass / wedge_mass. Throws Error when g has no wedge.
double probabilistic_clustering_coefficient(const ProbabilisticGraph& g);

struct ComponentCohesion {
  std::vector<VertexId> members;  // ascending ids of the input graph
  double pd = 0.0;
  double pcc = 0.0;
  bool wedge_free = false;  // pcc reported as 0 by convention
};

struct CohesionReport {
  int k_max = 0;
  std::vector<ComponentCohesion> components;  // ordered by smallest member
  double pd_avg = 0.0;
  double pcc_avg = 0.0;
};

// Cohesion of the maximum core: vertices with core == k_max, split into
// connected components of the induced subgraph, PD/PCC per component and
// their unweighted means. A singleton component has PD 0. Throws Error when
// the decomposition reports no vertex.
CohesionReport max_core_report(const ProbabilisticGraph& g, const Decomposition& dec);
CohesionReport max_core_report(const ProbabilisticGraph& g, const std::vector<int>& core);

// `key <TAB> value` lines: k_max, component_count, per-component
// size/pd/pcc, pd_avg, pcc_avg.
void write_cohesion_report(std::ostream& out, const CohesionReport& report);

// 100 * (candidate - baseline) / baseline; 0 when both are 0.
double relative_change_percent(double baseline, double candidate);

}  // namespace pcore
