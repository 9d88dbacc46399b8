#pragma once

#include <ostream>
#include <vector>

#include "pcore/graph.hpp"

namespace pcore {

inline constexpr int kNoBound = -1;

struct ScreeningReport {
  double tau1 = 0.0;
  int tau2 = 0;
  double eta = 0.0;
  VertexSet removed_stage1;
  VertexSet removed_stage2;
  VertexSet survivors;
  // Initial eta-degree estimate per vertex; kNoBound for vertices removed in
  // stage 1 (no estimate is computed for them).
  std::vector<int> initial_bounds;
};

// Stage 1: keep v iff sum p >= tau1 and sum (1 - p) >= tau1 over its
// incident edges in the full graph. One pass, no cascading.
VertexSet stage1_filter(const ProbabilisticGraph& g, double tau1);

struct Stage2Result {
  VertexSet survivors;
  std::vector<int> initial_bounds;  // kNoBound outside the input set
};

// Stage 2: normal-approximation eta-degree estimate of each stage-1 survivor,
// counting only edges to other stage-1 survivors; keep v iff estimate >= tau2.
Stage2Result stage2_filter(const ProbabilisticGraph& g, const VertexSet& stage1_survivors,
                           double eta, int tau2);

// Both stages; throws Error on tau1 < 0, tau2 < 0 or eta outside [0,1].
ScreeningReport screen(const ProbabilisticGraph& g, double eta, double tau1, int tau2);

// `token <TAB> kept|removed_stage1|removed_stage2 <TAB> bound-or-dash`, in
// internal id order.
void write_screening_report(std::ostream& out, const ProbabilisticGraph& g,
                            const ScreeningReport& report);

}  // namespace pcore
