#include "pcore/screening.hpp"

#include <cmath>

#include "pcore/degree.hpp"

namespace pcore {

VertexSet stage1_filter(const ProbabilisticGraph& g, double tau1) {
  const std::size_t n = g.vertex_count();
  VertexSet kept(n);
  for (VertexId v = 0; v < n; ++v) {
    double expected = 0.0;
    double missing = 0.0;
    for (const Neighbor& nb : g.neighbors(v)) {
      expected += nb.prob;
      missing += 1.0 - nb.prob;
    }
    if (expected >= tau1 && missing >= tau1) kept.insert(v);
  }
  return kept;
}

Stage2Result stage2_filter(const ProbabilisticGraph& g, const VertexSet& stage1_survivors,
                           double eta, int tau2) {
  check_eta(eta);
  const std::size_t n = g.vertex_count();
  Stage2Result out{VertexSet(n), std::vector<int>(n, kNoBound)};
  std::vector<double> probs;
  for (VertexId v = 0; v < n; ++v) {
    if (!stage1_survivors.contains(v)) continue;
    probs.clear();
    for (const Neighbor& nb : g.neighbors(v))
      if (stage1_survivors.contains(nb.id)) probs.push_back(nb.prob);
    const int bound = eta_degree_clt_bound(probs, eta);
    out.initial_bounds[v] = bound;
    if (bound >= tau2) out.survivors.insert(v);
  }
  return out;
}

ScreeningReport screen(const ProbabilisticGraph& g, double eta, double tau1, int tau2) {
  check_eta(eta);
  if (!(tau1 >= 0.0) || !std::isfinite(tau1)) throw Error("tau1 must be a finite value >= 0");
  if (tau2 < 0) throw Error("tau2 must be >= 0");

  const std::size_t n = g.vertex_count();
  ScreeningReport report;
  report.tau1 = tau1;
  report.tau2 = tau2;
  report.eta = eta;

  VertexSet stage1 = stage1_filter(g, tau1);
  Stage2Result stage2 = stage2_filter(g, stage1, eta, tau2);

  report.removed_stage1 = VertexSet(n);
  report.removed_stage2 = VertexSet(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!stage1.contains(v))
      report.removed_stage1.insert(v);
    else if (!stage2.survivors.contains(v))
      report.removed_stage2.insert(v);
  }
  report.survivors = std::move(stage2.survivors);
  report.initial_bounds = std::move(stage2.initial_bounds);
  return report;
}

void write_screening_report(std::ostream& out, const ProbabilisticGraph& g,
                            const ScreeningReport& report) {
  out << "# eta=" << report.eta << " tau1=" << report.tau1 << " tau2=" << report.tau2 << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const char* status = report.survivors.contains(v)        ? "kept"
                         : report.removed_stage1.contains(v) ? "removed_stage1"
                                                             : "removed_stage2";
    out << g.token(v) << '\t' << status << '\t';
    if (report.initial_bounds[v] == kNoBound)
      out << '-';
    else
      out << report.initial_bounds[v];
    out << '\n';
  }
}

}  // namespace pcore
