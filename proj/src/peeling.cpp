#include "pcore/peeling.hpp"

#include <algorithm>
#include <chrono>

#include "pcore/degree.hpp"

namespace pcore {

std::string to_string(Mode mode) { return mode == Mode::kPa ? "pa" : "mpa"; }

Mode parse_mode(const std::string& text) {
  if (text == "pa") return Mode::kPa;
  if (text == "mpa") return Mode::kMpa;
  throw Error("unknown mode '" + text + "' (expected pa or mpa)");
}

std::size_t Decomposition::reported_count() const {
  return static_cast<std::size_t>(
      std::count_if(core.begin(), core.end(), [](int c) { return c != kNotReported; }));
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Mutable state of one peeling run over a compact graph.
class PeelState {
 public:
  PeelState(const ProbabilisticGraph& g, double eta, const std::vector<int>& seeds,
            PeelStats& stats)
      : g_(g), eta_(eta), stats_(stats) {
    const std::size_t n = g.vertex_count();
    d_.resize(n);
    valid_.assign(n, false);
    gone_.assign(n, false);

    for (VertexId v = 0; v < n; ++v) {
      gather(v);
      const int seed = seeds[v];
      if (tail_at_least(probs_, static_cast<std::size_t>(seed)) >= eta_) {
        d_[v] = seed;
        ++stats_.bounds_certified;
      } else {
        d_[v] = eta_degree_exact(probs_, eta_);
        valid_[v] = true;
        ++stats_.bounds_overshoot;
      }
    }

    const std::size_t max_value = g.max_degree();
    bin_start_.assign(max_value + 2, 0);
    for (VertexId v = 0; v < n; ++v) ++bin_start_[static_cast<std::size_t>(d_[v]) + 1];
    for (std::size_t k = 1; k < bin_start_.size(); ++k) bin_start_[k] += bin_start_[k - 1];
    A_.resize(n);
    pos_.resize(n);
    std::vector<std::size_t> next(bin_start_.begin(), bin_start_.end() - 1);
    for (VertexId v = 0; v < n; ++v) {
      pos_[v] = next[static_cast<std::size_t>(d_[v])]++;
      A_[pos_[v]] = v;
    }
  }

  std::vector<int> run(bool check_invariants) {
    const std::size_t n = g_.vertex_count();
    std::size_t i = 0;
    int level = 0;
    while (i < n) {
      const VertexId v = A_[i];
      if (valid_[v]) {
        gone_[v] = true;
        level = d_[v];
        for (const Neighbor& nb : g_.neighbors(v)) {
          const VertexId u = nb.id;
          if (gone_[u]) continue;
          if (d_[u] == level) {
            if (!valid_[u]) {
              move_right(u, std::max(exact(u), level));
              valid_[u] = true;
            }
          } else if (d_[u] > level) {
            move_left_one(u);
            valid_[u] = false;
          }
        }
        ++i;
      } else {
        // v heads its block, so lowering it in place keeps A sorted; this
        // only triggers when a certified seed and the exact value disagree
        // by rounding at a tie.
        const int target = std::max(exact(v), level);
        while (d_[v] > target) move_left_one(v);
        move_right(v, target);
        valid_[v] = true;
      }
      if (check_invariants) verify(i, level);
    }
    return d_;
  }

 private:
  void gather(VertexId v) {
    probs_.clear();
    for (const Neighbor& nb : g_.neighbors(v))
      if (!gone_[nb.id]) probs_.push_back(nb.prob);
  }

  int exact(VertexId v) {
    ++stats_.recomputations;
    gather(v);
    return eta_degree_exact(probs_, eta_);
  }

  void swap_positions(std::size_t a, std::size_t b) {
    std::swap(A_[a], A_[b]);
    pos_[A_[a]] = a;
    pos_[A_[b]] = b;
  }

  // Raise d[x] to `target`, hopping block by block to the right.
  void move_right(VertexId x, int target) {
    while (d_[x] < target) {
      const auto k = static_cast<std::size_t>(d_[x]);
      const std::size_t last = bin_start_[k + 1] - 1;
      swap_positions(pos_[x], last);
      --bin_start_[k + 1];
      ++d_[x];
    }
  }

  void move_left_one(VertexId x) {
    const auto k = static_cast<std::size_t>(d_[x]);
    swap_positions(pos_[x], bin_start_[k]);
    ++bin_start_[k];
    --d_[x];
  }

  void verify(std::size_t scan, int level) const {
    for (std::size_t j = 0; j < A_.size(); ++j)
      if (pos_[A_[j]] != j) throw Error("peel invariant: pos is not the inverse of A");
    for (std::size_t j = scan; j < A_.size(); ++j) {
      const VertexId x = A_[j];
      if (gone_[x]) throw Error("peel invariant: removed vertex right of the scan");
      if (d_[x] < level) throw Error("peel invariant: estimate below the processing level");
      if (j > scan && d_[A_[j - 1]] > d_[x]) throw Error("peel invariant: A not sorted");
      const auto k = static_cast<std::size_t>(d_[x]);
      if (j < bin_start_[k] || j >= bin_start_[k + 1])
        throw Error("peel invariant: block boundaries inconsistent");
    }
    for (std::size_t j = 0; j < scan; ++j)
      if (!gone_[A_[j]] || !valid_[A_[j]])
        throw Error("peel invariant: scanned vertex not finalised");
  }

  const ProbabilisticGraph& g_;
  double eta_;
  PeelStats& stats_;
  std::vector<int> d_;
  std::vector<bool> valid_;
  std::vector<bool> gone_;
  std::vector<VertexId> A_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> bin_start_;
  std::vector<double> probs_;
};

}  // namespace

Decomposition core_compute(const ProbabilisticGraph& g, double eta, const VertexSet& alive,
                           const std::vector<int>& initial_bounds, const PeelOptions& options) {
  check_eta(eta);
  const std::size_t n = g.vertex_count();
  if (alive.universe() != n) throw Error("alive set does not match the graph");
  if (initial_bounds.size() != n) throw Error("initial bounds do not match the graph");

  std::vector<VertexId> original;
  const ProbabilisticGraph local = induced_subgraph(g, alive, original);
  std::vector<int> seeds(local.vertex_count());
  for (VertexId v = 0; v < local.vertex_count(); ++v) {
    const int b = initial_bounds[original[v]];
    if (b < 0 || static_cast<std::size_t>(b) > local.degree(v))
      throw Error("initial bound " + std::to_string(b) + " of vertex '" + g.token(original[v]) +
                  "' outside [0, " + std::to_string(local.degree(v)) + "]");
    seeds[v] = b;
  }

  Decomposition dec;
  dec.eta = eta;
  dec.core.assign(n, kNotReported);
  dec.stats.alive = local.vertex_count();

  PeelState state(local, eta, seeds, dec.stats);
  const std::vector<int> cores = state.run(options.check_invariants);
  for (VertexId v = 0; v < local.vertex_count(); ++v) {
    dec.core[original[v]] = cores[v];
    dec.k_max = std::max(dec.k_max, cores[v]);
  }
  return dec;
}

MpaResult run_mpa(const ProbabilisticGraph& g, double eta, double tau1, int tau2,
                  const PeelOptions& options) {
  check_eta(eta);
  if (!(tau1 >= 0.0)) throw Error("tau1 must be >= 0");
  if (tau2 < 0) throw Error("tau2 must be >= 0");
  const std::size_t n = g.vertex_count();

  auto t0 = Clock::now();
  VertexSet stage1 = stage1_filter(g, tau1);
  const double screen1_ms = elapsed_ms(t0);

  t0 = Clock::now();
  Stage2Result stage2 = stage2_filter(g, stage1, eta, tau2);
  const double screen2_ms = elapsed_ms(t0);

  t0 = Clock::now();
  // Stage-2 estimates count stage-1 neighbours; cap them at the degree that
  // remains once stage-2 removals are applied.
  std::vector<int> seeds(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (!stage2.survivors.contains(v)) continue;
    int alive_degree = 0;
    for (const Neighbor& nb : g.neighbors(v))
      if (stage2.survivors.contains(nb.id)) ++alive_degree;
    seeds[v] = std::min(stage2.initial_bounds[v], alive_degree);
  }
  Decomposition dec = core_compute(g, eta, stage2.survivors, seeds, options);
  dec.timings.peel_ms = elapsed_ms(t0);
  dec.timings.screen1_ms = screen1_ms;
  dec.timings.screen2_ms = screen2_ms;
  dec.mode = Mode::kMpa;
  dec.tau1 = tau1;
  dec.tau2 = tau2;

  ScreeningReport report;
  report.eta = eta;
  report.tau1 = tau1;
  report.tau2 = tau2;
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
  return {std::move(dec), std::move(report)};
}

Decomposition run_pa(const ProbabilisticGraph& g, double eta, const PeelOptions& options) {
  Decomposition dec = run_mpa(g, eta, 0.0, 0, options).decomposition;
  dec.mode = Mode::kPa;
  return dec;
}

std::vector<int> deterministic_core_numbers(const ProbabilisticGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> deg(n);
  std::size_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(g.degree(v));
    max_deg = std::max(max_deg, g.degree(v));
  }
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (int x : deg) ++bin[static_cast<std::size_t>(x)];
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<VertexId> vert(n);
  std::vector<std::size_t> pos(n);
  for (VertexId v = 0; v < n; ++v) {
    pos[v] = bin[static_cast<std::size_t>(deg[v])]++;
    vert[pos[v]] = v;
  }
  for (std::size_t k = max_deg; k > 0; --k) bin[k] = bin[k - 1];
  if (!bin.empty()) bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = vert[i];
    for (const Neighbor& nb : g.neighbors(v)) {
      const VertexId u = nb.id;
      if (deg[u] > deg[v]) {
        const auto du = static_cast<std::size_t>(deg[u]);
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const VertexId w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return deg;
}

}  // namespace pcore
