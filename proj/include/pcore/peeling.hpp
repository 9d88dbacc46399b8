#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pcore/graph.hpp"
#include "pcore/screening.hpp"

namespace pcore {

enum class Mode { kPa, kMpa };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct PhaseTimings {
  double screen1_ms = 0.0;
  double screen2_ms = 0.0;
  double peel_ms = 0.0;

  double total_ms() const { return screen1_ms + screen2_ms + peel_ms; }
};

// Counters collected by core_compute.
struct PeelStats {
  std::size_t alive = 0;
  // Initial bounds confirmed as lower bounds (Pr[deg >= b] >= eta).
  std::size_t bounds_certified = 0;
  // Initial bounds above the exact eta-degree, replaced by the exact value.
  std::size_t bounds_overshoot = 0;
  // Exact eta-degree evaluations during the scan (certification excluded).
  std::size_t recomputations = 0;
};

inline constexpr int kNotReported = -1;

struct Decomposition {
  double eta = 0.0;
  Mode mode = Mode::kPa;
  double tau1 = 0.0;
  int tau2 = 0;
  // core[v] for every vertex of the input graph; kNotReported for vertices
  // that did not survive screening.
  std::vector<int> core;
  int k_max = 0;
  PhaseTimings timings;
  PeelStats stats;

  bool reported(VertexId v) const { return core[v] != kNotReported; }
  std::size_t reported_count() const;
};

struct PeelOptions {
  // Re-verify the ordering invariants of the bucket array after every scan
  // step. Quadratic; meant for tests.
  bool check_invariants = false;
};

// Core numbers of the subgraph induced on `alive`.
//
// initial_bounds[v] seeds the degree estimate of each alive vertex and must
// lie in [0, number of alive neighbours of v]; Error is thrown otherwise.
// Every bound is checked before peeling: it is kept as a lazy lower bound when
// Pr[deg >= bound] >= eta, and replaced by the exact eta-degree otherwise. The
// result is therefore the same for any admissible bounds.
//
// The scan follows the classical bucket array: A holds alive vertices sorted
// by their estimate d, pos is its inverse and bin_start marks block
// boundaries. An unverified vertex reaching the scan position is recomputed
// and moved right; a verified one is removed with core number d, which lowers
// the estimate of each heavier neighbour by one. Exact recomputations are
// clamped below by the level being processed.
Decomposition core_compute(const ProbabilisticGraph& g, double eta, const VertexSet& alive,
                           const std::vector<int>& initial_bounds, const PeelOptions& options = {});

// Baseline: every vertex is peeled, seeded with normal-approximation bounds.
Decomposition run_pa(const ProbabilisticGraph& g, double eta, const PeelOptions& options = {});

struct MpaResult {
  Decomposition decomposition;
  ScreeningReport screening;
};

// Two screening stages followed by core_compute on the survivors, reusing the
// stage-2 estimates (capped at the surviving degree) as seeds.
MpaResult run_mpa(const ProbabilisticGraph& g, double eta, double tau1, int tau2,
                  const PeelOptions& options = {});

// Classical Batagelj-Zaversnik k-core numbers, ignoring probabilities.
std::vector<int> deterministic_core_numbers(const ProbabilisticGraph& g);

// TSV: '#' header lines with run metadata, then `token <TAB> core` for every
// reported vertex sorted by token (byte order).
void write_decomposition(std::ostream& out, const ProbabilisticGraph& g, const Decomposition& dec);

struct CoreTable {
  std::vector<std::pair<std::string, int>> entries;
  std::optional<double> eta;
  std::optional<std::string> mode;
};

// Reads the TSV produced by write_decomposition. Header lines are optional;
// `key=value` pairs found in them are picked up where recognised.
CoreTable read_core_table(std::istream& in);

// Maps a core table onto g. Throws Error for tokens not in g.
std::vector<int> cores_for_graph(const ProbabilisticGraph& g, const CoreTable& table);

}  // namespace pcore
