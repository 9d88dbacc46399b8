#include "pcore/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "pcore/degree.hpp"
#include "pcore/generator.hpp"
#include "pcore/graph.hpp"
#include "pcore/metrics.hpp"
#include "pcore/peeling.hpp"
#include "pcore/report_io.hpp"
#include "pcore/screening.hpp"
#include "pcore/thresholds.hpp"

namespace pcore {

namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::string cores;
  std::string baseline;
  std::string screening_output;
  double eta = 0.5;
  double tau1 = kDefaultTau1;
  int tau2 = kDefaultTau2;
  std::string mode = "mpa";
  std::size_t n = 0;
  std::size_t m = 0;
  std::string prob_law = "uniform";
  std::uint64_t seed = 1;
  std::string vertex;
  std::string eta_grid;
  int repeat = 1;
};

ProbabilisticGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input '" + path + "'");
  return parse_edge_list(in);
}

CoreTable load_cores(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open decomposition '" + path + "'");
  return read_core_table(in);
}

// Writes to `path` atomically, or to `out` when no path was given.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty())
    body(out);
  else
    write_file_atomically(path, body);
}

std::vector<double> parse_eta_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double eta = 0.0;
    try {
      eta = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error("bad eta grid entry '" + item + "'");
    check_eta(eta);
    grid.push_back(eta);
  }
  if (grid.empty()) throw Error("empty eta grid");
  return grid;
}

void report_timings(std::ostream& err, const Decomposition& dec) {
  err << "timings_ms\tmode=" << to_string(dec.mode) << "\tscreen1=" << format_number(dec.timings.screen1_ms)
      << "\tscreen2=" << format_number(dec.timings.screen2_ms)
      << "\tpeel=" << format_number(dec.timings.peel_ms)
      << "\ttotal=" << format_number(dec.timings.total_ms()) << '\n';
}

void cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Mode mode = parse_mode(cfg.mode);
  const ProbabilisticGraph g = load_graph(cfg.input);
  if (mode == Mode::kPa) {
    const Decomposition dec = run_pa(g, cfg.eta);
    emit(cfg.output, out, [&](std::ostream& os) { write_decomposition(os, g, dec); });
    report_timings(err, dec);
    return;
  }
  const MpaResult result = run_mpa(g, cfg.eta, cfg.tau1, cfg.tau2);
  std::string screening_path = cfg.screening_output;
  if (screening_path.empty() && !cfg.output.empty()) screening_path = cfg.output + ".screening.tsv";
  emit(cfg.output, out,
       [&](std::ostream& os) { write_decomposition(os, g, result.decomposition); });
  if (!screening_path.empty())
    write_file_atomically(screening_path, [&](std::ostream& os) {
      write_screening_report(os, g, result.screening);
    });
  err << "survivors\t" << result.screening.survivors.size() << '/' << g.vertex_count() << '\n';
  report_timings(err, result.decomposition);
}

const char* change_band(double pd_change, double pcc_change) {
  const double worst = std::max(std::fabs(pd_change), std::fabs(pcc_change));
  if (worst == 0.0) return "identical";
  if (worst <= 2.0) return "within_2pct";
  if (worst <= 10.0) return "within_10pct";
  if (worst <= 15.0) return "within_15pct";
  return "over_15pct";
}

void cmd_metrics(const RunConfig& cfg, std::ostream& out) {
  const ProbabilisticGraph g = load_graph(cfg.input);
  const CohesionReport report = max_core_report(g, cores_for_graph(g, load_cores(cfg.cores)));
  std::optional<CohesionReport> base;
  if (!cfg.baseline.empty())
    base = max_core_report(g, cores_for_graph(g, load_cores(cfg.baseline)));

  emit(cfg.output, out, [&](std::ostream& os) {
    write_cohesion_report(os, report);
    if (!base) return;
    const double pd_change = relative_change_percent(base->pd_avg, report.pd_avg);
    const double pcc_change = relative_change_percent(base->pcc_avg, report.pcc_avg);
    os << "baseline.k_max\t" << base->k_max << '\n';
    os << "baseline.component_count\t" << base->components.size() << '\n';
    os << "baseline.pd_avg\t" << format_number(base->pd_avg) << '\n';
    os << "baseline.pcc_avg\t" << format_number(base->pcc_avg) << '\n';
    os << "pd_change_pct\t" << format_number(pd_change) << '\n';
    os << "pcc_change_pct\t" << format_number(pcc_change) << '\n';
    os << "change_band\t" << change_band(pd_change, pcc_change) << '\n';
  });
}

ProbabilisticGraph graph_from_config(const RunConfig& cfg, std::string& provenance) {
  if (!cfg.input.empty()) {
    provenance = "input=" + cfg.input;
    return load_graph(cfg.input);
  }
  if (cfg.n == 0) throw Error("bench needs --input or generator parameters (--n, --m)");
  const ProbabilityLaw law = ProbabilityLaw::parse(cfg.prob_law);
  provenance = std::string("generator=") + kGeneratorName + " n=" + std::to_string(cfg.n) +
               " m=" + std::to_string(cfg.m) + " prob_law=" + law.to_string() +
               " seed=" + std::to_string(cfg.seed);
  return generate_random(cfg.n, cfg.m, law, cfg.seed);
}

// Runs `fn` `repeat` times and keeps the run with the median total time.
template <typename Fn>
auto median_run(int repeat, Fn fn) {
  std::vector<decltype(fn())> runs;
  for (int r = 0; r < std::max(1, repeat); ++r) runs.push_back(fn());
  auto total = [](const auto& run) {
    if constexpr (requires { run.decomposition; })
      return run.decomposition.timings.total_ms();
    else
      return run.timings.total_ms();
  };
  std::sort(runs.begin(), runs.end(),
            [&](const auto& a, const auto& b) { return total(a) < total(b); });
  return runs[runs.size() / 2];
}

void cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string provenance;
  const ProbabilisticGraph g = graph_from_config(cfg, provenance);
  const std::vector<double> grid = parse_eta_grid(cfg.eta_grid.empty() ? "0.1,0.5,0.9" : cfg.eta_grid);

  std::ostringstream table;
  table << "# " << provenance << " vertices=" << g.vertex_count() << " edges=" << g.edge_count()
        << " repeat=" << std::max(1, cfg.repeat) << '\n';
  table << "eta\tmode\ttau1\ttau2\tsurvivors\tk_max\tscreen1_ms\tscreen2_ms\tpeel_ms\ttotal_ms"
           "\trecomputations\tpd_avg\tpcc_avg\tpd_change_pct\tpcc_change_pct\n";

  auto cohesion = [&](const Decomposition& dec) -> std::optional<CohesionReport> {
    if (dec.reported_count() == 0) return std::nullopt;
    return max_core_report(g, dec);
  };
  auto row = [&](double eta, const Decomposition& dec, const std::optional<CohesionReport>& c,
                 const std::optional<CohesionReport>& base) {
    table << format_number(eta) << '\t' << to_string(dec.mode) << '\t' << format_number(dec.tau1)
          << '\t' << dec.tau2 << '\t' << dec.reported_count() << '\t' << dec.k_max << '\t'
          << format_number(dec.timings.screen1_ms) << '\t' << format_number(dec.timings.screen2_ms)
          << '\t' << format_number(dec.timings.peel_ms) << '\t'
          << format_number(dec.timings.total_ms()) << '\t' << dec.stats.recomputations << '\t';
    if (c) {
      table << format_number(c->pd_avg) << '\t' << format_number(c->pcc_avg) << '\t';
      if (base)
        table << format_number(relative_change_percent(base->pd_avg, c->pd_avg)) << '\t'
              << format_number(relative_change_percent(base->pcc_avg, c->pcc_avg));
      else
        table << "0\t0";
    } else {
      table << "-\t-\t-\t-";
    }
    table << '\n';
  };

  for (double eta : grid) {
    const Decomposition pa = median_run(cfg.repeat, [&] { return run_pa(g, eta); });
    const MpaResult mpa =
        median_run(cfg.repeat, [&] { return run_mpa(g, eta, cfg.tau1, cfg.tau2); });
    const auto pa_c = cohesion(pa);
    const auto mpa_c = cohesion(mpa.decomposition);
    row(eta, pa, pa_c, std::nullopt);
    row(eta, mpa.decomposition, mpa_c, pa_c);
    err << "eta=" << format_number(eta) << "\tpa_total_ms=" << format_number(pa.timings.total_ms())
        << "\tmpa_total_ms=" << format_number(mpa.decomposition.timings.total_ms()) << '\n';
  }
  emit(cfg.output, out, [&](std::ostream& os) { os << table.str(); });
}

void cmd_suggest(const RunConfig& cfg, std::ostream& out) {
  const ProbabilisticGraph g = load_graph(cfg.input);
  const std::vector<double> grid =
      cfg.eta_grid.empty() ? std::vector<double>{cfg.eta} : parse_eta_grid(cfg.eta_grid);
  emit(cfg.output, out, [&](std::ostream& os) {
    write_suggestion(os, "tau1", suggest_stage1_from_sums(expected_degrees(g)));
    for (double eta : grid) {
      const std::string prefix = grid.size() == 1 ? "tau2" : "tau2@" + format_number(eta);
      if (grid.size() == 1) os << "eta\t" << format_number(eta) << '\n';
      write_suggestion(os, prefix.c_str(),
                       suggest_stage2_from_bounds(initial_bounds_full_graph(g, eta)));
    }
  });
}

void cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const ProbabilityLaw law = ProbabilityLaw::parse(cfg.prob_law);
  const ProbabilisticGraph g = generate_random(cfg.n, cfg.m, law, cfg.seed);
  emit(cfg.output, out, [&](std::ostream& os) {
    os << "# generator=" << kGeneratorName << " n=" << cfg.n << " m=" << cfg.m
       << " prob_law=" << law.to_string() << " seed=" << cfg.seed << '\n';
    write_edge_list(os, g);
  });
}

void cmd_degree(const RunConfig& cfg, std::ostream& out) {
  check_eta(cfg.eta);
  const ProbabilisticGraph g = load_graph(cfg.input);
  const auto v = g.find(cfg.vertex);
  if (!v) throw Error("unknown vertex '" + cfg.vertex + "'");
  std::vector<double> probs;
  double sum_p = 0.0, sum_q = 0.0;
  for (const Neighbor& nb : g.neighbors(*v)) {
    probs.push_back(nb.prob);
    sum_p += nb.prob;
    sum_q += 1.0 - nb.prob;
  }
  const DegreeDistribution dist = degree_pmf(probs);
  emit(cfg.output, out, [&](std::ostream& os) {
    os << "vertex\t" << cfg.vertex << '\n';
    os << "eta\t" << format_number(cfg.eta) << '\n';
    os << "degree\t" << probs.size() << '\n';
    os << "sum_p\t" << format_number(sum_p) << '\n';
    os << "sum_1mp\t" << format_number(sum_q) << '\n';
    os << "eta_degree_exact\t" << eta_degree_exact(probs, cfg.eta) << '\n';
    os << "eta_degree_clt\t" << eta_degree_clt_bound(probs, cfg.eta) << '\n';
    for (std::size_t t = 0; t < dist.tail.size(); ++t)
      os << "tail." << t << '\t' << format_number(dist.tail[t]) << '\n';
  });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic (k,eta)-core decomposition"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto eta_check = CLI::Range(0.0, 1.0);

  auto* decompose = app.add_subcommand("decompose", "Core numbers of every surviving vertex");
  decompose->add_option("--input", cfg.input, "Edge list")->required();
  decompose->add_option("--output", cfg.output, "Decomposition TSV (default: stdout)");
  decompose->add_option("--mode", cfg.mode, "pa or mpa")->check(CLI::IsMember({"pa", "mpa"}));
  decompose->add_option("--eta", cfg.eta)->check(eta_check);
  decompose->add_option("--t1", cfg.tau1, "Stage-1 threshold")->check(CLI::NonNegativeNumber);
  decompose->add_option("--t2", cfg.tau2, "Stage-2 threshold")->check(CLI::NonNegativeNumber);
  decompose->add_option("--screening-output", cfg.screening_output,
                        "Screening report (default: <output>.screening.tsv)");

  auto* metrics = app.add_subcommand("metrics", "PD/PCC of the maximum core");
  metrics->add_option("--input", cfg.input, "Edge list")->required();
  metrics->add_option("--cores", cfg.cores, "Decomposition TSV")->required();
  metrics->add_option("--baseline", cfg.baseline, "Second decomposition to compare against");
  metrics->add_option("--output", cfg.output);

  auto* bench = app.add_subcommand("bench", "PA vs M-PA over an eta grid");
  bench->add_option("--input", cfg.input);
  bench->add_option("--n", cfg.n);
  bench->add_option("--m", cfg.m);
  bench->add_option("--prob-law", cfg.prob_law, "uniform | const:<c> | beta:<a>,<b>");
  bench->add_option("--seed", cfg.seed);
  bench->add_option("--eta-grid", cfg.eta_grid, "Comma-separated, default 0.1,0.5,0.9");
  bench->add_option("--t1", cfg.tau1)->check(CLI::NonNegativeNumber);
  bench->add_option("--t2", cfg.tau2)->check(CLI::NonNegativeNumber);
  bench->add_option("--repeat", cfg.repeat, "Runs per configuration; the median is kept")
      ->check(CLI::PositiveNumber);
  bench->add_option("--output", cfg.output);

  auto* suggest = app.add_subcommand("suggest", "Screening thresholds from the data");
  suggest->add_option("--input", cfg.input)->required();
  suggest->add_option("--eta", cfg.eta)->check(eta_check);
  suggest->add_option("--eta-grid", cfg.eta_grid);
  suggest->add_option("--output", cfg.output);

  auto* generate = app.add_subcommand("generate", "Random probabilistic graph");
  generate->add_option("--n", cfg.n)->required();
  generate->add_option("--m", cfg.m)->required();
  generate->add_option("--prob-law", cfg.prob_law);
  generate->add_option("--seed", cfg.seed);
  generate->add_option("--output", cfg.output);

  auto* degree = app.add_subcommand("degree", "Degree statistics of one vertex");
  degree->add_option("--input", cfg.input)->required();
  degree->add_option("--vertex", cfg.vertex)->required();
  degree->add_option("--eta", cfg.eta)->check(eta_check);
  degree->add_option("--output", cfg.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*decompose) cmd_decompose(cfg, out, err);
    else if (*metrics) cmd_metrics(cfg, out);
    else if (*bench) cmd_bench(cfg, out, err);
    else if (*suggest) cmd_suggest(cfg, out);
    else if (*generate) cmd_generate(cfg, out);
    else if (*degree) cmd_degree(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace pcore
