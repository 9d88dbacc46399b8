#include "pcore/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "pcore/graph.hpp"
#include "pcore/peeling.hpp"

namespace pcore {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string format_exact(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& body) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
      body(out);
      out.flush();
      if (!out) throw Error("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

void write_decomposition(std::ostream& out, const ProbabilisticGraph& g, const Decomposition& dec) {
  out << "# eta=" << format_exact(dec.eta) << " mode=" << to_string(dec.mode)
      << " tau1=" << format_exact(dec.tau1) << " tau2=" << dec.tau2 << '\n';
  out << "# k_max=" << dec.k_max << " reported=" << dec.reported_count()
      << " vertices=" << g.vertex_count() << '\n';

  std::vector<VertexId> order;
  order.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (dec.reported(v)) order.push_back(v);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return g.token(a) < g.token(b); });
  for (VertexId v : order) out << g.token(v) << '\t' << dec.core[v] << '\n';
}

CoreTable read_core_table(std::istream& in) {
  CoreTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream fields(line.substr(1));
      std::string kv;
      while (fields >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        if (key == "eta") {
          double eta = 0.0;
          auto res = std::from_chars(value.data(), value.data() + value.size(), eta);
          if (res.ec == std::errc()) table.eta = eta;
        } else if (key == "mode") {
          table.mode = value;
        }
      }
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(lineno, "expected 'vertex<TAB>core'");
    const std::string token = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    int core = 0;
    auto res = std::from_chars(value.data(), value.data() + value.size(), core);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size() || core < 0)
      throw ParseError(lineno, "malformed core number '" + value + "'");
    table.entries.emplace_back(token, core);
  }
  return table;
}

std::vector<int> cores_for_graph(const ProbabilisticGraph& g, const CoreTable& table) {
  std::unordered_map<std::string, VertexId> ids;
  ids.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) ids.emplace(g.token(v), v);
  std::vector<int> core(g.vertex_count(), kNotReported);
  for (const auto& [token, value] : table.entries) {
    auto it = ids.find(token);
    if (it == ids.end()) throw Error("decomposition vertex '" + token + "' is not in the graph");
    if (core[it->second] != kNotReported)
      throw Error("decomposition lists vertex '" + token + "' twice");
    core[it->second] = value;
  }
  return core;
}

}  // namespace pcore
