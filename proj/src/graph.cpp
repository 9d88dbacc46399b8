#include "pcore/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace pcore {

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (std::size_t v = 0; v < bits_.size(); ++v)
    if (bits_[v]) out.push_back(static_cast<VertexId>(v));
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t v = 0; v < bits_.size(); ++v)
    if (bits_[v] && !other.contains(static_cast<VertexId>(v))) return false;
  return true;
}

ProbabilisticGraph::ProbabilisticGraph(std::vector<std::string> tokens,
                                       const std::vector<Edge>& edges)
    : tokens_(std::move(tokens)) {
  const std::size_t n = tokens_.size();
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw Error("edge endpoint out of range");
    if (e.u == e.v) throw Error("self-loop on vertex '" + tokens_[e.u] + "'");
    if (!(e.prob > 0.0 && e.prob <= 1.0))
      throw Error("edge probability outside (0,1]");
    ++deg[e.u];
    ++deg[e.v];
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    adjacency_[fill[e.u]++] = {e.v, e.prob};
    adjacency_[fill[e.v]++] = {e.u, e.prob};
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    auto dup = std::adjacent_find(first, last,
                                  [](const Neighbor& a, const Neighbor& b) { return a.id == b.id; });
    if (dup != last)
      throw Error("duplicate edge {" + tokens_[v] + ", " + tokens_[dup->id] + "}");
  }
  edge_count_ = edges.size();
}

ProbabilisticGraph ProbabilisticGraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::string> tokens(n);
  for (std::size_t i = 0; i < n; ++i) tokens[i] = std::to_string(i);
  return ProbabilisticGraph(std::move(tokens), edges);
}

std::optional<VertexId> ProbabilisticGraph::find(const std::string& token) const {
  auto it = std::find(tokens_.begin(), tokens_.end(), token);
  if (it == tokens_.end()) return std::nullopt;
  return static_cast<VertexId>(it - tokens_.begin());
}

double ProbabilisticGraph::edge_probability(VertexId u, VertexId v) const {
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& a, VertexId id) { return a.id < id; });
  return (it != nbrs.end() && it->id == v) ? it->prob : 0.0;
}

std::vector<Edge> ProbabilisticGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (const Neighbor& nb : neighbors(u))
      if (u < nb.id) out.push_back({u, nb.id, nb.prob});
  return out;
}

std::size_t ProbabilisticGraph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

double ProbabilisticGraph::average_probability() const {
  if (edge_count_ == 0) return 0.0;
  double total = 0.0;
  for (const Neighbor& nb : adjacency_) total += nb.prob;
  return total / static_cast<double>(adjacency_.size());
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

ProbabilisticGraph parse_edge_list(std::istream& in) {
  std::vector<std::string> tokens;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Edge> edges;
  // Unordered pair -> line of first occurrence, for duplicate reporting.
  std::unordered_map<std::uint64_t, std::size_t> seen;

  auto intern = [&](std::string_view tok) {
    auto [it, inserted] = ids.try_emplace(std::string(tok), static_cast<VertexId>(tokens.size()));
    if (inserted) tokens.emplace_back(tok);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() != 3)
      throw ParseError(lineno, "expected 'u v p', got " + std::to_string(fields.size()) + " fields");

    double p = 0.0;
    auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), p);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size())
      throw ParseError(lineno, "malformed probability '" + std::string(fields[2]) + "'");
    if (!(p > 0.0 && p <= 1.0))
      throw ParseError(lineno, "probability " + std::string(fields[2]) + " outside (0,1]");
    if (fields[0] == fields[1])
      throw ParseError(lineno, "self-loop on vertex '" + std::string(fields[0]) + "'");

    VertexId u = intern(fields[0]);
    VertexId v = intern(fields[1]);
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    auto [it, fresh] = seen.try_emplace(key, lineno);
    if (!fresh)
      throw ParseError(lineno, "duplicate edge {" + std::string(fields[0]) + ", " +
                                   std::string(fields[1]) + "} (first seen at line " +
                                   std::to_string(it->second) + ")");
    edges.push_back({u, v, p});
  }
  return ProbabilisticGraph(std::move(tokens), edges);
}

ProbabilisticGraph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const ProbabilisticGraph& g) {
  char buf[64];
  for (const Edge& e : g.edges()) {
    auto res = std::to_chars(buf, buf + sizeof buf, e.prob);
    out << g.token(e.u) << ' ' << g.token(e.v) << ' ' << std::string_view(buf, res.ptr - buf)
        << '\n';
  }
}

bool equal_by_label(const ProbabilisticGraph& a, const ProbabilisticGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::unordered_map<std::string, VertexId> in_b;
  for (VertexId v = 0; v < b.vertex_count(); ++v) in_b.emplace(b.token(v), v);
  for (VertexId u = 0; u < a.vertex_count(); ++u) {
    auto it = in_b.find(a.token(u));
    if (it == in_b.end() || a.degree(u) != b.degree(it->second)) return false;
    for (const Neighbor& nb : a.neighbors(u)) {
      auto jt = in_b.find(a.token(nb.id));
      if (jt == in_b.end() || b.edge_probability(it->second, jt->second) != nb.prob) return false;
    }
  }
  return true;
}

ProbabilisticGraph induced_subgraph(const ProbabilisticGraph& g, const VertexSet& s,
                                    std::vector<VertexId>& original_ids) {
  const std::size_t n = g.vertex_count();
  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> remap(n, kAbsent);
  original_ids.clear();
  std::vector<std::string> tokens;
  for (VertexId v = 0; v < n; ++v) {
    if (!s.contains(v)) continue;
    remap[v] = static_cast<VertexId>(original_ids.size());
    original_ids.push_back(v);
    tokens.push_back(g.token(v));
  }
  std::vector<Edge> edges;
  for (VertexId u : original_ids)
    for (const Neighbor& nb : g.neighbors(u))
      if (u < nb.id && remap[nb.id] != kAbsent) edges.push_back({remap[u], remap[nb.id], nb.prob});
  return ProbabilisticGraph(std::move(tokens), edges);
}

ProbabilisticGraph induced_subgraph(const ProbabilisticGraph& g, const VertexSet& s) {
  std::vector<VertexId> ignored;
  return induced_subgraph(g, s, ignored);
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

std::vector<std::size_t> component_labels(const ProbabilisticGraph& g, std::size_t& count) {
  const std::size_t n = g.vertex_count();
  DisjointSets sets(n);
  for (VertexId u = 0; u < n; ++u)
    for (const Neighbor& nb : g.neighbors(u))
      if (u < nb.id) sets.unite(u, nb.id);

  // Scanning ids in order numbers components by smallest member.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index_of_root(n, kNone);
  std::vector<std::size_t> label(n);
  count = 0;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId r = sets.find(v);
    if (index_of_root[r] == kNone) index_of_root[r] = count++;
    label[v] = index_of_root[r];
  }
  return label;
}

std::vector<VertexSet> connected_components(const ProbabilisticGraph& g) {
  std::size_t count = 0;
  const std::vector<std::size_t> label = component_labels(g, count);
  std::vector<VertexSet> components(count, VertexSet(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) components[label[v]].insert(v);
  return components;
}

}  // namespace pcore
