#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcore {

using VertexId = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected edge-list input; line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Neighbor {
  VertexId id;
  double prob;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Edge {
  VertexId u;
  VertexId v;
  double prob;
};

// Membership bitmask over internal ids 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe, bool full = false)
      : bits_(universe, full), count_(full ? universe : 0) {}

  static VertexSet all(std::size_t universe) { return VertexSet(universe, true); }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(VertexId v) const { return v < bits_.size() && bits_[v]; }

  void insert(VertexId v) {
    if (!bits_[v]) {
      bits_[v] = true;
      ++count_;
    }
  }

  void erase(VertexId v) {
    if (bits_[v]) {
      bits_[v] = false;
      --count_;
    }
  }

  // Members in ascending id order.
  std::vector<VertexId> members() const;

  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

// Immutable undirected graph with an existence probability in (0,1] per edge.
// Adjacency is stored in CSR form with every list sorted by neighbor id.
class ProbabilisticGraph {
 public:
  ProbabilisticGraph() : offsets_(1, 0) {}

  // Validates and canonicalises. Throws Error on self-loops, duplicate
  // unordered pairs, out-of-range ids or probabilities outside (0,1].
  ProbabilisticGraph(std::vector<std::string> tokens, const std::vector<Edge>& edges);

  // Unlabelled convenience: tokens become "0".."n-1".
  static ProbabilisticGraph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return tokens_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  const std::string& token(VertexId v) const { return tokens_[v]; }
  const std::vector<std::string>& tokens() const { return tokens_; }

  // Linear lookup; intended for CLI use, not hot loops.
  std::optional<VertexId> find(const std::string& token) const;

  // Probability of edge {u,v}, or 0 when absent. Binary search on u's list.
  double edge_probability(VertexId u, VertexId v) const;

  // Each edge once with u < v, ordered by (u, v).
  std::vector<Edge> edges() const;

  std::size_t max_degree() const;
  // Mean edge probability (P_avg); 0 for an edgeless graph.
  double average_probability() const;

  friend bool operator==(const ProbabilisticGraph& a, const ProbabilisticGraph& b) {
    return a.tokens_ == b.tokens_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> tokens_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::size_t edge_count_ = 0;
};

// Reads `u v p` lines; '#' comments and blank lines are skipped, CRLF is
// accepted. Tokens get internal ids in first-appearance order.
ProbabilisticGraph parse_edge_list(std::istream& in);
ProbabilisticGraph parse_edge_list_string(const std::string& text);

// Writes one `u v p` line per edge. Probabilities use the shortest decimal
// that round-trips, so parse_edge_list reproduces the graph exactly.
void write_edge_list(std::ostream& out, const ProbabilisticGraph& g);

// True when both graphs have the same vertex tokens and the same edges
// between equal token pairs with identical probabilities, irrespective of
// internal numbering.
bool equal_by_label(const ProbabilisticGraph& a, const ProbabilisticGraph& b);

// Subgraph on s with every edge whose endpoints both lie in s. Vertices are
// renumbered in ascending original id; tokens carry over.
ProbabilisticGraph induced_subgraph(const ProbabilisticGraph& g, const VertexSet& s);

// Same as induced_subgraph, also returning new id -> original id.
ProbabilisticGraph induced_subgraph(const ProbabilisticGraph& g, const VertexSet& s,
                                    std::vector<VertexId>& original_ids);

// Component index of every vertex, components numbered in order of their
// smallest member id. Returns the number of components through `count`.
std::vector<std::size_t> component_labels(const ProbabilisticGraph& g, std::size_t& count);

// Components ordered by smallest member id. Each set spans all n ids, so
// prefer component_labels on graphs with very many components.
std::vector<VertexSet> connected_components(const ProbabilisticGraph& g);

}  // namespace pcore
