#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "beepsim/types.hpp"

namespace beepsim {

// Thrown by text parsers; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Undirected simple graph over dense node ids 0..n-1.
// Neighbor lists are sorted and duplicate-free; every edge is stored both ways.
class Graph {
 public:
  Graph() = default;

  // Builds from an unordered edge list. Duplicate edges collapse to one;
  // self-loops and out-of-range ids throw.
  static Graph from_edges(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges);

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    check_node(v);
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  NodeId degree(NodeId v) const {
    check_node(v);
    return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]);
  }
  NodeId max_degree() const;
  bool has_edge(NodeId u, NodeId v) const;

  // All nodes at hop distance <= h from v, including v itself. Sorted.
  std::vector<NodeId> neighborhood(NodeId v, NodeId h) const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_node(NodeId v) const {
    if (v >= n_) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
  }

  NodeId n_ = 0;
  std::vector<std::size_t> offsets_;  // n_+1 entries
  std::vector<NodeId> adjacency_;
};

// G(n, p): each unordered pair present independently with probability p.
// Deterministic for a fixed seed.
Graph gen_erdos_renyi(NodeId n, double p, std::uint64_t seed);

// delta nodes at positions 1..delta on a line, adjacent iff their positions
// differ by at most delta/2 (transmission range delta/2). delta must be even
// and positive.
Graph gen_swat_line(NodeId delta);

// Random degree-regular simple graph: deterministic circulant start followed
// by seeded double-edge swaps. Requires n*degree even and degree < n.
Graph gen_random_regular(NodeId n, NodeId degree, std::uint64_t seed);

// Text format: first line "n <count>", then one "u v" edge per line.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_text(const std::string& text);
std::string save_edge_list(const Graph& g);

}  // namespace beepsim
