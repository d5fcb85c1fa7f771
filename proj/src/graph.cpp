#include "beepsim/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "beepsim/coins.hpp"

namespace beepsim {

Graph Graph::from_edges(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    auto& nb = adj[v];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.offsets_[v + 1] = g.offsets_[v] + nb.size();
  }
  g.adjacency_.reserve(g.offsets_[n]);
  for (NodeId v = 0; v < n; ++v)
    g.adjacency_.insert(g.adjacency_.end(), adj[v].begin(), adj[v].end());
  return g;
}

NodeId Graph::max_degree() const {
  NodeId best = 0;
  for (NodeId v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  check_node(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<NodeId> Graph::neighborhood(NodeId v, NodeId h) const {
  check_node(v);
  std::vector<std::uint8_t> seen(n_, 0);
  std::deque<std::pair<NodeId, NodeId>> queue;  // (node, depth)
  seen[v] = 1;
  queue.emplace_back(v, 0);
  std::vector<NodeId> out;
  while (!queue.empty()) {
    auto [u, d] = queue.front();
    queue.pop_front();
    out.push_back(u);
    if (d == h) continue;
    for (NodeId w : neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.emplace_back(w, d + 1);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < n_; ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph gen_erdos_renyi(NodeId n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
  std::vector<std::pair<NodeId, NodeId>> edges;
  if (p > 0.0) {
    // One counter-indexed draw per unordered pair; p == 1 short-circuits so the
    // threshold cast below never overflows.
    const bool all = p >= 1.0;
    const std::uint64_t threshold = all ? 0 : static_cast<std::uint64_t>(p * 0x1p64);
    std::uint64_t pair_index = 0;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v, ++pair_index) {
        if (all || stream_draw(seed, kEdgeStream, pair_index) < threshold)
          edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_swat_line(NodeId delta) {
  if (delta < 2 || delta % 2 != 0)
    throw std::invalid_argument("line construction needs an even delta >= 2");
  const NodeId range = delta / 2;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < delta; ++i)
    for (NodeId j = i + 1; j < delta && j - i <= range; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(delta, edges);
}

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

}  // namespace

Graph gen_random_regular(NodeId n, NodeId degree, std::uint64_t seed) {
  if (degree >= n && !(degree == 0 && n == 0))
    throw std::invalid_argument("degree must be smaller than node count");
  if ((std::uint64_t{n} * degree) % 2 != 0)
    throw std::invalid_argument("n * degree must be even");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId j = 1; j <= degree / 2; ++j)
    for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, (i + j) % n);
  if (degree % 2 == 1)  // n is even here
    for (NodeId i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);

  std::unordered_set<std::uint64_t> present;
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    present.insert(edge_key(u, v));
  }

  // Double-edge swaps preserve degrees; rejected swaps (loops, multi-edges)
  // are simply skipped. ~20 passes over the edge list mixes well enough for
  // experiment topologies.
  const std::uint64_t m = edges.size();
  std::uint64_t ctr = 0;
  auto draw = [&] { return stream_draw(seed, kSwapStream, ctr++); };
  for (std::uint64_t step = 0; step < 20 * m; ++step) {
    auto& e1 = edges[draw() % m];
    auto& e2 = edges[draw() % m];
    auto [a, b] = e1;
    auto [c, d] = e2;
    if (draw() & 1) std::swap(c, d);
    // candidate rewiring: (a,b),(c,d) -> (a,d),(c,b)
    if (a == d || c == b || a == c || b == d) continue;
    if (present.count(edge_key(a, d)) || present.count(edge_key(c, b))) continue;
    present.erase(edge_key(a, b));
    present.erase(edge_key(c, d));
    present.insert(edge_key(a, d));
    present.insert(edge_key(c, b));
    e1 = {a, d};
    e2 = {c, b};
  }
  return Graph::from_edges(n, edges);
}

Graph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  NodeId n = 0;
  bool have_header = false;
  std::vector<std::pair<NodeId, NodeId>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      long long count = -1;
      if (!(ls >> tag >> count) || tag != "n" || count < 0)
        throw ParseError(line_no, "expected header \"n <count>\"");
      n = static_cast<NodeId>(count);
      have_header = true;
      continue;
    }
    long long u = -1, v = -1;
    if (!(ls >> u >> v) || u < 0 || v < 0) throw ParseError(line_no, "expected \"u v\"");
    std::string rest;
    if (ls >> rest) throw ParseError(line_no, "trailing tokens after edge");
    if (u >= n || v >= n) throw ParseError(line_no, "node id out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (!have_header) throw ParseError(line_no, "missing header \"n <count>\"");
  return Graph::from_edges(n, edges);
}

Graph load_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

std::string save_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.node_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace beepsim
