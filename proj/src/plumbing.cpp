#include "negsphere/plumbing.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace negsphere {

void PlumbingGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of " +
                            std::to_string(vertex_count()) + " vertices");
  }
}

int PlumbingGraph::add_vertex(Sphere sphere) {
  vertices_.push_back(std::move(sphere));
  return vertex_count() - 1;
}

void PlumbingGraph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  const Edge e = Edge::of(a, b);
  if (has_edge(e)) {
    throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" +
                                std::to_string(e.v));
  }
  edges_.push_back(e);
}

void PlumbingGraph::remove_edge(Edge e) {
  e = Edge::of(e.u, e.v);
  auto it = std::find(edges_.begin(), edges_.end(), e);
  if (it == edges_.end()) {
    throw std::invalid_argument("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  edges_.erase(it);
}

void PlumbingGraph::set_weight(int v, std::int64_t weight) {
  check_vertex(v);
  vertices_[v].weight = weight;
}

const Sphere& PlumbingGraph::vertex(int v) const {
  check_vertex(v);
  return vertices_[v];
}

bool PlumbingGraph::has_edge(Edge e) const {
  e = Edge::of(e.u, e.v);
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<std::vector<int>> PlumbingGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices_.size());
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::int64_t PlumbingGraph::total_weight() const {
  std::int64_t sum = 0;
  for (const Sphere& s : vertices_) sum += s.weight;
  return sum;
}

PlumbingGraph PlumbingGraph::with_room() const {
  PlumbingGraph out;
  out.vertices_.reserve(vertices_.size() + 1);
  out.edges_.reserve(edges_.size() + 2);
  out.trace_.reserve(trace_.size() + 1);
  out.vertices_.assign(vertices_.begin(), vertices_.end());
  out.edges_.assign(edges_.begin(), edges_.end());
  out.trace_.assign(trace_.begin(), trace_.end());
  return out;
}

namespace {

// Number of connected components, by union-find over the edge list.
int component_count(const PlumbingGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = g.vertex_count();
  for (const Edge& e : g.edges()) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace

bool is_connected(const PlumbingGraph& g) {
  return g.vertex_count() > 0 && component_count(g) == 1;
}

bool is_tree(const PlumbingGraph& g) {
  return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

PlumbingGraph blow_up_edge(const PlumbingGraph& g, Edge e) {
  e = Edge::of(e.u, e.v);
  if (!g.has_edge(e)) {
    throw std::invalid_argument("cannot blow up missing edge " + std::to_string(e.u) + "-" +
                                std::to_string(e.v));
  }
  PlumbingGraph out = g.with_room();
  out.remove_edge(e);
  out.set_weight(e.u, g.vertex(e.u).weight - 1);
  out.set_weight(e.v, g.vertex(e.v).weight - 1);
  const int created =
      out.add_vertex({"x" + std::to_string(g.vertex_count()), -1, 0, true});
  out.add_edge(e.u, created);
  out.add_edge(created, e.v);
  out.append_trace({RewriteKind::EdgeBlowup, e.u, e.v, created});
  return out;
}

PlumbingGraph blow_up_point_on_vertex(const PlumbingGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw std::invalid_argument("cannot blow up a point on missing vertex " +
                                std::to_string(v));
  }
  PlumbingGraph out = g.with_room();
  out.set_weight(v, g.vertex(v).weight - 1);
  const int created =
      out.add_vertex({"x" + std::to_string(g.vertex_count()), -1, 0, true});
  out.add_edge(v, created);
  out.append_trace({RewriteKind::PointBlowup, v, -1, created});
  return out;
}

Coloring two_coloring(const PlumbingGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("two_coloring: graph is not connected");
  const auto adj = g.adjacency();
  Coloring c{std::vector<int>(adj.size(), 0)};
  std::queue<int> q;
  c.sign[0] = 1;
  q.push(0);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (c.sign[w] == 0) {
        c.sign[w] = -c.sign[v];
        q.push(w);
      } else if (c.sign[w] == c.sign[v]) {
        throw std::invalid_argument("two_coloring: not bipartite (odd cycle through " +
                                    std::to_string(v) + "-" + std::to_string(w) + ")");
      }
    }
  }
  return c;
}

std::int64_t smooth(const PlumbingGraph& g) {
  if (!is_connected(g)) throw std::domain_error("smooth: configuration is not connected");
  if (g.edge_count() != g.vertex_count() - 1) {
    throw std::domain_error("smooth: configuration contains a cycle");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex(v).genus != 0) {
      throw std::domain_error("smooth: vertex " + std::to_string(v) + " has genus " +
                              std::to_string(g.vertex(v).genus));
    }
  }
  return g.total_weight() - 2 * static_cast<std::int64_t>(g.edge_count());
}

std::int64_t oracle_square(const PlumbingGraph& g, const Coloring& c) {
  const int n = g.vertex_count();
  if (static_cast<int>(c.sign.size()) != n) {
    throw std::invalid_argument("oracle_square: coloring size does not match graph");
  }
  for (int s : c.sign) {
    if (s != 1 && s != -1) throw std::invalid_argument("oracle_square: sign must be +1 or -1");
  }
  for (const Edge& e : g.edges()) {
    if (c.sign[e.u] == c.sign[e.v]) {
      std::ostringstream msg;
      msg << "oracle_square: invalid coloring, edge " << e.u << "-" << e.v
          << " joins equal signs";
      throw std::invalid_argument(msg.str());
    }
  }

  std::vector<std::int64_t> q(static_cast<std::size_t>(n) * n, 0);
  for (int v = 0; v < n; ++v) q[static_cast<std::size_t>(v) * n + v] = g.vertex(v).weight;
  for (const Edge& e : g.edges()) {
    q[static_cast<std::size_t>(e.u) * n + e.v] += 1;
    q[static_cast<std::size_t>(e.v) * n + e.u] += 1;
  }

  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    std::int64_t row = 0;
    for (int j = 0; j < n; ++j) row += q[static_cast<std::size_t>(i) * n + j] * c.sign[j];
    total += c.sign[i] * row;
  }
  return total;
}

}  // namespace negsphere
