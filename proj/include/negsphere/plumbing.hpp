#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace negsphere {

// One embedded surface in a configuration.
struct Sphere {
  std::string label;
  std::int64_t weight = 0;  // self-intersection
  int genus = 0;
  bool exceptional = false;  // created by a blow-up

  friend bool operator==(const Sphere&, const Sphere&) = default;
};

// Unordered pair of vertex indices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class RewriteKind { EdgeBlowup, PointBlowup };

struct Rewrite {
  RewriteKind kind = RewriteKind::EdgeBlowup;
  int first = -1;
  int second = -1;  // -1 for a point blow-up
  int created = -1;

  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

/// Vertex-weighted simple graph of surfaces; edges are transverse intersection
/// points. Cycles and positive genus are allowed here and rejected only when
/// the configuration is smoothed.
class PlumbingGraph {
 public:
  int add_vertex(Sphere sphere);
  void add_edge(int a, int b);
  void remove_edge(Edge e);
  void set_weight(int v, std::int64_t weight);
  void append_trace(Rewrite r) { trace_.push_back(r); }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Sphere>& vertices() const { return vertices_; }
  const Sphere& vertex(int v) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Rewrite>& trace() const { return trace_; }

  bool has_edge(Edge e) const;
  std::vector<std::vector<int>> adjacency() const;
  std::int64_t total_weight() const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

 private:
  friend PlumbingGraph blow_up_edge(const PlumbingGraph& g, Edge e);
  friend PlumbingGraph blow_up_point_on_vertex(const PlumbingGraph& g, int v);

  void check_vertex(int v) const;
  // Copy with capacity for one more vertex, two more edges and one more trace record.
  PlumbingGraph with_room() const;

  std::vector<Sphere> vertices_;
  std::vector<Edge> edges_;
  std::vector<Rewrite> trace_;
};

// Orientation signs: adjacent vertices carry opposite signs.
struct Coloring {
  std::vector<int> sign;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

bool is_connected(const PlumbingGraph& g);
bool is_tree(const PlumbingGraph& g);

// Blows up the intersection point e: both endpoints lose 1 and a new (-1)
// sphere meets each of them once.
PlumbingGraph blow_up_edge(const PlumbingGraph& g, Edge e);

// Blows up a generic point of sphere v: v loses 1 and gains a (-1) leaf.
PlumbingGraph blow_up_point_on_vertex(const PlumbingGraph& g, int v);

// BFS coloring from vertex 0 (sign +1). Throws on disconnected or odd-cycle input.
Coloring two_coloring(const PlumbingGraph& g);

/// Self-intersection of the sphere obtained by orienting the components so
/// that every intersection is negative and smoothing all crossings:
/// sum of weights minus twice the number of edges.
///
/// Only defined for connected trees of spheres; anything else throws
/// std::domain_error because the result would not be a sphere.
std::int64_t smooth(const PlumbingGraph& g);

// v^T Q v for the sign vector v of `c` and the intersection matrix Q
// (weights on the diagonal, 1 per edge off it). Evaluated densely.
std::int64_t oracle_square(const PlumbingGraph& g, const Coloring& c);

}  // namespace negsphere
