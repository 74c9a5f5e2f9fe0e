#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "error.hpp"

namespace gg {

// Undirected multigraph stored as darts: edge i contributes darts 2i (u->v)
// and 2i+1 (v->u), swapped by a fixed-point-free involution. Loops and
// parallel edges are allowed. Immutable after construction.
class Graph {
public:
  static Graph build(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                     int basepoint = 0);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(source_.size() / 2); }
  int dart_count() const { return static_cast<int>(source_.size()); }
  int basepoint() const { return basepoint_; }

  int source(int dart) const { check_dart(dart); return source_[dart]; }
  int target(int dart) const { check_dart(dart); return target_[dart]; }
  int involution(int dart) const { check_dart(dart); return dart ^ 1; }

  // darts leaving v, ascending index
  const std::vector<int>& darts_from(int v) const;

  bool is_connected() const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
  void check_dart(int d) const {
    if (d < 0 || d >= dart_count()) fail(ErrC::bounds, "dart index out of range");
  }

  int vertex_count_ = 0;
  int basepoint_ = 0;
  std::vector<int> source_, target_;
  std::vector<std::vector<int>> out_;  // per vertex
  std::vector<std::pair<int, int>> edges_;
};

using GraphPtr = std::shared_ptr<const Graph>;

// Edge path: darts in traversal order (dart 0 is walked first). The path's
// source alpha is the start vertex, its target beta the end vertex. Under the
// groupoid composition convention c1*c2 (c2 traversed first), the stored
// order is the reverse of the written composition.
class EdgePath {
public:
  EdgePath(const Graph& g, std::vector<int> darts, int start_vertex);
  static EdgePath empty_at(const Graph& g, int vertex);

  const std::vector<int>& darts() const { return darts_; }
  int length() const { return static_cast<int>(darts_.size()); }
  int alpha() const { return start_; }  // start vertex
  int beta() const { return end_; }     // end vertex

protected:
  EdgePath() = default;
  std::vector<int> darts_;
  int start_ = 0, end_ = 0;
};

// Backtrack-free edge path: no adjacent pair (a, involution(a)). These are
// the morphisms of the free path groupoid on the graph.
class ReducedPath : public EdgePath {
public:
  ReducedPath(const Graph& g, std::vector<int> darts, int start_vertex);
  static ReducedPath empty_at(const Graph& g, int vertex);

private:
  friend ReducedPath reduce_path(const Graph&, const EdgePath&);
  friend ReducedPath invert_path(const Graph&, const ReducedPath&);
  ReducedPath() = default;
};

inline bool operator==(const EdgePath& a, const EdgePath& b) {
  return a.alpha() == b.alpha() && a.darts() == b.darts();
}
inline bool operator!=(const EdgePath& a, const EdgePath& b) { return !(a == b); }

// Deletes adjacent (a, involution(a)) pairs until none remain. The result is
// independent of deletion order (free reduction is confluent).
ReducedPath reduce_path(const Graph& g, const EdgePath& p);

// Single-cancellation strategies, used to check confluence explicitly.
enum class CancelOrder { leftmost, rightmost };
ReducedPath reduce_path_scan(const Graph& g, const EdgePath& p, CancelOrder order);

// p*q with alpha(p) = beta(q): q is traversed first. Concatenation followed
// by reduction; associative, with empty paths as identities.
ReducedPath compose_paths(const Graph& g, const ReducedPath& p, const ReducedPath& q);

// Reverse the dart sequence and flip each dart; an anti-involution.
ReducedPath invert_path(const Graph& g, const ReducedPath& p);

// BFS tree from the basepoint, exploring darts in ascending index order.
// parent_dart[v] runs v -> parent(v), pointing toward the basepoint.
class SpanningTree {
public:
  bool in_tree(int dart) const { return in_tree_[dart]; }
  int parent_dart(int v) const { return parent_dart_[v]; }  // -1 at basepoint
  int tree_edge_count() const { return tree_edges_; }

private:
  friend SpanningTree spanning_tree(const Graph& g);
  std::vector<char> in_tree_;
  std::vector<int> parent_dart_;
  int tree_edges_ = 0;
};

SpanningTree spanning_tree(const Graph& g);  // error on disconnected graphs

// m - (n - 1) = 1 - Euler characteristic; the rank of the free vertex group.
int free_rank(const Graph& g);

// Unique reduced path inside the tree from the basepoint to v (beta = v).
ReducedPath tree_path(const Graph& g, const SpanningTree& t, int v);

// One based loop per non-tree edge, represented by its smaller dart a:
// invert(tree_path(target(a))) * a * tree_path(source(a)), reduced. Ordered
// by dart index; the list has free_rank(g) entries.
std::vector<ReducedPath> loop_generators(const Graph& g, const SpanningTree& t);

}  // namespace gg
