#include "graph.hpp"

#include <algorithm>
#include <queue>

namespace gg {

Graph Graph::build(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                   int basepoint) {
  if (vertex_count < 1) fail(ErrC::invalid, "graph needs at least one vertex");
  if (basepoint < 0 || basepoint >= vertex_count)
    fail(ErrC::bounds, "basepoint out of range");
  Graph g;
  g.vertex_count_ = vertex_count;
  g.basepoint_ = basepoint;
  g.edges_ = edges;
  g.out_.resize(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      fail(ErrC::bounds, "edge endpoint out of range");
    int d = static_cast<int>(g.source_.size());
    g.source_.push_back(u);
    g.target_.push_back(v);
    g.source_.push_back(v);
    g.target_.push_back(u);
    g.out_[u].push_back(d);
    g.out_[v].push_back(d + 1);
  }
  return g;
}

const std::vector<int>& Graph::darts_from(int v) const {
  if (v < 0 || v >= vertex_count_) fail(ErrC::bounds, "vertex index out of range");
  return out_[v];
}

bool Graph::is_connected() const {
  std::vector<char> seen(vertex_count_, 0);
  std::queue<int> q;
  q.push(basepoint_);
  seen[basepoint_] = 1;
  int found = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int d : out_[v]) {
      int w = target_[d];
      if (!seen[w]) {
        seen[w] = 1;
        ++found;
        q.push(w);
      }
    }
  }
  return found == vertex_count_;
}

namespace {

void validate_walk(const Graph& g, const std::vector<int>& darts, int start) {
  if (start < 0 || start >= g.vertex_count()) fail(ErrC::bounds, "path start out of range");
  int at = start;
  for (int d : darts) {
    if (d < 0 || d >= g.dart_count()) fail(ErrC::bounds, "path dart out of range");
    if (g.source(d) != at) fail(ErrC::invalid, "path darts are not composable");
    at = g.target(d);
  }
}

int walk_end(const Graph& g, const std::vector<int>& darts, int start) {
  return darts.empty() ? start : g.target(darts.back());
}

}  // namespace

EdgePath::EdgePath(const Graph& g, std::vector<int> darts, int start_vertex) {
  validate_walk(g, darts, start_vertex);
  start_ = start_vertex;
  end_ = walk_end(g, darts, start_vertex);
  darts_ = std::move(darts);
}

EdgePath EdgePath::empty_at(const Graph& g, int vertex) {
  return EdgePath(g, {}, vertex);
}

ReducedPath::ReducedPath(const Graph& g, std::vector<int> darts, int start_vertex) {
  validate_walk(g, darts, start_vertex);
  for (size_t i = 0; i + 1 < darts.size(); ++i)
    if (g.involution(darts[i]) == darts[i + 1])
      fail(ErrC::invalid, "path is not backtrack-free");
  start_ = start_vertex;
  end_ = walk_end(g, darts, start_vertex);
  darts_ = std::move(darts);
}

ReducedPath ReducedPath::empty_at(const Graph& g, int vertex) {
  return ReducedPath(g, {}, vertex);
}

ReducedPath reduce_path(const Graph& g, const EdgePath& p) {
  // stack reduction: equivalent to repeated leftmost cancellation
  std::vector<int> stack;
  stack.reserve(p.darts().size());
  for (int d : p.darts()) {
    if (!stack.empty() && g.involution(stack.back()) == d)
      stack.pop_back();
    else
      stack.push_back(d);
  }
  ReducedPath r;
  r.start_ = p.alpha();
  r.end_ = walk_end(g, stack, p.alpha());
  r.darts_ = std::move(stack);
  return r;
}

ReducedPath reduce_path_scan(const Graph& g, const EdgePath& p, CancelOrder order) {
  std::vector<int> darts = p.darts();
  for (;;) {
    int hit = -1;
    if (order == CancelOrder::leftmost) {
      for (size_t i = 0; i + 1 < darts.size(); ++i)
        if (g.involution(darts[i]) == darts[i + 1]) {
          hit = static_cast<int>(i);
          break;
        }
    } else {
      for (size_t i = darts.size(); i >= 2; --i)
        if (g.involution(darts[i - 2]) == darts[i - 1]) {
          hit = static_cast<int>(i - 2);
          break;
        }
    }
    if (hit < 0) break;
    darts.erase(darts.begin() + hit, darts.begin() + hit + 2);
  }
  return ReducedPath(g, std::move(darts), p.alpha());
}

ReducedPath compose_paths(const Graph& g, const ReducedPath& p, const ReducedPath& q) {
  if (q.beta() != p.alpha())
    fail(ErrC::invalid, "compose: end of right factor must equal start of left factor");
  std::vector<int> darts = q.darts();
  darts.insert(darts.end(), p.darts().begin(), p.darts().end());
  return reduce_path(g, EdgePath(g, std::move(darts), q.alpha()));
}

ReducedPath invert_path(const Graph& g, const ReducedPath& p) {
  std::vector<int> darts(p.darts().rbegin(), p.darts().rend());
  for (int& d : darts) d = g.involution(d);
  ReducedPath r;
  r.start_ = p.beta();
  r.end_ = p.alpha();
  r.darts_ = std::move(darts);
  return r;
}

SpanningTree spanning_tree(const Graph& g) {
  SpanningTree t;
  t.in_tree_.assign(g.dart_count(), 0);
  t.parent_dart_.assign(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(g.basepoint());
  seen[g.basepoint()] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int d : g.darts_from(v)) {
      int w = g.target(d);
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      t.in_tree_[d] = 1;
      t.in_tree_[g.involution(d)] = 1;
      t.parent_dart_[w] = g.involution(d);  // runs w -> v
      ++t.tree_edges_;
      q.push(w);
    }
  }
  if (reached != g.vertex_count()) fail(ErrC::invalid, "graph is not connected");
  return t;
}

int free_rank(const Graph& g) {
  if (!g.is_connected()) fail(ErrC::invalid, "graph is not connected");
  return g.edge_count() - (g.vertex_count() - 1);
}

ReducedPath tree_path(const Graph& g, const SpanningTree& t, int v) {
  if (v < 0 || v >= g.vertex_count()) fail(ErrC::bounds, "vertex index out of range");
  std::vector<int> up;  // darts v -> ... -> basepoint
  int at = v;
  while (t.parent_dart(at) != -1) {
    int d = t.parent_dart(at);
    up.push_back(d);
    at = g.target(d);
  }
  std::vector<int> down(up.rbegin(), up.rend());
  for (int& d : down) d = g.involution(d);
  return ReducedPath(g, std::move(down), g.basepoint());
}

std::vector<ReducedPath> loop_generators(const Graph& g, const SpanningTree& t) {
  std::vector<ReducedPath> loops;
  for (int d = 0; d < g.dart_count(); d += 2) {
    if (t.in_tree(d)) continue;
    ReducedPath to_src = tree_path(g, t, g.source(d));
    ReducedPath dart_step(g, {d}, g.source(d));
    ReducedPath back = invert_path(g, tree_path(g, t, g.target(d)));
    loops.push_back(compose_paths(g, back, compose_paths(g, dart_step, to_src)));
  }
  return loops;
}

}  // namespace gg
