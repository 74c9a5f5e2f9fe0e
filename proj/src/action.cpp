#include "action.hpp"

namespace gg {

GroupAction GroupAction::from_table(GroupPtr group, int set_size,
                                    std::vector<std::vector<int>> table, int basepoint) {
  if (!group) fail(ErrC::invalid, "action needs a group");
  if (set_size < 1) fail(ErrC::invalid, "action set must be nonempty");
  if (basepoint < 0 || basepoint >= set_size) fail(ErrC::bounds, "basepoint out of range");
  GroupAction a;
  a.group_ = std::move(group);
  a.set_size_ = set_size;
  a.basepoint_ = basepoint;
  a.table_ = std::move(table);
  const Group& G = a.group();
  if (static_cast<int>(a.table_.size()) != G.order())
    fail(ErrC::invalid, "action table needs one row per group element");
  for (const auto& row : a.table_) {
    if (static_cast<int>(row.size()) != set_size)
      fail(ErrC::invalid, "action row size must equal the set size");
    for (int y : row)
      if (y < 0 || y >= set_size) fail(ErrC::invalid, "action image out of range");
  }
  for (int x = 0; x < set_size; ++x)
    if (a.table_[G.identity()][x] != x)
      fail(ErrC::invalid, "identity does not act trivially");
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      int gh = G.op(g, h);
      for (int x = 0; x < set_size; ++x)
        if (a.table_[gh][x] != a.table_[g][a.table_[h][x]])
          fail(ErrC::invalid, "action is not compatible with the group law");
    }
  return a;
}

int GroupAction::apply(Elem g, int x) const {
  if (g < 0 || g >= group_->order()) fail(ErrC::bounds, "group element out of range");
  if (x < 0 || x >= set_size_) fail(ErrC::bounds, "point out of range");
  return table_[g][x];
}

bool GroupAction::is_transitive() const {
  std::vector<char> hit(set_size_, 0);
  for (int g = 0; g < group_->order(); ++g) hit[table_[g][basepoint_]] = 1;
  for (char c : hit)
    if (!c) return false;
  return true;
}

std::vector<Elem> GroupAction::stabilizer(int x) const {
  std::vector<Elem> out;
  for (int g = 0; g < group_->order(); ++g)
    if (table_[g][x] == x) out.push_back(g);
  return out;
}

FiniteGroupoid action_groupoid(const GroupAction& a) {
  const Group& G = a.group();
  const int X = a.set_size();
  const int M = G.order() * X;
  std::vector<int> alpha(M), beta(M), inverse(M), identity(X);
  std::vector<int> table(static_cast<size_t>(M) * M, -1);
  auto id_of = [X](Elem g, int x) { return g * X + x; };
  for (int g = 0; g < G.order(); ++g)
    for (int x = 0; x < X; ++x) {
      int m = id_of(g, x);
      alpha[m] = x;
      beta[m] = a.apply(g, x);
      inverse[m] = id_of(G.inv(g), a.apply(g, x));
    }
  for (int x = 0; x < X; ++x) identity[x] = id_of(G.identity(), x);
  // (z, g2, y)(y, g1, x) = (z, g2 g1, x)
  for (int m1 = 0; m1 < M; ++m1)
    for (int m2 = 0; m2 < M; ++m2) {
      if (alpha[m1] != beta[m2]) continue;
      Elem g2 = m1 / X, g1 = m2 / X;
      table[static_cast<size_t>(m1) * M + m2] = id_of(G.op(g2, g1), m2 % X);
    }
  return FiniteGroupoid(X, std::move(alpha), std::move(beta), std::move(identity),
                        std::move(inverse), std::move(table));
}

}  // namespace gg
