#pragma once

#include "bundle.hpp"
#include "group.hpp"

namespace gg {

// Left action of a finite group on a finite pointed set.
class GroupAction {
public:
  static GroupAction from_table(GroupPtr group, int set_size,
                                std::vector<std::vector<int>> table, int basepoint);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int set_size() const { return set_size_; }
  int basepoint() const { return basepoint_; }
  int apply(Elem g, int x) const;

  bool is_transitive() const;
  std::vector<Elem> stabilizer(int x) const;  // sorted element indices

private:
  GroupAction() = default;
  GroupPtr group_;
  int set_size_ = 0;
  int basepoint_ = 0;
  std::vector<std::vector<int>> table_;  // element x point -> point
};

// Groupoid of triples (y, g, x) with y = g.x; morphism id = g * set_size + x.
// Its vertex group at the basepoint is the stabilizer.
FiniteGroupoid action_groupoid(const GroupAction& a);

}  // namespace gg
