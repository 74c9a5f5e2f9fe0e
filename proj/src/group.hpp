#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"

namespace gg {

// Element of a finite group, stored as an index into the group's canonical
// ordering (cyclic: residues ascending; symmetric: one-line lexicographic;
// dihedral: rotations then reflections).
using Elem = int;

// Finite group given by its multiplication table. Immutable after
// construction; all operations are pure and safe to share across threads.
class Group {
public:
  static constexpr int kMaxOrder = 5040;        // S7 and beyond excluded
  static constexpr int kMaxExplicitOrder = 256; // explicit tables

  static Group cyclic(int n);
  static Group dihedral(int n);    // order 2n, n >= 3
  static Group symmetric(int n);   // order n!, 1 <= n <= 6
  // Validates every group axiom on the table (associativity included).
  static Group from_table(const std::vector<std::vector<int>>& table);

  int order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem op(Elem a, Elem b) const {
    check(a);
    check(b);
    return table_[static_cast<size_t>(a) * order_ + b];
  }
  Elem inv(Elem a) const {
    check(a);
    return inverses_[a];
  }
  Elem conj(Elem g, Elem k) const { return op(op(inv(k), g), k); }  // k^-1 g k
  bool is_abelian() const { return abelian_; }

  // Spec string this group round-trips through ("cyclic 4", "table 2 0 1 1 0", ...).
  const std::string& name() const { return name_; }

  bool same_table(const Group& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

private:
  Group() = default;
  void finish(const std::string& name);  // fills identity/inverses, validates

  void check(Elem a) const {
    if (a < 0 || a >= order_) fail(ErrC::bounds, "group element index out of range");
  }

  int order_ = 0;
  Elem identity_ = 0;
  std::vector<uint16_t> table_;  // row-major order x order
  std::vector<Elem> inverses_;
  bool abelian_ = false;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Partition of element indices into conjugacy classes. Classes are sorted
// internally and ordered by their smallest element.
struct ConjugacyPartition {
  std::vector<std::vector<Elem>> classes;
};

ConjugacyPartition conjugacy_classes(const Group& g);

// k^-1 t k applied coordinatewise.
std::vector<Elem> conjugate_tuple(const Group& g, const std::vector<Elem>& t, Elem k);

// Lexicographic minimum of the simultaneous conjugation orbit of t.
std::vector<Elem> tuple_conj_canonical(const Group& g, const std::vector<Elem>& t);

// Orbit partition of the given tuples under simultaneous conjugation.
// Tuples in the same full orbit land in the same part; each part lists its
// members sorted, parts ordered by smallest member. Mixed arities are an error.
struct TupleOrbits {
  std::vector<std::vector<std::vector<Elem>>> orbits;
};
TupleOrbits simultaneous_conjugation_orbits(const Group& g,
                                            const std::vector<std::vector<Elem>>& tuples);

// |G|^e with overflow detection.
unsigned long long checked_pow(unsigned long long base, unsigned exp);

}  // namespace gg
