#pragma once

#include <memory>
#include <vector>

#include "group.hpp"

namespace gg {

// Finite set with a free right G-action over a discrete base; every fiber is
// a single orbit (a torsor), so |fiber| = |G|. Each fiber carries a
// designated origin fixed at construction; the basepoint lift is the origin
// of fiber 0. Immutable after validation.
class Bundle {
public:
  static Bundle trivial(int base_size, GroupPtr group);
  // Explicit form: per-point base indices and a point x element action table.
  // All torsor invariants are validated. lift, when >= 0, names the
  // distinguished point over base 0 (default: lowest point id in fiber 0).
  static Bundle from_tables(GroupPtr group, std::vector<int> point_base,
                            std::vector<std::vector<int>> action, int lift = -1);

  int base_size() const { return base_size_; }
  int total_size() const { return static_cast<int>(point_base_.size()); }
  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  int base_of(int z) const { check_point(z); return point_base_[z]; }
  int act(int z, Elem g) const { check_point(z); return action_[z][g]; }
  int origin(int base) const;
  int basepoint_lift() const { return origin(0); }
  const std::vector<int>& fiber(int base) const;

  // Position of z relative to its fiber origin: z = origin(p(z)) . delta(z).
  Elem delta(int z) const { check_point(z); return delta_[z]; }

  // The unique g with y = z . g; y and z must share a fiber.
  Elem gamma(int y, int z) const;

  bool is_trivial_layout() const { return trivial_layout_; }
  bool same_structure(const Bundle& other) const {
    return point_base_ == other.point_base_ && action_ == other.action_ &&
           origin_ == other.origin_ && group_->same_table(other.group());
  }

private:
  Bundle() = default;
  void validate_and_index();
  int gamma_find(int y, int z) const;  // table scan, used before delta_ exists
  void check_point(int z) const {
    if (z < 0 || z >= total_size()) fail(ErrC::bounds, "bundle point out of range");
  }

  GroupPtr group_;
  int base_size_ = 0;
  std::vector<int> point_base_;
  std::vector<std::vector<int>> action_;  // point x element -> point
  std::vector<std::vector<int>> fibers_;
  std::vector<int> origin_;
  std::vector<Elem> delta_;
  bool trivial_layout_ = false;  // point z = base * |G| + g with product action
};

using BundlePtr = std::shared_ptr<const Bundle>;

// Fiber-preserving G-equivariant bijection of the total space. On a finite
// bundle every such map is determined by one group element per base vertex:
// chi(origin(x) . d) = origin(x) . (a(x) d).
class GaugeTransformation {
public:
  static GaugeTransformation identity(BundlePtr b);
  static GaugeTransformation from_vertex_assignment(BundlePtr b, const std::vector<Elem>& a);
  // Validates bijectivity, fiber preservation and equivariance.
  static GaugeTransformation from_mapping(BundlePtr b, std::vector<int> mapping);

  const Bundle& bundle() const { return *bundle_; }
  const BundlePtr& bundle_ptr() const { return bundle_; }
  int apply(int z) const { return mapping_[z]; }
  const std::vector<int>& mapping() const { return mapping_; }

  GaugeTransformation compose(const GaugeTransformation& other) const;  // this ∘ other
  GaugeTransformation inverse() const;

  // gamma(chi(lift), lift); a homomorphism G_gauge -> G with kernel the
  // pointed subgroup.
  Elem res() const;
  Elem res_at(int base_vertex) const;
  bool is_pointed() const { return res() == bundle_->group().identity(); }

  std::vector<Elem> vertex_assignment() const;

  bool operator==(const GaugeTransformation& o) const { return mapping_ == o.mapping_; }

private:
  GaugeTransformation() = default;
  BundlePtr bundle_;
  std::vector<int> mapping_;
};

// Enumerates all |G|^base_size gauge transformations as vertex assignments in
// lexicographic order, without materializing the group. When pointed is true
// the assignment at base 0 stays at the identity (|G|^(base_size-1) items).
class GaugeEnumerator {
public:
  GaugeEnumerator(BundlePtr b, bool pointed);
  bool next(std::vector<Elem>& assignment);  // false when exhausted

private:
  BundlePtr bundle_;
  std::vector<Elem> current_;
  int first_;  // lowest index allowed to vary
  bool done_ = false, started_ = false;
};

// Small category with all morphisms invertible, over a finite object set.
// Composition is stored as a dense table; compose(m1, m2) is defined iff
// alpha(m1) == beta(m2).
class FiniteGroupoid {
public:
  FiniteGroupoid(int objects, std::vector<int> alpha, std::vector<int> beta,
                 std::vector<int> identity, std::vector<int> inverse,
                 std::vector<int> compose_table);

  int object_count() const { return objects_; }
  int morphism_count() const { return static_cast<int>(alpha_.size()); }
  int alpha(int m) const { return alpha_[m]; }
  int beta(int m) const { return beta_[m]; }
  int identity(int x) const { return identity_[x]; }
  int inverse(int m) const { return inverse_[m]; }
  bool composable(int m1, int m2) const { return alpha_[m1] == beta_[m2]; }
  int compose(int m1, int m2) const;

  bool is_transitive() const;
  std::vector<int> vertex_group(int object) const;  // morphisms x -> x

  // Checks every groupoid axiom exhaustively; throws on violation.
  void validate() const;

private:
  int objects_;
  std::vector<int> alpha_, beta_, identity_, inverse_, compose_;
};

// Element of (E x E)/G in canonical form: the orbit representative whose
// second coordinate is the origin of its fiber.
struct GaugeGroupoidElement {
  int top;          // first coordinate of the canonical pair
  int bottom_base;  // base index of the second coordinate (an origin)
  bool operator==(const GaugeGroupoidElement&) const = default;
};

GaugeGroupoidElement make_ee_element(const Bundle& b, int a, int z);  // orbit of (a, z)
GaugeGroupoidElement ee_compose(const Bundle& b, const GaugeGroupoidElement& m1,
                                const GaugeGroupoidElement& m2);
GaugeGroupoidElement ee_inverse(const Bundle& b, const GaugeGroupoidElement& m);
GaugeGroupoidElement ee_identity(const Bundle& b, int base);

// The full gauge groupoid as a FiniteGroupoid; morphism ids enumerate the
// canonical pairs as top * base_size + bottom_base.
FiniteGroupoid gauge_groupoid(const Bundle& b);
int ee_morphism_id(const Bundle& b, const GaugeGroupoidElement& m);
GaugeGroupoidElement ee_element_of(const Bundle& b, int morphism_id);

}  // namespace gg
