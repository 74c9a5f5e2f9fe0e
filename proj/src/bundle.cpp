#include "bundle.hpp"

#include <algorithm>

namespace gg {

Bundle Bundle::trivial(int base_size, GroupPtr group) {
  if (base_size < 1) fail(ErrC::invalid, "bundle base must be nonempty");
  if (!group) fail(ErrC::invalid, "bundle needs a group");
  const int n = group->order();
  Bundle b;
  b.group_ = std::move(group);
  b.base_size_ = base_size;
  b.point_base_.resize(static_cast<size_t>(base_size) * n);
  b.action_.resize(b.point_base_.size());
  for (int x = 0; x < base_size; ++x) {
    for (int g = 0; g < n; ++g) {
      int z = x * n + g;
      b.point_base_[z] = x;
      b.action_[z].resize(n);
      for (int h = 0; h < n; ++h) b.action_[z][h] = x * n + b.group_->op(g, h);
    }
  }
  b.validate_and_index();
  b.trivial_layout_ = true;
  return b;
}

Bundle Bundle::from_tables(GroupPtr group, std::vector<int> point_base,
                           std::vector<std::vector<int>> action, int lift) {
  if (!group) fail(ErrC::invalid, "bundle needs a group");
  Bundle b;
  b.group_ = std::move(group);
  b.point_base_ = std::move(point_base);
  b.action_ = std::move(action);
  const int total = b.total_size();
  if (total == 0) fail(ErrC::invalid, "bundle has no points");
  if (b.action_.size() != b.point_base_.size())
    fail(ErrC::invalid, "action table size mismatch");
  int base = 0;
  for (int x : b.point_base_) {
    if (x < 0) fail(ErrC::invalid, "negative base index");
    base = std::max(base, x + 1);
  }
  b.base_size_ = base;
  const int n = b.group_->order();
  for (const auto& row : b.action_) {
    if (static_cast<int>(row.size()) != n) fail(ErrC::invalid, "action row size mismatch");
    for (int z : row)
      if (z < 0 || z >= total) fail(ErrC::invalid, "action image out of range");
  }
  if (lift >= 0) {
    if (lift >= total || b.point_base_[lift] != 0)
      fail(ErrC::invalid, "basepoint lift must be a point over base 0");
  }
  b.validate_and_index();
  if (lift >= 0) {
    // re-root fiber 0 at the requested lift
    b.origin_[0] = lift;
    for (int z : b.fibers_[0]) b.delta_[z] = b.gamma_find(z, lift);
  }
  return b;
}

// linear-scan gamma used before delta_ exists
int Bundle::gamma_find(int y, int z) const {
  for (int g = 0; g < group_->order(); ++g)
    if (action_[z][g] == y) return g;
  fail(ErrC::invalid, "points are not in the same orbit");
}

void Bundle::validate_and_index() {
  const int n = group_->order();
  const int total = total_size();
  const Elem e = group_->identity();

  fibers_.assign(base_size_, {});
  for (int z = 0; z < total; ++z) fibers_[point_base_[z]].push_back(z);

  for (int z = 0; z < total; ++z) {
    if (action_[z][e] != z) fail(ErrC::invalid, "identity does not act trivially");
    for (int g = 0; g < n; ++g) {
      int zg = action_[z][g];
      if (point_base_[zg] != point_base_[z])
        fail(ErrC::invalid, "action does not preserve fibers");
      if (zg == z && g != e) fail(ErrC::invalid, "action is not free");
      for (int h = 0; h < n; ++h)
        if (action_[zg][h] != action_[z][group_->op(g, h)])
          fail(ErrC::invalid, "action is not associative");
    }
  }

  origin_.assign(base_size_, -1);
  delta_.assign(total, -1);
  for (int x = 0; x < base_size_; ++x) {
    if (fibers_[x].empty()) fail(ErrC::invalid, "empty fiber");
    if (static_cast<int>(fibers_[x].size()) != n)
      fail(ErrC::invalid, "fiber is not a single orbit");
    int o = fibers_[x].front();
    origin_[x] = o;
    std::vector<char> hit(total, 0);
    for (int g = 0; g < n; ++g) {
      int z = action_[o][g];
      if (hit[z]) fail(ErrC::invalid, "action is not free on fiber");
      hit[z] = 1;
      delta_[z] = g;
    }
    for (int z : fibers_[x])
      if (delta_[z] < 0) fail(ErrC::invalid, "fiber is not a single orbit");
  }
}

int Bundle::origin(int base) const {
  if (base < 0 || base >= base_size_) fail(ErrC::bounds, "base index out of range");
  return origin_[base];
}

const std::vector<int>& Bundle::fiber(int base) const {
  if (base < 0 || base >= base_size_) fail(ErrC::bounds, "base index out of range");
  return fibers_[base];
}

Elem Bundle::gamma(int y, int z) const {
  check_point(y);
  check_point(z);
  if (point_base_[y] != point_base_[z])
    fail(ErrC::invalid, "gamma needs two points of the same fiber");
  // y = o.delta(y), z = o.delta(z)  =>  gamma = delta(z)^-1 delta(y)
  return group_->op(group_->inv(delta_[z]), delta_[y]);
}

GaugeTransformation GaugeTransformation::identity(BundlePtr b) {
  return from_vertex_assignment(std::move(b), {});
}

GaugeTransformation GaugeTransformation::from_vertex_assignment(BundlePtr b,
                                                                const std::vector<Elem>& a) {
  if (!b) fail(ErrC::invalid, "gauge transformation needs a bundle");
  const Group& G = b->group();
  std::vector<Elem> assign = a;
  if (assign.empty()) assign.assign(b->base_size(), G.identity());
  if (static_cast<int>(assign.size()) != b->base_size())
    fail(ErrC::invalid, "vertex assignment length must equal base size");
  GaugeTransformation chi;
  chi.mapping_.resize(b->total_size());
  for (int z = 0; z < b->total_size(); ++z) {
    int x = b->base_of(z);
    chi.mapping_[z] = b->act(b->origin(x), G.op(assign[x], b->delta(z)));
  }
  chi.bundle_ = std::move(b);
  return chi;
}

GaugeTransformation GaugeTransformation::from_mapping(BundlePtr b, std::vector<int> mapping) {
  if (!b) fail(ErrC::invalid, "gauge transformation needs a bundle");
  if (static_cast<int>(mapping.size()) != b->total_size())
    fail(ErrC::invalid, "mapping size must equal total space size");
  std::vector<char> hit(b->total_size(), 0);
  for (int z = 0; z < b->total_size(); ++z) {
    int y = mapping[z];
    if (y < 0 || y >= b->total_size()) fail(ErrC::bounds, "mapping image out of range");
    if (hit[y]) fail(ErrC::invalid, "mapping is not a bijection");
    hit[y] = 1;
    if (b->base_of(y) != b->base_of(z))
      fail(ErrC::invalid, "mapping does not preserve fibers");
  }
  for (int z = 0; z < b->total_size(); ++z)
    for (int g = 0; g < b->group().order(); ++g)
      if (mapping[b->act(z, g)] != b->act(mapping[z], g))
        fail(ErrC::invalid, "mapping is not equivariant");
  GaugeTransformation chi;
  chi.bundle_ = std::move(b);
  chi.mapping_ = std::move(mapping);
  return chi;
}

GaugeTransformation GaugeTransformation::compose(const GaugeTransformation& other) const {
  if (bundle_.get() != other.bundle_.get() && !bundle_->same_structure(other.bundle()))
    fail(ErrC::invalid, "gauge transformations live on different bundles");
  GaugeTransformation chi;
  chi.bundle_ = bundle_;
  chi.mapping_.resize(mapping_.size());
  for (size_t z = 0; z < mapping_.size(); ++z)
    chi.mapping_[z] = mapping_[other.mapping_[z]];
  return chi;
}

GaugeTransformation GaugeTransformation::inverse() const {
  GaugeTransformation chi;
  chi.bundle_ = bundle_;
  chi.mapping_.resize(mapping_.size());
  for (size_t z = 0; z < mapping_.size(); ++z) chi.mapping_[mapping_[z]] = static_cast<int>(z);
  return chi;
}

Elem GaugeTransformation::res() const { return res_at(0); }

Elem GaugeTransformation::res_at(int base_vertex) const {
  int lift = bundle_->origin(base_vertex);
  return bundle_->gamma(mapping_[lift], lift);
}

std::vector<Elem> GaugeTransformation::vertex_assignment() const {
  std::vector<Elem> a(bundle_->base_size());
  for (int x = 0; x < bundle_->base_size(); ++x) a[x] = res_at(x);
  return a;
}

GaugeEnumerator::GaugeEnumerator(BundlePtr b, bool pointed)
    : bundle_(std::move(b)), first_(pointed ? 1 : 0) {
  current_.assign(bundle_->base_size(), 0);
  for (int i = 0; i < first_; ++i) current_[i] = bundle_->group().identity();
}

bool GaugeEnumerator::next(std::vector<Elem>& assignment) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    assignment = current_;
    return true;
  }
  // odometer over positions first_..base-1 (identity pinned below first_)
  int i = bundle_->base_size() - 1;
  while (i >= first_) {
    if (current_[i] + 1 < bundle_->group().order()) {
      ++current_[i];
      std::fill(current_.begin() + i + 1, current_.end(), 0);
      assignment = current_;
      return true;
    }
    --i;
  }
  done_ = true;
  return false;
}

FiniteGroupoid::FiniteGroupoid(int objects, std::vector<int> alpha, std::vector<int> beta,
                               std::vector<int> identity, std::vector<int> inverse,
                               std::vector<int> compose_table)
    : objects_(objects),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      identity_(std::move(identity)),
      inverse_(std::move(inverse)),
      compose_(std::move(compose_table)) {}

int FiniteGroupoid::compose(int m1, int m2) const {
  if (!composable(m1, m2)) fail(ErrC::invalid, "morphisms are not composable");
  return compose_[static_cast<size_t>(m1) * morphism_count() + m2];
}

bool FiniteGroupoid::is_transitive() const {
  std::vector<std::vector<char>> hit(objects_, std::vector<char>(objects_, 0));
  for (int m = 0; m < morphism_count(); ++m) hit[alpha_[m]][beta_[m]] = 1;
  for (int x = 0; x < objects_; ++x)
    for (int y = 0; y < objects_; ++y)
      if (!hit[x][y]) return false;
  return true;
}

std::vector<int> FiniteGroupoid::vertex_group(int object) const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (alpha_[m] == object && beta_[m] == object) out.push_back(m);
  return out;
}

void FiniteGroupoid::validate() const {
  const int M = morphism_count();
  for (int x = 0; x < objects_; ++x) {
    int i = identity_[x];
    if (alpha_[i] != x || beta_[i] != x) fail(ErrC::invalid, "identity endpoints wrong");
  }
  for (int m = 0; m < M; ++m) {
    if (alpha_[inverse_[m]] != beta_[m] || beta_[inverse_[m]] != alpha_[m])
      fail(ErrC::invalid, "inverse endpoints wrong");
    if (compose(m, inverse_[m]) != identity_[beta_[m]] ||
        compose(inverse_[m], m) != identity_[alpha_[m]])
      fail(ErrC::invalid, "inverse law fails");
    if (compose(m, identity_[alpha_[m]]) != m || compose(identity_[beta_[m]], m) != m)
      fail(ErrC::invalid, "unit law fails");
  }
  for (int m1 = 0; m1 < M; ++m1)
    for (int m2 = 0; m2 < M; ++m2) {
      if (!composable(m1, m2)) continue;
      int c = compose(m1, m2);
      if (alpha_[c] != alpha_[m2] || beta_[c] != beta_[m1])
        fail(ErrC::invalid, "composite endpoints wrong");
      for (int m3 = 0; m3 < M; ++m3) {
        if (!composable(m2, m3)) continue;
        if (compose(compose(m1, m2), m3) != compose(m1, compose(m2, m3)))
          fail(ErrC::invalid, "composition is not associative");
      }
    }
}

GaugeGroupoidElement make_ee_element(const Bundle& b, int a, int z) {
  b.base_of(a);  // bounds check
  // translate (a, z) so the second coordinate becomes its fiber origin
  int x = b.base_of(z);
  Elem g = b.gamma(b.origin(x), z);
  return GaugeGroupoidElement{b.act(a, g), x};
}

GaugeGroupoidElement ee_compose(const Bundle& b, const GaugeGroupoidElement& m1,
                                const GaugeGroupoidElement& m2) {
  // <a3, o_y> <a2, o_x> with p(a2) = y: translate so the middle points match:
  // <a3 . gamma(a2, o_y), o_x>
  if (m1.bottom_base != b.base_of(m2.top))
    fail(ErrC::invalid, "gauge groupoid elements are not composable");
  Elem g = b.gamma(m2.top, b.origin(m1.bottom_base));
  return GaugeGroupoidElement{b.act(m1.top, g), m2.bottom_base};
}

GaugeGroupoidElement ee_inverse(const Bundle& b, const GaugeGroupoidElement& m) {
  return make_ee_element(b, b.origin(m.bottom_base), m.top);
}

GaugeGroupoidElement ee_identity(const Bundle& b, int base) {
  return GaugeGroupoidElement{b.origin(base), base};
}

int ee_morphism_id(const Bundle& b, const GaugeGroupoidElement& m) {
  return m.top * b.base_size() + m.bottom_base;
}

GaugeGroupoidElement ee_element_of(const Bundle& b, int morphism_id) {
  if (morphism_id < 0 || morphism_id >= b.total_size() * b.base_size())
    fail(ErrC::bounds, "morphism id out of range");
  return GaugeGroupoidElement{morphism_id / b.base_size(), morphism_id % b.base_size()};
}

FiniteGroupoid gauge_groupoid(const Bundle& b) {
  const int B = b.base_size();
  const int M = b.total_size() * B;
  std::vector<int> alpha(M), beta(M), inverse(M), identity(B);
  std::vector<int> table(static_cast<size_t>(M) * M, -1);
  for (int m = 0; m < M; ++m) {
    GaugeGroupoidElement el = ee_element_of(b, m);
    alpha[m] = el.bottom_base;
    beta[m] = b.base_of(el.top);
    inverse[m] = ee_morphism_id(b, ee_inverse(b, el));
  }
  for (int x = 0; x < B; ++x) identity[x] = ee_morphism_id(b, ee_identity(b, x));
  for (int m1 = 0; m1 < M; ++m1)
    for (int m2 = 0; m2 < M; ++m2) {
      if (alpha[m1] != beta[m2]) continue;
      table[static_cast<size_t>(m1) * M + m2] = ee_morphism_id(
          b, ee_compose(b, ee_element_of(b, m1), ee_element_of(b, m2)));
    }
  return FiniteGroupoid(B, std::move(alpha), std::move(beta), std::move(identity),
                        std::move(inverse), std::move(table));
}

}  // namespace gg
