#include "group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gg {

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

void Group::finish(const std::string& name) {
  name_ = name;
  const int n = order_;

  // identity: two-sided neutral element
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      ok = table_[static_cast<size_t>(e) * n + g] == g &&
           table_[static_cast<size_t>(g) * n + e] == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) fail(ErrC::invalid, "group table has no two-sided identity");

  // rows and columns are permutations
  for (int g = 0; g < n; ++g) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int h = 0; h < n; ++h) {
      row[table_[static_cast<size_t>(g) * n + h]] = 1;
      col[table_[static_cast<size_t>(h) * n + g]] = 1;
    }
    for (int h = 0; h < n; ++h)
      if (!row[h] || !col[h])
        fail(ErrC::invalid, "group table row/column is not a permutation");
  }

  // two-sided inverses
  inverses_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (table_[static_cast<size_t>(g) * n + h] == identity_ &&
          table_[static_cast<size_t>(h) * n + g] == identity_) {
        inverses_[g] = h;
        break;
      }
    }
    if (inverses_[g] < 0) fail(ErrC::invalid, "group element has no two-sided inverse");
  }

  abelian_ = true;
  for (int g = 0; g < n && abelian_; ++g)
    for (int h = 0; h < g; ++h)
      if (table_[static_cast<size_t>(g) * n + h] != table_[static_cast<size_t>(h) * n + g]) {
        abelian_ = false;
        break;
      }
}

Group Group::cyclic(int n) {
  if (n < 1) fail(ErrC::invalid, "cyclic group order must be >= 1");
  if (n > kMaxOrder) fail(ErrC::invalid, "group order cap exceeded (max 5040)");
  Group g;
  g.order_ = n;
  g.table_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.table_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>((a + b) % n);
  g.finish("cyclic " + std::to_string(n));
  return g;
}

Group Group::dihedral(int n) {
  if (n < 3) fail(ErrC::invalid, "dihedral group needs n >= 3");
  if (2 * n > kMaxOrder) fail(ErrC::invalid, "group order cap exceeded (max 5040)");
  // Realize elements as maps on Z/n: index k < n is the rotation x -> x+k,
  // index n+k is the reflection x -> k-x. Compose right factor first.
  const int ord = 2 * n;
  auto apply = [n](int e, int x) {
    return e < n ? (x + e) % n : ((e - n) - x % n + 2 * n) % n;
  };
  Group g;
  g.order_ = ord;
  g.table_.resize(static_cast<size_t>(ord) * ord);
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      // c = a∘b: images of 0 and 1 determine rotation vs reflection
      int y0 = apply(a, apply(b, 0));
      int y1 = apply(a, apply(b, 1));
      int c = (y1 == (y0 + 1) % n) ? y0 : n + y0;
      g.table_[static_cast<size_t>(a) * ord + b] = static_cast<uint16_t>(c);
    }
  }
  g.finish("dihedral " + std::to_string(n));
  return g;
}

Group Group::symmetric(int n) {
  if (n < 1 || n > 6) fail(ErrC::invalid, "symmetric group supported for 1 <= n <= 6");
  auto perms = all_permutations(n);
  const int ord = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < ord; ++i) index[perms[i]] = i;
  Group g;
  g.order_ = ord;
  g.table_.resize(static_cast<size_t>(ord) * ord);
  std::vector<int> comp(n);
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];  // a∘b, b first
      g.table_[static_cast<size_t>(a) * ord + b] = static_cast<uint16_t>(index.at(comp));
    }
  }
  g.finish("symmetric " + std::to_string(n));
  return g;
}

Group Group::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) fail(ErrC::invalid, "empty group table");
  if (n > kMaxExplicitOrder) fail(ErrC::invalid, "explicit table cap exceeded (max 256)");
  Group g;
  g.order_ = n;
  g.table_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      fail(ErrC::invalid, "group table is not square");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n) fail(ErrC::invalid, "group table entry out of range");
      g.table_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(v);
    }
  }
  // full associativity check; feasible at the explicit-table cap
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.table_[static_cast<size_t>(a) * n + b];
      for (int c = 0; c < n; ++c) {
        int bc = g.table_[static_cast<size_t>(b) * n + c];
        if (g.table_[static_cast<size_t>(ab) * n + c] !=
            g.table_[static_cast<size_t>(a) * n + bc])
          fail(ErrC::invalid, "group table is not associative");
      }
    }
  std::string nm = "table " + std::to_string(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) nm += " " + std::to_string(table[a][b]);
  g.finish(nm);
  return g;
}

ConjugacyPartition conjugacy_classes(const Group& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  ConjugacyPartition part;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::set<Elem> orbit;
    for (int k = 0; k < n; ++k) orbit.insert(g.conj(x, k));
    std::vector<Elem> members(orbit.begin(), orbit.end());
    for (Elem m : members) cls[m] = static_cast<int>(part.classes.size());
    part.classes.push_back(std::move(members));
  }
  return part;
}

std::vector<Elem> conjugate_tuple(const Group& g, const std::vector<Elem>& t, Elem k) {
  std::vector<Elem> out(t.size());
  for (size_t i = 0; i < t.size(); ++i) out[i] = g.conj(t[i], k);
  return out;
}

std::vector<Elem> tuple_conj_canonical(const Group& g, const std::vector<Elem>& t) {
  std::vector<Elem> best = t;
  for (int k = 0; k < g.order(); ++k) {
    std::vector<Elem> c = conjugate_tuple(g, t, k);
    if (c < best) best = std::move(c);
  }
  return best;
}

TupleOrbits simultaneous_conjugation_orbits(const Group& g,
                                            const std::vector<std::vector<Elem>>& tuples) {
  size_t arity = tuples.empty() ? 0 : tuples.front().size();
  for (const auto& t : tuples)
    if (t.size() != arity) fail(ErrC::invalid, "tuples of mixed arity");
  std::map<std::vector<Elem>, std::vector<std::vector<Elem>>> by_canon;
  for (const auto& t : tuples) by_canon[tuple_conj_canonical(g, t)].push_back(t);
  TupleOrbits out;
  for (auto& [canon, members] : by_canon) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.orbits.push_back(std::move(members));
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

unsigned long long checked_pow(unsigned long long base, unsigned exp) {
  unsigned long long r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > ~0ULL / base) fail(ErrC::invalid, "count overflows 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace gg
