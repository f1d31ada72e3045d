#pragma once

/// @file group.hpp
/// @brief Finite groups given by a composition table, plus the handful of
/// constructors the group-ring experiments need.

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "core.hpp"

namespace fring {

class FiniteGroup {
 public:
  std::size_t size() const noexcept { return n_; }
  Elem op(Elem a, Elem b) const { return op_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem identity() const noexcept { return identity_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<Elem>& op_table() const noexcept { return op_; }

  /// Order of the cyclic subgroup generated by `a`.
  std::size_t element_order(Elem a) const {
    std::size_t k = 1;
    for (Elem x = a; x != identity_; x = op(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

 private:
  friend std::shared_ptr<const FiniteGroup> make_group_from_table(std::size_t, std::vector<Elem>, Elem,
                                                                  std::string);
  std::size_t n_ = 0;
  std::vector<Elem> op_;
  std::vector<Elem> inv_;
  Elem identity_ = 0;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validates the group axioms on the table and derives the inverse table.
inline GroupPtr make_group_from_table(std::size_t n, std::vector<Elem> op, Elem identity, std::string label = {}) {
  if (n == 0) throw AxiomViolation("nonempty", {0, 0, 0});
  if (op.size() != n * n) throw AxiomViolation("table-shape", {0, 0, 0});
  for (std::size_t i = 0; i < op.size(); ++i)
    if (op[i] >= n) throw AxiomViolation("closure", {Elem(i / n), Elem(i % n), 0});
  if (identity >= n) throw AxiomViolation("identity", {identity, 0, 0});
  auto at = [&](Elem a, Elem b) { return op[a * n + b]; };
  for (Elem a = 0; a < n; ++a)
    if (at(identity, a) != a || at(a, identity) != a) throw AxiomViolation("identity", {a, identity, 0});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) throw AxiomViolation("associativity", {a, b, c});
  std::vector<Elem> inv(n, npos);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (at(a, b) == identity && at(b, a) == identity) {
        inv[a] = b;
        break;
      }
    if (inv[a] == npos) throw AxiomViolation("inverses", {a, 0, 0});
  }
  auto g = std::make_shared<FiniteGroup>();
  g->n_ = n;
  g->op_ = std::move(op);
  g->inv_ = std::move(inv);
  g->identity_ = identity;
  g->label_ = std::move(label);
  return g;
}

inline GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<Elem> op(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) op[a * n + b] = Elem((a + b) % n);
  return make_group_from_table(n, std::move(op), 0, "c" + std::to_string(n));
}

inline GroupPtr trivial_group() { return cyclic_group(1); }

/// Direct product; element (a, b) is encoded as a + |G|·b.
inline GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.size(), nh = h.size(), n = ng * nh;
  std::vector<Elem> op(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem a = g.op(Elem(x % ng), Elem(y % ng));
      Elem b = h.op(Elem(x / ng), Elem(y / ng));
      op[x * n + y] = Elem(a + ng * b);
    }
  Elem id = Elem(g.identity() + ng * h.identity());
  return make_group_from_table(n, std::move(op), id, g.label() + "x" + h.label());
}

/// Symmetric group on k points; elements are permutations in lexicographic
/// order, composed as (p∘q)(i) = p(q(i)).
inline GroupPtr symmetric_group(std::size_t k) {
  if (k == 0 || k > 5) throw std::invalid_argument("symmetric_group: k must be in [1, 5]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return Elem(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Elem> op(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      op[a * n + b] = index_of(c);
    }
  return make_group_from_table(n, std::move(op), 0, "s" + std::to_string(k));
}

/// Subgroup generated by `gens` as a membership bitset.
inline Bits subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
  Bits in(g.size(), false);
  std::vector<Elem> list{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem s : gens) {
      Elem y = g.op(list[i], s);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  return in;
}

/// Full subgroup lattice, sorted by (order, membership).
inline std::vector<Bits> subgroups(const FiniteGroup& g) {
  std::set<Bits> seen;
  std::vector<Bits> cyclic;
  for (Elem a = 0; a < g.size(); ++a) {
    Bits c = subgroup_closure(g, {a});
    if (seen.insert(c).second) cyclic.push_back(c);
  }
  std::vector<Bits> all(seen.begin(), seen.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const Bits& c : cyclic) {
      if (is_subset(c, all[i])) continue;
      std::vector<Elem> gens = members(all[i]);
      for (Elem x : members(c)) gens.push_back(x);
      Bits j = subgroup_closure(g, gens);
      if (seen.insert(j).second) all.push_back(j);
    }
  std::sort(all.begin(), all.end(), [](const Bits& a, const Bits& b) {
    auto ca = count_bits(a), cb = count_bits(b);
    return ca != cb ? ca < cb : a < b;
  });
  return all;
}

/// Distinct subgroup orders, ascending.
inline std::vector<std::size_t> subgroup_orders(const FiniteGroup& g) {
  std::set<std::size_t> orders;
  for (const Bits& h : subgroups(g)) orders.insert(count_bits(h));
  return {orders.begin(), orders.end()};
}

}  // namespace fring
