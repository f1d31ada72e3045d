#pragma once

/// @file ring.hpp
/// @brief Finite unital rings stored as full addition and multiplication
/// tables over the index set [0, n).
///
/// A `FiniteRing` is only ever produced by `make_ring_from_tables` (or by the
/// structured constructors in constructions.hpp), so every instance satisfies
/// the ring axioms. Rings are immutable and shared through `RingPtr`.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"
#include "group.hpp"

namespace fring {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Bookkeeping attached to rings built by `group_ring`: element x is the
/// function G → R whose value at g is base digit g of x (little-endian).
struct GroupRingInfo {
  RingPtr base;
  GroupPtr group;

  Elem coefficient(Elem x, Elem g) const;
  Elem from_coefficients(std::span<const Elem> coeffs) const;
  /// r·g for a base scalar r and group element g.
  Elem monomial(Elem r, Elem g) const;
};

class FiniteRing {
 public:
  std::size_t size() const noexcept { return n_; }
  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<Elem>& add_table() const noexcept { return add_; }
  const std::vector<Elem>& mul_table() const noexcept { return mul_; }

  /// Non-null exactly for rings produced by `group_ring`.
  const GroupRingInfo* group_ring_info() const noexcept { return group_info_.get(); }

  bool is_commutative() const {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// n·1 computed by repeated addition.
  Elem scalar(std::size_t k) const {
    Elem acc = zero_;
    for (std::size_t i = 0; i < k % additive_order(one_); ++i) acc = add(acc, one_);
    return acc;
  }

  std::size_t additive_order(Elem a) const {
    std::size_t k = 1;
    for (Elem x = a; x != zero_; x = add(x, a)) ++k;
    return k;
  }

 private:
  friend RingPtr make_ring_from_tables(std::size_t, std::vector<Elem>, std::vector<Elem>, Elem, Elem, std::string);
  friend RingPtr detail_make_trusted_ring(std::size_t, std::vector<Elem>, std::vector<Elem>, Elem, Elem,
                                          std::string, std::shared_ptr<const GroupRingInfo>);
  friend RingPtr relabel_ring(const RingPtr&, std::string);

  std::size_t n_ = 0;
  std::vector<Elem> add_, mul_, neg_;
  Elem zero_ = 0, one_ = 0;
  std::string label_;
  std::shared_ptr<const GroupRingInfo> group_info_;
};

/// Subset of a ring's elements, stored as a membership bitset.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(std::size_t universe) : bits_(universe, false) {}
  explicit ElementSubset(Bits bits) : bits_(std::move(bits)) {}
  ElementSubset(std::size_t universe, std::initializer_list<Elem> xs) : bits_(universe, false) {
    for (Elem x : xs) insert(x);
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(Elem x) const { return x < bits_.size() && bits_[x]; }
  void insert(Elem x) {
    if (x >= bits_.size()) throw std::out_of_range("ElementSubset: index out of range");
    bits_[x] = true;
  }
  std::size_t count() const { return count_bits(bits_); }
  std::vector<Elem> elements() const { return members(bits_); }
  const Bits& bits() const noexcept { return bits_; }
  bool subset_of(const ElementSubset& o) const { return is_subset(bits_, o.bits_); }

  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;
  friend auto operator<=>(const ElementSubset& a, const ElementSubset& b) { return a.bits_ <=> b.bits_; }

 private:
  Bits bits_;
};

namespace detail {

/// Full table scan of the ring axioms; throws AxiomViolation on the first
/// failure in deterministic (axiom, a, b, c) order.
inline void validate_ring_tables(std::size_t n, const std::vector<Elem>& add, const std::vector<Elem>& mul, Elem zero,
                                 Elem one) {
  if (n == 0) throw AxiomViolation("nonempty", {0, 0, 0});
  if (add.size() != n * n || mul.size() != n * n) throw AxiomViolation("table-shape", {0, 0, 0});
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add[i] >= n) throw AxiomViolation("closure-add", {Elem(i / n), Elem(i % n), 0});
    if (mul[i] >= n) throw AxiomViolation("closure-mul", {Elem(i / n), Elem(i % n), 0});
  }
  if (zero >= n) throw AxiomViolation("additive-identity", {zero, 0, 0});
  if (one >= n) throw AxiomViolation("multiplicative-identity", {one, 0, 0});
  auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
  auto M = [&](Elem a, Elem b) { return mul[a * n + b]; };
  for (Elem a = 0; a < n; ++a)
    if (A(zero, a) != a) throw AxiomViolation("additive-identity", {zero, a, 0});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (A(a, b) != A(b, a)) throw AxiomViolation("additive-commutativity", {a, b, 0});
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) found = A(a, b) == zero;
    if (!found) throw AxiomViolation("additive-inverse", {a, 0, 0});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (A(A(a, b), c) != A(a, A(b, c))) throw AxiomViolation("additive-associativity", {a, b, c});
  for (Elem a = 0; a < n; ++a)
    if (M(one, a) != a || M(a, one) != a) throw AxiomViolation("multiplicative-identity", {one, a, 0});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) throw AxiomViolation("left-distributivity", {a, b, c});
        if (M(A(a, b), c) != A(M(a, c), M(b, c))) throw AxiomViolation("right-distributivity", {a, b, c});
        if (M(M(a, b), c) != M(a, M(b, c))) throw AxiomViolation("multiplicative-associativity", {a, b, c});
      }
  if (n > 1 && zero == one) throw AxiomViolation("zero-ne-one", {zero, one, 0});
}

inline std::vector<Elem> negation_table(std::size_t n, const std::vector<Elem>& add, Elem zero) {
  std::vector<Elem> neg(n, npos);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (add[a * n + b] == zero) {
        neg[a] = b;
        break;
      }
  return neg;
}

}  // namespace detail

/// Validates the tables and returns the ring.
///
/// Throws AxiomViolation naming the first failing axiom and a witness triple.
inline RingPtr make_ring_from_tables(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                                     std::string label = {}) {
  detail::validate_ring_tables(n, add, mul, zero, one);
  auto r = std::make_shared<FiniteRing>();
  r->n_ = n;
  r->neg_ = detail::negation_table(n, add, zero);
  r->add_ = std::move(add);
  r->mul_ = std::move(mul);
  r->zero_ = zero;
  r->one_ = one;
  r->label_ = std::move(label);
  return r;
}

/// Structured constructors route through here. Tables up to 256 elements are
/// fully validated; larger ones (group rings up to the group-ring cap) are
/// correct by construction and a full O(n³) scan would dominate run time.
inline RingPtr detail_make_trusted_ring(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                                        Elem one, std::string label,
                                        std::shared_ptr<const GroupRingInfo> info = nullptr) {
  if (n <= 256) detail::validate_ring_tables(n, add, mul, zero, one);
  auto r = std::make_shared<FiniteRing>();
  r->n_ = n;
  r->neg_ = detail::negation_table(n, add, zero);
  r->add_ = std::move(add);
  r->mul_ = std::move(mul);
  r->zero_ = zero;
  r->one_ = one;
  r->label_ = std::move(label);
  r->group_info_ = std::move(info);
  return r;
}

inline Elem GroupRingInfo::coefficient(Elem x, Elem g) const {
  const std::size_t q = base->size();
  for (Elem i = 0; i < g; ++i) x = Elem(x / q);
  return Elem(x % q);
}

inline Elem GroupRingInfo::from_coefficients(std::span<const Elem> coeffs) const {
  const std::size_t q = base->size();
  std::size_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * q + coeffs[i];
  return Elem(code);
}

inline Elem GroupRingInfo::monomial(Elem r, Elem g) const {
  std::vector<Elem> c(group->size(), base->zero());
  c[g] = r;
  return from_coefficients(c);
}

/// Same tables under a different label.
inline RingPtr relabel_ring(const RingPtr& R, std::string label) {
  auto r = std::make_shared<FiniteRing>(*R);
  r->label_ = std::move(label);
  return r;
}

}  // namespace fring
