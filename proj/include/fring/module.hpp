#pragma once

/// @file module.hpp
/// @brief Sided finitely presented modules over a FiniteRing, realized
/// exhaustively.
///
/// Every module is stored as a subquotient S/K of an ambient free module R^m,
/// with ambient vectors encoded as little-endian base-|R| integers ("codes").
/// Module elements are the K-cosets inside S, numbered so that the zero coset
/// is element 0 and the remaining cosets follow in increasing order of their
/// smallest code. Submodules, quotients and duals all stay inside this one
/// representation, so no algorithm ever needs more than |R|^m slots.

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "constructions.hpp"
#include "ring.hpp"
#include "ring_theory.hpp"

namespace fring {

class FModule;
using ModulePtr = std::shared_ptr<const FModule>;

namespace detail {

/// Arithmetic on codes of R^m.
struct Ambient {
  const FiniteRing* ring = nullptr;
  Side side = Side::left;
  std::size_t rank = 0;
  std::size_t total = 1;

  Ambient() = default;
  Ambient(const FiniteRing& r, Side s, std::size_t m, std::size_t cap) : ring(&r), side(s), rank(m) {
    total = bounded_pow(r.size(), m, cap);
    if (total > cap)
      throw SizeOverflow("ambient module " + r.label() + "^" + std::to_string(m) + " exceeds cap " +
                         std::to_string(cap));
  }

  void decode(std::size_t code, std::vector<Elem>& out) const {
    out.resize(rank);
    const std::size_t q = ring->size();
    for (std::size_t i = 0; i < rank; ++i) {
      out[i] = Elem(code % q);
      code /= q;
    }
  }

  std::size_t encode(std::span<const Elem> digits) const {
    std::size_t code = 0;
    const std::size_t q = ring->size();
    for (std::size_t i = digits.size(); i-- > 0;) code = code * q + digits[i];
    return code;
  }

  std::size_t add(std::size_t a, std::size_t b) const {
    const std::size_t q = ring->size();
    std::size_t code = 0, mult = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      code += mult * ring->add(Elem(a % q), Elem(b % q));
      a /= q;
      b /= q;
      mult *= q;
    }
    return code;
  }

  std::size_t neg(std::size_t a) const {
    const std::size_t q = ring->size();
    std::size_t code = 0, mult = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      code += mult * ring->neg(Elem(a % q));
      a /= q;
      mult *= q;
    }
    return code;
  }

  /// r·a on the left side, a·r on the right side, coordinatewise.
  std::size_t act(Elem r, std::size_t a) const {
    const std::size_t q = ring->size();
    std::size_t code = 0, mult = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      const Elem x = Elem(a % q);
      code += mult * (side == Side::left ? ring->mul(r, x) : ring->mul(x, r));
      a /= q;
      mult *= q;
    }
    return code;
  }

  std::size_t zero() const {
    std::vector<Elem> z(rank, ring->zero());
    return encode(z);
  }

  std::size_t unit_vector(std::size_t i) const {
    std::vector<Elem> z(rank, ring->zero());
    z[i] = ring->one();
    return encode(z);
  }
};

}  // namespace detail

/// A realized sided module. Immutable once built; share through ModulePtr.
class FModule {
 public:
  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  Side side() const noexcept { return side_; }
  std::size_t size() const noexcept { return reps_.size(); }
  Elem zero() const noexcept { return 0; }
  const std::string& label() const noexcept { return label_; }

  Elem add(Elem a, Elem b) const {
    if (!add_.empty()) return add_[a * size() + b];
    return index_of_[amb_.add(reps_[a], reps_[b])];
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// r·a for left modules, a·r for right modules.
  Elem act(Elem r, Elem a) const { return act_[r * size() + a]; }

  /// Designated generators (element indices). For presented modules these
  /// are the images of the unit vectors, in order.
  const std::vector<Elem>& generators() const noexcept { return gens_; }
  /// Relation vectors of a presented module (empty otherwise).
  const std::vector<std::vector<Elem>>& relations() const noexcept { return relations_; }
  /// True when the module is R^m modulo the span of relations().
  bool is_presented() const noexcept { return presented_; }

  std::size_t ambient_rank() const noexcept { return amb_.rank; }
  std::size_t ambient_size() const noexcept { return amb_.total; }
  const detail::Ambient& ambient() const noexcept { return amb_; }
  std::size_t code_of(Elem a) const { return reps_[a]; }
  /// Module element of an ambient code, or npos when the code lies outside S.
  Elem element_of_code(std::size_t code) const { return index_of_[code]; }
  std::vector<Elem> coordinates(Elem a) const {
    std::vector<Elem> d;
    amb_.decode(reps_[a], d);
    return d;
  }

  /// Codes of S whose element lies in `elems`.
  Bits codes_in(const Bits& elems) const {
    Bits out(amb_.total, false);
    for (std::size_t c = 0; c < amb_.total; ++c)
      if (index_of_[c] != npos && elems[index_of_[c]]) out[c] = true;
    return out;
  }

  /// Builds S/K inside R^m. `s_codes` must be a submodule of R^m and
  /// `k_codes` (listed) a submodule of it. `gens` are ambient codes of
  /// designated generators; when empty a greedy generating set is chosen.
  static ModulePtr subquotient(RingPtr ring, Side side, std::size_t rank, const Bits& s_codes,
                               const std::vector<std::size_t>& k_codes, const std::vector<std::size_t>& gen_codes,
                               std::string label, std::size_t cap);

  FModule() = default;

 private:
  friend ModulePtr present_module(const RingPtr&, Side, std::size_t, const std::vector<std::vector<Elem>>&,
                                  const Caps&);
  void greedy_generators();

  RingPtr ring_;
  Side side_ = Side::left;
  detail::Ambient amb_;
  std::vector<std::size_t> reps_;
  std::vector<Elem> index_of_;
  std::vector<Elem> act_, add_, neg_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> relations_;
  bool presented_ = false;
  std::string label_;
};

/// Submodule of a realized module, as a membership bitset over its elements.
struct Submodule {
  ModulePtr parent;
  Bits bits;

  std::size_t count() const { return count_bits(bits); }
  bool contains(Elem x) const { return bits[x]; }
  std::vector<Elem> elements() const { return members(bits); }
  bool is_zero() const { return count() == 1; }
  bool is_full() const { return count() == parent->size(); }
  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.parent == b.parent && a.bits == b.bits;
  }
};

/// Additive, action-compatible map given by its full value table.
struct ModuleHom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Elem> values;

  Elem operator()(Elem x) const { return values[x]; }

  bool is_injective() const {
    Bits seen(target->size(), false);
    for (Elem v : values) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }
  bool is_surjective() const {
    Bits seen(target->size(), false);
    std::size_t hit = 0;
    for (Elem v : values)
      if (!seen[v]) {
        seen[v] = true;
        ++hit;
      }
    return hit == target->size();
  }
  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [&](Elem v) { return v == target->zero(); });
  }
  Submodule kernel() const {
    Bits b(source->size(), false);
    for (Elem x = 0; x < source->size(); ++x) b[x] = values[x] == target->zero();
    return {source, std::move(b)};
  }
  Submodule image() const {
    Bits b(target->size(), false);
    for (Elem v : values) b[v] = true;
    return {target, std::move(b)};
  }
  /// Full table check of additivity and compatibility with the action.
  bool verify() const {
    const FModule& M = *source;
    const FModule& N = *target;
    if (&M.ring() != &N.ring() || M.side() != N.side() || values.size() != M.size()) return false;
    for (Elem a = 0; a < M.size(); ++a)
      for (Elem b = 0; b < M.size(); ++b)
        if (values[M.add(a, b)] != N.add(values[a], values[b])) return false;
    for (Elem r = 0; r < M.ring().size(); ++r)
      for (Elem a = 0; a < M.size(); ++a)
        if (values[M.act(r, a)] != N.act(r, values[a])) return false;
    return true;
  }
  friend bool operator==(const ModuleHom& a, const ModuleHom& b) {
    return a.source == b.source && a.target == b.target && a.values == b.values;
  }
};

/// g∘f. Requires f.target and g.source to be the same module.
inline ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  if (f.target != g.source) throw ActionMismatch("compose: codomain and domain differ");
  ModuleHom h{f.source, g.target, std::vector<Elem>(f.values.size())};
  for (std::size_t x = 0; x < f.values.size(); ++x) h.values[x] = g.values[f.values[x]];
  return h;
}

inline ModuleHom identity_hom(const ModulePtr& M) {
  ModuleHom h{M, M, std::vector<Elem>(M->size())};
  for (Elem x = 0; x < M->size(); ++x) h.values[x] = x;
  return h;
}

inline ModuleHom zero_hom(const ModulePtr& M, const ModulePtr& N) {
  return {M, N, std::vector<Elem>(M->size(), N->zero())};
}

inline ModuleHom add_homs(const ModuleHom& f, const ModuleHom& g) {
  ModuleHom h{f.source, f.target, f.values};
  for (std::size_t x = 0; x < h.values.size(); ++x) h.values[x] = f.target->add(f.values[x], g.values[x]);
  return h;
}

// ---------------------------------------------------------------------------
// Spans and lattices inside a realized module.

namespace detail {

/// Extends the submodule `in`/`list` (a subgroup) by the subgroup `add_list`,
/// using that S + T is the union of the cosets S + t.
template <class AddFn>
void union_cosets(Bits& in, std::vector<Elem>& list, const std::vector<Elem>& add_list, AddFn&& add) {
  const std::size_t base = list.size();
  for (Elem t : add_list) {
    if (in[t]) continue;
    for (std::size_t i = 0; i < base; ++i) {
      Elem y = add(list[i], t);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  }
}

inline std::vector<Elem> cyclic_list(const FModule& M, Elem x) {
  Bits seen(M.size(), false);
  std::vector<Elem> out;
  for (Elem r = 0; r < M.ring().size(); ++r) {
    Elem y = M.act(r, x);
    if (!seen[y]) {
      seen[y] = true;
      out.push_back(y);
    }
  }
  return out;
}

}  // namespace detail

/// Submodule generated by `seeds`.
inline Submodule generated_submodule(const ModulePtr& M, const std::vector<Elem>& seeds) {
  Bits in(M->size(), false);
  std::vector<Elem> list{M->zero()};
  in[M->zero()] = true;
  auto add = [&](Elem a, Elem b) { return M->add(a, b); };
  for (Elem s : seeds) {
    if (in[s]) continue;
    detail::union_cosets(in, list, detail::cyclic_list(*M, s), add);
  }
  return {M, std::move(in)};
}

inline Submodule cyclic_submodule(const ModulePtr& M, Elem x) { return generated_submodule(M, {x}); }

inline Submodule zero_submodule(const ModulePtr& M) {
  Bits b(M->size(), false);
  b[M->zero()] = true;
  return {M, std::move(b)};
}

inline Submodule full_submodule(const ModulePtr& M) { return {M, Bits(M->size(), true)}; }

inline Submodule sum_sub(const Submodule& S, const Submodule& T) {
  if (S.parent != T.parent) throw ParentMismatch();
  Bits in = S.bits;
  std::vector<Elem> list = S.elements();
  detail::union_cosets(in, list, T.elements(), [&](Elem a, Elem b) { return S.parent->add(a, b); });
  return {S.parent, std::move(in)};
}

inline Submodule intersect_sub(const Submodule& S, const Submodule& T) {
  if (S.parent != T.parent) throw ParentMismatch();
  Bits b(S.bits.size(), false);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = S.bits[i] && T.bits[i];
  return {S.parent, std::move(b)};
}

/// True when the bitset is closed under addition and the ring action.
inline bool is_submodule(const FModule& M, const Bits& bits) {
  if (!bits[M.zero()]) return false;
  const auto xs = members(bits);
  for (Elem a : xs) {
    for (Elem b : xs)
      if (!bits[M.add(a, b)]) return false;
    for (Elem r = 0; r < M.ring().size(); ++r)
      if (!bits[M.act(r, a)]) return false;
  }
  return true;
}

/// Full submodule lattice: cyclic submodules closed under pairwise sums
/// until fixpoint. Sorted by (size, membership) for deterministic order.
inline std::vector<Submodule> submodules(const ModulePtr& M, const Caps& caps = {}) {
  if (M->size() > caps.max_module) throw SizeOverflow("submodules: module exceeds cap");
  std::unordered_set<Bits> seen;
  std::vector<Bits> cyclic;
  std::vector<std::vector<Elem>> cyclic_members;
  for (Elem x = 0; x < M->size(); ++x) {
    Submodule c = cyclic_submodule(M, x);
    if (seen.insert(c.bits).second) {
      cyclic_members.push_back(c.elements());
      cyclic.push_back(std::move(c.bits));
    }
  }
  std::vector<Bits> all(cyclic.begin(), cyclic.end());
  std::vector<std::vector<Elem>> all_members = cyclic_members;
  auto add = [&](Elem a, Elem b) { return M->add(a, b); };
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < cyclic.size(); ++j) {
      if (is_subset(cyclic[j], all[i])) continue;
      Bits in = all[i];
      std::vector<Elem> list = all_members[i];
      detail::union_cosets(in, list, cyclic_members[j], add);
      if (seen.insert(in).second) {
        if (all.size() >= caps.max_lattice) throw SizeOverflow("submodules: lattice exceeds cap");
        std::sort(list.begin(), list.end());
        all.push_back(std::move(in));
        all_members.push_back(std::move(list));
      }
    }
  std::sort(all.begin(), all.end(), [](const Bits& a, const Bits& b) {
    auto ca = count_bits(a), cb = count_bits(b);
    return ca != cb ? ca < cb : a > b;
  });
  std::vector<Submodule> out;
  out.reserve(all.size());
  for (auto& b : all) out.push_back({M, std::move(b)});
  return out;
}

/// Sum of all minimal nonzero submodules. Minimal submodules are cyclic on
/// each of their nonzero elements, so only cyclic submodules are examined.
inline Submodule socle(const ModulePtr& M) {
  std::vector<std::size_t> cyc_size(M->size());
  std::vector<std::vector<Elem>> cyc(M->size());
  for (Elem x = 0; x < M->size(); ++x) {
    cyc[x] = cyclic_submodule(M, x).elements();
    cyc_size[x] = cyc[x].size();
  }
  std::vector<Elem> seeds;
  for (Elem x = 0; x < M->size(); ++x) {
    if (x == M->zero()) continue;
    bool minimal = true;
    for (Elem y : cyc[x])
      if (y != M->zero() && cyc_size[y] != cyc_size[x]) {
        minimal = false;
        break;
      }
    if (minimal) seeds.push_back(x);
  }
  return generated_submodule(M, seeds);
}

/// S is essential in its parent iff every nonzero cyclic submodule meets S
/// nontrivially (every nonzero submodule contains one).
inline bool is_essential(const Submodule& S) {
  const ModulePtr& M = S.parent;
  for (Elem x = 0; x < M->size(); ++x) {
    if (x == M->zero()) continue;
    bool meets = false;
    for (Elem y : detail::cyclic_list(*M, x))
      if (y != M->zero() && S.bits[y]) {
        meets = true;
        break;
      }
    if (!meets) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction.

inline ModulePtr FModule::subquotient(RingPtr ring, Side side, std::size_t rank, const Bits& s_codes,
                                      const std::vector<std::size_t>& k_codes,
                                      const std::vector<std::size_t>& gen_codes, std::string label, std::size_t cap) {
  auto M = std::make_shared<FModule>();
  M->ring_ = std::move(ring);
  M->side_ = side;
  M->amb_ = detail::Ambient(*M->ring_, side, rank, cap);
  M->label_ = std::move(label);
  const auto& amb = M->amb_;
  M->index_of_.assign(amb.total, npos);
  auto claim = [&](std::size_t code) {
    const Elem id = Elem(M->reps_.size());
    M->reps_.push_back(code);
    for (std::size_t k : k_codes) M->index_of_[amb.add(code, k)] = id;
  };
  claim(amb.zero());
  for (std::size_t c = 0; c < amb.total; ++c)
    if (s_codes[c] && M->index_of_[c] == npos) claim(c);
  const std::size_t n = M->reps_.size();
  const std::size_t q = M->ring_->size();
  M->act_.resize(q * n);
  for (Elem r = 0; r < q; ++r)
    for (Elem a = 0; a < n; ++a) M->act_[r * n + a] = M->index_of_[amb.act(r, M->reps_[a])];
  M->neg_.resize(n);
  for (Elem a = 0; a < n; ++a) M->neg_[a] = M->index_of_[amb.neg(M->reps_[a])];
  if (n <= 1024) {
    M->add_.resize(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) M->add_[a * n + b] = M->index_of_[amb.add(M->reps_[a], M->reps_[b])];
  }
  if (gen_codes.empty() && n > 1) {
    M->greedy_generators();
  } else {
    for (std::size_t c : gen_codes) M->gens_.push_back(M->index_of_[c]);
  }
  return M;
}

inline void FModule::greedy_generators() {
  gens_.clear();
  Bits in(size(), false);
  std::vector<Elem> list{zero()};
  in[zero()] = true;
  auto add_fn = [this](Elem a, Elem b) { return add(a, b); };
  for (Elem x = 0; x < size() && list.size() < size(); ++x) {
    if (in[x]) continue;
    gens_.push_back(x);
    detail::union_cosets(in, list, detail::cyclic_list(*this, x), add_fn);
  }
}

/// R^m with coordinatewise action and no relations.
inline ModulePtr free_module(const RingPtr& R, Side side, std::size_t m, const Caps& caps = {}) {
  detail::Ambient amb(*R, side, m, caps.max_module);
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(amb.unit_vector(i));
  std::string label = R->label() + "^" + std::to_string(m) + (side == Side::left ? "(L)" : "(R)");
  auto M = FModule::subquotient(R, side, m, Bits(amb.total, true), {amb.zero()}, gens, label, caps.max_module);
  return M;
}

inline ModulePtr regular_module(const RingPtr& R, Side side) { return free_module(R, side, 1); }

/// Submodule viewed as a standalone module, together with its inclusion.
inline std::pair<ModulePtr, ModuleHom> submodule_as_module(const Submodule& S, std::string label = {}) {
  const FModule& M = *S.parent;
  Bits s_codes = M.codes_in(S.bits);
  std::vector<std::size_t> k_codes;
  for (std::size_t c = 0; c < M.ambient_size(); ++c)
    if (M.element_of_code(c) == M.zero()) k_codes.push_back(c);
  if (label.empty()) label = "sub(" + M.label() + ")";
  auto N = FModule::subquotient(M.ring_ptr(), M.side(), M.ambient_rank(), s_codes, k_codes, {}, std::move(label),
                                M.ambient_size());
  ModuleHom inc{N, S.parent, std::vector<Elem>(N->size())};
  for (Elem x = 0; x < N->size(); ++x) inc.values[x] = M.element_of_code(N->code_of(x));
  return {N, std::move(inc)};
}

/// M/S with the induced action, together with the projection M → M/S.
inline std::pair<ModulePtr, ModuleHom> quotient_with_projection(const Submodule& S, std::string label = {}) {
  const FModule& M = *S.parent;
  Bits s_codes(M.ambient_size(), false);
  std::vector<std::size_t> k_codes;
  for (std::size_t c = 0; c < M.ambient_size(); ++c) {
    const Elem e = M.element_of_code(c);
    if (e == npos) continue;
    s_codes[c] = true;
    if (S.bits[e]) k_codes.push_back(c);
  }
  std::vector<std::size_t> gens;
  for (Elem g : M.generators()) gens.push_back(M.code_of(g));
  if (label.empty()) label = M.label() + "/S";
  auto Q = FModule::subquotient(M.ring_ptr(), M.side(), M.ambient_rank(), s_codes, k_codes, gens, std::move(label),
                                M.ambient_size());
  ModuleHom proj{S.parent, Q, std::vector<Elem>(M.size())};
  for (Elem x = 0; x < M.size(); ++x) proj.values[x] = Q->element_of_code(M.code_of(x));
  return {Q, std::move(proj)};
}

inline ModulePtr quotient(const Submodule& S, std::string label = {}) {
  return quotient_with_projection(S, std::move(label)).first;
}

/// R^m modulo the submodule spanned by the relation vectors. Relations are
/// left combinations Σ r_i·g_i for left modules and right combinations
/// Σ g_i·r_i for right modules.
inline ModulePtr present_module(const RingPtr& R, Side side, std::size_t m,
                                const std::vector<std::vector<Elem>>& relations, const Caps& caps = {}) {
  auto F = free_module(R, side, m, caps);
  std::vector<Elem> seeds;
  for (const auto& rel : relations) {
    if (rel.size() != m) throw std::invalid_argument("present_module: relation length differs from generator count");
    for (Elem r : rel)
      if (r >= R->size()) throw std::invalid_argument("present_module: relation entry out of range");
    seeds.push_back(F->element_of_code(F->ambient().encode(rel)));
  }
  Submodule K = generated_submodule(F, seeds);
  std::string label = "<" + R->label() + (side == Side::left ? " L" : " R") + " gens " + std::to_string(m);
  for (const auto& rel : relations) label += " | " + format_set(rel);
  label += ">";
  auto Q = quotient(K, label);
  auto P = std::make_shared<FModule>(*Q);
  P->relations_ = relations;
  P->presented_ = true;
  return P;
}

inline ModulePtr zero_module(const RingPtr& R, Side side) { return free_module(R, side, 0); }

/// Cyclic module R/I for a left (or right) ideal I given as an element set.
inline ModulePtr cyclic_module(const RingPtr& R, Side side, const ElementSubset& ideal) {
  auto F = regular_module(R, side);
  Bits b(F->size(), false);
  for (Elem x : ideal.elements()) b[F->element_of_code(x)] = true;
  std::string label = R->label() + "/" + format_set(ideal.elements()) + (side == Side::left ? "(L)" : "(R)");
  return quotient(Submodule{F, std::move(b)}, std::move(label));
}

/// Ideals of the given side, as element subsets of R, in lattice order.
inline std::vector<ElementSubset> one_sided_ideals(const RingPtr& R, Side side, const Caps& caps = {}) {
  auto F = regular_module(R, side);
  std::vector<ElementSubset> out;
  for (const auto& S : submodules(F, caps)) {
    ElementSubset I(R->size());
    for (Elem x : S.elements()) I.insert(Elem(F->code_of(x)));
    out.push_back(std::move(I));
  }
  return out;
}

}  // namespace fring
