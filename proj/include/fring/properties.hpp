#pragma once

/// @file properties.hpp
/// @brief Ring-level predicates: self-injectivity by Baer's criterion, Kasch,
/// semisimplicity, annihilator conditions, CF/IF embeddings, semiregularity,
/// QF/WQF and socle essentiality. Every predicate returns a PropertyVerdict
/// carrying the first counterexample in enumeration order.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homological.hpp"

namespace fring {

struct PropertyVerdict {
  std::string name;
  std::string side;  ///< "left", "right" or "two-sided"
  bool value = false;
  std::optional<std::string> witness;
  bool corpus_bounded = false;
};

inline std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

// ---------------------------------------------------------------------------
// Self-injectivity.

/// A hom from a one-sided ideal into R that is not multiplication by any
/// ring element.
struct BaerFailure {
  ElementSubset ideal;
  std::vector<Elem> generators;  ///< ring elements generating the ideal
  std::vector<Elem> images;      ///< their images in R
};

inline std::string describe(const BaerFailure& f) {
  std::string s = "ideal " + format_set(f.ideal.elements()) + ", hom ";
  for (std::size_t i = 0; i < f.generators.size(); ++i)
    s += (i ? ", " : "") + std::to_string(f.generators[i]) + "->" + std::to_string(f.images[i]);
  return s + " does not extend";
}

/// Baer's criterion on the given side: every hom I → R from a left ideal is
/// x ↦ x·r (for right ideals, x ↦ r·x). Over a finite ring this decides
/// self-injectivity exactly. Ideals are scanned in lattice order.
inline std::optional<BaerFailure> baer_failure(const RingPtr& R, Side side, const Caps& caps = {}) {
  auto reg = regular_module(R, side);
  for (const auto& S : submodules(reg, caps)) {
    if (S.is_zero()) continue;
    auto [I, inc] = submodule_as_module(S);
    const HomPlan plan = make_hom_plan(I);
    std::vector<Elem> gens;
    for (Elem g : plan.generators()) gens.push_back(Elem(reg->code_of(inc(g))));
    std::set<std::vector<Elem>> extendable;
    std::vector<Elem> tuple(gens.size());
    for (Elem r = 0; r < R->size(); ++r) {
      for (std::size_t j = 0; j < gens.size(); ++j)
        tuple[j] = reg->element_of_code(side == Side::left ? R->mul(gens[j], r) : R->mul(r, gens[j]));
      extendable.insert(tuple);
    }
    std::optional<BaerFailure> bad;
    for_each_hom(plan, *reg, [&](const auto&, const std::vector<Elem>& images) {
      if (extendable.count(images)) return true;
      BaerFailure f{ElementSubset(R->size()), gens, {}};
      for (Elem x : S.elements()) f.ideal.insert(Elem(reg->code_of(x)));
      for (Elem y : images) f.images.push_back(Elem(reg->code_of(y)));
      bad = std::move(f);
      return false;
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

inline PropertyVerdict self_injective_verdict(const RingPtr& R, Side side, const Caps& caps = {}) {
  PropertyVerdict v{"self-injective", side_name(side), true, std::nullopt, false};
  if (auto f = baer_failure(R, side, caps)) {
    v.value = false;
    v.witness = describe(*f);
  }
  return v;
}

inline PropertyVerdict is_left_self_injective(const RingPtr& R, const Caps& caps = {}) {
  return self_injective_verdict(R, Side::left, caps);
}
inline PropertyVerdict is_right_self_injective(const RingPtr& R, const Caps& caps = {}) {
  return self_injective_verdict(R, Side::right, caps);
}

/// Independent route: Ext¹(R/I, R) = 0 for every ideal I on the given side.
inline bool self_injective_via_ext(const RingPtr& R, Side side, const Caps& caps = {}) {
  auto reg = regular_module(R, side);
  for (const auto& I : one_sided_ideals(R, side, caps))
    if (ext1(cyclic_module(R, side, I), reg, caps).size() != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// FP-cogenerators.

/// The three equivalent FP-cogenerator conditions for a module K, each
/// evaluated over a corpus of modules of the same side:
///  (1) every nonzero f: C → N (C cyclic, N in the corpus) has some
///      g: N → K with g∘f ≠ 0;
///  (2) each corpus module M embeds in K^Hom(M,K) via x ↦ (φ(x))_φ;
///  (3) the kernels of all φ: M → K intersect in 0.
struct CogeneratorConditions {
  bool maps_detected = true;   // (1)
  bool embeds_in_power = true; // (2)
  bool kernels_meet_zero = true; // (3)
  std::optional<std::string> maps_witness, power_witness, kernel_witness;
};

inline CogeneratorConditions fp_cogenerator_conditions(const ModulePtr& K, const std::vector<ModulePtr>& corpus,
                                                       const std::vector<ModulePtr>& cyclic_sources) {
  CogeneratorConditions c;
  for (const auto& M : corpus) {
    // (3) intersection of kernels.
    Bits alive(M->size(), true);
    std::size_t remaining = M->size();
    for_each_hom(M, K, [&](const std::vector<Elem>& v, const auto&) {
      for (Elem x = 0; x < M->size(); ++x)
        if (alive[x] && v[x] != K->zero()) {
          alive[x] = false;
          --remaining;
        }
      return remaining > 1;
    });
    if (remaining > 1 && c.kernels_meet_zero) {
      c.kernels_meet_zero = false;
      for (Elem x = 1; x < M->size(); ++x)
        if (alive[x]) {
          c.kernel_witness = M->label() + ": element " + std::to_string(x) + " lies in every kernel";
          break;
        }
    }
    // (2) the product map, by partition refinement of M along each φ.
    std::vector<Elem> cls(M->size(), 0);
    std::size_t classes = 1;
    for_each_hom(M, K, [&](const std::vector<Elem>& v, const auto&) {
      std::map<std::pair<Elem, Elem>, Elem> ids;
      for (Elem x = 0; x < M->size(); ++x) cls[x] = ids.emplace(std::pair{cls[x], v[x]}, Elem(ids.size())).first->second;
      classes = ids.size();
      return classes < M->size();
    });
    if (classes < M->size() && c.embeds_in_power) {
      c.embeds_in_power = false;
      c.power_witness = M->label() + " does not embed in a power of " + K->label();
    }
    // (1) nonzero maps from cyclic modules into M are detected by K.
    if (!c.maps_detected) continue;
    std::vector<signed char> memo(M->size(), -1);
    for (const auto& C : cyclic_sources) {
      if (C->size() == 1) continue;
      const HomPlan plan = make_hom_plan(C);
      for_each_hom(plan, *M, [&](const std::vector<Elem>&, const std::vector<Elem>& images) {
        const Elem y = images[0];
        if (y == M->zero()) return true;
        if (memo[y] < 0) {
          bool detected = false;
          for_each_hom(M, K, [&](const std::vector<Elem>& g, const auto&) {
            detected = g[y] != K->zero();
            return !detected;
          });
          memo[y] = detected;
        }
        if (memo[y]) return true;
        c.maps_detected = false;
        c.maps_witness = "nonzero map " + C->label() + " -> " + M->label() + " (generator to " + std::to_string(y) +
                         ") is killed by every map into " + K->label();
        return false;
      });
      if (!c.maps_detected) break;
    }
  }
  return c;
}

/// Verdict by condition (3); the other two are cross-evaluated and any
/// disagreement raises InternalError.
inline PropertyVerdict is_fp_cogenerator(const ModulePtr& K, const std::vector<ModulePtr>& corpus,
                                         const std::vector<ModulePtr>& cyclic_sources) {
  const auto c = fp_cogenerator_conditions(K, corpus, cyclic_sources);
  if (c.kernels_meet_zero != c.embeds_in_power || c.kernels_meet_zero != c.maps_detected)
    throw InternalError("FP-cogenerator conditions disagree for " + K->label());
  return {"fp-cogenerator", side_name(K->side()), c.kernels_meet_zero, c.kernel_witness, true};
}

// ---------------------------------------------------------------------------
// Kasch.

inline PropertyVerdict kasch_verdict(const RingPtr& R, Side side, const Caps& caps = {}) {
  auto reg = regular_module(R, side);
  const auto ideals = one_sided_ideals(R, side, caps);
  std::optional<std::string> all_route, max_route;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& I = ideals[i];
    if (I.count() == R->size()) continue;
    const bool dual_zero = count_homs(cyclic_module(R, side, I), reg, 1) == 1;
    bool maximal = true;
    for (const auto& J : ideals)
      if (J.count() != R->size() && J.count() > I.count() && I.subset_of(J)) {
        maximal = false;
        break;
      }
    const std::string w = "R/" + format_set(I.elements()) + " has zero dual";
    if (dual_zero && !all_route) all_route = w;
    if (dual_zero && maximal && !max_route) max_route = w;
  }
  if (all_route.has_value() != max_route.has_value())
    throw InternalError("Kasch check over all ideals and over maximal ideals disagree for " + R->label());
  return {"kasch", side_name(side), !all_route, max_route, false};
}

inline PropertyVerdict is_left_kasch(const RingPtr& R, const Caps& caps = {}) { return kasch_verdict(R, Side::left, caps); }
inline PropertyVerdict is_right_kasch(const RingPtr& R, const Caps& caps = {}) {
  return kasch_verdict(R, Side::right, caps);
}

// ---------------------------------------------------------------------------
// Radical-based predicates.

inline PropertyVerdict is_semisimple(const RingPtr& R) {
  const auto rad = jacobson_radical(*R);
  PropertyVerdict v{"semisimple", "two-sided", rad.count() == 1, std::nullopt, false};
  if (!v.value) v.witness = "radical " + format_set(rad.elements());
  return v;
}

inline PropertyVerdict is_semiregular(const RingPtr& R) {
  const auto rad = jacobson_radical(*R);
  PropertyVerdict v{"semiregular", "two-sided", is_regular_ring(*quotient_ring(*R, rad)), std::nullopt, false};
  if (!v.value) v.witness = "R/rad is not regular";
  return v;
}

// ---------------------------------------------------------------------------
// Annihilators.

struct AnnihilatorFlags {
  bool a = true;        ///< ℓ(I∩J) = ℓ(I)+ℓ(J) for right ideals I, J
  bool b_left = true;   ///< ℓ𝔯(I) = I for left ideals I
  bool b_right = true;  ///< 𝔯ℓ(J) = J for right ideals J
  std::optional<std::string> a_witness, b_left_witness, b_right_witness;

  bool b() const { return b_left && b_right; }
};

inline AnnihilatorFlags annihilator_flags(const RingPtr& R, const Caps& caps = {}) {
  AnnihilatorFlags f;
  const auto left = one_sided_ideals(R, Side::left, caps);
  const auto right = one_sided_ideals(R, Side::right, caps);
  auto meet = [&](const ElementSubset& x, const ElementSubset& y) {
    ElementSubset z(R->size());
    for (Elem e : x.elements())
      if (y.contains(e)) z.insert(e);
    return z;
  };
  for (std::size_t i = 0; i < right.size() && f.a; ++i)
    for (std::size_t j = i + 1; j < right.size(); ++j) {
      const auto lhs = left_annihilator(*R, meet(right[i], right[j]));
      auto both = left_annihilator(*R, right[i]).elements();
      for (Elem e : left_annihilator(*R, right[j]).elements()) both.push_back(e);
      const auto rhs = ideal_closure(*R, IdealKind::left, both);
      if (!(lhs == rhs)) {
        f.a = false;
        f.a_witness = "l(I meet J) != l(I)+l(J) for I=" + format_set(right[i].elements()) +
                      ", J=" + format_set(right[j].elements());
        break;
      }
    }
  for (const auto& I : left)
    if (!(left_annihilator(*R, right_annihilator(*R, I)) == I)) {
      f.b_left = false;
      f.b_left_witness = "lr(I) != I for left ideal I=" + format_set(I.elements());
      break;
    }
  for (const auto& J : right)
    if (!(right_annihilator(*R, left_annihilator(*R, J)) == J)) {
      f.b_right = false;
      f.b_right_witness = "rl(J) != J for right ideal J=" + format_set(J.elements());
      break;
    }
  return f;
}

/// Verdict for the conjunction (a) ∧ (b); the individual flags are in
/// annihilator_flags.
inline PropertyVerdict annihilator_conditions(const RingPtr& R, const Caps& caps = {}) {
  const auto f = annihilator_flags(R, caps);
  PropertyVerdict v{"annihilator-conditions", "two-sided", f.a && f.b(), std::nullopt, false};
  if (!f.a) v.witness = f.a_witness;
  else if (!f.b_left) v.witness = f.b_left_witness;
  else if (!f.b_right) v.witness = f.b_right_witness;
  return v;
}

// ---------------------------------------------------------------------------
// Embeddings into free modules.

/// CF on one side: every cyclic module R/I embeds in R^k for some k ≤ kmax.
inline PropertyVerdict cf_verdict(const RingPtr& R, Side side, std::size_t kmax, const Caps& caps = {}) {
  PropertyVerdict v{"cf", side_name(side), true, std::nullopt, false};
  for (const auto& I : one_sided_ideals(R, side, caps)) {
    const auto M = cyclic_module(R, side, I);
    const auto s = search_embedding_into_free(M, kmax);
    if (!s.embedding) {
      v.value = false;
      v.witness = M->label() + (s.separated ? " needs rank above kmax" : " has no embedding into any free module");
      break;
    }
  }
  return v;
}

inline PropertyVerdict is_left_cf_ring(const RingPtr& R, std::size_t kmax, const Caps& caps = {}) {
  return cf_verdict(R, Side::left, kmax, caps);
}
inline PropertyVerdict is_right_cf_ring(const RingPtr& R, std::size_t kmax, const Caps& caps = {}) {
  return cf_verdict(R, Side::right, kmax, caps);
}

/// IF relative to a corpus: every listed module embeds in R^k, k ≤ kmax.
inline PropertyVerdict if_verdict(Side side, const std::vector<ModulePtr>& corpus, std::size_t kmax) {
  PropertyVerdict v{"if", side_name(side), true, std::nullopt, true};
  for (const auto& M : corpus) {
    if (M->side() != side) throw ActionMismatch("if_verdict: corpus module on the wrong side");
    if (!find_embedding_into_free(M, kmax)) {
      v.value = false;
      v.witness = M->label() + " does not embed in a free module of rank <= " + std::to_string(kmax);
      break;
    }
  }
  return v;
}

inline PropertyVerdict is_left_if_ring(const std::vector<ModulePtr>& corpus, std::size_t kmax) {
  return if_verdict(Side::left, corpus, kmax);
}
inline PropertyVerdict is_right_if_ring(const std::vector<ModulePtr>& corpus, std::size_t kmax) {
  return if_verdict(Side::right, corpus, kmax);
}

// ---------------------------------------------------------------------------
// Reflexivity of cyclic modules.

inline PropertyVerdict cyclic_reflexive_verdict(const RingPtr& R, Side side, const Caps& caps = {}) {
  PropertyVerdict v{"cyclic-reflexive", side_name(side), true, std::nullopt, false};
  for (const auto& I : one_sided_ideals(R, side, caps)) {
    const auto M = cyclic_module(R, side, I);
    if (!is_reflexive(M, caps)) {
      v.value = false;
      v.witness = M->label() + " is not reflexive";
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// QF / WQF.

/// Left and right self-injective.
inline PropertyVerdict is_qf(const RingPtr& R, const Caps& caps = {}) {
  const auto l = is_left_self_injective(R, caps);
  const auto r = is_right_self_injective(R, caps);
  PropertyVerdict v{"qf", "two-sided", l.value && r.value, std::nullopt, false};
  if (!l.value) v.witness = "left: " + *l.witness;
  else if (!r.value) v.witness = "right: " + *r.witness;
  return v;
}

/// Annulet route: ℓ𝔯(I) = I for all left ideals and 𝔯ℓ(J) = J for all right
/// ideals.
inline PropertyVerdict is_wqf(const RingPtr& R, const Caps& caps = {}) {
  const auto f = annihilator_flags(R, caps);
  PropertyVerdict v{"wqf", "two-sided", f.b(), std::nullopt, false};
  if (!f.b_left) v.witness = f.b_left_witness;
  else if (!f.b_right) v.witness = f.b_right_witness;
  return v;
}

// ---------------------------------------------------------------------------
// Socle.

inline PropertyVerdict socle_essential_verdict(const RingPtr& R, Side side) {
  auto reg = regular_module(R, side);
  const Submodule soc = socle(reg);
  PropertyVerdict v{"socle-essential", side_name(side), is_essential(soc), std::nullopt, false};
  if (!v.value) v.witness = "socle " + format_set(soc.elements()) + " is not essential";
  return v;
}

inline PropertyVerdict socle_essential_left(const RingPtr& R) { return socle_essential_verdict(R, Side::left); }
inline PropertyVerdict socle_essential_right(const RingPtr& R) { return socle_essential_verdict(R, Side::right); }

}  // namespace fring
