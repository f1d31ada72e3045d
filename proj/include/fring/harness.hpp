#pragma once

/// @file harness.hpp
/// @brief Theorem-level equivalence checks over rings, their module corpora
/// and group rings, and a deterministic (optionally parallel) corpus runner.
///
/// A report lists named boolean conditions, each exact or corpus-bounded and
/// each belonging to a group of conditions that are supposed to be
/// equivalent. Within a group all exact conditions must agree, and a
/// corpus-bounded condition may only be false when the exact value is false
/// (a finite corpus can refute but never certify). Conditions marked as
/// assertions must simply hold.

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "corpus.hpp"
#include "properties.hpp"

namespace fring {

struct Condition {
  std::string name;
  bool value = false;
  bool exact = true;
  std::string group;
  bool assertion = false;
  std::optional<std::string> witness;
};

struct TheoremReport {
  std::string theorem_id;
  std::string ring;
  std::string subject;
  std::vector<Condition> conditions;
  std::vector<std::string> not_evaluated;
  std::vector<std::string> notes;
  bool agreement = true;
  std::vector<std::string> disagreements;
  std::optional<std::string> error;

  void add(std::string name, bool value, bool exact, std::optional<std::string> witness = std::nullopt,
           std::string group = {}) {
    conditions.push_back({std::move(name), value, exact, std::move(group), false, std::move(witness)});
  }
  void assert_that(std::string name, bool value, std::optional<std::string> witness = std::nullopt) {
    conditions.push_back({std::move(name), value, true, {}, true, std::move(witness)});
  }
};

/// Applies the agreement rule and fills `agreement` / `disagreements`.
inline void finalize(TheoremReport& r) {
  r.disagreements.clear();
  std::map<std::string, std::vector<const Condition*>> groups;
  for (const auto& c : r.conditions) {
    if (c.assertion) {
      if (!c.value) r.disagreements.push_back("assertion " + c.name + " fails" + (c.witness ? ": " + *c.witness : ""));
      continue;
    }
    groups[c.group].push_back(&c);
  }
  for (const auto& [name, cs] : groups) {
    std::vector<const Condition*> exact, bounded;
    for (auto* c : cs) (c->exact ? exact : bounded).push_back(c);
    auto list = [](const std::vector<const Condition*>& xs) {
      std::string s;
      for (auto* c : xs) s += (s.empty() ? "" : ", ") + c->name + "=" + (c->value ? "true" : "false");
      return s;
    };
    const std::string where = name.empty() ? "" : "[" + name + "] ";
    if (!exact.empty()) {
      const bool v = exact.front()->value;
      if (!std::all_of(exact.begin(), exact.end(), [&](auto* c) { return c->value == v; })) {
        r.disagreements.push_back(where + "exact conditions differ: " + list(exact));
        continue;
      }
      if (v)
        for (auto* c : bounded)
          if (!c->value)
            r.disagreements.push_back(where + "corpus-bounded " + c->name + " is false while exact conditions hold" +
                                      (c->witness ? ": " + *c->witness : ""));
    } else if (!bounded.empty()) {
      const bool v = bounded.front()->value;
      if (!std::all_of(bounded.begin(), bounded.end(), [&](auto* c) { return c->value == v; }))
        r.disagreements.push_back(where + "conditions differ: " + list(bounded));
    }
  }
  if (r.error) r.disagreements.push_back("error: " + *r.error);
  r.agreement = r.disagreements.empty();
}

// ---------------------------------------------------------------------------
// Shared helpers.

namespace detail {

inline std::string module_names(const std::vector<ModulePtr>& ms, std::size_t i) { return ms[i]->label(); }

/// Whether Hom(M, F) separates the points of M (M embeds in a power of F).
inline bool separated_by(const ModulePtr& M, const ModulePtr& F) {
  Bits alive(M->size(), true);
  alive[M->zero()] = false;
  std::size_t remaining = M->size() - 1;
  if (remaining == 0) return true;
  for_each_hom(M, F, [&](const std::vector<Elem>& v, const auto&) {
    for (Elem x = 0; x < M->size(); ++x)
      if (alive[x] && v[x] != F->zero()) {
        alive[x] = false;
        --remaining;
      }
    return remaining > 0;
  });
  return remaining == 0;
}

/// Whether α*: N* → M* is onto, comparing {ψ∘α} with Hom(M, R) as tuples
/// on the generators of M.
inline bool dual_is_surjective(const ModuleHom& alpha, const ModulePtr& reg) {
  const HomPlan plan = make_hom_plan(alpha.source);
  const auto gens = plan.generators();
  std::set<std::vector<Elem>> image;
  std::vector<Elem> t(gens.size());
  for_each_hom(alpha.target, reg, [&](const std::vector<Elem>& psi, const auto&) {
    for (std::size_t i = 0; i < gens.size(); ++i) t[i] = psi[alpha(gens[i])];
    image.insert(t);
    return true;
  });
  return image.size() == count_homs(plan, *reg);
}

/// P is projective iff its presentation splits, iff Ext¹(P, K) = 0 for the
/// presentation kernel K.
inline bool is_projective(const ModulePtr& P, const Caps& caps) {
  const Presentation pres = presentation_of(P, caps);
  auto K = submodule_as_module(pres.kernel).first;
  return ext1(pres, K, caps).size() == 1;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FP-cogenerator lemma.

inline TheoremReport check_lemma_fp_cogenerator(const ModulePtr& K, const ModuleCorpus& corpus,
                                                std::string subject = {}) {
  TheoremReport r;
  r.theorem_id = "lemma-fp-cogenerator";
  r.ring = K->ring().label();
  r.subject = subject.empty() ? side_name(K->side()) + " " + K->label() : std::move(subject);
  const auto c = fp_cogenerator_conditions(K, corpus.modules, corpus.cyclic);
  r.add("(1) nonzero maps are detected by maps into K", c.maps_detected, false, c.maps_witness);
  r.add("(2) every module embeds in a power of K", c.embeds_in_power, false, c.power_witness);
  r.add("(3) kernels of all maps into K meet in zero", c.kernels_meet_zero, false, c.kernel_witness);
  r.notes.push_back("finitely generated and finitely presented coincide over a finite ring");
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// FP-injectivity theorem.

inline TheoremReport check_thm_fp_injective(const RingCorpus& rc, const Caps& caps, PresentationCache* cache = nullptr) {
  const RingPtr& R = rc.ring;
  TheoremReport r;
  r.theorem_id = "thm-fp-injective";
  r.ring = R->label();
  const auto& L = rc.left;
  const auto& Rt = rc.right;
  auto reg_l = regular_module(R, Side::left);
  auto reg_r = regular_module(R, Side::right);

  const auto baer = is_right_self_injective(R, caps);
  r.add("(1) R_R is FP-injective", baer.value, true, baer.witness);

  const auto cog = fp_cogenerator_conditions(reg_l, L.modules, L.cyclic);
  r.add("(2) RR is an FP-cogenerator", cog.kernels_meet_zero, false, cog.kernel_witness);

  {
    bool ok = true;
    std::optional<std::string> w;
    for (const auto& M : L.cyclic) {
      for (const auto& N : L.cyclic) {
        for_each_hom(M, N, [&](const std::vector<Elem>& v, const auto&) {
          ModuleHom a{M, N, v};
          if (a.is_injective() || !detail::dual_is_surjective(a, reg_l)) return true;
          ok = false;
          w = "map " + M->label() + " -> " + N->label() + " has onto dual but is not injective";
          return false;
        });
        if (!ok) break;
      }
      if (!ok) break;
    }
    r.add("(5) onto dual map implies monomorphism", ok, false, w);
  }

  {
    std::optional<std::string> w;
    for (const auto& M : L.modules)
      if (auto x = unseparated_element(M)) {
        w = M->label() + " is not semireflexive (element " + std::to_string(*x) + ")";
        break;
      }
    r.add("(6) every finitely presented left module is semireflexive", !w, false, w);
  }

  std::vector<bool> flat(L.modules.size());
  for (std::size_t i = 0; i < L.modules.size(); ++i) flat[i] = is_fp_flat(L.modules[i], Rt.monos, caps, cache);
  {
    std::optional<std::string> w;
    for (const auto& M : L.modules) {
      bool found = false;
      for (std::size_t i = 0; i < L.modules.size() && !found; ++i)
        found = flat[i] && detail::separated_by(M, L.modules[i]);
      if (!found) {
        w = M->label() + " embeds in no power of an fp-flat corpus module";
        break;
      }
    }
    r.add("(7) every finitely presented left module embeds in an fp-flat module", !w, false, w);
  }

  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < L.modules.size(); ++i)
      if (!flat[i] && is_fp_injective_mod(L.modules[i], L.monos)) {
        w = L.modules[i]->label() + " is fp-injective but not fp-flat";
        break;
      }
    r.add("(9) every FP-injective left module is fp-flat", !w, false, w);
  }

  {
    std::optional<std::string> w;
    for (std::size_t k = 1; k <= 2 && !w; ++k) {
      if (bounded_pow(R->size(), k, caps.max_module) > caps.max_module) break;
      auto F = free_module(R, Side::right, k, caps);
      if (auto f = fp_injective_witness(F, Rt.monos))
        w = F->label() + ": a map from " + Rt.monos[f->mono_index].source->label() + " does not extend";
    }
    r.add("(12) every flat right module is fp-injective", !w, false, w);
  }
  r.not_evaluated = {"(3)", "(4)", "(8)", "(10)", "(11)"};
  r.notes.push_back("flat right modules are represented by free modules of rank 1 and 2");
  r.notes.push_back("fp-flat and fp-injective are tested against the corpus monomorphisms");
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Annihilator proposition.

inline TheoremReport check_prop_annihilators(const RingPtr& R, const Caps& caps = {}) {
  TheoremReport r;
  r.theorem_id = "prop-annihilators";
  r.ring = R->label();
  const auto baer = is_right_self_injective(R, caps);
  r.add("right self-injective (Baer)", baer.value, true, baer.witness);
  r.add("right self-injective (Ext route)", self_injective_via_ext(R, Side::right, caps), true);
  const auto f = annihilator_flags(R, caps);
  r.add("(a) l(I meet J) = l(I) + l(J)", f.a, true, f.a_witness);
  r.add("(b) lr(I) = I for left ideals", f.b_left, true, f.b_left_witness);
  r.add("(b) rl(J) = J for right ideals", f.b_right, true, f.b_right_witness);
  r.add("(a) and (b)", f.a && f.b(), true, !f.a ? f.a_witness : !f.b_left ? f.b_left_witness : f.b_right_witness);
  r.notes.push_back("finite rings are right coherent, so (a) and (b) give right self-injectivity");
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// WQF theorem.

inline TheoremReport check_thm_wqf(const RingCorpus& rc, const Caps& caps) {
  const RingPtr& R = rc.ring;
  TheoremReport r;
  r.theorem_id = "thm-wqf";
  r.ring = R->label();
  auto reg_l = regular_module(R, Side::left);
  auto reg_r = regular_module(R, Side::right);

  const auto bl = is_left_self_injective(R, caps), br = is_right_self_injective(R, caps);
  r.add("(2) RR and R_R are FP-injective", bl.value && br.value, true, !bl.value ? bl.witness : br.witness);

  const auto cl = fp_cogenerator_conditions(reg_l, rc.left.modules, rc.left.cyclic);
  const auto cr = fp_cogenerator_conditions(reg_r, rc.right.modules, rc.right.cyclic);
  r.add("(3) RR and R_R are FP-cogenerators", cl.kernels_meet_zero && cr.kernels_meet_zero, false,
        !cl.kernels_meet_zero ? cl.kernel_witness : cr.kernel_witness);

  const auto fi = fp_injective_witness(reg_r, rc.right.monos);
  std::optional<std::string> w4;
  if (fi) w4 = "a map from " + rc.right.monos[fi->mono_index].source->label() + " into R_R does not extend";
  else if (!cr.kernels_meet_zero) w4 = cr.kernel_witness;
  r.add("(4) R_R is an FP-injective FP-cogenerator", !fi && cr.kernels_meet_zero, false, w4);

  {
    std::optional<std::string> w;
    for (const auto* C : {&rc.left, &rc.right}) {
      for (const auto& M : C->modules)
        if (!is_reflexive(M, caps)) {
          w = M->label() + " is not reflexive";
          break;
        }
      if (w) break;
    }
    r.add("(5) every finitely presented module is reflexive", !w, false, w);
  }

  const auto rl = cyclic_reflexive_verdict(R, Side::left, caps), rr = cyclic_reflexive_verdict(R, Side::right, caps);
  r.add("(6) every cyclic module is reflexive", rl.value && rr.value, true, !rl.value ? rl.witness : rr.witness);

  const auto el = is_left_cf_ring(R, caps.kmax, caps), er = is_right_cf_ring(R, caps.kmax, caps);
  r.add("(7) every cyclic module embeds in a free module", el.value && er.value, true,
        !el.value ? el.witness : er.witness);

  const auto f = annihilator_flags(R, caps);
  r.add("(8) lr(I) = I and rl(J) = J", f.b(), true, !f.b_left ? f.b_left_witness : f.b_right_witness);
  r.notes.push_back("(1) is the definition of a WQF ring, equivalent to (2) for coherent rings");
  r.notes.push_back("finite rings are two-sided coherent");
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// IF theorem and proposition.

inline TheoremReport check_thm_if(const RingCorpus& rc, const Caps& caps) {
  const RingPtr& R = rc.ring;
  TheoremReport r;
  r.theorem_id = "thm-if";
  r.ring = R->label();
  const auto wqf = is_wqf(R, caps);
  r.add("R is WQF", wqf.value, true, wqf.witness);
  const auto il = is_left_if_ring(rc.left.modules, caps.kmax), ir = is_right_if_ring(rc.right.modules, caps.kmax);
  r.add("R is a left and right IF ring", il.value && ir.value, false, !il.value ? il.witness : ir.witness);
  const auto bl = is_left_self_injective(R, caps);
  const auto cf = is_left_cf_ring(R, caps.kmax, caps);
  r.add("R is left FP-injective and left CF", bl.value && cf.value, true,
        !bl.value ? bl.witness : cf.witness);
  r.add("R is a left IF ring", il.value, false, il.witness);
  {
    std::vector<ModulePtr> projective;
    for (const auto& P : rc.left.modules)
      if (detail::is_projective(P, caps)) projective.push_back(P);
    std::optional<std::string> w;
    for (const auto& M : rc.left.modules) {
      bool found = false;
      for (const auto& P : projective)
        if ((found = detail::separated_by(M, P))) break;
      if (!found) {
        w = M->label() + " embeds in no power of a projective corpus module";
        break;
      }
    }
    r.add("every finitely presented left module embeds in a flat module", !w, false, w);
  }
  r.not_evaluated = {"every FP-injective module is flat (both sides)", "every injective module is flat (both sides)",
                     "every FP-injective left module is flat", "every injective left module is flat"};
  r.notes.push_back("flat finitely generated modules are the projective ones over a finite ring");
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Facts that hold uniformly for finite rings.

inline TheoremReport check_finite_collapse(const RingPtr& R, const Caps& caps = {}) {
  TheoremReport r;
  r.theorem_id = "finite-collapse";
  r.ring = R->label();
  const auto sr = is_semiregular(R);
  r.assert_that("semiregular", sr.value, sr.witness);
  const auto sl = socle_essential_left(R), srt = socle_essential_right(R);
  r.assert_that("left socle essential", sl.value, sl.witness);
  r.assert_that("right socle essential", srt.value, srt.witness);
  const bool bl = is_left_self_injective(R, caps).value, br = is_right_self_injective(R, caps).value;
  r.assert_that("left Baer equals Ext route", bl == self_injective_via_ext(R, Side::left, caps));
  r.assert_that("right Baer equals Ext route", br == self_injective_via_ext(R, Side::right, caps));
  const bool qf = bl && br, wqf = is_wqf(R, caps).value;
  r.assert_that("left self-injective iff right self-injective", bl == br);
  r.assert_that("QF equals WQF", qf == wqf);
  const bool kl = is_left_kasch(R, caps).value, kr = is_right_kasch(R, caps).value;
  r.assert_that("QF implies Kasch on both sides", !qf || (kl && kr));
  const bool cfl = is_left_cf_ring(R, caps.kmax, caps).value;
  r.assert_that("left CF implies left Kasch", !cfl || kl);
  const bool reg = is_regular_ring(*R), ss = is_semisimple(R).value;
  r.assert_that("regular implies semisimple", !reg || ss);
  r.assert_that("semisimple implies QF", !ss || qf);
  r.notes.push_back("finite rings are artinian and noetherian on both sides");
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Group rings.

/// M viewed as a module over the coefficient ring R ⊆ R(G), together with
/// the element bijection between the two realizations.
struct ScalarRestriction {
  ModulePtr module;
  ModulePtr restricted;
  std::vector<Elem> to_restricted;
  std::vector<Elem> from_restricted;
};

inline ScalarRestriction restrict_to_base(const ModulePtr& M, const Caps& caps = {}) {
  const GroupRingInfo* info = M->ring().group_ring_info();
  if (!info) throw NotAGroupRing();
  const RingPtr& base = info->base;
  const Elem e = info->group->identity();
  auto embed = [&](Elem r) { return info->monomial(r, e); };
  // Greedy R-generators of M.
  std::vector<Elem> gens;
  Bits in(M->size(), false);
  std::vector<Elem> list{M->zero()};
  in[M->zero()] = true;
  for (Elem x = 0; x < M->size() && list.size() < M->size(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    std::vector<Elem> cyc;
    for (Elem r = 0; r < base->size(); ++r) cyc.push_back(M->act(embed(r), x));
    detail::union_cosets(in, list, cyc, [&](Elem a, Elem b) { return M->add(a, b); });
  }
  auto F = free_module(base, M->side(), gens.size(), caps);
  std::vector<Elem> proj(F->size());
  Bits ker(F->size(), false);
  for (Elem x = 0; x < F->size(); ++x) {
    const auto c = F->coordinates(x);
    Elem v = M->zero();
    for (std::size_t i = 0; i < gens.size(); ++i) v = M->add(v, M->act(embed(c[i]), gens[i]));
    proj[x] = v;
    ker[x] = v == M->zero();
  }
  auto [Q, q] = quotient_with_projection(Submodule{F, std::move(ker)}, M->label() + "|" + base->label());
  ScalarRestriction S{M, Q, std::vector<Elem>(M->size(), npos), std::vector<Elem>(Q->size(), npos)};
  for (Elem x = 0; x < F->size(); ++x) {
    S.to_restricted[proj[x]] = q(x);
    S.from_restricted[q(x)] = proj[x];
  }
  return S;
}

struct GroupRingLift {
  FreeEmbedding lift;   ///< components M → R(G)
  bool linear = false;  ///< every component is R(G)-linear
  bool injective = false;
  bool recovers_components = false;  ///< identity coefficient of f̃_i is f_i
};

/// Lifts R-linear maps f_i: M → R (jointly injective) to the R(G)-linear
/// maps f̃_i(m) = Σ_g f_i(m·g)·g⁻¹ (for left modules Σ_g g⁻¹·f_i(g·m)).
inline GroupRingLift lift_to_group_ring(const ScalarRestriction& S, const std::vector<ModuleHom>& f) {
  const ModulePtr& M = S.module;
  const FiniteRing& RG = M->ring();
  const GroupRingInfo* info = RG.group_ring_info();
  if (!info) throw NotAGroupRing();
  const FiniteGroup& G = *info->group;
  for (const auto& fi : f) {
    if (fi.source != S.restricted) throw ActionMismatch("lift_to_group_ring: component is not defined on the restriction");
    if (&fi.target->ring() != info->base.get() || fi.target->side() != M->side() || fi.target->ambient_rank() != 1 ||
        fi.target->size() != info->base->size())
      throw ActionMismatch("lift_to_group_ring: component does not land in the coefficient ring");
  }
  {
    std::vector<Elem> cls(S.restricted->size(), 0);
    std::size_t classes = 1;
    for (const auto& fi : f) {
      std::map<std::pair<Elem, Elem>, Elem> ids;
      for (Elem x = 0; x < cls.size(); ++x) cls[x] = ids.emplace(std::pair{cls[x], fi(x)}, Elem(ids.size())).first->second;
      classes = ids.size();
    }
    if (classes != S.restricted->size()) throw NotJointlyInjective();
  }
  auto reg = regular_module(M->ring_ptr(), M->side());
  GroupRingLift out;
  out.recovers_components = true;
  for (const auto& fi : f) {
    ModuleHom h{M, reg, std::vector<Elem>(M->size())};
    for (Elem m = 0; m < M->size(); ++m) {
      Elem acc = RG.zero();
      for (Elem g = 0; g < G.size(); ++g) {
        const Elem mg = M->act(info->monomial(info->base->one(), g), m);
        const Elem coeff = Elem(fi.target->code_of(fi(S.to_restricted[mg])));
        acc = RG.add(acc, info->monomial(coeff, G.inv(g)));
      }
      h.values[m] = reg->element_of_code(acc);
      if (info->coefficient(acc, G.identity()) != Elem(fi.target->code_of(fi(S.to_restricted[m]))))
        out.recovers_components = false;
    }
    out.lift.components.push_back(std::move(h));
  }
  out.linear = std::all_of(out.lift.components.begin(), out.lift.components.end(),
                           [](const ModuleHom& h) { return h.verify(); });
  std::vector<Elem> cls(M->size(), 0);
  std::size_t classes = 1;
  for (const auto& h : out.lift.components) {
    std::map<std::pair<Elem, Elem>, Elem> ids;
    for (Elem x = 0; x < M->size(); ++x) cls[x] = ids.emplace(std::pair{cls[x], h(x)}, Elem(ids.size())).first->second;
    classes = ids.size();
  }
  out.injective = classes == M->size();
  return out;
}

namespace detail {

/// Picks functionals in the given order, keeping each one that shrinks the
/// common kernel, until the common kernel is zero. Empty when the whole set
/// does not separate points.
inline std::optional<std::vector<ModuleHom>> greedy_separating(const std::vector<ModuleHom>& homs, std::size_t n) {
  std::vector<ModuleHom> out;
  Bits cur(n, true);
  for (const auto& h : homs) {
    if (count_bits(cur) == 1) break;
    Bits next = cur;
    for (Elem x = 0; x < n; ++x) next[x] = next[x] && h(x) == h.target->zero();
    if (next == cur) continue;
    cur = std::move(next);
    out.push_back(h);
  }
  if (count_bits(cur) != 1) return std::nullopt;
  return out;
}

}  // namespace detail

/// Lift cases for R(G): the regular right module and a few cyclic
/// quotients, each with a greedy and a shuffled jointly injective tuple.
inline TheoremReport check_group_ring_lift(const RingPtr& RG, std::uint64_t seed, const Caps& caps = {}) {
  const GroupRingInfo* info = RG->group_ring_info();
  if (!info) throw NotAGroupRing();
  TheoremReport r;
  r.theorem_id = "lemma-mmm";
  r.ring = RG->label();
  std::vector<ModulePtr> modules{regular_module(RG, Side::right)};
  std::size_t quotients = 0;
  for (const auto& I : one_sided_ideals(RG, Side::right, caps)) {
    if (I.count() == 1 || I.count() == RG->size()) continue;
    modules.push_back(cyclic_module(RG, Side::right, I));
    if (++quotients == 3) break;
  }
  std::mt19937_64 rng(seed ^ detail::fnv1a(RG->label()));
  std::size_t case_no = 0;
  for (const auto& M : modules) {
    const ScalarRestriction S = restrict_to_base(M, caps);
    const auto homs = hom_set(S.restricted, regular_module(info->base, Side::right), caps);
    std::vector<ModuleHom> shuffled = homs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (const std::vector<ModuleHom>* order : std::array<const std::vector<ModuleHom>*, 2>{&homs, &shuffled}) {
      const auto picked = detail::greedy_separating(*order, S.restricted->size());
      if (!picked) {
        r.notes.push_back("skipped " + M->label() + ": it does not embed in a power of the coefficient ring");
        break;
      }
      const auto& f = *picked;
      const auto lift = lift_to_group_ring(S, f);
      const bool ok = lift.linear && lift.injective && lift.recovers_components;
      std::string w = M->label() + " with " + std::to_string(f.size()) + " components: linear=" +
                      (lift.linear ? "yes" : "no") + ", injective=" + (lift.injective ? "yes" : "no") +
                      ", identity coefficient=" + (lift.recovers_components ? "yes" : "no");
      r.assert_that("case " + std::to_string(++case_no), ok, w);
    }
  }
  finalize(r);
  return r;
}

/// Group-ring biconditionals for R(G): self-injectivity (both sides), WQF,
/// semisimplicity (Maschke), regularity, IF, and the annihilators of ωH.
inline TheoremReport check_group_ring_theorems(const RingPtr& R, const GroupPtr& G, const RingCorpus* rg_corpus,
                                               const RingCorpus* r_corpus, const Caps& caps = {}) {
  const RingPtr RG = rg_corpus ? rg_corpus->ring : group_ring(R, G, std::min(caps.max_ring, caps.max_group_ring));
  TheoremReport r;
  r.theorem_id = "group-ring";
  r.ring = RG->label();
  for (Side s : {Side::left, Side::right}) {
    const auto a = self_injective_verdict(RG, s, caps), b = self_injective_verdict(R, s, caps);
    const std::string grp = "self-injective-" + side_name(s);
    r.add(side_name(s) + " self-injective R(G)", a.value, true, a.witness, grp);
    r.add(side_name(s) + " self-injective R", b.value, true, b.witness, grp);
  }
  {
    const auto a = is_wqf(RG, caps), b = is_wqf(R, caps);
    r.add("R(G) is WQF", a.value, true, a.witness, "wqf");
    r.add("R is WQF", b.value, true, b.witness, "wqf");
  }
  const bool inv_g = is_invertible_scalar(*R, G->size());
  {
    const auto a = is_semisimple(RG), b = is_semisimple(R);
    r.add("R(G) semisimple", a.value, true, a.witness, "maschke");
    r.add("R semisimple and |G| invertible", b.value && inv_g, true, std::nullopt, "maschke");
  }
  {
    bool orders_ok = true;
    for (std::size_t h : subgroup_orders(*G)) orders_ok = orders_ok && is_invertible_scalar(*R, h);
    r.add("R(G) regular", is_regular_ring(*RG), true, std::nullopt, "regular");
    r.add("R regular and subgroup orders invertible", is_regular_ring(*R) && orders_ok, true, std::nullopt, "regular");
  }
  if (rg_corpus && r_corpus) {
    const auto a = is_left_if_ring(rg_corpus->left.modules, caps.kmax);
    const auto b = is_left_if_ring(r_corpus->left.modules, caps.kmax);
    const auto q = is_qf(RG, caps);
    r.add("R(G) left IF", a.value, false, a.witness, "if");
    r.add("R left IF", b.value, false, b.witness, "if");
    r.add("R(G) QF", q.value, true, q.witness, "if");
  }
  {
    const bool si = self_injective_verdict(RG, Side::right, caps).value;
    bool ok = true;
    std::optional<std::string> w;
    for (const Bits& H : subgroups(*G)) {
      if (count_bits(H) == 1) continue;
      const auto omega = omega_ideal(*RG, members(H));
      if (si && left_annihilator(*RG, omega).count() == 1) {
        ok = false;
        w = "l(omega H) = 0 for H = " + format_set(members(H));
        break;
      }
    }
    r.assert_that("right self-injective R(G) has nonzero l(omega H) for H != 1", ok, w);
  }
  r.notes.push_back("G is finite, hence locally finite");
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Single-property queries by id.

inline const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids{
      "annihilator-conditions", "cf-left",           "cf-right",           "cyclic-reflexive-left",
      "cyclic-reflexive-right", "fp-cogenerator-left", "fp-cogenerator-right", "if-left",
      "if-right",               "kasch-left",        "kasch-right",        "qf",
      "regular",                "self-injective-left", "self-injective-right", "semiregular",
      "semisimple",             "socle-essential-left", "socle-essential-right", "wqf"};
  return ids;
}

/// Evaluates the property with the given id. Throws std::invalid_argument
/// for an unknown id.
inline PropertyVerdict evaluate_property(const std::string& id, const RingPtr& R, const CorpusOptions& opt = {}) {
  const Caps& caps = opt.caps;
  auto corpus = [&](Side s) { return build_module_corpus(R, s, opt); };
  if (id == "self-injective-left") return is_left_self_injective(R, caps);
  if (id == "self-injective-right") return is_right_self_injective(R, caps);
  if (id == "kasch-left") return is_left_kasch(R, caps);
  if (id == "kasch-right") return is_right_kasch(R, caps);
  if (id == "semisimple") return is_semisimple(R);
  if (id == "semiregular") return is_semiregular(R);
  if (id == "qf") return is_qf(R, caps);
  if (id == "wqf") return is_wqf(R, caps);
  if (id == "annihilator-conditions") return annihilator_conditions(R, caps);
  if (id == "cf-left") return is_left_cf_ring(R, caps.kmax, caps);
  if (id == "cf-right") return is_right_cf_ring(R, caps.kmax, caps);
  if (id == "if-left") return is_left_if_ring(corpus(Side::left).modules, caps.kmax);
  if (id == "if-right") return is_right_if_ring(corpus(Side::right).modules, caps.kmax);
  if (id == "cyclic-reflexive-left") return cyclic_reflexive_verdict(R, Side::left, caps);
  if (id == "cyclic-reflexive-right") return cyclic_reflexive_verdict(R, Side::right, caps);
  if (id == "socle-essential-left") return socle_essential_left(R);
  if (id == "socle-essential-right") return socle_essential_right(R);
  if (id == "regular") {
    PropertyVerdict v{"regular", "two-sided", is_regular_ring(*R), std::nullopt, false};
    if (!v.value)
      for (Elem a = 0; a < R->size() && !v.witness; ++a) {
        bool found = false;
        for (Elem x = 0; x < R->size() && !found; ++x) found = R->mul(R->mul(a, x), a) == a;
        if (!found) v.witness = "no x with a x a = a for a = " + std::to_string(a);
      }
    return v;
  }
  for (Side s : {Side::left, Side::right})
    if (id == "fp-cogenerator-" + side_name(s)) {
      const auto C = corpus(s);
      return is_fp_cogenerator(regular_module(R, s), C.modules, C.cyclic);
    }
  throw std::invalid_argument("unknown property '" + id + "'");
}

// ---------------------------------------------------------------------------
// Corpus runner.

inline const std::vector<std::string>& ring_theorem_ids() {
  static const std::vector<std::string> ids{"finite-collapse", "lemma-fp-cogenerator", "prop-annihilators",
                                            "thm-fp-injective", "thm-if", "thm-wqf"};
  return ids;
}

inline const std::vector<std::string>& group_theorem_ids() {
  static const std::vector<std::string> ids{"group-ring", "lemma-mmm"};
  return ids;
}

inline std::vector<std::string> theorem_ids() {
  auto ids = ring_theorem_ids();
  for (const auto& g : group_theorem_ids()) ids.push_back(g);
  std::sort(ids.begin(), ids.end());
  return ids;
}

struct HarnessConfig {
  std::vector<std::string> theorems;  ///< empty selects every theorem
  std::vector<RingPtr> rings;
  std::vector<std::pair<RingPtr, GroupPtr>> group_rings;
  CorpusOptions corpus;
  std::size_t jobs = 1;
};

struct HarnessResult {
  std::vector<TheoremReport> reports;
  bool all_agree() const {
    return std::all_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.agreement; });
  }
  bool any_error() const {
    return std::any_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.error.has_value(); });
  }
};

namespace detail {

inline bool wants(const HarnessConfig& c, const std::string& id) {
  return c.theorems.empty() || std::find(c.theorems.begin(), c.theorems.end(), id) != c.theorems.end();
}

inline TheoremReport error_report(const std::string& id, const std::string& ring, const std::string& what) {
  TheoremReport r;
  r.theorem_id = id;
  r.ring = ring;
  r.error = what;
  finalize(r);
  return r;
}

inline std::vector<TheoremReport> run_ring_tasks(const RingPtr& R, const HarnessConfig& c) {
  std::vector<TheoremReport> out;
  const Caps& caps = c.corpus.caps;
  std::optional<RingCorpus> rc;
  PresentationCache cache;
  auto corpus = [&]() -> const RingCorpus& {
    if (!rc) rc = build_ring_corpus(R, c.corpus);
    return *rc;
  };
  auto run = [&](const std::string& id, auto&& body) {
    if (!wants(c, id)) return;
    try {
      body();
    } catch (const std::exception& e) {
      out.push_back(error_report(id, R->label(), e.what()));
    }
  };
  run("finite-collapse", [&] { out.push_back(check_finite_collapse(R, caps)); });
  run("lemma-fp-cogenerator", [&] {
    for (const auto* side : {&corpus().left, &corpus().right})
      for (std::size_t i = 0; i < side->cyclic.size(); ++i) {
        const auto& K = side->cyclic[i];
        const std::string idx = (i < 10 ? "0" : "") + std::to_string(i);
        out.push_back(check_lemma_fp_cogenerator(
            K, *side, side_name(side->side) + " R/I" + idx + " (order " + std::to_string(K->size()) + ")"));
      }
  });
  run("prop-annihilators", [&] { out.push_back(check_prop_annihilators(R, caps)); });
  run("thm-fp-injective", [&] { out.push_back(check_thm_fp_injective(corpus(), caps, &cache)); });
  run("thm-if", [&] { out.push_back(check_thm_if(corpus(), caps)); });
  run("thm-wqf", [&] { out.push_back(check_thm_wqf(corpus(), caps)); });
  return out;
}

inline std::vector<TheoremReport> run_group_tasks(const RingPtr& R, const GroupPtr& G, const HarnessConfig& c) {
  std::vector<TheoremReport> out;
  const Caps& caps = c.corpus.caps;
  const std::string label = R->label() + "." + G->label();
  RingPtr RG;
  try {
    RG = group_ring(R, G, std::min(caps.max_ring, caps.max_group_ring));
  } catch (const std::exception& e) {
    for (const auto& id : group_theorem_ids())
      if (wants(c, id)) out.push_back(error_report(id, label, e.what()));
    return out;
  }
  if (wants(c, "group-ring")) {
    try {
      const RingCorpus rgc = build_ring_corpus(RG, c.corpus);
      const RingCorpus rc = build_ring_corpus(R, c.corpus);
      out.push_back(check_group_ring_theorems(R, G, &rgc, &rc, caps));
    } catch (const std::exception& e) {
      out.push_back(error_report("group-ring", label, e.what()));
    }
  }
  if (wants(c, "lemma-mmm")) {
    try {
      out.push_back(check_group_ring_lift(RG, c.corpus.seed, caps));
    } catch (const std::exception& e) {
      out.push_back(error_report("lemma-mmm", label, e.what()));
    }
  }
  return out;
}

}  // namespace detail

/// Runs every selected check. Tasks (one per ring and one per group-ring
/// pair) may run on `jobs` threads; reports are sorted by (ring, theorem,
/// subject) so output does not depend on scheduling.
inline HarnessResult run_corpus(const HarnessConfig& config) {
  const std::size_t n_ring = config.rings.size();
  const std::size_t n_tasks = n_ring + config.group_rings.size();
  std::vector<std::vector<TheoremReport>> slots(n_tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n_tasks;) {
      if (i < n_ring) {
        slots[i] = detail::run_ring_tasks(config.rings[i], config);
      } else {
        const auto& [R, G] = config.group_rings[i - n_ring];
        slots[i] = detail::run_group_tasks(R, G, config);
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, n_tasks));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  HarnessResult res;
  for (auto& s : slots)
    for (auto& r : s) res.reports.push_back(std::move(r));
  std::stable_sort(res.reports.begin(), res.reports.end(), [](const TheoremReport& a, const TheoremReport& b) {
    return std::tie(a.ring, a.theorem_id, a.subject) < std::tie(b.ring, b.theorem_id, b.subject);
  });
  return res;
}

/// The default corpus configuration: the default ring list and the
/// group-ring grid.
inline HarnessConfig default_config(const CorpusOptions& opt = {}) {
  HarnessConfig c;
  c.corpus = opt;
  for (const auto& l : default_ring_labels()) c.rings.push_back(builtin_ring(l, opt.caps));
  for (const auto& [r, g] : default_group_ring_grid())
    c.group_rings.emplace_back(builtin_ring(r, opt.caps), builtin_group(g));
  return c;
}

}  // namespace fring
