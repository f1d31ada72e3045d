#pragma once

/// @file hom.hpp
/// @brief Exhaustive enumeration of module homomorphisms.
///
/// A HomPlan fixes a generator chain 0 = M_0 ⊂ M_1 ⊂ ... ⊂ M_t = M with
/// M_k = M_{k-1} + R·g_k. A hom on M_{k-1} extends by g_k ↦ n exactly when
/// a·n = f(a·g_k) for every a in the ideal A_k = {r : r·g_k ∈ M_{k-1}}, and it
/// suffices to test a generating set of A_k. Homs are produced in
/// lexicographic order of their generator-image tuples.

#include <functional>
#include <optional>
#include <vector>

#include "module.hpp"

namespace fring {

struct HomPlan {
  struct Constraint {
    Elem scalar;   ///< a ∈ A_k
    Elem image_of; ///< a·g_k, already in M_{k-1}
  };
  struct Shift {
    Elem scalar;  ///< r
    Elem element; ///< r·g_k, representative of a new M_{k-1}-coset
  };
  struct Fill {
    Elem base;   ///< element of M_{k-1}
    Elem shift;  ///< index into the step's shifts
    Elem result; ///< base + shift element
  };
  struct Step {
    Elem generator;
    std::vector<Constraint> constraints;
    std::vector<Shift> shifts;
    std::vector<Fill> fills;
  };

  ModulePtr source;
  std::vector<Step> steps;

  std::vector<Elem> generators() const {
    std::vector<Elem> g;
    for (const auto& s : steps) g.push_back(s.generator);
    return g;
  }
};

inline HomPlan make_hom_plan(const ModulePtr& M) {
  HomPlan plan;
  plan.source = M;
  const FiniteRing& R = M->ring();
  Bits in(M->size(), false);
  std::vector<Elem> order{M->zero()};
  in[M->zero()] = true;
  std::vector<Elem> candidates = M->generators();
  for (Elem x = 0; x < M->size(); ++x) candidates.push_back(x);
  for (Elem g : candidates) {
    if (order.size() == M->size()) break;
    if (in[g]) continue;
    HomPlan::Step step;
    step.generator = g;
    ElementSubset A(R.size());
    for (Elem r = 0; r < R.size(); ++r)
      if (in[M->act(r, g)]) A.insert(r);
    for (Elem a : ideal_generators(R, ideal_kind(M->side()), A)) step.constraints.push_back({a, M->act(a, g)});
    const std::size_t prev = order.size();
    for (Elem r = 0; r < R.size(); ++r) {
      const Elem c = M->act(r, g);
      if (in[c]) continue;
      const Elem shift = Elem(step.shifts.size());
      step.shifts.push_back({r, c});
      for (std::size_t i = 0; i < prev; ++i) {
        const Elem y = M->add(order[i], c);
        in[y] = true;
        order.push_back(y);
        step.fills.push_back({order[i], shift, y});
      }
    }
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

/// Calls `visit(values, images)` for every hom M → N in lexicographic order
/// of generator images; stops early when `visit` returns false. Returns
/// false iff stopped early.
template <class Visit>
bool for_each_hom(const HomPlan& plan, const FModule& N, Visit&& visit) {
  const FModule& M = *plan.source;
  if (&M.ring() != &N.ring()) throw ActionMismatch("hom enumeration across different rings");
  if (M.side() != N.side()) throw ActionMismatch("hom enumeration across different sides");
  std::vector<Elem> values(M.size(), npos);
  values[M.zero()] = N.zero();
  std::vector<Elem> images(plan.steps.size());
  std::vector<std::vector<Elem>> shift_vals(plan.steps.size());
  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == plan.steps.size()) return visit(static_cast<const std::vector<Elem>&>(values),
                                             static_cast<const std::vector<Elem>&>(images));
    const auto& step = plan.steps[k];
    auto& sv = shift_vals[k];
    sv.resize(step.shifts.size());
    for (Elem n = 0; n < N.size(); ++n) {
      bool ok = true;
      for (const auto& c : step.constraints)
        if (N.act(c.scalar, n) != values[c.image_of]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      images[k] = n;
      for (std::size_t j = 0; j < step.shifts.size(); ++j) sv[j] = N.act(step.shifts[j].scalar, n);
      for (const auto& f : step.fills) values[f.result] = N.add(values[f.base], sv[f.shift]);
      if (!self(self, k + 1)) return false;
    }
    return true;
  };
  return dfs(dfs, 0);
}

template <class Visit>
bool for_each_hom(const ModulePtr& M, const ModulePtr& N, Visit&& visit) {
  return for_each_hom(make_hom_plan(M), *N, std::forward<Visit>(visit));
}

/// Number of homs M → N, counting stops once `limit` is exceeded.
inline std::size_t count_homs(const HomPlan& plan, const FModule& N, std::size_t limit = std::size_t(-1)) {
  std::size_t count = 0;
  for_each_hom(plan, N, [&](const auto&, const auto&) { return ++count <= limit; });
  return count;
}

inline std::size_t count_homs(const ModulePtr& M, const ModulePtr& N, std::size_t limit = std::size_t(-1)) {
  return count_homs(make_hom_plan(M), *N, limit);
}

/// All homs M → N. Throws SizeOverflow when |N|^t (t = plan generators)
/// exceeds the hom cap.
inline std::vector<ModuleHom> hom_set(const ModulePtr& M, const ModulePtr& N, const Caps& caps = {}) {
  const HomPlan plan = make_hom_plan(M);
  if (bounded_pow(N->size(), plan.steps.size(), caps.max_homs) > caps.max_homs)
    throw SizeOverflow("hom_set: |N|^gens exceeds cap");
  std::vector<ModuleHom> out;
  for_each_hom(plan, *N, [&](const std::vector<Elem>& v, const auto&) {
    out.push_back({M, N, v});
    return true;
  });
  return out;
}

/// The hom sending the plan generators to `images`, if it exists.
inline std::optional<ModuleHom> hom_from_images(const HomPlan& plan, const ModulePtr& N,
                                                const std::vector<Elem>& images) {
  const FModule& M = *plan.source;
  if (images.size() != plan.steps.size()) throw std::invalid_argument("hom_from_images: wrong image count");
  std::vector<Elem> values(M.size(), npos);
  values[M.zero()] = N->zero();
  for (std::size_t k = 0; k < plan.steps.size(); ++k) {
    const auto& step = plan.steps[k];
    const Elem n = images[k];
    for (const auto& c : step.constraints)
      if (N->act(c.scalar, n) != values[c.image_of]) return std::nullopt;
    std::vector<Elem> sv(step.shifts.size());
    for (std::size_t j = 0; j < step.shifts.size(); ++j) sv[j] = N->act(step.shifts[j].scalar, n);
    for (const auto& f : step.fills) values[f.result] = N->add(values[f.base], sv[f.shift]);
  }
  return ModuleHom{plan.source, N, std::move(values)};
}

/// An isomorphism M → N when one exists (bijective hom search).
inline std::optional<ModuleHom> find_isomorphism(const ModulePtr& M, const ModulePtr& N) {
  if (M->size() != N->size() || M->side() != N->side() || &M->ring() != &N->ring()) return std::nullopt;
  std::optional<ModuleHom> found;
  Bits seen(N->size(), false);
  for_each_hom(M, N, [&](const std::vector<Elem>& v, const auto&) {
    std::fill(seen.begin(), seen.end(), false);
    for (Elem x : v) {
      if (seen[x]) return true;
      seen[x] = true;
    }
    found = ModuleHom{M, N, v};
    return false;
  });
  return found;
}

inline bool is_isomorphic(const ModulePtr& M, const ModulePtr& N) { return find_isomorphism(M, N).has_value(); }

}  // namespace fring
