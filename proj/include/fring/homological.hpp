#pragma once

/// @file homological.hpp
/// @brief Presentations, duals and evaluation maps, tensor products, Ext¹,
/// embeddings into free modules, and the fp-flat / fp-injective / purity
/// predicates relative to a supplied list of monomorphisms.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "abgroup.hpp"
#include "hom.hpp"
#include "module.hpp"

namespace fring {

// ---------------------------------------------------------------------------
// Presentations.

/// 0 → K → R^t → M → 0 with the unit vectors mapping to `generators`.
struct Presentation {
  ModulePtr module;
  ModulePtr free;
  ModuleHom projection;
  std::vector<Elem> generators;
  Submodule kernel;
  /// Coordinate vectors of a generating set of the kernel.
  std::vector<std::vector<Elem>> relations;
};

namespace detail {

inline std::vector<Elem> greedy_submodule_generators(const Submodule& S) {
  const ModulePtr& M = S.parent;
  Bits in(M->size(), false);
  std::vector<Elem> list{M->zero()}, gens;
  in[M->zero()] = true;
  auto add = [&](Elem a, Elem b) { return M->add(a, b); };
  for (Elem x : S.elements()) {
    if (in[x]) continue;
    gens.push_back(x);
    union_cosets(in, list, cyclic_list(*M, x), add);
  }
  return gens;
}

}  // namespace detail

/// Presentation of M. Presented modules keep their own generators and
/// relations; anything else is presented on its hom-plan generators.
inline Presentation presentation_of(const ModulePtr& M, const Caps& caps = {}) {
  Presentation p;
  p.module = M;
  if (M->is_presented()) {
    p.generators = M->generators();
  } else {
    p.generators = make_hom_plan(M).generators();
  }
  const std::size_t t = p.generators.size();
  p.free = free_module(M->ring_ptr(), M->side(), t, caps);
  p.projection = {p.free, M, std::vector<Elem>(p.free->size())};
  for (Elem x = 0; x < p.free->size(); ++x) {
    const auto c = p.free->coordinates(x);
    Elem v = M->zero();
    for (std::size_t i = 0; i < t; ++i) v = M->add(v, M->act(c[i], p.generators[i]));
    p.projection.values[x] = v;
  }
  p.kernel = p.projection.kernel();
  if (M->is_presented()) {
    p.relations = M->relations();
  } else {
    for (Elem k : detail::greedy_submodule_generators(p.kernel)) p.relations.push_back(p.free->coordinates(k));
  }
  return p;
}

/// Memo of presentations keyed by module identity. Not thread-safe; give
/// each worker its own.
class PresentationCache {
 public:
  std::shared_ptr<const Presentation> get(const ModulePtr& M, const Caps& caps = {}) {
    auto it = cache_.find(M.get());
    if (it != cache_.end()) return it->second.second;
    auto p = std::make_shared<const Presentation>(presentation_of(M, caps));
    cache_.emplace(M.get(), std::pair{M, p});
    return p;
  }

 private:
  std::map<const FModule*, std::pair<ModulePtr, std::shared_ptr<const Presentation>>> cache_;
};

inline std::shared_ptr<const Presentation> cached_presentation(const ModulePtr& M, const Caps& caps,
                                                               PresentationCache* cache) {
  return cache ? cache->get(M, caps) : std::make_shared<const Presentation>(presentation_of(M, caps));
}

// ---------------------------------------------------------------------------
// Duals.

/// M* = Hom(M, R) realized as a module of the opposite side inside R^t, each
/// functional recorded by its values on the source generators.
struct DualStructure {
  ModulePtr source;
  ModulePtr regular;  ///< R on the side of `source`, the codomain of functionals
  ModulePtr module;   ///< M*
  std::vector<Elem> source_generators;
  std::vector<ModuleHom> functionals;  ///< functionals[x] is element x of M*

  /// Ring element named by an element of `regular`.
  Elem ring_value(Elem e) const { return Elem(regular->code_of(e)); }
};

inline DualStructure dual_module(const ModulePtr& M, const Caps& caps = {}) {
  DualStructure D;
  D.source = M;
  D.regular = regular_module(M->ring_ptr(), M->side());
  const HomPlan plan = make_hom_plan(M);
  D.source_generators = plan.generators();
  const std::size_t t = D.source_generators.size();
  const RingPtr& R = M->ring_ptr();
  // Duals live in R^t; the ambient is bounded by the hom cap, the dual itself
  // by the module cap.
  detail::Ambient amb(*R, opposite(M->side()), t, std::max(caps.max_module, caps.max_homs));
  Bits s_codes(amb.total, false);
  std::unordered_map<std::size_t, std::vector<Elem>> by_code;
  std::vector<Elem> digits(t);
  for_each_hom(plan, *D.regular, [&](const std::vector<Elem>& values, const std::vector<Elem>& images) {
    for (std::size_t i = 0; i < t; ++i) digits[i] = D.ring_value(images[i]);
    const std::size_t code = amb.encode(digits);
    s_codes[code] = true;
    by_code.emplace(code, values);
    return by_code.size() <= caps.max_module;
  });
  if (by_code.size() > caps.max_module) throw SizeOverflow("dual of " + M->label() + " exceeds module cap");
  D.module = FModule::subquotient(R, opposite(M->side()), t, s_codes, {amb.zero()}, {}, M->label() + "*", amb.total);
  D.functionals.reserve(D.module->size());
  for (Elem x = 0; x < D.module->size(); ++x)
    D.functionals.push_back({M, D.regular, by_code.at(D.module->code_of(x))});
  return D;
}

/// f*: N* → M*, ψ ↦ ψ∘f, for f: M → N with M = DM.source and N = DN.source.
inline ModuleHom dual_map(const ModuleHom& f, const DualStructure& DM, const DualStructure& DN) {
  if (f.source != DM.source || f.target != DN.source) throw ActionMismatch("dual_map: duals do not match the map");
  ModuleHom out{DN.module, DM.module, std::vector<Elem>(DN.module->size())};
  const auto& amb = DM.module->ambient();
  std::vector<Elem> digits(DM.source_generators.size());
  for (Elem y = 0; y < DN.module->size(); ++y) {
    const ModuleHom& psi = DN.functionals[y];
    for (std::size_t i = 0; i < digits.size(); ++i)
      digits[i] = DN.ring_value(psi(f(DM.source_generators[i])));
    const Elem e = DM.module->element_of_code(amb.encode(digits));
    if (e == npos) throw InternalError("dual_map: composite is not a functional");
    out.values[y] = e;
  }
  return out;
}

/// M → M**, m ↦ (φ ↦ φ(m)), given DM = dual of M and DDM = dual of M*.
inline ModuleHom eval_map(const DualStructure& DM, const DualStructure& DDM) {
  if (DDM.source != DM.module) throw ActionMismatch("eval_map: second dual is not the dual of the first");
  const ModulePtr& M = DM.source;
  ModuleHom out{M, DDM.module, std::vector<Elem>(M->size())};
  const auto& amb = DDM.module->ambient();
  std::vector<Elem> digits(DDM.source_generators.size());
  for (Elem m = 0; m < M->size(); ++m) {
    for (std::size_t j = 0; j < digits.size(); ++j)
      digits[j] = DM.ring_value(DM.functionals[DDM.source_generators[j]](m));
    const Elem e = DDM.module->element_of_code(amb.encode(digits));
    if (e == npos) throw InternalError("eval_map: evaluation is not a functional");
    out.values[m] = e;
  }
  return out;
}

inline ModuleHom eval_map(const ModulePtr& M, const Caps& caps = {}) {
  const DualStructure DM = dual_module(M, caps);
  const DualStructure DDM = dual_module(DM.module, caps);
  return eval_map(DM, DDM);
}

/// Nonzero element of M killed by every functional, if any.
inline std::optional<Elem> unseparated_element(const ModulePtr& M) {
  auto reg = regular_module(M->ring_ptr(), M->side());
  Bits alive(M->size(), true);
  alive[M->zero()] = false;
  std::size_t remaining = M->size() - 1;
  for_each_hom(M, reg, [&](const std::vector<Elem>& v, const auto&) {
    for (Elem x = 0; x < M->size(); ++x)
      if (alive[x] && v[x] != reg->zero()) {
        alive[x] = false;
        --remaining;
      }
    return remaining > 0;
  });
  for (Elem x = 0; x < M->size(); ++x)
    if (alive[x]) return x;
  return std::nullopt;
}

/// eval_M injective, i.e. the functionals on M separate points.
inline bool is_semireflexive(const ModulePtr& M) { return !unseparated_element(M).has_value(); }

/// eval_M bijective.
inline bool is_reflexive(const ModulePtr& M, const Caps& caps = {}) {
  if (!is_semireflexive(M)) return false;
  const ModuleHom ev = eval_map(M, caps);
  return ev.is_injective() && ev.is_surjective();
}

// ---------------------------------------------------------------------------
// Tensor products.

/// M ⊗_R N for a right module M and a left module N, realized as N^t modulo
/// the tuples (ρ_1·n, ..., ρ_t·n) for relations ρ of M and n ∈ N. The tuple
/// (n_i) stands for Σ g_i ⊗ n_i.
struct TensorProduct {
  std::shared_ptr<const Presentation> presentation;
  ModulePtr left_factor;
  FiniteAbGroup group;

  const ModulePtr& right_factor() const { return presentation->module; }
  std::size_t size() const { return group.size(); }
};

inline std::shared_ptr<const TensorProduct> tensor(std::shared_ptr<const Presentation> pres, const ModulePtr& N,
                                                   const Caps& caps = {}) {
  const ModulePtr& M = pres->module;
  if (M->side() != Side::right || N->side() != Side::left)
    throw ActionMismatch("tensor: expects a right module and a left module");
  if (&M->ring() != &N->ring()) throw ActionMismatch("tensor: factors over different rings");
  const std::size_t t = pres->generators.size();
  const std::size_t total = bounded_pow(N->size(), t, caps.max_homs);
  if (total > caps.max_homs) throw SizeOverflow("tensor: |N|^gens exceeds cap");
  detail::TupleSpace sp{N, t};
  std::vector<TupleCode> all(total);
  for (std::size_t c = 0; c < total; ++c) all[c] = c;
  std::vector<std::vector<TupleCode>> parts;
  std::vector<Elem> digits(t);
  for (const auto& rho : pres->relations) {
    std::vector<TupleCode> part;
    for (Elem n = 0; n < N->size(); ++n) {
      for (std::size_t i = 0; i < t; ++i) digits[i] = N->act(rho[i], n);
      part.push_back(sp.encode(digits));
    }
    parts.push_back(std::move(part));
  }
  auto T = std::make_shared<TensorProduct>();
  T->presentation = std::move(pres);
  T->left_factor = N;
  T->group = FiniteAbGroup::subquotient(sp, std::move(all), detail::subgroup_sum(sp, parts));
  return T;
}

inline std::shared_ptr<const TensorProduct> tensor(const ModulePtr& M, const ModulePtr& N, const Caps& caps = {},
                                                   PresentationCache* cache = nullptr) {
  return tensor(cached_presentation(M, caps, cache), N, caps);
}

/// Group homomorphism between two tensor groups.
struct TensorMap {
  std::shared_ptr<const TensorProduct> source;
  std::shared_ptr<const TensorProduct> target;
  std::vector<Elem> values;

  bool is_injective() const {
    for (Elem x = 0; x < values.size(); ++x)
      if (x != source->group.zero() && values[x] == target->group.zero()) return false;
    return true;
  }
  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [&](Elem v) { return v == target->group.zero(); });
  }
  /// A nonzero element of the kernel, if any.
  std::optional<Elem> kernel_witness() const {
    for (Elem x = 0; x < values.size(); ++x)
      if (x != source->group.zero() && values[x] == target->group.zero()) return x;
    return std::nullopt;
  }
};

/// μ ⊗ N for μ: M → M' between right modules.
inline TensorMap tensor_map_first(const ModuleHom& mu, const ModulePtr& N, const Caps& caps = {},
                                  PresentationCache* cache = nullptr) {
  auto src = tensor(mu.source, N, caps, cache);
  auto tgt = mu.source == mu.target ? src : tensor(mu.target, N, caps, cache);
  const Presentation& ps = *src->presentation;
  const Presentation& pt = *tgt->presentation;
  // Lift μ(g_i) to coordinates over the target generators.
  std::vector<Elem> first_preimage(pt.module->size(), npos);
  for (Elem x = 0; x < pt.free->size(); ++x)
    if (first_preimage[pt.projection(x)] == npos) first_preimage[pt.projection(x)] = x;
  const std::size_t t = ps.generators.size(), u = pt.generators.size();
  std::vector<std::vector<Elem>> lift(t);
  for (std::size_t i = 0; i < t; ++i) lift[i] = pt.free->coordinates(first_preimage[mu(ps.generators[i])]);
  const auto& sps = src->group.space();
  const auto& spt = tgt->group.space();
  std::vector<Elem> in(t), out(u);
  auto image_code = [&](TupleCode c) {
    sps.decode(c, in);
    std::fill(out.begin(), out.end(), N->zero());
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < u; ++j) out[j] = N->add(out[j], N->act(lift[i][j], in[i]));
    return spt.encode(out);
  };
  // Well-definedness: relation tuples of the source must die in the target.
  for (const auto& rho : ps.relations)
    for (Elem n = 0; n < N->size(); ++n) {
      std::vector<Elem> tuple(t);
      for (std::size_t i = 0; i < t; ++i) tuple[i] = N->act(rho[i], n);
      if (tgt->group.element_of_code(image_code(sps.encode(tuple))) != tgt->group.zero())
        throw InternalError("tensor_map: induced map is not well defined");
    }
  TensorMap f{src, tgt, std::vector<Elem>(src->size())};
  for (Elem x = 0; x < src->size(); ++x) f.values[x] = tgt->group.element_of_code(image_code(src->group.code_of(x)));
  return f;
}

/// M ⊗ ν for ν: N → N' between left modules.
inline TensorMap tensor_map_second(const ModulePtr& M, const ModuleHom& nu, const Caps& caps = {},
                                   PresentationCache* cache = nullptr) {
  auto pres = cached_presentation(M, caps, cache);
  auto src = tensor(pres, nu.source, caps);
  auto tgt = nu.source == nu.target ? src : tensor(pres, nu.target, caps);
  const std::size_t t = pres->generators.size();
  std::vector<Elem> in(t), out(t);
  TensorMap f{src, tgt, std::vector<Elem>(src->size())};
  for (Elem x = 0; x < src->size(); ++x) {
    src->group.space().decode(src->group.code_of(x), in);
    for (std::size_t i = 0; i < t; ++i) out[i] = nu(in[i]);
    f.values[x] = tgt->group.element_of_code(tgt->group.space().encode(out));
  }
  return f;
}

/// μ ⊗ F (μ between right modules) or F ⊗ μ (μ between left modules).
inline TensorMap tensor_map(const ModuleHom& mu, const ModulePtr& F, const Caps& caps = {},
                           PresentationCache* cache = nullptr) {
  if (mu.source->side() == F->side()) throw ActionMismatch("tensor_map: map and module must have opposite sides");
  return mu.source->side() == Side::right ? tensor_map_first(mu, F, caps, cache) : tensor_map_second(F, mu, caps, cache);
}

// ---------------------------------------------------------------------------
// Corpus-bounded flatness, injectivity and purity.

/// Index of the first mono μ for which the induced tensor map with F is not
/// injective.
inline std::optional<std::size_t> fp_flat_witness(const ModulePtr& F, const std::vector<ModuleHom>& monos,
                                                  const Caps& caps = {}, PresentationCache* cache = nullptr) {
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (!tensor_map(monos[i], F, caps, cache).is_injective()) return i;
  return std::nullopt;
}

inline bool is_fp_flat(const ModulePtr& F, const std::vector<ModuleHom>& monos, const Caps& caps = {},
                       PresentationCache* cache = nullptr) {
  return !fp_flat_witness(F, monos, caps, cache).has_value();
}

/// A hom K → M that does not extend along μ: K → L.
struct ExtensionFailure {
  std::size_t mono_index;
  ModuleHom hom;
};

/// Hom-tuples on the plan generators of μ.source that extend along μ.
inline std::set<std::vector<Elem>> extendable_restrictions(const HomPlan& plan_k, const ModuleHom& mu,
                                                           const ModulePtr& M) {
  std::set<std::vector<Elem>> out;
  const auto gens = plan_k.generators();
  std::vector<Elem> tuple(gens.size());
  for_each_hom(mu.target, M, [&](const std::vector<Elem>& v, const auto&) {
    for (std::size_t j = 0; j < gens.size(); ++j) tuple[j] = v[mu(gens[j])];
    out.insert(tuple);
    return true;
  });
  return out;
}

inline std::optional<ExtensionFailure> fp_injective_witness(const ModulePtr& M, const std::vector<ModuleHom>& monos) {
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const ModuleHom& mu = monos[i];
    const HomPlan plan = make_hom_plan(mu.source);
    const auto ok = extendable_restrictions(plan, mu, M);
    std::optional<ModuleHom> bad;
    for_each_hom(plan, *M, [&](const std::vector<Elem>& v, const std::vector<Elem>& images) {
      if (ok.count(images)) return true;
      bad = ModuleHom{mu.source, M, v};
      return false;
    });
    if (bad) return ExtensionFailure{i, std::move(*bad)};
  }
  return std::nullopt;
}

inline bool is_fp_injective_mod(const ModulePtr& M, const std::vector<ModuleHom>& monos) {
  return !fp_injective_witness(M, monos).has_value();
}

/// Index of the first corpus module K for which K ⊗ μ (or μ ⊗ K) is not
/// injective.
inline std::optional<std::size_t> impurity_witness(const ModuleHom& mu, const std::vector<ModulePtr>& corpus,
                                                   const Caps& caps = {}, PresentationCache* cache = nullptr) {
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (!tensor_map(mu, corpus[i], caps, cache).is_injective()) return i;
  return std::nullopt;
}

inline bool is_pure_mono(const ModuleHom& mu, const std::vector<ModulePtr>& corpus, const Caps& caps = {}) {
  if (!mu.is_injective()) throw std::invalid_argument("is_pure_mono: map is not injective");
  return !impurity_witness(mu, corpus, caps).has_value();
}

// ---------------------------------------------------------------------------
// Ext¹.

/// Ext¹(M, N) = Hom(K, N) / (restrictions of Hom(R^t, N)) for the stored
/// presentation 0 → K → R^t → M → 0.
inline FiniteAbGroup ext1(const Presentation& pres, const ModulePtr& N, const Caps& caps = {}) {
  const ModulePtr& M = pres.module;
  if (M->side() != N->side() || &M->ring() != &N->ring()) throw ActionMismatch("ext1: modules differ in ring or side");
  auto [K, inc] = submodule_as_module(pres.kernel, "K");
  const HomPlan plan = make_hom_plan(K);
  const auto kgens = plan.generators();
  const std::size_t s = kgens.size(), t = pres.generators.size();
  if (bounded_pow(N->size(), s, caps.max_homs) > caps.max_homs) throw SizeOverflow("ext1: |N|^gens exceeds cap");
  detail::TupleSpace sp{N, s};
  std::vector<TupleCode> homs;
  for_each_hom(plan, *N, [&](const auto&, const std::vector<Elem>& images) {
    homs.push_back(sp.encode(images));
    return true;
  });
  std::vector<std::vector<Elem>> coords(s);
  for (std::size_t j = 0; j < s; ++j) coords[j] = pres.free->coordinates(inc(kgens[j]));
  std::vector<std::vector<TupleCode>> parts;
  std::vector<Elem> digits(s);
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<TupleCode> part;
    for (Elem n = 0; n < N->size(); ++n) {
      for (std::size_t j = 0; j < s; ++j) digits[j] = N->act(coords[j][i], n);
      part.push_back(sp.encode(digits));
    }
    parts.push_back(std::move(part));
  }
  return FiniteAbGroup::subquotient(sp, std::move(homs), detail::subgroup_sum(sp, parts));
}

inline FiniteAbGroup ext1(const ModulePtr& M, const ModulePtr& N, const Caps& caps = {}) {
  return ext1(presentation_of(M, caps), N, caps);
}

// ---------------------------------------------------------------------------
// Embeddings into free modules.

/// Injective M → R^k given by its k coordinate functionals.
struct FreeEmbedding {
  std::vector<ModuleHom> components;
  std::size_t rank() const { return components.size(); }
};

struct EmbeddingSearch {
  std::optional<FreeEmbedding> embedding;
  /// The functionals on M separate points (an embedding exists for some k).
  bool separated = false;
  std::size_t distinct_kernels = 0;
};

/// Searches for an embedding M → R^k with the least k ≤ kmax. Functionals are
/// enumerated in lexicographic generator-image order, the first functional
/// with each kernel is kept, and kernel combinations are tried in increasing
/// index order, so the witness is deterministic.
inline EmbeddingSearch search_embedding_into_free(const ModulePtr& M, std::size_t kmax) {
  EmbeddingSearch out;
  if (M->size() == 1) {
    out.embedding = FreeEmbedding{};
    out.separated = true;
    return out;
  }
  auto reg = regular_module(M->ring_ptr(), M->side());
  std::vector<ModuleHom> reps;
  std::vector<Bits> kernels;
  std::unordered_set<Bits> seen;
  for_each_hom(M, reg, [&](const std::vector<Elem>& v, const auto&) {
    ModuleHom f{M, reg, v};
    Bits k = f.kernel().bits;
    if (seen.insert(k).second) {
      kernels.push_back(std::move(k));
      reps.push_back(std::move(f));
    }
    return true;
  });
  out.distinct_kernels = kernels.size();
  Bits all(M->size(), true);
  for (const auto& k : kernels)
    for (std::size_t x = 0; x < all.size(); ++x) all[x] = all[x] && k[x];
  out.separated = count_bits(all) == 1;
  if (!out.separated) return out;
  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self, std::size_t start, const Bits& cur, std::size_t k) -> bool {
    if (count_bits(cur) == 1) return true;
    if (chosen.size() == k) return false;
    for (std::size_t i = start; i < kernels.size(); ++i) {
      Bits next = cur;
      for (std::size_t x = 0; x < next.size(); ++x) next[x] = next[x] && kernels[i][x];
      if (next == cur) continue;
      chosen.push_back(i);
      if (self(self, i + 1, next, k)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= kmax; ++k) {
    chosen.clear();
    if (dfs(dfs, 0, Bits(M->size(), true), k)) {
      FreeEmbedding e;
      for (std::size_t i : chosen) e.components.push_back(reps[i]);
      out.embedding = std::move(e);
      break;
    }
  }
  return out;
}

inline std::optional<FreeEmbedding> find_embedding_into_free(const ModulePtr& M, std::size_t kmax) {
  return search_embedding_into_free(M, kmax).embedding;
}

/// The embedding as a single hom M → R^k.
inline ModuleHom realize_embedding(const ModulePtr& M, const FreeEmbedding& e, const Caps& caps = {}) {
  auto F = free_module(M->ring_ptr(), M->side(), e.rank(), caps);
  ModuleHom h{M, F, std::vector<Elem>(M->size())};
  std::vector<Elem> digits(e.rank());
  for (Elem x = 0; x < M->size(); ++x) {
    for (std::size_t i = 0; i < e.rank(); ++i) digits[i] = Elem(e.components[i].target->code_of(e.components[i](x)));
    h.values[x] = F->element_of_code(F->ambient().encode(digits));
  }
  return h;
}

}  // namespace fring
