#pragma once

/// @file corpus.hpp
/// @brief Built-in rings and groups by label, and the per-ring module corpus
/// (cyclic modules, seeded random presentations, test monomorphisms).

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "homological.hpp"

namespace fring {

// ---------------------------------------------------------------------------
// Registry.

/// Built-in group by label: c<n>, c2xc2, s3, trivial.
inline GroupPtr builtin_group(const std::string& label) {
  if (label == "c2xc2") {
    auto g = direct_product(*cyclic_group(2), *cyclic_group(2));
    return make_group_from_table(g->size(), g->op_table(), g->identity(), "c2xc2");
  }
  if (label == "s3") return symmetric_group(3);
  if (label == "trivial") return trivial_group();
  if (label.size() > 1 && label[0] == 'c' && label.find_first_not_of("0123456789", 1) == std::string::npos) {
    const auto n = std::stoul(label.substr(1));
    if (n >= 1 && n <= 64) return cyclic_group(n);
  }
  throw std::invalid_argument("unknown group '" + label + "'");
}

inline std::vector<std::string> builtin_group_labels() { return {"c2", "c3", "c4", "c2xc2", "s3", "trivial"}; }

namespace detail {

inline RingPtr builtin_base_ring(const std::string& label) {
  if (label == "f2") return relabel_ring(ring_zmod(2), "f2");
  if (label == "f3") return relabel_ring(ring_zmod(3), "f3");
  if (label == "f4") return field_f4();
  if (label == "f2-dual") return ring_quotient_poly(ring_zmod(2), {0, 0, 1}, "f2-dual");
  if (label == "tri2-f2") return relabel_ring(triangular_ring(relabel_ring(ring_zmod(2), "f2"), 2), "tri2-f2");
  if (label == "mat2-f2") return relabel_ring(matrix_ring(relabel_ring(ring_zmod(2), "f2"), 2), "mat2-f2");
  if (label == "f2xf3") return relabel_ring(product_ring(ring_zmod(2), ring_zmod(3)), "f2xf3");
  if (label.rfind("zmod", 0) == 0 && label.size() > 4 &&
      label.find_first_not_of("0123456789", 4) == std::string::npos) {
    const auto n = std::stoul(label.substr(4));
    if (n >= 1 && n <= 256) return ring_zmod(n);
  }
  throw std::invalid_argument("unknown ring '" + label + "'");
}

}  // namespace detail

/// Built-in ring by label. `<ring>.<group>` builds the group ring. Throws
/// std::invalid_argument for unknown labels and SizeOverflow above the ring
/// cap.
inline RingPtr builtin_ring(const std::string& label, const Caps& caps = {}) {
  RingPtr R;
  if (auto dot = label.find('.'); dot != std::string::npos) {
    auto base = detail::builtin_base_ring(label.substr(0, dot));
    auto group = builtin_group(label.substr(dot + 1));
    R = group_ring(base, group, std::min(caps.max_ring, caps.max_group_ring));
  } else {
    R = detail::builtin_base_ring(label);
  }
  if (R->size() > caps.max_ring)
    throw SizeOverflow("ring " + label + " has " + std::to_string(R->size()) + " elements, cap is " +
                       std::to_string(caps.max_ring));
  return R;
}

/// Labels of the default ring corpus, in report order.
inline std::vector<std::string> default_ring_labels() {
  return {"zmod2",  "zmod3",   "zmod4",   "zmod6",   "zmod8", "zmod9", "zmod12", "f4",        "f2-dual",
          "zmod4.c2", "tri2-f2", "mat2-f2", "f2xf3", "f2.c2", "f2.c3", "f3.c3",  "f2.c2xc2"};
}

/// Default group list.
inline std::vector<std::string> default_group_labels() { return {"c2", "c3", "c2xc2", "s3"}; }

/// Default (coefficient ring, group) grid for the group-ring checks.
inline std::vector<std::pair<std::string, std::string>> default_group_ring_grid() {
  std::vector<std::pair<std::string, std::string>> grid;
  for (const char* r : {"f2", "f3", "zmod4", "f4"})
    for (const char* g : {"c2", "c3", "c2xc2"}) grid.emplace_back(r, g);
  grid.emplace_back("f2", "s3");
  return grid;
}

// ---------------------------------------------------------------------------
// Module corpus.

struct CorpusOptions {
  Caps caps;
  std::uint64_t seed = 1;
  std::size_t random_presentations = 6;
};

struct ModuleCorpus {
  Side side = Side::left;
  /// R/I for every one-sided ideal I, in lattice order (R/0 first, 0 last).
  std::vector<ModulePtr> cyclic;
  /// The cyclic modules followed by the random presentations that are not
  /// isomorphic to an earlier entry.
  std::vector<ModulePtr> modules;
  /// Ideal inclusions I ↪ R, then inclusions of cyclic submodules of the
  /// cyclic modules.
  std::vector<ModuleHom> monos;
};

struct RingCorpus {
  RingPtr ring;
  ModuleCorpus left, right;

  const ModuleCorpus& side(Side s) const { return s == Side::left ? left : right; }
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

/// Cheap isomorphism invariant: size and, for each r, the size of the
/// r-torsion {x : r·x = 0}.
inline std::vector<std::size_t> torsion_profile(const FModule& M) {
  std::vector<std::size_t> p{M.size()};
  for (Elem r = 0; r < M.ring().size(); ++r) {
    std::size_t k = 0;
    for (Elem x = 0; x < M.size(); ++x) k += M.act(r, x) == M.zero();
    p.push_back(k);
  }
  return p;
}

}  // namespace detail

inline ModuleCorpus build_module_corpus(const RingPtr& R, Side side, const CorpusOptions& opt = {}) {
  ModuleCorpus C;
  C.side = side;
  const auto ideals = one_sided_ideals(R, side, opt.caps);
  for (const auto& I : ideals) C.cyclic.push_back(cyclic_module(R, side, I));
  C.modules = C.cyclic;

  std::vector<std::vector<std::size_t>> profiles;
  for (const auto& M : C.modules) profiles.push_back(detail::torsion_profile(*M));
  std::mt19937_64 rng(opt.seed ^ detail::fnv1a(R->label() + (side == Side::left ? "/L" : "/R")));
  const std::size_t q = R->size();
  const std::size_t max_rank = bounded_pow(q, 2, opt.caps.max_module) <= opt.caps.max_module ? 2 : 1;
  for (std::size_t k = 0; k < opt.random_presentations; ++k) {
    const std::size_t m = 1 + rng() % max_rank;
    const std::size_t nrel = rng() % 3;
    std::vector<std::vector<Elem>> rels(nrel, std::vector<Elem>(m));
    for (auto& rel : rels)
      for (auto& e : rel) e = Elem(rng() % q);
    auto M = present_module(R, side, m, rels, opt.caps);
    const auto prof = detail::torsion_profile(*M);
    bool duplicate = false;
    for (std::size_t j = 0; j < C.modules.size() && !duplicate; ++j)
      duplicate = profiles[j] == prof && is_isomorphic(C.modules[j], M);
    if (duplicate) continue;
    C.modules.push_back(M);
    profiles.push_back(prof);
  }

  auto reg = regular_module(R, side);
  for (const auto& S : submodules(reg, opt.caps)) C.monos.push_back(submodule_as_module(S).second);
  for (const auto& M : C.cyclic) {
    if (M->size() == 1) continue;
    std::vector<Bits> seen;
    for (Elem x = 1; x < M->size(); ++x) {
      Submodule S = cyclic_submodule(M, x);
      if (S.is_full() || std::find(seen.begin(), seen.end(), S.bits) != seen.end()) continue;
      seen.push_back(S.bits);
      C.monos.push_back(submodule_as_module(S).second);
    }
  }
  return C;
}

inline RingCorpus build_ring_corpus(const RingPtr& R, const CorpusOptions& opt = {}) {
  return {R, build_module_corpus(R, Side::left, opt), build_module_corpus(R, Side::right, opt)};
}

}  // namespace fring
