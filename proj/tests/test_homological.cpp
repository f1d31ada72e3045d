#include <gtest/gtest.h>

#include <numeric>

#include "fring/fring.hpp"
#include "oracles.hpp"

using namespace fring;

namespace {

ModulePtr zmod_quotient(const RingPtr& R, Side s, Elem generator) {
  return cyclic_module(R, s, ideal_closure(*R, ideal_kind(s), {generator}));
}

}  // namespace

TEST(Ext, FreeModulesHaveNoExtensions) {
  for (const auto& label : {"zmod4", "zmod12", "tri2-f2", "f2-dual", "mat2-f2"}) {
    const auto R = builtin_ring(label);
    const auto C = build_module_corpus(R, Side::left);
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto F = free_module(R, Side::left, k);
      for (const auto& N : C.modules) EXPECT_EQ(ext1(F, N).size(), 1u) << label;
    }
  }
}

TEST(Ext, KnownGroups) {
  const auto D = builtin_ring("f2-dual");
  const auto k = zmod_quotient(D, Side::left, 2);
  ASSERT_EQ(k->size(), 2u);
  EXPECT_EQ(ext1(k, k).size(), 2u);

  const auto Z4 = ring_zmod(4);
  const auto two = zmod_quotient(Z4, Side::left, 2);
  EXPECT_EQ(ext1(two, two).size(), 2u);
  EXPECT_EQ(ext1(two, regular_module(Z4, Side::left)).size(), 1u);

  // Over a semisimple ring every module is projective.
  const auto Z6 = ring_zmod(6);
  const auto C = build_module_corpus(Z6, Side::left);
  for (const auto& M : C.modules)
    for (const auto& N : C.modules) EXPECT_EQ(ext1(M, N).size(), 1u);
}

TEST(Ext, IndependentOfPresentation) {
  const auto R = ring_zmod(8);
  const auto a = present_module(R, Side::left, 1, {{4}});
  const auto b = present_module(R, Side::left, 2, {{4, 0}, {0, 1}, {4, 1}, {0, 3}});
  const auto c = zmod_quotient(R, Side::left, 4);
  ASSERT_TRUE(is_isomorphic(a, b));
  ASSERT_TRUE(is_isomorphic(a, c));
  const auto C = build_module_corpus(R, Side::left);
  for (const auto& N : C.modules) {
    const std::size_t e = ext1(a, N).size();
    EXPECT_EQ(ext1(b, N).size(), e);
    EXPECT_EQ(ext1(c, N).size(), e);
  }
}

TEST(Ext, AdditiveInFirstArgument) {
  const auto R = ring_zmod(4);
  const auto two = zmod_quotient(R, Side::left, 2);
  const auto sum = present_module(R, Side::left, 2, {{2, 0}, {0, 2}});
  for (const auto& N : build_module_corpus(R, Side::left).modules) {
    const auto e = ext1(two, N).size();
    EXPECT_EQ(ext1(sum, N).size(), e * e);
  }
}

TEST(Ext, GroupStructureIsValid) {
  const auto R = builtin_ring("tri2-f2");
  for (const auto& M : build_module_corpus(R, Side::right).cyclic) {
    const auto E = ext1(M, regular_module(R, Side::right));
    EXPECT_TRUE(E.verify());
  }
}

TEST(Tensor, CyclicGroupsGiveGcd) {
  const auto R = ring_zmod(12);
  for (Elem a : {1u, 2u, 3u, 4u, 6u})
    for (Elem b : {1u, 2u, 3u, 4u, 6u}) {
      const auto M = zmod_quotient(R, Side::right, a), N = zmod_quotient(R, Side::left, b);
      EXPECT_EQ(tensor(M, N)->size(), std::gcd(a, b)) << a << " " << b;
    }
}

TEST(Tensor, UnitIsomorphisms) {
  for (const auto& label : {"zmod4", "tri2-f2", "mat2-f2", "f2.c3", "f2-dual"}) {
    const auto R = builtin_ring(label);
    const auto RR = regular_module(R, Side::left), RRr = regular_module(R, Side::right);
    for (const auto& N : build_module_corpus(R, Side::left).modules) {
      std::string why;
      EXPECT_TRUE(oracle::tensor_unit_is_iso(*tensor(RRr, N), &why)) << label << " " << N->label() << ": " << why;
    }
    for (const auto& M : build_module_corpus(R, Side::right).modules) {
      std::string why;
      EXPECT_TRUE(oracle::tensor_unit_is_iso(*tensor(M, RR), &why)) << label << " " << M->label() << ": " << why;
    }
  }
}

TEST(Tensor, Functoriality) {
  const auto R = ring_zmod(8);
  PresentationCache cache;
  const auto M = regular_module(R, Side::right);
  const auto N = zmod_quotient(R, Side::left, 4);
  const auto homs = hom_set(M, M);
  const auto id = tensor_map_first(identity_hom(M), N, {}, &cache);
  for (Elem x = 0; x < id.values.size(); ++x) EXPECT_EQ(id.values[x], x);
  for (const auto& f : homs)
    for (const auto& g : homs) {
      const auto tf = tensor_map_first(f, N, {}, &cache), tg = tensor_map_first(g, N, {}, &cache);
      const auto tgf = tensor_map_first(compose(g, f), N, {}, &cache);
      for (Elem x = 0; x < tf.values.size(); ++x) EXPECT_EQ(tgf.values[x], tg.values[tf.values[x]]);
    }
  // Second variable.
  const auto K = regular_module(R, Side::left);
  for (const auto& nu : hom_set(K, N)) {
    const auto t = tensor_map_second(zmod_quotient(R, Side::right, 2), nu, {}, &cache);
    EXPECT_EQ(t.source->size(), 2u);
    EXPECT_EQ(t.target->size(), 2u);
  }
}

TEST(Tensor, MonoNotPreservedByTorsionModule) {
  const auto R = ring_zmod(4);
  const auto reg = regular_module(R, Side::right);
  const auto [I, inc] = submodule_as_module(cyclic_submodule(reg, reg->element_of_code(2)));
  const auto N = zmod_quotient(R, Side::left, 2);
  const auto t = tensor_map_first(inc, N);
  EXPECT_FALSE(t.is_injective());
  EXPECT_TRUE(t.kernel_witness().has_value());
  EXPECT_TRUE(tensor_map_first(inc, regular_module(R, Side::left)).is_injective());
}

TEST(Tensor, SideAndCapChecks) {
  const auto R = ring_zmod(4);
  EXPECT_THROW(tensor(regular_module(R, Side::left), regular_module(R, Side::left)), ActionMismatch);
  Caps tiny;
  tiny.max_homs = 8;
  EXPECT_THROW(tensor(free_module(R, Side::right, 2), free_module(R, Side::left, 2), tiny), SizeOverflow);
}

TEST(Duals, Sizes) {
  const auto Z4 = ring_zmod(4);
  EXPECT_EQ(dual_module(zmod_quotient(Z4, Side::left, 2)).module->size(), 2u);
  EXPECT_EQ(dual_module(free_module(Z4, Side::left, 2)).module->size(), 16u);
  EXPECT_EQ(dual_module(regular_module(Z4, Side::left)).module->side(), Side::right);
  const auto T = builtin_ring("tri2-f2");
  std::size_t zero_duals = 0;
  for (const auto& M : build_module_corpus(T, Side::left).cyclic)
    zero_duals += M->size() > 1 && dual_module(M).module->size() == 1;
  EXPECT_GE(zero_duals, 1u);
}

TEST(Duals, EvalIsNatural) {
  std::size_t checked = 0;
  for (const auto& label : {"zmod4", "zmod6", "tri2-f2", "f2-dual"}) {
    const auto R = builtin_ring(label);
    const auto C = build_module_corpus(R, Side::left);
    for (const auto& M : C.cyclic)
      for (const auto& N : C.cyclic)
        for (const auto& a : hom_set(M, N)) {
          EXPECT_TRUE(oracle::eval_is_natural(a)) << label;
          ++checked;
        }
  }
  EXPECT_GE(checked, 100u);
}

TEST(Duals, ReflexiveOverQuasiFrobenius) {
  for (const auto& label : {"zmod4", "zmod8", "f2.c2", "mat2-f2"}) {
    const auto R = builtin_ring(label);
    for (Side s : {Side::left, Side::right})
      for (const auto& M : build_module_corpus(R, s).modules) {
        EXPECT_TRUE(is_reflexive(M)) << label << " " << M->label();
        EXPECT_TRUE(eval_map(M).verify());
      }
  }
}

TEST(Embeddings, MinimalRank) {
  const auto R = ring_zmod(4);
  const auto two = zmod_quotient(R, Side::left, 2);
  const auto e = find_embedding_into_free(two, 3);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->rank(), 1u);
  const auto h = realize_embedding(two, *e);
  EXPECT_TRUE(h.is_injective());
  EXPECT_TRUE(h.verify());

  const auto sum = present_module(R, Side::left, 2, {{2, 0}, {0, 2}});
  const auto s1 = search_embedding_into_free(sum, 1);
  EXPECT_TRUE(s1.separated);
  EXPECT_FALSE(s1.embedding.has_value());
  const auto s2 = search_embedding_into_free(sum, 2);
  ASSERT_TRUE(s2.embedding.has_value());
  EXPECT_EQ(s2.embedding->rank(), 2u);
  EXPECT_TRUE(realize_embedding(sum, *s2.embedding).is_injective());

  const auto zero = zero_module(R, Side::left);
  ASSERT_TRUE(find_embedding_into_free(zero, 1).has_value());
  EXPECT_EQ(find_embedding_into_free(zero, 1)->rank(), 0u);
}

TEST(Embeddings, ZeroDualModuleDoesNotEmbed) {
  const auto T = builtin_ring("tri2-f2");
  for (const auto& M : build_module_corpus(T, Side::left).cyclic) {
    const bool zero_dual = M->size() > 1 && count_homs(M, regular_module(T, Side::left)) == 1;
    if (zero_dual) {
      const auto s = search_embedding_into_free(M, 3);
      EXPECT_FALSE(s.separated);
      EXPECT_FALSE(s.embedding.has_value());
    }
  }
}

TEST(RelativeHomology, FlatnessAndInjectivity) {
  const auto R = ring_zmod(4);
  const auto CL = build_module_corpus(R, Side::left), CR = build_module_corpus(R, Side::right);
  EXPECT_TRUE(is_fp_flat(regular_module(R, Side::left), CR.monos));
  EXPECT_FALSE(is_fp_flat(zmod_quotient(R, Side::left, 2), CR.monos));
  EXPECT_TRUE(is_fp_injective_mod(regular_module(R, Side::left), CL.monos));
  EXPECT_FALSE(is_fp_injective_mod(zmod_quotient(R, Side::left, 2), CL.monos));

  const auto T = builtin_ring("tri2-f2");
  const auto TL = build_module_corpus(T, Side::left);
  const auto w = fp_injective_witness(regular_module(T, Side::left), TL.monos);
  ASSERT_TRUE(w.has_value());
  EXPECT_LT(w->mono_index, TL.monos.size());
}

TEST(RelativeHomology, Purity) {
  const auto R = ring_zmod(4);
  const auto C = build_module_corpus(R, Side::left);
  const auto F = free_module(R, Side::left, 2);
  // First coordinate inclusion R -> R^2 splits, so it is pure.
  const auto reg = regular_module(R, Side::left);
  ModuleHom split{reg, F, std::vector<Elem>(4)};
  for (Elem x = 0; x < 4; ++x) split.values[x] = F->element_of_code(reg->code_of(x));
  ASSERT_TRUE(split.verify());
  EXPECT_TRUE(is_pure_mono(split, build_module_corpus(R, Side::right).modules));
  // 2R -> R is not pure.
  const auto [I, inc] = submodule_as_module(cyclic_submodule(reg, reg->element_of_code(2)));
  EXPECT_FALSE(is_pure_mono(inc, build_module_corpus(R, Side::right).modules));
  EXPECT_THROW(is_pure_mono(zero_hom(reg, reg), C.modules), std::invalid_argument);
}
