#include <gtest/gtest.h>

#include "fring/fring.hpp"

using namespace fring;

namespace {

// Brute-force count of additive maps Z/a -> Z/b: one per element of order dividing a.
std::size_t cyclic_group_homs(std::size_t a, std::size_t b) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < b; ++x) n += (a * x) % b == 0;
  return n;
}

// Brute-force R-linearity of a function given by its table.
bool linear(const FModule& M, const FModule& N, const std::vector<Elem>& v) {
  for (Elem x = 0; x < M.size(); ++x) {
    for (Elem y = 0; y < M.size(); ++y)
      if (v[M.add(x, y)] != N.add(v[x], v[y])) return false;
    for (Elem r = 0; r < M.ring().size(); ++r)
      if (v[M.act(r, x)] != N.act(r, v[x])) return false;
  }
  return true;
}

}  // namespace

TEST(Modules, FreeModuleSizes) {
  const auto R = ring_zmod(3);
  EXPECT_EQ(free_module(R, Side::left, 0)->size(), 1u);
  EXPECT_EQ(free_module(R, Side::left, 3)->size(), 27u);
  EXPECT_EQ(regular_module(R, Side::right)->size(), 3u);
  EXPECT_THROW(free_module(ring_zmod(16), Side::left, 4), SizeOverflow);
}

TEST(Modules, RegularModuleActsByMultiplication) {
  const auto R = builtin_ring("tri2-f2");
  const auto L = regular_module(R, Side::left), Rt = regular_module(R, Side::right);
  for (Elem r = 0; r < R->size(); ++r)
    for (Elem x = 0; x < R->size(); ++x) {
      EXPECT_EQ(L->code_of(L->act(r, L->element_of_code(x))), R->mul(r, x));
      EXPECT_EQ(Rt->code_of(Rt->act(r, Rt->element_of_code(x))), R->mul(x, r));
    }
}

TEST(Modules, ActionAxioms) {
  for (const auto& label : {"zmod4", "mat2-f2", "tri2-f2", "f2.c3"}) {
    const auto R = builtin_ring(label);
    for (Side s : {Side::left, Side::right})
      for (const auto& I : one_sided_ideals(R, s)) {
        const auto M = cyclic_module(R, s, I);
        for (Elem x = 0; x < M->size(); ++x) {
          EXPECT_EQ(M->act(R->one(), x), x);
          for (Elem a = 0; a < R->size(); ++a)
            for (Elem b = 0; b < R->size(); ++b) {
              const Elem ab = R->mul(a, b);
              // Left: (ab)x = a(bx). Right: x(ab) = (xa)b.
              EXPECT_EQ(M->act(ab, x), s == Side::left ? M->act(a, M->act(b, x)) : M->act(b, M->act(a, x)));
            }
        }
      }
  }
}

TEST(Modules, SubmodulesOfZmod4) {
  const auto M = regular_module(ring_zmod(4), Side::left);
  const auto subs = submodules(M);
  EXPECT_EQ(subs.size(), 3u);
  EXPECT_EQ(socle(M).count(), 2u);
  EXPECT_TRUE(is_essential(socle(M)));
  EXPECT_FALSE(is_essential(zero_submodule(M)));
}

TEST(Modules, SubmoduleLatticeIsClosedAndComplete) {
  const auto R = builtin_ring("f2-dual");
  const auto F = free_module(R, Side::left, 2);
  const auto subs = submodules(F);
  // Brute force: every subset closed under + and scalars.
  std::size_t closed = 0;
  ASSERT_LE(F->size(), 16u);
  for (std::uint32_t mask = 0; mask < (1u << F->size()); ++mask) {
    Bits b(F->size());
    for (Elem x = 0; x < F->size(); ++x) b[x] = (mask >> x) & 1u;
    closed += is_submodule(*F, b);
  }
  EXPECT_EQ(subs.size(), closed);
  for (const auto& S : subs)
    for (const auto& T : subs) {
      const auto sum = sum_sub(S, T), meet = intersect_sub(S, T);
      EXPECT_TRUE(is_submodule(*F, sum.bits));
      EXPECT_TRUE(is_submodule(*F, meet.bits));
      EXPECT_EQ(sum.count() * meet.count(), S.count() * T.count());
    }
}

TEST(Modules, SocleIsIntersectionOfEssentialSubmodules) {
  for (const auto& label : {"zmod8", "zmod12", "f2-dual", "tri2-f2", "f2.c2"}) {
    const auto R = builtin_ring(label);
    for (Side s : {Side::left, Side::right}) {
      const auto M = regular_module(R, s);
      Bits meet(M->size(), true);
      for (const auto& S : submodules(M))
        if (is_essential(S))
          for (Elem x = 0; x < M->size(); ++x) meet[x] = meet[x] && S.bits[x];
      EXPECT_EQ(socle(M).bits, meet) << label;
    }
  }
}

TEST(Modules, QuotientOrderTimesSubmoduleOrder) {
  for (const auto& label : {"zmod12", "tri2-f2", "mat2-f2", "f3.c3"}) {
    const auto R = builtin_ring(label);
    const auto F = regular_module(R, Side::left);
    for (const auto& S : submodules(F)) {
      auto [Q, q] = quotient_with_projection(S);
      EXPECT_EQ(Q->size() * S.count(), F->size()) << label;
      EXPECT_TRUE(q.verify());
      EXPECT_TRUE(q.is_surjective());
      EXPECT_EQ(q.kernel().bits, S.bits);
      auto [Sm, inc] = submodule_as_module(S);
      EXPECT_EQ(Sm->size(), S.count());
      EXPECT_TRUE(inc.is_injective());
      EXPECT_EQ(inc.image().bits, S.bits);
    }
  }
}

TEST(Modules, PresentedModules) {
  const auto R = ring_zmod(4);
  const auto M = present_module(R, Side::left, 1, {{2}});
  EXPECT_EQ(M->size(), 2u);
  EXPECT_TRUE(M->is_presented());
  EXPECT_TRUE(is_isomorphic(M, cyclic_module(R, Side::left, ElementSubset(4, {0, 2}))));
  const auto N = present_module(R, Side::left, 2, {{0, 2}});
  EXPECT_EQ(N->size(), 8u);
  EXPECT_FALSE(is_isomorphic(N, free_module(ring_zmod(2), Side::left, 3)));
  EXPECT_TRUE(is_isomorphic(present_module(R, Side::left, 2, {{1, 1}}), regular_module(R, Side::left)));
  EXPECT_THROW(present_module(R, Side::left, 2, {{1}}), std::invalid_argument);
}

TEST(Modules, ZeroModule) {
  const auto R = ring_zmod(5);
  const auto Z = zero_module(R, Side::right);
  EXPECT_EQ(Z->size(), 1u);
  EXPECT_EQ(count_homs(Z, regular_module(R, Side::right)), 1u);
  EXPECT_EQ(count_homs(regular_module(R, Side::right), Z), 1u);
  EXPECT_THROW(count_homs(Z, regular_module(ring_zmod(5), Side::right)), std::exception);
}

TEST(Homs, CountsMatchCyclicGroupFormula) {
  for (std::size_t a : {2u, 3u, 4u, 6u, 12u})
    for (std::size_t b : {2u, 3u, 4u, 6u, 12u}) {
      const auto R = ring_zmod(12);
      auto mod = [&](std::size_t k) {
        return cyclic_module(R, Side::left, ideal_closure(*R, IdealKind::left, {Elem(k % 12)}));
      };
      EXPECT_EQ(count_homs(mod(a), mod(b)), cyclic_group_homs(a, b)) << a << " " << b;
    }
}

TEST(Homs, EnumeratedMapsAreExactlyTheLinearOnes) {
  // Exhaustive over all functions M -> N for tiny modules.
  const auto R = builtin_ring("f2-dual");
  const auto M = regular_module(R, Side::left);
  const auto N = cyclic_module(R, Side::left, ElementSubset(4, {0, 2}));
  std::size_t brute = 0;
  std::vector<Elem> v(M->size());
  for (std::size_t code = 0; code < 16; ++code) {
    std::size_t c = code;
    for (auto& e : v) e = Elem(c % 2), c /= 2;
    brute += linear(*M, *N, v);
  }
  const auto hs = hom_set(M, N);
  EXPECT_EQ(hs.size(), brute);
  for (const auto& h : hs) EXPECT_TRUE(linear(*M, *N, h.values));
}

TEST(Homs, CompositionAndIdentity) {
  const auto R = ring_zmod(8);
  const auto M = regular_module(R, Side::left);
  const auto hs = hom_set(M, M);
  EXPECT_EQ(hs.size(), 8u);
  const auto id = identity_hom(M);
  for (const auto& f : hs) {
    EXPECT_EQ(compose(f, id).values, f.values);
    EXPECT_EQ(compose(id, f).values, f.values);
    for (const auto& g : hs) {
      const auto fg = compose(f, g);
      EXPECT_TRUE(fg.verify());
      EXPECT_TRUE(add_homs(f, g).verify());
    }
  }
  EXPECT_TRUE(zero_hom(M, M).is_zero());
  EXPECT_EQ(zero_hom(M, M).kernel().count(), 8u);
}

TEST(Homs, HomUnitIsomorphism) {
  // Hom(R, M) -> M, f -> f(1), is a bijection.
  for (const auto& label : {"zmod6", "tri2-f2", "f2.c2"}) {
    const auto R = builtin_ring(label);
    for (Side s : {Side::left, Side::right}) {
      const auto reg = regular_module(R, s);
      const Elem one = reg->element_of_code(R->one());
      for (const auto& I : one_sided_ideals(R, s)) {
        const auto M = cyclic_module(R, s, I);
        const auto hs = hom_set(reg, M);
        ASSERT_EQ(hs.size(), M->size());
        Bits hit(M->size(), false);
        for (const auto& f : hs) hit[f(one)] = true;
        EXPECT_EQ(count_bits(hit), M->size());
      }
    }
  }
}

TEST(Homs, FindIsomorphism) {
  const auto R = ring_zmod(6);
  const auto a = cyclic_module(R, Side::left, ElementSubset(6, {0, 2, 4}));
  const auto b = present_module(R, Side::left, 1, {{4}});
  const auto iso = find_isomorphism(a, b);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->is_injective());
  EXPECT_TRUE(iso->is_surjective());
  EXPECT_FALSE(is_isomorphic(a, regular_module(R, Side::left)));
}

TEST(Homs, MonoAndEpiOnKernelsAndImages) {
  const auto R = ring_zmod(4);
  const auto M = regular_module(R, Side::left);
  for (const auto& f : hom_set(M, M)) {
    EXPECT_EQ(f.kernel().count() * f.image().count(), M->size());
    EXPECT_EQ(f.is_injective(), f.kernel().is_zero());
    EXPECT_EQ(f.is_surjective(), f.image().is_full());
  }
}
