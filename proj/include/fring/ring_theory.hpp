#pragma once

/// @file ring_theory.hpp
/// @brief Element-level ring theory: units, annihilators, one- and two-sided
/// ideal closure, the Jacobson radical, von Neumann regularity, quotient
/// rings, the augmentation-type ideal ωH of a group ring, and small-ring
/// isomorphism search.

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "constructions.hpp"
#include "ring.hpp"

namespace fring {

/// Which products an ideal must absorb.
enum class IdealKind : std::uint8_t { left, right, two_sided };

constexpr IdealKind ideal_kind(Side s) noexcept { return s == Side::left ? IdealKind::left : IdealKind::right; }

/// All r with a two-sided inverse.
inline ElementSubset units(const FiniteRing& R) {
  ElementSubset u(R.size());
  for (Elem a = 0; a < R.size(); ++a)
    for (Elem b = 0; b < R.size(); ++b)
      if (R.mul(a, b) == R.one() && R.mul(b, a) == R.one()) {
        u.insert(a);
        break;
      }
  return u;
}

/// Two-sided inverse of `a`, if any.
inline std::optional<Elem> inverse(const FiniteRing& R, Elem a) {
  for (Elem b = 0; b < R.size(); ++b)
    if (R.mul(a, b) == R.one() && R.mul(b, a) == R.one()) return b;
  return std::nullopt;
}

/// True iff n·1_R is a unit.
inline bool is_invertible_scalar(const FiniteRing& R, std::size_t n) {
  return inverse(R, R.scalar(n)).has_value();
}

/// ℓ(X) = {r : rX = 0}.
inline ElementSubset left_annihilator(const FiniteRing& R, const ElementSubset& X) {
  ElementSubset out(R.size());
  const auto xs = X.elements();
  for (Elem r = 0; r < R.size(); ++r) {
    bool kills = true;
    for (Elem x : xs)
      if (R.mul(r, x) != R.zero()) {
        kills = false;
        break;
      }
    if (kills) out.insert(r);
  }
  return out;
}

/// 𝔯(X) = {r : Xr = 0}.
inline ElementSubset right_annihilator(const FiniteRing& R, const ElementSubset& X) {
  ElementSubset out(R.size());
  const auto xs = X.elements();
  for (Elem r = 0; r < R.size(); ++r) {
    bool kills = true;
    for (Elem x : xs)
      if (R.mul(x, r) != R.zero()) {
        kills = false;
        break;
      }
    if (kills) out.insert(r);
  }
  return out;
}

/// Smallest ideal of the given kind containing `seeds`, by worklist
/// saturation under addition and the required multiplications.
inline ElementSubset ideal_closure(const FiniteRing& R, IdealKind kind, const std::vector<Elem>& seeds) {
  Bits in(R.size(), false);
  std::vector<Elem> list;
  auto push = [&](Elem x) {
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  };
  push(R.zero());
  for (Elem s : seeds) push(s);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Elem x = list[i];
    for (std::size_t j = 0; j <= i; ++j) push(R.add(x, list[j]));
    for (Elem r = 0; r < R.size(); ++r) {
      if (kind != IdealKind::right) push(R.mul(r, x));
      if (kind != IdealKind::left) push(R.mul(x, r));
    }
  }
  return ElementSubset(std::move(in));
}

/// Greedy generating set of an ideal: scan members in index order, keep each
/// one not already generated by the previous picks.
inline std::vector<Elem> ideal_generators(const FiniteRing& R, IdealKind kind, const ElementSubset& I) {
  std::vector<Elem> gens;
  ElementSubset cur = ideal_closure(R, kind, {});
  for (Elem x : I.elements()) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = ideal_closure(R, kind, gens);
    if (cur == I) break;
  }
  return gens;
}

inline bool is_ideal(const FiniteRing& R, IdealKind kind, const ElementSubset& I) {
  return ideal_closure(R, kind, I.elements()) == I;
}

/// Additive span of all products a·b with a ∈ A, b ∈ B.
inline ElementSubset ideal_product(const FiniteRing& R, const ElementSubset& A, const ElementSubset& B) {
  std::vector<Elem> prods;
  for (Elem a : A.elements())
    for (Elem b : B.elements()) prods.push_back(R.mul(a, b));
  Bits in(R.size(), false);
  std::vector<Elem> list{R.zero()};
  in[R.zero()] = true;
  std::sort(prods.begin(), prods.end());
  prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem p : prods) {
      Elem y = R.add(list[i], p);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  return ElementSubset(std::move(in));
}

/// von Neumann regular: every a has some x with axa = a.
inline bool is_regular_ring(const FiniteRing& R) {
  for (Elem a = 0; a < R.size(); ++a) {
    bool ok = false;
    for (Elem x = 0; x < R.size() && !ok; ++x) ok = R.mul(R.mul(a, x), a) == a;
    if (!ok) return false;
  }
  return true;
}

/// Quotient ring R/I by a two-sided ideal; cosets are numbered in order of
/// their smallest member.
inline RingPtr quotient_ring(const FiniteRing& R, const ElementSubset& I, std::string label = {}) {
  if (!is_ideal(R, IdealKind::two_sided, I)) throw std::invalid_argument("quotient_ring: not a two-sided ideal");
  std::vector<Elem> coset(R.size(), npos), reps;
  const auto ideal = I.elements();
  for (Elem a = 0; a < R.size(); ++a) {
    if (coset[a] != npos) continue;
    const Elem id = Elem(reps.size());
    reps.push_back(a);
    for (Elem i : ideal) coset[R.add(a, i)] = id;
  }
  const std::size_t n = reps.size();
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      add[x * n + y] = coset[R.add(reps[x], reps[y])];
      mul[x * n + y] = coset[R.mul(reps[x], reps[y])];
    }
  if (label.empty()) label = R.label() + "/I";
  return detail_make_trusted_ring(n, std::move(add), std::move(mul), coset[R.zero()], coset[R.one()],
                                  std::move(label));
}

/// Jacobson radical via quasi-regularity: x ∈ rad R iff 1 − rx is a unit for
/// every r. The result is then checked to be a two-sided nilpotent ideal with
/// regular quotient; a failure of any check raises InternalError.
inline ElementSubset jacobson_radical(const FiniteRing& R) {
  const ElementSubset u = units(R);
  ElementSubset rad(R.size());
  for (Elem x = 0; x < R.size(); ++x) {
    bool qr = true;
    for (Elem r = 0; r < R.size() && qr; ++r) qr = u.contains(R.sub(R.one(), R.mul(r, x)));
    if (qr) rad.insert(x);
  }
  if (!is_ideal(R, IdealKind::two_sided, rad)) throw InternalError("radical is not a two-sided ideal");
  ElementSubset power = rad;
  std::size_t k = 1;
  while (power.count() > 1) {
    if (++k > R.size()) throw InternalError("radical is not nilpotent");
    power = ideal_product(R, power, rad);
  }
  if (R.size() > 1 && !is_regular_ring(*quotient_ring(R, rad))) throw InternalError("R/rad R is not regular");
  return rad;
}

/// Nilpotency index of the radical: least k with rad^k = 0.
inline std::size_t radical_nilpotency_index(const FiniteRing& R) {
  const ElementSubset rad = jacobson_radical(R);
  ElementSubset power = rad;
  std::size_t k = 1;
  while (power.count() > 1) {
    power = ideal_product(R, power, rad);
    ++k;
  }
  return k;
}

/// ωH: the right ideal of R(G) generated by {1 − h : h ∈ H}.
inline ElementSubset omega_ideal(const FiniteRing& RG, const std::vector<Elem>& subgroup_elements) {
  const GroupRingInfo* info = RG.group_ring_info();
  if (!info) throw NotAGroupRing();
  std::vector<Elem> seeds;
  for (Elem h : subgroup_elements) {
    if (h >= info->group->size()) throw std::out_of_range("omega_ideal: group element out of range");
    seeds.push_back(RG.sub(RG.one(), info->monomial(info->base->one(), h)));
  }
  return ideal_closure(RG, IdealKind::right, seeds);
}

namespace detail {

/// Expresses every ring element as a sum or product of earlier ones starting
/// from a greedy generating set; used to prune ring isomorphism search.
struct RingDerivation {
  std::vector<Elem> gens;
  struct Step {
    Elem result;
    Elem lhs, rhs;
    bool is_product;
  };
  std::vector<Step> steps;
};

inline RingDerivation derive_ring(const FiniteRing& R) {
  RingDerivation d;
  Bits known(R.size(), false);
  std::vector<Elem> list;
  auto saturate = [&] {
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j < list.size(); ++j) {
          for (bool prod : {false, true}) {
            Elem y = prod ? R.mul(list[i], list[j]) : R.add(list[i], list[j]);
            if (!known[y]) {
              known[y] = true;
              d.steps.push_back({y, list[i], list[j], prod});
              list.push_back(y);
              grew = true;
            }
          }
        }
    }
  };
  known[R.one()] = true;
  list.push_back(R.one());
  saturate();
  for (Elem a = 0; a < R.size(); ++a) {
    if (known[a]) continue;
    d.gens.push_back(a);
    known[a] = true;
    list.push_back(a);
    saturate();
  }
  return d;
}

}  // namespace detail

/// Ring isomorphism R → S by generator-respecting bijection search, allowed
/// for |R| ≤ 16. Returns the element map when one exists.
inline std::optional<std::vector<Elem>> find_ring_isomorphism(const FiniteRing& R, const FiniteRing& S) {
  if (R.size() > 16 || S.size() > 16) throw SizeOverflow("ring isomorphism search is limited to 16 elements");
  if (R.size() != S.size()) return std::nullopt;
  if (R.is_commutative() != S.is_commutative()) return std::nullopt;
  if (units(R).count() != units(S).count()) return std::nullopt;
  const auto d = detail::derive_ring(R);
  const std::size_t n = R.size();
  std::vector<Elem> img(n, npos);
  std::vector<Elem> order_r(n), order_s(n);
  for (Elem a = 0; a < n; ++a) {
    order_r[a] = Elem(R.additive_order(a));
    order_s[a] = Elem(S.additive_order(a));
  }
  std::optional<std::vector<Elem>> found;
  auto complete = [&]() -> bool {
    std::vector<Elem> m = img;
    Bits used(n, false);
    m[R.one()] = S.one();
    for (Elem g : d.gens) used[m[g]] = true;
    used[S.one()] = true;
    for (const auto& st : d.steps) {
      Elem v = st.is_product ? S.mul(m[st.lhs], m[st.rhs]) : S.add(m[st.lhs], m[st.rhs]);
      m[st.result] = v;
    }
    Bits seen(n, false);
    for (Elem a = 0; a < n; ++a) {
      if (m[a] == npos || seen[m[a]]) return false;
      seen[m[a]] = true;
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (m[R.add(a, b)] != S.add(m[a], m[b]) || m[R.mul(a, b)] != S.mul(m[a], m[b])) return false;
    found = m;
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    if (i == d.gens.size()) return complete();
    for (Elem t = 0; t < n; ++t) {
      if (order_s[t] != order_r[d.gens[i]]) continue;
      img[d.gens[i]] = t;
      if (self(self, i + 1)) return true;
    }
    img[d.gens[i]] = npos;
    return false;
  };
  dfs(dfs, 0);
  return found;
}

}  // namespace fring
