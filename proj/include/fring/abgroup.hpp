#pragma once

/// @file abgroup.hpp
/// @brief Finite abelian groups realized as subquotients S/H of N^t, where N
/// is the additive group of a realized module and tuples are coded in base
/// |N|. Tensor products and Ext¹ groups land here.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "module.hpp"

namespace fring {

using TupleCode = std::uint64_t;

namespace detail {

/// Coordinatewise arithmetic on N^t.
struct TupleSpace {
  ModulePtr digits;
  std::size_t rank = 0;

  TupleCode encode(std::span<const Elem> xs) const {
    TupleCode c = 0;
    for (std::size_t i = xs.size(); i-- > 0;) c = c * digits->size() + xs[i];
    return c;
  }
  void decode(TupleCode c, std::vector<Elem>& out) const {
    out.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      out[i] = Elem(c % digits->size());
      c /= digits->size();
    }
  }
  TupleCode add(TupleCode a, TupleCode b) const {
    const std::size_t q = digits->size();
    TupleCode c = 0, mult = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      c += mult * digits->add(Elem(a % q), Elem(b % q));
      a /= q;
      b /= q;
      mult *= q;
    }
    return c;
  }
  TupleCode neg(TupleCode a) const {
    const std::size_t q = digits->size();
    TupleCode c = 0, mult = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      c += mult * digits->neg(Elem(a % q));
      a /= q;
      mult *= q;
    }
    return c;
  }
  TupleCode zero() const {
    std::vector<Elem> z(rank, digits->zero());
    return encode(z);
  }
};

/// Subgroup of N^t generated by the given subgroups (each listed in full),
/// by coset union.
inline std::vector<TupleCode> subgroup_sum(const TupleSpace& sp, const std::vector<std::vector<TupleCode>>& parts) {
  std::unordered_map<TupleCode, bool> in;
  std::vector<TupleCode> list{sp.zero()};
  in[sp.zero()] = true;
  for (const auto& part : parts) {
    const std::size_t base = list.size();
    for (TupleCode t : part) {
      if (in.count(t)) continue;
      for (std::size_t i = 0; i < base; ++i) {
        TupleCode y = sp.add(list[i], t);
        if (in.emplace(y, true).second) list.push_back(y);
      }
    }
  }
  return list;
}

}  // namespace detail

class FiniteAbGroup {
 public:
  /// Cosets of H inside S, both given as complete lists of tuple codes.
  static FiniteAbGroup subquotient(detail::TupleSpace space, std::vector<TupleCode> s_codes,
                                   const std::vector<TupleCode>& h_codes) {
    FiniteAbGroup G;
    G.space_ = std::move(space);
    std::sort(s_codes.begin(), s_codes.end());
    auto claim = [&](TupleCode c) {
      const Elem id = Elem(G.reps_.size());
      G.reps_.push_back(c);
      for (TupleCode h : h_codes) G.index_.emplace(G.space_.add(c, h), id);
    };
    claim(G.space_.zero());
    for (TupleCode c : s_codes)
      if (!G.index_.count(c)) claim(c);
    return G;
  }

  std::size_t size() const noexcept { return reps_.size(); }
  Elem zero() const noexcept { return 0; }
  Elem add(Elem a, Elem b) const { return index_.at(space_.add(reps_[a], reps_[b])); }
  Elem neg(Elem a) const { return index_.at(space_.neg(reps_[a])); }
  TupleCode code_of(Elem a) const { return reps_[a]; }
  /// Class of a tuple code in S, or npos when outside S.
  Elem element_of_code(TupleCode c) const {
    auto it = index_.find(c);
    return it == index_.end() ? npos : it->second;
  }
  const detail::TupleSpace& space() const noexcept { return space_; }

  /// Full abelian-group axiom scan on the realized table.
  bool verify() const {
    const std::size_t n = size();
    for (Elem a = 0; a < n; ++a) {
      if (add(a, zero()) != a || add(a, neg(a)) != zero()) return false;
      for (Elem b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) return false;
        for (Elem c = 0; c < n; ++c)
          if (add(add(a, b), c) != add(a, add(b, c))) return false;
      }
    }
    return true;
  }

 private:
  detail::TupleSpace space_;
  std::vector<TupleCode> reps_;
  std::unordered_map<TupleCode, Elem> index_;
};

}  // namespace fring
