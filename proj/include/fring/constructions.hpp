#pragma once

/// @file constructions.hpp
/// @brief Structured ring constructors: ℤ/n, polynomial quotients, matrix and
/// triangular rings, direct products and group rings.

#include <span>
#include <string>
#include <vector>

#include "ring.hpp"

namespace fring {

namespace detail {

/// Fixed-length little-endian digit codec over an alphabet of size `base`.
struct Codec {
  std::size_t base = 1;
  std::size_t len = 0;

  std::size_t total() const { return bounded_pow(base, len, std::size_t(1) << 40); }

  void decode(std::size_t code, std::vector<Elem>& out) const {
    out.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
      out[i] = Elem(code % base);
      code /= base;
    }
  }

  std::size_t encode(std::span<const Elem> digits) const {
    std::size_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * base + digits[i];
    return code;
  }
};

/// Ring whose elements are digit tuples over `base` with coordinatewise
/// addition and multiplication given by `mul_digits(x, y, out)`.
template <class MulFn>
RingPtr tuple_ring(const FiniteRing& base, std::size_t len, MulFn&& mul_digits, const std::vector<Elem>& one_digits,
                   std::string label, std::shared_ptr<const GroupRingInfo> info = nullptr) {
  Codec codec{base.size(), len};
  const std::size_t n = codec.total();
  std::vector<std::vector<Elem>> digits(n);
  for (std::size_t x = 0; x < n; ++x) codec.decode(x, digits[x]);
  std::vector<Elem> add(n * n), mul(n * n), tmp(len);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < len; ++i) tmp[i] = base.add(digits[x][i], digits[y][i]);
      add[x * n + y] = Elem(codec.encode(tmp));
      mul_digits(digits[x], digits[y], tmp);
      mul[x * n + y] = Elem(codec.encode(tmp));
    }
  std::vector<Elem> zero_digits(len, base.zero());
  return detail_make_trusted_ring(n, std::move(add), std::move(mul), Elem(codec.encode(zero_digits)),
                                  Elem(codec.encode(one_digits)), std::move(label), std::move(info));
}

}  // namespace detail

/// Integers modulo n (n ≥ 1); ring_zmod(1) is the zero ring.
inline RingPtr ring_zmod(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ring_zmod: n must be positive");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = Elem((a + b) % n);
      mul[a * n + b] = Elem((a * b) % n);
    }
  return detail_make_trusted_ring(n, std::move(add), std::move(mul), 0, Elem(1 % n), "zmod" + std::to_string(n));
}

/// base[x]/(f) for a monic f given by coefficients c_0, ..., c_d (c_d = 1).
/// Elements are coefficient tuples (a_0, ..., a_{d-1}).
inline RingPtr ring_quotient_poly(const RingPtr& base, const std::vector<Elem>& coeffs, std::string label = {}) {
  const FiniteRing& R = *base;
  if (!R.is_commutative()) throw NonCommutativeBase();
  if (coeffs.size() < 2) throw std::invalid_argument("ring_quotient_poly: degree must be at least 1");
  if (coeffs.back() != R.one()) throw std::invalid_argument("ring_quotient_poly: polynomial must be monic");
  for (Elem c : coeffs)
    if (c >= R.size()) throw std::invalid_argument("ring_quotient_poly: coefficient out of range");
  const std::size_t d = coeffs.size() - 1;
  auto mul = [&R, &coeffs, d](const std::vector<Elem>& a, const std::vector<Elem>& b, std::vector<Elem>& out) {
    std::vector<Elem> prod(2 * d - 1, R.zero());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) prod[i + j] = R.add(prod[i + j], R.mul(a[i], b[j]));
    for (std::size_t k = prod.size(); k-- > d;) {
      Elem t = prod[k];
      prod[k] = R.zero();
      for (std::size_t i = 0; i < d; ++i) prod[k - d + i] = R.sub(prod[k - d + i], R.mul(t, coeffs[i]));
    }
    out.assign(prod.begin(), prod.begin() + Elem(d));
  };
  std::vector<Elem> one(d, R.zero());
  one[0] = R.one();
  if (label.empty()) label = R.label() + "[x]/(f)";
  return detail::tuple_ring(R, d, mul, one, std::move(label));
}

/// The field with four elements, F_2[x]/(x²+x+1).
inline RingPtr field_f4() { return ring_quotient_poly(ring_zmod(2), {1, 1, 1}, "f4"); }

/// Full k×k matrices over R, entries stored row-major.
inline RingPtr matrix_ring(const RingPtr& base, std::size_t k) {
  const FiniteRing& R = *base;
  if (k == 0) throw std::invalid_argument("matrix_ring: k must be positive");
  auto mul = [&R, k](const std::vector<Elem>& a, const std::vector<Elem>& b, std::vector<Elem>& out) {
    out.assign(k * k, R.zero());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Elem acc = R.zero();
        for (std::size_t l = 0; l < k; ++l) acc = R.add(acc, R.mul(a[i * k + l], b[l * k + j]));
        out[i * k + j] = acc;
      }
  };
  std::vector<Elem> one(k * k, R.zero());
  for (std::size_t i = 0; i < k; ++i) one[i * k + i] = R.one();
  return detail::tuple_ring(R, k * k, mul, one, "mat" + std::to_string(k) + "(" + R.label() + ")");
}

/// Upper-triangular k×k matrices over R; digits list the entries (i, j) with
/// i ≤ j in row-major order.
inline RingPtr triangular_ring(const RingPtr& base, std::size_t k) {
  const FiniteRing& R = *base;
  if (k == 0) throw std::invalid_argument("triangular_ring: k must be positive");
  std::vector<std::vector<std::size_t>> pos(k, std::vector<std::size_t>(k, npos));
  std::size_t len = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) pos[i][j] = len++;
  auto mul = [&R, &pos, k, len](const std::vector<Elem>& a, const std::vector<Elem>& b, std::vector<Elem>& out) {
    out.assign(len, R.zero());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        Elem acc = R.zero();
        for (std::size_t l = i; l <= j; ++l) acc = R.add(acc, R.mul(a[pos[i][l]], b[pos[l][j]]));
        out[pos[i][j]] = acc;
      }
  };
  std::vector<Elem> one(len, R.zero());
  for (std::size_t i = 0; i < k; ++i) one[pos[i][i]] = R.one();
  return detail::tuple_ring(R, len, mul, one, "tri" + std::to_string(k) + "(" + R.label() + ")");
}

/// R × S with componentwise operations; (a, b) is encoded as a + |R|·b.
inline RingPtr product_ring(const RingPtr& first, const RingPtr& second) {
  const FiniteRing& R = *first;
  const FiniteRing& S = *second;
  const std::size_t nr = R.size(), ns = S.size(), n = nr * ns;
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem a1 = Elem(x % nr), b1 = Elem(x / nr), a2 = Elem(y % nr), b2 = Elem(y / nr);
      add[x * n + y] = Elem(R.add(a1, a2) + nr * S.add(b1, b2));
      mul[x * n + y] = Elem(R.mul(a1, a2) + nr * S.mul(b1, b2));
    }
  return detail_make_trusted_ring(n, std::move(add), std::move(mul), Elem(R.zero() + nr * S.zero()),
                                  Elem(R.one() + nr * S.one()), R.label() + "x" + S.label());
}

/// Group ring R(G): functions G → R with pointwise addition and convolution
/// (a·b)(k) = Σ_{gh=k} a(g)b(h). Throws SizeOverflow when |R|^|G| > max_size.
inline RingPtr group_ring(const RingPtr& base, const GroupPtr& group, std::size_t max_size = 4096) {
  const FiniteRing& R = *base;
  const FiniteGroup& G = *group;
  const std::size_t size = bounded_pow(R.size(), G.size(), max_size);
  if (size > max_size)
    throw SizeOverflow("group ring " + R.label() + "(" + G.label() + ") exceeds cap " + std::to_string(max_size));
  auto mul = [&R, &G](const std::vector<Elem>& a, const std::vector<Elem>& b, std::vector<Elem>& out) {
    out.assign(G.size(), R.zero());
    for (Elem g = 0; g < G.size(); ++g) {
      if (a[g] == R.zero()) continue;
      for (Elem h = 0; h < G.size(); ++h) {
        Elem k = G.op(g, h);
        out[k] = R.add(out[k], R.mul(a[g], b[h]));
      }
    }
  };
  std::vector<Elem> one(G.size(), R.zero());
  one[G.identity()] = R.one();
  auto info = std::make_shared<GroupRingInfo>();
  info->base = base;
  info->group = group;
  return detail::tuple_ring(R, G.size(), mul, one, R.label() + "." + G.label(), std::move(info));
}

}  // namespace fring
