#pragma once

/// @file core.hpp
/// @brief Shared vocabulary: element indices, module sides, size caps and the
/// error hierarchy used across the library.

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fring {

/// Index of an element inside a finite structure (ring, group, module).
using Elem = std::uint32_t;

inline constexpr Elem npos = static_cast<Elem>(-1);

/// Membership bitset over the element indices of some finite structure.
using Bits = std::vector<bool>;

enum class Side : std::uint8_t { left, right };

constexpr Side opposite(Side s) noexcept { return s == Side::left ? Side::right : Side::left; }

constexpr std::string_view to_string(Side s) noexcept { return s == Side::left ? "left" : "right"; }

/// Size limits that keep every computation exhaustive.
struct Caps {
  std::size_t max_ring = 256;        ///< largest ring accepted from selectors
  std::size_t max_module = 4096;     ///< largest ambient free module |R|^m
  std::size_t kmax = 3;              ///< largest free rank tried for embeddings
  std::size_t max_group_ring = 4096; ///< largest |R|^|G| for group_ring
  std::size_t max_lattice = 200000;  ///< largest submodule lattice enumerated
  std::size_t max_homs = 1u << 20;   ///< largest hom set materialized as a list
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring or group axiom failed; `witness` holds the offending element triple.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::array<Elem, 3> witness)
      : Error("axiom violation: " + axiom + " at (" + std::to_string(witness[0]) + ", " +
              std::to_string(witness[1]) + ", " + std::to_string(witness[2]) + ")"),
        axiom_(std::move(axiom)),
        witness_(witness) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<Elem, 3>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::array<Elem, 3> witness_;
};

class SizeOverflow : public Error {
 public:
  using Error::Error;
};

class NotAGroupRing : public Error {
 public:
  NotAGroupRing() : Error("ring was not constructed by group_ring") {}
};

class NonCommutativeBase : public Error {
 public:
  NonCommutativeBase() : Error("polynomial quotient requires a commutative base ring") {}
};

class ParentMismatch : public Error {
 public:
  ParentMismatch() : Error("submodules belong to different parent modules") {}
};

class ActionMismatch : public Error {
 public:
  using Error::Error;
};

class NotJointlyInjective : public Error {
 public:
  NotJointlyInjective() : Error("component maps are not jointly injective") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when two independent routes of a computation disagree.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline std::size_t count_bits(const Bits& b) {
  std::size_t c = 0;
  for (bool x : b) c += x ? 1 : 0;
  return c;
}

inline std::vector<Elem> members(const Bits& b) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

inline bool is_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

/// Checked integer power; returns `limit + 1` once the value exceeds `limit`.
inline std::size_t bounded_pow(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > limit / base) return limit + 1;
    v *= base;
  }
  return v;
}

inline std::string format_set(const std::vector<Elem>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

}  // namespace fring
