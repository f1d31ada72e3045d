#pragma once

/// @file text_format.hpp
/// @brief Plain-text ring, group and module-presentation files.
///
/// Ring:   `n <size>`, `zero <i>`, `one <i>`, then n rows of the addition
///         table and n rows of the multiplication table.
/// Group:  `n <size>`, `id <i>`, then n rows of the composition table.
/// Module: `module <left|right> <ring-label> gens <m>`, then one line of m
///         ring-element indices per relation.
/// `#` starts a comment; blank lines are ignored.

#include <sstream>
#include <string>
#include <vector>

#include "group.hpp"
#include "ring.hpp"

namespace fring {

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{no, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline std::size_t parse_index(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  }
  if (pos != tok.size() || tok[0] == '-' || tok[0] == '+')
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

class LineReader {
 public:
  explicit LineReader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(const char* what) {
    if (pos_ >= lines_.size())
      throw ParseError(lines_.empty() ? 1 : lines_.back().number + 1, std::string("unexpected end of input, expected ") + what);
    return lines_[pos_++];
  }

  std::size_t keyword(const char* key) {
    const Line& l = next(key);
    if (l.tokens.size() != 2 || l.tokens[0] != key)
      throw ParseError(l.number, std::string("expected '") + key + " <value>'");
    return parse_index(l.tokens[1], l.number);
  }

  std::vector<Elem> table(std::size_t n, const char* what) {
    std::vector<Elem> t;
    t.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      const Line& l = next(what);
      if (l.tokens.size() != n)
        throw ParseError(l.number, std::string(what) + " row has " + std::to_string(l.tokens.size()) +
                                       " entries, expected " + std::to_string(n));
      for (const auto& tok : l.tokens) {
        const std::size_t v = parse_index(tok, l.number);
        if (v >= n) throw ParseError(l.number, "entry " + tok + " out of range [0," + std::to_string(n) + ")");
        t.push_back(Elem(v));
      }
    }
    return t;
  }

  void expect_end() const {
    if (pos_ < lines_.size()) throw ParseError(lines_[pos_].number, "trailing content");
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

inline void write_table(std::ostringstream& out, std::size_t n, const std::vector<Elem>& t) {
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out << (c ? " " : "") << t[r * n + c];
    out << '\n';
  }
}

}  // namespace detail

/// Parses and validates a ring file. AxiomViolation propagates unchanged.
inline RingPtr parse_ring(const std::string& text, std::string label = "file", std::size_t max_ring = 256) {
  detail::LineReader rd(detail::tokenize(text));
  const std::size_t n = rd.keyword("n");
  if (n == 0) throw ParseError(1, "ring size must be positive");
  if (n > max_ring) throw SizeOverflow("ring file declares " + std::to_string(n) + " elements, cap is " +
                                       std::to_string(max_ring));
  const std::size_t zero = rd.keyword("zero");
  const std::size_t one = rd.keyword("one");
  auto add = rd.table(n, "addition");
  auto mul = rd.table(n, "multiplication");
  rd.expect_end();
  return make_ring_from_tables(n, std::move(add), std::move(mul), Elem(zero), Elem(one), std::move(label));
}

inline std::string write_ring(const FiniteRing& R) {
  std::ostringstream out;
  out << "# ring " << R.label() << '\n';
  out << "n " << R.size() << "\nzero " << R.zero() << "\none " << R.one() << '\n';
  out << "# addition\n";
  detail::write_table(out, R.size(), R.add_table());
  out << "# multiplication\n";
  detail::write_table(out, R.size(), R.mul_table());
  return out.str();
}

inline GroupPtr parse_group(const std::string& text, std::string label = "file") {
  detail::LineReader rd(detail::tokenize(text));
  const std::size_t n = rd.keyword("n");
  if (n == 0) throw ParseError(1, "group size must be positive");
  const std::size_t id = rd.keyword("id");
  auto op = rd.table(n, "composition");
  rd.expect_end();
  return make_group_from_table(n, std::move(op), Elem(id), std::move(label));
}

inline std::string write_group(const FiniteGroup& G) {
  std::ostringstream out;
  out << "# group " << G.label() << '\n';
  out << "n " << G.size() << "\nid " << G.identity() << '\n';
  detail::write_table(out, G.size(), G.op_table());
  return out.str();
}

/// Unrealized module presentation as read from a file.
struct ModuleSpec {
  Side side = Side::left;
  std::string ring_label;
  std::size_t generators = 0;
  std::vector<std::vector<Elem>> relations;
};

inline ModuleSpec parse_module_spec(const std::string& text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty module file");
  const auto& h = lines[0];
  if (h.tokens.size() != 5 || h.tokens[0] != "module" || h.tokens[3] != "gens")
    throw ParseError(h.number, "expected 'module <left|right> <ring-label> gens <m>'");
  ModuleSpec spec;
  if (h.tokens[1] == "left") spec.side = Side::left;
  else if (h.tokens[1] == "right") spec.side = Side::right;
  else throw ParseError(h.number, "side must be 'left' or 'right'");
  spec.ring_label = h.tokens[2];
  spec.generators = detail::parse_index(h.tokens[4], h.number);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != spec.generators)
      throw ParseError(l.number, "relation has " + std::to_string(l.tokens.size()) + " entries, expected " +
                                     std::to_string(spec.generators));
    std::vector<Elem> rel;
    for (const auto& tok : l.tokens) rel.push_back(Elem(detail::parse_index(tok, l.number)));
    spec.relations.push_back(std::move(rel));
  }
  return spec;
}

inline std::string write_module_spec(const ModuleSpec& spec) {
  std::ostringstream out;
  out << "module " << (spec.side == Side::left ? "left" : "right") << ' ' << spec.ring_label << " gens "
      << spec.generators << '\n';
  for (const auto& rel : spec.relations) {
    for (std::size_t i = 0; i < rel.size(); ++i) out << (i ? " " : "") << rel[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace fring
