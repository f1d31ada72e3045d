// Loads a ring from a file, asks a few questions about it, then builds a
// group ring and runs the theorem checks on it.
//
//   quick_tour [ring-file]

#include <fstream>
#include <iostream>
#include <sstream>

#include "fring/fring.hpp"

using namespace fring;

int main(int argc, char** argv) {
  RingPtr R;
  if (argc > 1) {
    std::ifstream in(argv[1]);
    std::ostringstream text;
    text << in.rdbuf();
    R = parse_ring(text.str(), "sample");
  } else {
    R = builtin_ring("zmod4");
  }
  std::cout << "ring " << R->label() << " with " << R->size() << " elements\n";

  for (Side s : {Side::left, Side::right}) {
    const auto v = self_injective_verdict(R, s);
    std::cout << "  " << side_name(s) << " self-injective: " << (v.value ? "yes" : "no");
    if (v.witness) std::cout << " (" << *v.witness << ")";
    std::cout << '\n';
  }
  std::cout << "  semisimple: " << (is_semisimple(R).value ? "yes" : "no") << '\n';
  std::cout << "  quasi-Frobenius: " << (is_qf(R).value ? "yes" : "no") << '\n';

  // Hom and Ext between the regular module and its simple quotients.
  auto reg = regular_module(R, Side::left);
  for (const auto& I : one_sided_ideals(R, Side::left)) {
    auto M = cyclic_module(R, Side::left, I);
    std::cout << "  R/I with |I| = " << I.count() << ": |Hom(R/I, R)| = " << count_homs(M, reg)
              << ", |Ext1(R/I, R)| = " << ext1(M, reg).size() << '\n';
  }

  const auto G = builtin_group("c2");
  if (bounded_pow(R->size(), G->size(), 256) <= 256) {
    HarnessConfig config;
    config.group_rings.emplace_back(R, G);
    const auto res = run_corpus(config);
    for (const auto& r : res.reports)
      std::cout << r.theorem_id << " on " << r.ring << ": " << (r.agreement ? "agrees" : "DISAGREES") << '\n';
    return res.all_agree() ? 0 : 1;
  }
  return 0;
}
