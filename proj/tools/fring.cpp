// Command-line front end: list built-ins, check single properties, run the
// theorem checks and build group rings.
//
// Exit codes: 0 success / property holds / all agree, 1 property fails or
// some report disagrees, 2 usage error, parse error, cap exceeded or any
// other error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fring/fring.hpp"
#include "fring/report.hpp"

namespace {

using namespace fring;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_file(const std::string& sel) { return std::filesystem::is_regular_file(sel); }

RingPtr select_ring(const std::string& sel, const Caps& caps) {
  if (is_file(sel)) {
    try {
      return parse_ring(read_file(sel), std::filesystem::path(sel).stem().string(), caps.max_ring);
    } catch (const Error& e) {
      throw std::runtime_error(sel + ": " + e.what());
    }
  }
  return builtin_ring(sel, caps);
}

GroupPtr select_group(const std::string& sel) {
  if (is_file(sel)) {
    try {
      return parse_group(read_file(sel), std::filesystem::path(sel).stem().string());
    } catch (const Error& e) {
      throw std::runtime_error(sel + ": " + e.what());
    }
  }
  return builtin_group(sel);
}

struct Options {
  Caps caps;
  std::string format = "table";
  std::uint64_t seed = 1;
  std::size_t jobs = 1;

  CorpusOptions corpus() const {
    CorpusOptions o;
    o.caps = caps;
    o.seed = seed;
    return o;
  }
  bool json() const { return format != "table"; }
};

int cmd_list(const std::string& filter) {
  auto show = [&](const std::string& title, const std::vector<std::string>& items) {
    std::vector<std::string> hit;
    for (const auto& i : items)
      if (filter.empty() || i.find(filter) != std::string::npos) hit.push_back(i);
    if (hit.empty()) return;
    std::cout << title << ":\n";
    for (const auto& i : hit) std::cout << "  " << i << '\n';
  };
  std::vector<std::string> rings{"f2", "f2-dual", "f2xf3", "f3", "f4", "mat2-f2", "tri2-f2", "zmod<n>",
                                 "<ring>.<group>"};
  show("base rings", rings);
  show("default corpus rings", default_ring_labels());
  show("groups", {"c<n>", "c2xc2", "s3", "trivial"});
  show("properties", property_ids());
  show("theorems", theorem_ids());
  return kHolds;
}

int cmd_check(const std::string& property, const std::string& ring, const Options& opt) {
  if (std::find(property_ids().begin(), property_ids().end(), property) == property_ids().end()) {
    std::cerr << "error: unknown property '" << property << "' (see 'fring list')\n";
    return kError;
  }
  const RingPtr R = select_ring(ring, opt.caps);
  const PropertyVerdict v = evaluate_property(property, R, opt.corpus());
  std::cout << (opt.json() ? render_verdict_json(v, R->label()) : render_verdict_table(v, R->label()));
  return v.value ? kHolds : kFails;
}

int cmd_verify(const std::string& theorem, const std::string& corpus, const std::string& ring,
               const std::string& group, const Options& opt) {
  const auto ids = theorem_ids();
  if (theorem != "all" && std::find(ids.begin(), ids.end(), theorem) == ids.end()) {
    std::cerr << "error: unknown theorem '" << theorem << "' (see 'fring list')\n";
    return kError;
  }
  const auto& gids = group_theorem_ids();
  const bool group_theorem = std::find(gids.begin(), gids.end(), theorem) != gids.end();
  HarnessConfig config;
  if (ring.empty() && group.empty()) {
    if (corpus != "default") {
      std::cerr << "error: unknown corpus '" << corpus << "'\n";
      return kError;
    }
    config = default_config(opt.corpus());
  } else {
    config.corpus = opt.corpus();
    if (ring.empty()) {
      std::cerr << "error: --group needs --ring\n";
      return kError;
    }
    const RingPtr R = select_ring(ring, opt.caps);
    if (!group.empty()) {
      const GroupPtr G = select_group(group);
      config.group_rings.emplace_back(R, G);
      if (!group_theorem) config.rings.push_back(group_ring(R, G, std::min(opt.caps.max_ring, opt.caps.max_group_ring)));
    } else {
      config.rings.push_back(R);
      if (group_theorem || theorem == "all")
        for (const auto& g : default_group_labels()) {
          const GroupPtr G = builtin_group(g);
          if (bounded_pow(R->size(), G->size(), opt.caps.max_ring) <= opt.caps.max_ring)
            config.group_rings.emplace_back(R, G);
        }
    }
  }
  if (theorem != "all") config.theorems = {theorem};
  config.jobs = opt.jobs;
  const HarnessResult res = run_corpus(config);
  std::cout << (opt.json() ? render_json(res) : render_table(res));
  if (res.any_error()) return kError;
  return res.all_agree() ? kHolds : kFails;
}

int cmd_groupring(const std::string& ring, const std::string& group, const std::string& out, const Options& opt) {
  const RingPtr R = select_ring(ring, opt.caps);
  const GroupPtr G = select_group(group);
  const RingPtr RG = group_ring(R, G, std::min(opt.caps.max_ring, opt.caps.max_group_ring));
  const std::string text = write_ring(*RG);
  if (out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f || !(f << text)) throw std::runtime_error("cannot write " + out);
    std::cout << "wrote " << RG->label() << " (" << RG->size() << " elements) to " << out << '\n';
  }
  return kHolds;
}

int cmd_module(const std::string& path, const std::string& ring_override, const Options& opt) {
  const ModuleSpec spec = parse_module_spec(read_file(path));
  const RingPtr R = select_ring(ring_override.empty() ? spec.ring_label : ring_override, opt.caps);
  for (const auto& rel : spec.relations)
    for (Elem r : rel)
      if (r >= R->size()) throw std::invalid_argument("relation entry " + std::to_string(r) + " is not an element of " + R->label());
  const ModulePtr M = present_module(R, spec.side, spec.generators, spec.relations, opt.caps);
  const auto emb = search_embedding_into_free(M, opt.caps.kmax);
  const auto dual = dual_module(M, opt.caps);
  std::vector<std::pair<std::string, std::string>> rows{
      {"ring", R->label()},
      {"side", side_name(M->side())},
      {"generators", std::to_string(spec.generators)},
      {"relations", std::to_string(spec.relations.size())},
      {"size", std::to_string(M->size())},
      {"dual size", std::to_string(dual.module->size())},
      {"semireflexive", is_semireflexive(M) ? "yes" : "no"},
      {"reflexive", is_reflexive(M, opt.caps) ? "yes" : "no"},
      {"embeds in free", emb.embedding ? "rank " + std::to_string(emb.embedding->rank()) : "no"}};
  if (opt.json()) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : rows) j[k] = v;
    std::cout << j.dump(2) << '\n';
  } else {
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    for (const auto& [k, v] : rows) std::cout << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  }
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ring and module property checker"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--max-ring", opt.caps.max_ring, "largest ring size")
      ->envname("FRING_MAX_RING")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-module", opt.caps.max_module, "largest module size")
      ->envname("FRING_MAX_MODULE")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--kmax", opt.caps.kmax, "largest free rank in embedding searches")
      ->envname("FRING_KMAX")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->envname("FRING_FORMAT")
      ->check(CLI::IsMember({"table", "json", "json-like"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "module corpus seed")->envname("FRING_SEED")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "worker threads")
      ->envname("FRING_JOBS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.fallthrough();

  std::string filter;
  auto* list = app.add_subcommand("list", "list built-in rings, groups, properties and theorems");
  list->add_option("filter", filter, "substring filter");

  std::string property, ring, group, out, corpus = "default", theorem, path;
  auto* check = app.add_subcommand("check", "evaluate one property of one ring");
  check->add_option("property", property)->required();
  check->add_option("ring", ring, "built-in label or ring file")->required();

  auto* verify = app.add_subcommand("verify", "run theorem checks");
  verify->add_option("theorem", theorem, "theorem id or 'all'")->required();
  verify->add_option("--corpus", corpus, "named corpus")->capture_default_str();
  verify->add_option("--ring", ring, "single ring (label or file)");
  verify->add_option("--group", group, "group for a group ring (label or file)");

  auto* gr = app.add_subcommand("groupring", "write the group ring R(G) as a ring file");
  gr->add_option("ring", ring)->required();
  gr->add_option("group", group)->required();
  gr->add_option("out", out, "output path or '-'")->required();

  auto* mod = app.add_subcommand("module", "describe a module presentation file");
  mod->add_option("file", path)->required();
  mod->add_option("--ring", ring, "ring label or file overriding the one named in the file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*list) return cmd_list(filter);
    if (*check) return cmd_check(property, ring, opt);
    if (*verify) return cmd_verify(theorem, corpus, ring, group, opt);
    if (*gr) return cmd_groupring(ring, group, out, opt);
    if (*mod) return cmd_module(path, ring, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
