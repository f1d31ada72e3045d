#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fring/fring.hpp"
#include "fring/report.hpp"

using namespace fring;

namespace {

TheoremReport report_with(std::vector<Condition> cs) {
  TheoremReport r;
  r.theorem_id = "t";
  r.conditions = std::move(cs);
  finalize(r);
  return r;
}

Condition exact(std::string n, bool v) { return {std::move(n), v, true, {}, false, std::nullopt}; }
Condition bounded(std::string n, bool v) { return {std::move(n), v, false, {}, false, std::nullopt}; }

bool all_true(const TheoremReport& r) {
  for (const auto& c : r.conditions)
    if (!c.value) return false;
  return true;
}

bool all_false(const TheoremReport& r) {
  for (const auto& c : r.conditions)
    if (c.value) return false;
  return true;
}

}  // namespace

TEST(Agreement, ExactConditionsMustMatch) {
  EXPECT_TRUE(report_with({exact("a", true), exact("b", true)}).agreement);
  EXPECT_TRUE(report_with({exact("a", false), exact("b", false)}).agreement);
  EXPECT_FALSE(report_with({exact("a", true), exact("b", false)}).agreement);
}

TEST(Agreement, CorpusBoundedMayOnlyRefute) {
  EXPECT_TRUE(report_with({exact("a", false), bounded("b", true)}).agreement);
  EXPECT_TRUE(report_with({exact("a", false), bounded("b", false)}).agreement);
  EXPECT_FALSE(report_with({exact("a", true), bounded("b", false)}).agreement);
  EXPECT_TRUE(report_with({bounded("a", true), bounded("b", true)}).agreement);
  EXPECT_FALSE(report_with({bounded("a", true), bounded("b", false)}).agreement);
}

TEST(Agreement, GroupsAndAssertions) {
  auto g1 = exact("a", true), g2 = exact("b", false);
  g1.group = "x";
  g2.group = "y";
  EXPECT_TRUE(report_with({g1, g2}).agreement);
  Condition as{"c", false, true, {}, true, std::string("why")};
  const auto r = report_with({as});
  EXPECT_FALSE(r.agreement);
  ASSERT_EQ(r.disagreements.size(), 1u);
  EXPECT_NE(r.disagreements[0].find("why"), std::string::npos);
  TheoremReport e;
  e.error = "boom";
  finalize(e);
  EXPECT_FALSE(e.agreement);
}

TEST(Theorems, AnnihilatorProposition) {
  EXPECT_TRUE(all_true(check_prop_annihilators(ring_zmod(8))));
  EXPECT_TRUE(all_true(check_prop_annihilators(builtin_ring("f2xf3"))));
  const auto t = check_prop_annihilators(builtin_ring("tri2-f2"));
  EXPECT_TRUE(t.agreement);
  EXPECT_TRUE(all_false(t));
  for (const auto& c : t.conditions)
    if (c.name != "right self-injective (Ext route)") EXPECT_TRUE(c.witness.has_value()) << c.name;
}

TEST(Theorems, WqfExactConditionsAreConstant) {
  for (const auto& label : default_ring_labels()) {
    const auto rc = build_ring_corpus(builtin_ring(label));
    const auto r = check_thm_wqf(rc, {});
    EXPECT_TRUE(r.agreement) << label;
    std::optional<bool> v;
    for (const auto& c : r.conditions)
      if (c.exact) {
        if (!v) v = c.value;
        EXPECT_EQ(c.value, *v) << label << " " << c.name;
      }
  }
}

TEST(Theorems, FpInjectiveAndIfOnSmallRings) {
  for (const auto& label : {"zmod4", "tri2-f2", "mat2-f2", "f2.c2"}) {
    const auto rc = build_ring_corpus(builtin_ring(label));
    EXPECT_TRUE(check_thm_fp_injective(rc, {}).agreement) << label;
    EXPECT_TRUE(check_thm_if(rc, {}).agreement) << label;
    EXPECT_TRUE(check_finite_collapse(rc.ring).agreement) << label;
  }
}

TEST(GroupRings, Examples) {
  const auto F2 = builtin_ring("f2");
  const auto c3 = check_group_ring_theorems(F2, builtin_group("c3"), nullptr, nullptr);
  EXPECT_TRUE(c3.agreement);
  for (const auto& c : c3.conditions)
    if (c.group == "maschke") EXPECT_TRUE(c.value) << c.name;
  const auto c2 = check_group_ring_theorems(F2, builtin_group("c2"), nullptr, nullptr);
  EXPECT_TRUE(c2.agreement);
  for (const auto& c : c2.conditions) {
    if (c.group == "self-injective-left" || c.group == "self-injective-right") EXPECT_TRUE(c.value) << c.name;
    if (c.group == "maschke") EXPECT_FALSE(c.value) << c.name;
  }
  const auto z4 = check_group_ring_theorems(ring_zmod(4), builtin_group("c2"), nullptr, nullptr);
  EXPECT_TRUE(z4.agreement);
  for (const auto& c : z4.conditions)
    if (c.group == "self-injective-left") EXPECT_TRUE(c.value) << c.name;
}

TEST(GroupRings, RestrictionToCoefficients) {
  const auto RG = builtin_ring("f3.c2");
  const auto M = regular_module(RG, Side::right);
  const auto S = restrict_to_base(M);
  EXPECT_EQ(S.restricted->size(), M->size());
  const auto* info = RG->group_ring_info();
  for (Elem m = 0; m < M->size(); ++m) {
    EXPECT_EQ(S.from_restricted[S.to_restricted[m]], m);
    for (Elem r = 0; r < info->base->size(); ++r)
      EXPECT_EQ(S.to_restricted[M->act(info->monomial(r, info->group->identity()), m)],
                S.restricted->act(r, S.to_restricted[m]));
  }
  EXPECT_THROW(restrict_to_base(regular_module(ring_zmod(4), Side::left)), NotAGroupRing);
}

TEST(GroupRings, LiftOfCoefficientProjections) {
  const auto RG = builtin_ring("f2.c2");
  const auto* info = RG->group_ring_info();
  const auto M = regular_module(RG, Side::right);
  const auto S = restrict_to_base(M);
  const auto base = regular_module(info->base, Side::right);
  std::vector<ModuleHom> f;
  for (Elem g = 0; g < info->group->size(); ++g) {
    ModuleHom h{S.restricted, base, std::vector<Elem>(S.restricted->size())};
    for (Elem y = 0; y < S.restricted->size(); ++y)
      h.values[y] = base->element_of_code(info->coefficient(Elem(M->code_of(S.from_restricted[y])), g));
    ASSERT_TRUE(h.verify());
    f.push_back(std::move(h));
  }
  const auto lift = lift_to_group_ring(S, f);
  EXPECT_TRUE(lift.linear);
  EXPECT_TRUE(lift.injective);
  EXPECT_TRUE(lift.recovers_components);
  // Component for g = identity is the identity map on F2(C2): the sum over h of x_h h^{-1} h.
  for (Elem m = 0; m < M->size(); ++m) EXPECT_EQ(lift.lift.components[0](m), m);
}

TEST(GroupRings, LiftOverTrivialGroupIsTheOriginalMap) {
  const auto R = ring_zmod(4);
  const auto RG = group_ring(R, trivial_group());
  const auto* info = RG->group_ring_info();
  const auto M = cyclic_module(RG, Side::right, ElementSubset(4, {0, 2}));
  const auto S = restrict_to_base(M);
  const auto base = regular_module(info->base, Side::right);
  const auto homs = hom_set(S.restricted, base);
  std::vector<ModuleHom> f;
  for (const auto& h : homs)
    if (h.is_injective()) {
      f.push_back(h);
      break;
    }
  ASSERT_EQ(f.size(), 1u);
  const auto lift = lift_to_group_ring(S, f);
  const auto regRG = lift.lift.components[0].target;
  for (Elem m = 0; m < M->size(); ++m)
    EXPECT_EQ(regRG->code_of(lift.lift.components[0](m)), base->code_of(f[0](S.to_restricted[m])));
  EXPECT_TRUE(lift.linear && lift.injective);
}

TEST(GroupRings, LiftPreconditions) {
  const auto RG = builtin_ring("f2.c2");
  const auto M = regular_module(RG, Side::right);
  const auto S = restrict_to_base(M);
  EXPECT_THROW(lift_to_group_ring(S, {}), NotJointlyInjective);
  const auto other = restrict_to_base(regular_module(RG, Side::right));
  const auto base = regular_module(RG->group_ring_info()->base, Side::right);
  const auto wrong = hom_set(other.restricted, base);
  EXPECT_THROW(lift_to_group_ring(S, wrong), ActionMismatch);
  const auto zero = restrict_to_base(zero_module(RG, Side::right));
  const auto lift = lift_to_group_ring(zero, {});
  EXPECT_TRUE(lift.injective);
  EXPECT_EQ(lift.lift.rank(), 0u);
}

TEST(GroupRings, LemmaCasesOnGrid) {
  std::size_t cases = 0;
  for (const auto& [r, g] : default_group_ring_grid()) {
    const auto rep = check_group_ring_lift(builtin_ring(r + "." + g), 1);
    EXPECT_TRUE(rep.agreement) << r << "." << g;
    cases += rep.conditions.size();
  }
  EXPECT_GE(cases, 20u);
}

TEST(Runner, EmptyConfigIsEmptySuccess) {
  const auto res = run_corpus(HarnessConfig{});
  EXPECT_TRUE(res.reports.empty());
  EXPECT_TRUE(res.all_agree());
  EXPECT_FALSE(res.any_error());
}

TEST(Runner, DeterministicAcrossJobCounts) {
  HarnessConfig c;
  for (const auto& l : {"zmod4", "tri2-f2", "f2.c2"}) c.rings.push_back(builtin_ring(l));
  c.group_rings.emplace_back(builtin_ring("f2"), builtin_group("c3"));
  c.jobs = 1;
  const auto a = render_json(run_corpus(c));
  c.jobs = 3;
  const auto b = render_json(run_corpus(c));
  EXPECT_EQ(a, b);
  EXPECT_EQ(render_table(run_corpus(c)), render_table(run_corpus(c)));
}

TEST(Runner, ErrorsAreReportedWithContext) {
  HarnessConfig c;
  c.group_rings.emplace_back(ring_zmod(4), symmetric_group(3));
  c.corpus.caps.max_ring = 256;
  c.corpus.caps.max_group_ring = 256;
  const auto res = run_corpus(c);
  ASSERT_FALSE(res.reports.empty());
  EXPECT_TRUE(res.any_error());
  EXPECT_EQ(res.reports[0].ring, "zmod4.s3");
}

TEST(Runner, CorruptedRingSurfacesAxiomViolation) {
  std::string text = write_ring(*builtin_ring("f2.c2"));
  text.replace(text.find("1 0 3 2"), 7, "1 1 3 2");
  EXPECT_THROW(parse_ring(text, "bad"), AxiomViolation);
}

TEST(Report, JsonHasStableKeysAndFields) {
  HarnessConfig c;
  c.rings.push_back(ring_zmod(4));
  c.theorems = {"prop-annihilators"};
  const auto res = run_corpus(c);
  const auto doc = nlohmann::json::parse(render_json(res));
  ASSERT_EQ(doc["reports"].size(), 1u);
  const auto& r = doc["reports"][0];
  for (const char* key : {"theorem_id", "ring", "conditions", "agreement", "witnesses"}) EXPECT_TRUE(r.contains(key));
  EXPECT_EQ(r["conditions"]["(a) l(I meet J) = l(I) + l(J)"]["exactness"], "exact");
  EXPECT_TRUE(doc["summary"]["zmod4"]["prop-annihilators"].get<bool>());
  const auto text = render_json(res);
  EXPECT_LT(text.find("\"agreement\""), text.find("\"conditions\""));
}

#ifdef FRING_CLI
namespace {

int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string file = ::testing::TempDir() + "cli_out.txt";
  const int status = std::system((std::string(FRING_CLI) + " " + args + " > " + file + " 2>&1").c_str());
  if (out) {
    std::ifstream in(file);
    std::ostringstream s;
    s << in.rdbuf();
    *out = s.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, List) {
  std::string out;
  EXPECT_EQ(run_cli("list", &out), 0);
  EXPECT_NE(out.find("zmod4"), std::string::npos);
  EXPECT_NE(out.find("thm-wqf"), std::string::npos);
  EXPECT_EQ(run_cli("list wqf", &out), 0);
  EXPECT_NE(out.find("thm-wqf"), std::string::npos);
  EXPECT_EQ(out.find("zmod4"), std::string::npos);
}

TEST(Cli, CheckExitCodes) {
  std::string out;
  EXPECT_EQ(run_cli("check self-injective-left zmod4"), 0);
  EXPECT_EQ(run_cli("check self-injective-left tri2-f2", &out), 1);
  EXPECT_NE(out.find("ideal"), std::string::npos);
  EXPECT_EQ(run_cli("check foo zmod4"), 2);
  EXPECT_EQ(run_cli("check qf nosuchring"), 2);
  EXPECT_EQ(run_cli("--max-ring 0 check qf zmod4"), 2);
}

TEST(Cli, GroupRingFiles) {
  const std::string path = ::testing::TempDir() + "f2c3.ring";
  EXPECT_EQ(run_cli("groupring f2 c3 " + path), 0);
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  const auto R = parse_ring(s.str());
  EXPECT_EQ(R->size(), 8u);
  EXPECT_EQ(R->mul_table(), builtin_ring("f2.c3")->mul_table());
  EXPECT_EQ(run_cli("groupring f2 c2 " + path), 0);
  EXPECT_EQ(run_cli("groupring zmod4 s3 " + path), 2);
  std::string out;
  EXPECT_EQ(run_cli("check self-injective-right " + path, &out), 0);
}

TEST(Cli, VerifyExitCodes) {
  std::string out;
  EXPECT_EQ(run_cli("verify lemma-mmm --ring f2 --group c2", &out), 0);
  EXPECT_NE(out.find("linear=yes, injective=yes"), std::string::npos);
  EXPECT_EQ(run_cli("verify nosuch"), 2);
  std::string text = write_ring(*builtin_ring("f2.c2"));
  text.replace(text.find("1 0 3 2"), 7, "1 1 3 2");
  const std::string bad = ::testing::TempDir() + "corrupt.ring";
  std::ofstream(bad) << text;
  EXPECT_EQ(run_cli("verify thm-wqf --ring " + bad, &out), 2);
  EXPECT_NE(out.find("axiom violation"), std::string::npos);
  EXPECT_NE(out.find("corrupt.ring"), std::string::npos);
  std::ofstream(bad) << "n 2\nzero 0\none 1\n0 1\n1 x\n";
  EXPECT_EQ(run_cli("check qf " + bad, &out), 2);
  EXPECT_NE(out.find("line 5"), std::string::npos);
}

TEST(Cli, EnvironmentOverrides) {
  EXPECT_EQ(run_cli("groupring f2 s3 -"), 0);
  EXPECT_EQ(run_cli("--max-ring 32 groupring f2 s3 -"), 2);
  EXPECT_EQ(std::system((std::string("FRING_MAX_RING=32 ") + FRING_CLI + " groupring f2 s3 - > /dev/null 2>&1").c_str()) == 0,
            false);
}

TEST(Cli, JsonFormatParses) {
  std::string out;
  EXPECT_EQ(run_cli("--format json verify prop-annihilators --ring zmod4", &out), 0);
  const auto doc = nlohmann::json::parse(out);
  EXPECT_EQ(doc["reports"][0]["ring"], "zmod4");
  EXPECT_EQ(run_cli("--format json check qf tri2-f2", &out), 1);
  EXPECT_FALSE(nlohmann::json::parse(out)["value"].get<bool>());
}

TEST(Cli, ModuleFiles) {
  const std::string path = ::testing::TempDir() + "m.module";
  std::ofstream(path) << "module left zmod4 gens 2\n0 2\n";
  std::string out;
  EXPECT_EQ(run_cli("module " + path, &out), 0);
  EXPECT_NE(out.find("size            8"), std::string::npos);
  std::ofstream(path) << "module left zmod4 gens 2\n0\n";
  EXPECT_EQ(run_cli("module " + path, &out), 2);
  EXPECT_NE(out.find("line 2"), std::string::npos);
}
#endif
