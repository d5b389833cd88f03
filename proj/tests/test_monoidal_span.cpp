#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicatkit/checkers.hpp"

using namespace bk;

namespace {
void expect_all_pass(const Report& r) {
  for (const auto& law : r.laws) {
    INFO(law.suite, "/", law.law, " -> ", law.counterexample);
    CHECK(law.status == LawStatus::Pass);
  }
}
} // namespace

TEST_CASE("span(x) monoidal data passes the full suite") {
  MonoidalBicat m = span_monoidal(setmon_product());
  Sample s;
  s.obj_cap = 2;
  s.one_cap = 2;
  s.pair_cap = 12;
  Report r = check_monoidal_full(m, s);
  expect_all_pass(r);
  CHECK(r.laws.size() >= 15);
}

TEST_CASE("span(+) monoidal data passes the full suite") {
  MonoidalBicat m = span_monoidal(setmon_coproduct());
  Sample s;
  s.obj_cap = 2;
  s.one_cap = 2;
  s.pair_cap = 12;
  Report r = check_monoidal_full(m, s);
  expect_all_pass(r);
}

TEST_CASE("breaking rmod components fails exactly the rmod condition") {
  MonoidalBicat m = span_monoidal(setmon_product());
  // Replace the rmod component with an identity-shaped cell of the wrong
  // boundary; the modification condition must fail (or error), nothing else.
  Modif& bad = m.env->mods["rmod"];
  auto good = bad.component;
  bad.component = [good](const std::vector<Cell>& objs) {
    Iso2 ok = good(objs);
    return Iso2{ok.bwd, ok.fwd}; // reversed direction
  };
  Sample s;
  s.obj_cap = 2; // size-1 carriers collapse too much to see the mutation
  s.one_cap = 4;
  s.pair_cap = 64;
  Paste p(m.E());
  bool rmod_failed = false;
  for (const FamilyMod& fm : monoidal_modifications(m)) {
    Report r = check_family_mod(p, fm, s, "mut");
    for (const auto& law : r.laws) {
      if (law.law.rfind("rmod", 0) == 0) {
        if (law.status != LawStatus::Pass) rmod_failed = true;
      } else {
        INFO(law.law, " -> ", law.counterexample);
        CHECK(law.status == LawStatus::Pass);
      }
    }
  }
  CHECK(rmod_failed);
}
