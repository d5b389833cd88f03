#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicatkit/fincat.hpp"

using namespace bk;

namespace {
void expect_all_pass(const Report& r) {
  for (const auto& law : r.laws) {
    INFO(law.suite, "/", law.law, " -> ", law.counterexample.substr(0, 300));
    CHECK(law.status == LawStatus::Pass);
  }
}
} // namespace

TEST_CASE("tiny categories are well-formed and strict") {
  std::string why;
  CHECK(terminal_cat().well_formed(&why));
  CHECK(walking_arrow().well_formed(&why));
  CHECK(discrete_cat(monoid_z2()).well_formed(&why));
  FinCatData p = product_cat(walking_arrow(), discrete_cat(monoid_z2()));
  CHECK(p.well_formed(&why));
  CHECK(p.objs.size() == 4);
}

TEST_CASE("the 2-category of finite categories satisfies the bicategory laws") {
  Bicat b = fincat_bicat();
  Sample s;
  s.obj_cap = 2;
  s.one_cap = 3;
  s.pair_cap = 150;
  expect_all_pass(check_bicategory(b, s, "fincat"));

  // strictness: the structural cells are identities
  auto objs = b.objects(2);
  Cell f = b.ones(objs[1], objs[1], 3)[0];
  Iso2 a = b.assoc(f, f, f);
  CHECK(a.fwd == b.id2(b.comp1(b.comp1(f, f), f)));
}

TEST_CASE("the cartesian monoidal structure is strict and valid") {
  MonoidalBicat m = fincat_monoidal();
  Sample s;
  s.obj_cap = 2;
  s.one_cap = 2;
  s.pair_cap = 24;
  Report r = check_monoidal_full(m, s, "fincat-mon");
  expect_all_pass(r);
}

TEST_CASE("writer pseudomonad on finite categories validates with identities") {
  MonoidalBicat m = fincat_monoidal();
  PseudomonadBundle t = fincat_writer(m, monoid_z2());
  Sample s;
  s.obj_cap = 2;
  s.one_cap = 2;
  s.pair_cap = 24;
  Paste p(m.E());
  expect_all_pass(check_pseudomonad(p, t, s, "fincat-writer"));

  // T(1) for the z2 writer is the 2-object discrete category
  Cell one = fincat_obj(terminal_cat());
  Cell T1 = m.E().fun("T").on_obj({one});
  CHECK(fincat_obj_of(T1).objs.size() == 2);
  // eta pseudonaturality cells are identities (strict host)
  Cell f = m.B().ones(one, one, 1)[0];
  Iso2 cell = m.E().nat("eta").cell({f});
  CHECK(cell.fwd == cell.bwd);
}

TEST_CASE("the canonical strength passes both strength suites") {
  MonoidalBicat m = fincat_monoidal();
  PseudomonadBundle t = fincat_writer(m, monoid_z2());
  StrengthBundle s = fincat_canonical_strength(m, t, monoid_z2());
  Sample smp;
  smp.obj_cap = 2;
  smp.one_cap = 2;
  smp.pair_cap = 12;
  expect_all_pass(check_strong_pseudofunctor(m, t.T, s, smp, "fincat-fig2"));
  expect_all_pass(check_strength_monad_axioms(m, t, s, smp, "fincat-fig3"));
}
