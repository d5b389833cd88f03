#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicatkit/action.hpp"
#include "bicatkit/para.hpp"

using namespace bk;

namespace {

struct Fixture {
  std::shared_ptr<MonCat> host;
  ParaWorld w{};
  StrongMonad monad;
  PseudomonadBundle t;
  StrengthBundle s;
  KleisliWorld kw;

  static Fixture make(const Monoid& m) {
    FinSetHost hf = finset_host({{"X", FinSet::of({"x0", "x1"})}, {"M", m.carrier}});
    Fixture fx;
    fx.host = std::make_shared<MonCat>(hf.mc);
    fx.monad = writer_monad(hf, m);
    fx.w = para_world(fx.host);
    fx.t = para_pseudomonad(fx.w, fx.monad);
    fx.s = para_strength(fx.w, fx.monad);
    fx.kw = kleisli_world(fx.w.mb.host, fx.w.mb.env, fx.t);
    return fx;
  }
};

void expect_all_pass(const Report& r) {
  for (const auto& law : r.laws) {
    INFO(law.suite, "/", law.law, " -> ", law.counterexample.substr(0, 400));
    CHECK(law.status == LawStatus::Pass);
  }
}

Sample small() {
  Sample s;
  s.obj_cap = 1;
  s.one_cap = 2;
  s.pair_cap = 10;
  return s;
}

} // namespace

TEST_CASE("the induced action passes the action suite") {
  Fixture fx = Fixture::make(monoid_max01());
  ActionOnKleisli a = action_from_strength(fx.w.mb, fx.kw, fx.t, fx.s);
  Report r = check_action(fx.w.mb, fx.kw, a, small());
  expect_all_pass(r);
  CHECK(r.laws.size() >= 8);
}

TEST_CASE("the induced action is an extension of the tensor") {
  Fixture fx = Fixture::make(monoid_max01());
  ActionOnKleisli a = action_from_strength(fx.w.mb, fx.kw, fx.t, fx.s);
  Report r = check_extension(fx.w.mb, fx.kw, a, small());
  expect_all_pass(r);
}

TEST_CASE("round trips produce commuting comparisons") {
  Fixture fx = Fixture::make(monoid_max01());
  Report r = roundtrip_check(fx.w.mb, fx.kw, fx.t, fx.s, small());
  expect_all_pass(r);
  CHECK(r.find("roundtrip/strength-components") != nullptr);
}

TEST_CASE("mutating z breaks the designated action law") {
  // Table row: z-side mutation manifests in the unitor-side laws.
  Fixture fx = Fixture::make(monoid_max01());
  Modif& z = fx.w.E().mods["sz"];
  auto good = z.component;
  z.component = [good](const std::vector<Cell>& o) { return iso_rev(good(o)); };
  ActionOnKleisli a = action_from_strength(fx.w.mb, fx.kw, fx.t, fx.s);
  bool failed = false;
  try {
    Report r = check_action(fx.w.mb, fx.kw, a, small());
    for (const auto& law : r.laws)
      if (law.status != LawStatus::Pass) failed = true;
  } catch (const std::exception&) {
    failed = true;
  }
  CHECK(failed);
}
