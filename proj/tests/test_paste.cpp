#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicatkit/monoidal.hpp"

using namespace bk;

namespace {

struct Fix {
  MonoidalBicat m = span_monoidal(setmon_product());
  Paste p{m.E()};
  Cell A = span_obj(FinSet::of({"a0", "a1"}));
  Cell B = span_obj(FinSet::of({"b0"}));
  Cell C = span_obj(FinSet::of({"c0", "c1"}));

  Cell sp(const Cell& x, const Cell& y, int i) {
    auto fs = m.B().ones(x, y, 64);
    REQUIRE(!fs.empty());
    return fs[i % fs.size()];
  }
};

} // namespace

TEST_CASE("coherence fills rebracket composites") {
  Fix fx;
  Cell f = fx.sp(fx.B, fx.C, 5);
  Cell g = fx.sp(fx.A, fx.B, 2);
  Cell h = fx.sp(fx.C, fx.A, 4);
  OneP ef = onecell(f), eg = onecell(g), eh = onecell(h);
  // ((h . f) . g) versus (h . (f . g))
  OneP lhs = ocomp(ocomp(eh, ef), eg);
  OneP rhs = ocomp(eh, ocomp(ef, eg));
  Iso2 fill = fx.p.coherence(lhs, rhs);
  CHECK(fx.m.B().src2(fill.fwd) == fx.p.eval_one(lhs));
  CHECK(fx.m.B().dst2(fill.fwd) == fx.p.eval_one(rhs));
  CHECK(fx.m.B().vcomp(fill.bwd, fill.fwd) == fx.m.B().id2(fx.p.eval_one(lhs)));

  // identity erasure
  OneP noisy = ocomp(ocomp(eh, oid(ob(fx.C))), ocomp(ef, ocomp(eg, oid(ob(fx.A)))));
  Iso2 fill2 = fx.p.coherence(noisy, lhs);
  CHECK(fx.m.B().vcomp(fill2.bwd, fill2.fwd) == fx.m.B().id2(fx.p.eval_one(noisy)));

  // same source and target: identity
  Iso2 refl = fx.p.coherence(lhs, lhs);
  CHECK(refl.fwd == fx.m.B().id2(fx.p.eval_one(lhs)));

  // unrelated composites are rejected
  Cell g2 = fx.sp(fx.A, fx.B, 3);
  REQUIRE(g2 != g);
  CHECK_THROWS_AS(fx.p.coherence(lhs, ocomp(eh, ocomp(ef, onecell(g2)))), NotCoherentlyRelated);
}

TEST_CASE("coherence fuses tensor applications through the compositor") {
  Fix fx;
  Cell f = fx.sp(fx.A, fx.B, 3);
  Cell f2 = fx.sp(fx.B, fx.A, 2);
  Cell g = fx.sp(fx.C, fx.C, 7);
  Cell g2 = fx.sp(fx.C, fx.C, 9);
  OneP lhs = ocomp(oapp("ten", {onecell(f2), onecell(g2)}), oapp("ten", {onecell(f), onecell(g)}));
  OneP rhs = oapp("ten", {ocomp(onecell(f2), onecell(f)), ocomp(onecell(g2), onecell(g))});
  Iso2 fill = fx.p.coherence(lhs, rhs);
  CHECK(fx.m.B().src2(fill.fwd) == fx.p.eval_one(lhs));
  CHECK(fx.m.B().dst2(fill.fwd) == fx.p.eval_one(rhs));
  CHECK(fx.m.B().vcomp(fill.fwd, fill.bwd) == fx.m.B().id2(fx.p.eval_one(rhs)));

  // mixed: Id slots fuse too
  OneP l2 = ocomp(oapp("ten", {oid(ob(fx.B)), onecell(g2)}),
                  oapp("ten", {oid(ob(fx.B)), onecell(g)}));
  OneP r2 = oapp("ten", {oid(ob(fx.B)), ocomp(onecell(g2), onecell(g))});
  Iso2 fill2 = fx.p.coherence(l2, r2);
  CHECK(fx.m.B().vcomp(fill2.bwd, fill2.fwd) == fx.m.B().id2(fx.p.eval_one(l2)));
}

TEST_CASE("vertical pasting inserts fills automatically") {
  Fix fx;
  Cell f = fx.sp(fx.A, fx.B, 5);
  Cell g = fx.sp(fx.B, fx.C, 3);
  Cell h = fx.sp(fx.C, fx.A, 2);
  OneP ef = onecell(f), eg = onecell(g), eh = onecell(h);
  // associator then inverse associator through differently bracketed middles
  TwoP round = tvert({tassoc(eh, eg, ef), tassoc(eh, eg, ef, true)});
  Cell val = fx.p.eval(round);
  Cell src = fx.p.eval_one(ocomp(ocomp(eh, eg), ef));
  CHECK(val == fx.m.B().id2(src));
}

TEST_CASE("structural pseudonaturality cells check out") {
  Fix fx;
  Sample s;
  s.obj_cap = 2;
  s.one_cap = 3;
  s.pair_cap = 24;
  for (const std::string& nat : {"alpha", "lam", "rho", "beta"}) {
    Report r = check_family(fx.p, nf_named(fx.m.E(), nat), s, "test", nat);
    for (const auto& law : r.laws) {
      INFO(law.law, " -> ", law.counterexample);
      CHECK(law.status == LawStatus::Pass);
    }
  }
}

TEST_CASE("monoidal modification conditions hold for span(x)") {
  Fix fx;
  Sample s;
  s.obj_cap = 1; // keep the 4-argument pentagon family tractable
  s.one_cap = 3;
  s.pair_cap = 10;
  for (const FamilyMod& fm : monoidal_modifications(fx.m)) {
    Report r = check_family_mod(fx.p, fm, s, "test");
    for (const auto& law : r.laws) {
      INFO(law.law, " -> ", law.counterexample);
      CHECK(law.status == LawStatus::Pass);
    }
  }
}

TEST_CASE("boundary computation stays symbolic") {
  Fix fx;
  Cell f = fx.sp(fx.A, fx.B, 5);
  TwoP cell = tnat("lam", {onecell(f)});
  auto bd = fx.p.boundary(cell);
  // lam_B . (Id_I ten f)  =>  f . lam_A
  Cell src = fx.p.eval_one(bd.first);
  Cell dst = fx.p.eval_one(bd.second);
  Cell got = fx.p.eval(cell);
  CHECK(fx.m.B().src2(got) == src);
  CHECK(fx.m.B().dst2(got) == dst);
}
