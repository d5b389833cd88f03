#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicatkit/para.hpp"

using namespace bk;

namespace {

std::shared_ptr<MonCat> z2_host() {
  return std::make_shared<MonCat>(discrete_moncat(monoid_z2()));
}

std::shared_ptr<MonCat> fin_host() {
  return std::make_shared<MonCat>(
      finset_host({{"X", FinSet::of({"x0", "x1"})}, {"M", FinSet::of({"0", "1"})}}).mc);
}

void expect_all_pass(const Report& r) {
  for (const auto& law : r.laws) {
    INFO(law.suite, "/", law.law, " -> ", law.counterexample);
    CHECK(law.status == LawStatus::Pass);
  }
}

} // namespace

TEST_CASE("host categories validate") {
  CatSample s;
  s.obj_cap = 2;
  s.mor_cap = 6;
  s.tuple_cap = 400;
  expect_all_pass(validate_moncat(*z2_host(), s));
  expect_all_pass(validate_moncat(*fin_host(), s));
}

TEST_CASE("a broken unitor family fails naturality") {
  auto host = fin_host();
  MonCat bad = *host;
  auto good = bad.lam;
  // constant family: reuse lam at a fixed object shape, breaking naturality
  bad.lam = [&bad, good](const Cell& a) {
    // swap through the braid to break the triangle/naturality pattern
    return bad.cat.comp(good(a), bad.braid(a, bad.unit));
  };
  CatSample s;
  s.obj_cap = 2;
  s.mor_cap = 4;
  Report r = validate_moncat(bad, s);
  bool failed = false;
  for (const auto& law : r.laws)
    if (law.status != LawStatus::Pass) failed = true;
  CHECK(failed);
}

TEST_CASE("writer strong monad validates on the finset host") {
  auto hostfull = finset_host({{"X", FinSet::of({"x0", "x1"})}, {"M", FinSet::of({"0", "1"})}});
  StrongMonad t = writer_monad(hostfull, monoid_max01());
  CatSample s;
  s.obj_cap = 2;
  s.mor_cap = 5;
  expect_all_pass(validate_strong_monad(hostfull.mc, t, s));
}

TEST_CASE("twisted strength fails the strength-mu axiom") {
  auto hostfull = finset_host({{"X", FinSet::of({"x0", "x1"})}, {"M", FinSet::of({"0", "1"})}});
  StrongMonad t = writer_monad(hostfull, monoid_z2());
  auto good = t.strength;
  MonCat c = hostfull.mc;
  // precompose with a nonidentity twist on the monoid component
  auto interp = hostfull.interp;
  auto mor = hostfull.mor;
  t.strength = [good, c, interp, mor](const Cell& a, const Cell& b) {
    Cell s = good(a, b);
    Cell dom = c.cat.mdom(s);
    FinFn twist = FinFn::from_map(interp(dom), interp(dom), [](const Label& x) {
      // flip the monoid bit inside T's argument
      const Label& m = x.second().second();
      Label flipped = Label::atom(m.str() == "0" ? "1" : "0");
      return Label::pair(x.first(), Label::pair(x.second().first(), flipped));
    });
    return c.cat.comp(s, mor(dom, dom, twist));
  };
  CatSample s;
  s.obj_cap = 2;
  s.mor_cap = 4;
  Report r = validate_strong_monad(hostfull.mc, t, s);
  const LawResult* mu = r.find("strength/mu");
  REQUIRE(mu != nullptr);
  CHECK(mu->status == LawStatus::Fail);
}

TEST_CASE("word coherence produces valid structural isomorphisms") {
  auto host = fin_host();
  Cell X = Cell::make("ob:X", Label::atom("X"));
  WordP from = w_ten(w_ten(w_unit(), w_leaf(X)), w_ten(w_leaf(X), w_unit()));
  WordP to = w_ten(w_leaf(X), w_ten(w_unit(), w_ten(w_leaf(X), w_unit())));
  auto [fwd, bwd] = mc_coherence(*host, from, to);
  CHECK(host->cat.mdom(fwd) == w_eval(*host, from));
  CHECK(host->cat.mcod(fwd) == w_eval(*host, to));
  CHECK(host->cat.comp(bwd, fwd) == host->cat.id(w_eval(*host, from)));
}

TEST_CASE("para over z2 is a (strict-ish) bicategory") {
  Bicat b = para_bicat(z2_host());
  Sample s;
  s.obj_cap = 2;
  s.one_cap = 4;
  s.pair_cap = 200;
  expect_all_pass(check_bicategory(b, s));
}

TEST_CASE("para over finsets is a bicategory with honest weak structure") {
  auto host = fin_host();
  Bicat b = para_bicat(host);
  Sample s;
  s.obj_cap = 1;
  s.one_cap = 3;
  s.pair_cap = 120;
  expect_all_pass(check_bicategory(b, s));

  // parameters of the two triple composites differ as objects
  auto objs = b.objects(1);
  Cell X;
  for (const Cell& o : objs)
    if (o.key() == "ob:X") X = o;
  REQUIRE(X.valid());
  auto fs = b.ones(X, X, 40);
  Cell f, g, h;
  for (const Cell& c : fs)
    if (para_arr_of(c).param.key() == "ob:X") {
      f = c;
      break;
    }
  REQUIRE(f.valid());
  g = f;
  h = f;
  Cell lhs = b.comp1(b.comp1(f, g), h);
  Cell rhs = b.comp1(f, b.comp1(g, h));
  CHECK(para_arr_of(lhs).param != para_arr_of(rhs).param);
  CHECK(lhs != rhs);
  Iso2 a = b.assoc(f, g, h);
  CHECK(b.src2(a.fwd) == lhs);
  CHECK(b.dst2(a.fwd) == rhs);
}

TEST_CASE("para monoidal structure passes the full suite over z2") {
  ParaWorld w = para_world(z2_host());
  Sample s;
  s.obj_cap = 2;
  s.one_cap = 3;
  s.pair_cap = 48;
  expect_all_pass(check_monoidal_full(w.mb, s));
}

TEST_CASE("para monoidal structure passes the full suite over finsets") {
  ParaWorld w = para_world(fin_host());
  Sample s;
  s.obj_cap = 1;
  s.one_cap = 3;
  s.pair_cap = 20;
  expect_all_pass(check_monoidal_full(w.mb, s));
}

TEST_CASE("pure lifted cells form equivalences when invertible") {
  auto host = fin_host();
  ParaWorld w = para_world(host);
  const MonCat& c = *host;
  const Bicat& b = w.B();
  Cell X = Cell::make("ob:X", Label::atom("X"));
  // an invertible C-morphism: the nonidentity permutation of X
  Cell swap;
  for (const Cell& m : c.cat.hom(X, X)) {
    Cell cand = m;
    if (c.cat.comp(cand, cand) == c.cat.id(X) && cand != c.cat.id(X)) {
      swap = cand;
      break;
    }
  }
  REQUIRE(swap.valid());
  Cell fw = para_arr(c, para_of_mor(c, swap));
  Cell bwd = fw; // the swap is its own inverse
  Cell round = b.comp1(fw, bwd);
  // parameter I (x) I, not the identity, but isomorphic to it
  CHECK(round != b.id1(X));
  auto isos = b.twos(round, b.id1(X));
  bool found_invertible = false;
  for (const Cell& t : isos)
    if (b.inv2(t)) found_invertible = true;
  CHECK(found_invertible);
}
