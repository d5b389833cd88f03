#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicatkit/finset.hpp"

using namespace bk;

namespace {

// Brute-force oracle: composite table by elementwise lookup.
FinFn compose_oracle(const FinFn& g, const FinFn& f) {
  return FinFn::from_map(f.dom(), g.cod(), [&](const Label& x) { return g(f(x)); });
}

std::vector<FinSet> small_sets() {
  std::vector<FinSet> out;
  out.push_back(FinSet(Labels{}));
  out.push_back(FinSet::of({"a"}));
  out.push_back(FinSet::of({"a", "b"}));
  out.push_back(FinSet::of({"u", "v", "w"}));
  return out;
}

} // namespace

TEST_CASE("labels round-trip through print/parse") {
  Label v = Label::pair(Label::tag("inl", Label::atom("x")), Label::atom("y2"));
  CHECK(v.str() == "(inl:x,y2)");
  CHECK(Label::parse(v.str()) == v);
  Label nested = Label::pair(v, Label::pair(Label::atom(""), Label::tag("t", v)));
  CHECK(Label::parse(nested.str()) == nested);
  CHECK(Label::atom("x") < Label::pair(Label::atom("a"), Label::atom("a")));
}

TEST_CASE("compose matches identities and singleton forcing") {
  FinSet A = FinSet::of({"a"});
  FinSet B = FinSet::of({"b"});
  FinSet C = FinSet::of({"c"});
  FinFn f(A, B, {0});
  FinFn g(B, C, {0});
  CHECK(compose(FinFn::identity(B), f) == f);
  CHECK(compose(f, FinFn::identity(A)) == f);
  FinFn gf = compose(g, f);
  CHECK(gf == FinFn::constant(A, C, Label::atom("c")));
  CHECK_THROWS_AS(compose(f, g), BoundaryMismatch);
}

TEST_CASE("compose equals the elementwise oracle on all small pairs") {
  for (const FinSet& A : small_sets())
    for (const FinSet& B : small_sets())
      for (const FinSet& C : small_sets()) {
        if (A.size() > 2 || B.size() > 2 || C.size() > 2) continue;
        for (const FinFn& f : all_functions(A, B))
          for (const FinFn& g : all_functions(B, C))
            CHECK(compose(g, f) == compose_oracle(g, f));
      }
}

TEST_CASE("pullback of identity legs is the diagonal") {
  FinSet B = FinSet::of({"a", "b"});
  FinFn id = FinFn::identity(B);
  PullbackResult pb = pullback(id, id);
  REQUIRE(pb.apex.size() == 2);
  CHECK(pb.apex.at(0) == Label::pair(Label::atom("a"), Label::atom("a")));
  CHECK(pb.left.is_bijective());
  CHECK(pb.right.is_bijective());
}

TEST_CASE("pullback of two constants enumerates matching pairs") {
  FinSet S = FinSet::of({"s1", "s2"});
  FinSet R = FinSet::of({"r1"});
  FinSet B = FinSet::of({"b"});
  FinFn f = FinFn::constant(S, B, Label::atom("b"));
  FinFn g = FinFn::constant(R, B, Label::atom("b"));
  PullbackResult pb = pullback(f, g);
  REQUIRE(pb.apex.size() == 2);
  CHECK(pb.apex.at(0).str() == "(s1,r1)");
  CHECK(pb.apex.at(1).str() == "(s2,r1)");
}

TEST_CASE("pulling back along id gives an isomorphic set") {
  FinSet A = FinSet::of({"x", "y", "z"});
  FinSet B = FinSet::of({"0", "1"});
  for (const FinFn& f : all_functions(A, B)) {
    PullbackResult pb = pullback(f, FinFn::identity(B));
    CHECK(pb.left.is_bijective()); // apex = A up to relabeling
    CHECK(pb.apex.size() == A.size());
  }
}

TEST_CASE("pullback universal property, exhaustively on sets of size <= 3") {
  std::vector<FinSet> sets = small_sets();
  for (const FinSet& X : sets)
    for (const FinSet& Y : sets)
      for (const FinSet& B : sets) {
        if (X.size() + Y.size() + B.size() > 6) continue;
        for (const FinFn& f : all_functions(X, B))
          for (const FinFn& g : all_functions(Y, B)) {
            PullbackResult pb = pullback(f, g);
            CHECK(compose(f, pb.left) == compose(g, pb.right));
            // Every cone factors uniquely through the apex.
            FinSet Z = FinSet::of({"z1", "z2"});
            for (const FinFn& h : all_functions(Z, X))
              for (const FinFn& k : all_functions(Z, Y)) {
                if (!(compose(f, h) == compose(g, k))) continue;
                FinFn med = pullback_mediator(pb, h, k);
                CHECK(compose(pb.left, med) == h);
                CHECK(compose(pb.right, med) == k);
                size_t count = 0;
                for (const FinFn& cand : all_functions(Z, pb.apex))
                  if (compose(pb.left, cand) == h && compose(pb.right, cand) == k) ++count;
                CHECK(count == 1);
              }
          }
      }
}

TEST_CASE("product and coproduct shapes") {
  FinSet E;
  FinSet A = FinSet::of({"a1", "a2"});
  FinSet B1 = FinSet::of({"b1"});
  CHECK(product(E, A).object.empty());
  ProductResult p = product(A, B1);
  REQUIRE(p.object.size() == 2);
  CHECK(p.object.at(0).str() == "(a1,b1)");
  CHECK(p.object.at(1).str() == "(a2,b1)");
  CoproductResult c = coproduct(FinSet::of({"a"}), FinSet::of({"b"}));
  REQUIRE(c.object.size() == 2);
  CHECK(c.object.at(0).str() == "inl:a");
  CHECK(c.object.at(1).str() == "inr:b");
}

TEST_CASE("pair and tag label encodings stay injective") {
  // Delimiters are reserved, so the printed grammar is unambiguous.
  CHECK_THROWS_AS(Label::atom("(a"), std::invalid_argument);
  CHECK_THROWS_AS(Label::tag("in:l", Label::atom("x")), std::invalid_argument);
  FinSet A = FinSet::of({"a", "a2"});
  FinSet B = FinSet::of({"b", "b2"});
  ProductResult p = product(A, B);
  CoproductResult c = coproduct(A, B);
  CHECK(p.object.size() == 4);
  for (const Label& x : p.object.elements()) CHECK(Label::parse(x.str()) == x);
  for (const Label& x : c.object.elements()) CHECK(Label::parse(x.str()) == x);
  ProductResult nested = product(p.object, c.object);
  std::vector<std::string> keys;
  for (const Label& x : nested.object.elements()) {
    CHECK(Label::parse(x.str()) == x);
    keys.push_back(x.str());
  }
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}
