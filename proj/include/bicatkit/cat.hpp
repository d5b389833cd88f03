#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicatkit/cell.hpp"
#include "bicatkit/finset.hpp"
#include "bicatkit/report.hpp"

namespace bk {

// A finite monoid over labeled elements, with an explicit multiplication
// table.
struct Monoid {
  std::string name;
  FinSet carrier;
  size_t unit = 0;                        // index into carrier
  std::vector<std::vector<size_t>> table; // table[i][j] = i * j

  Label unit_label() const { return carrier.at(unit); }
  Label mult(const Label& a, const Label& b) const;
  bool commutative() const;
  bool well_formed(std::string* why = nullptr) const;
};

Monoid monoid_z2();            // {0,1} under xor
Monoid monoid_max01();         // {0,1} under max
Monoid monoid_right_zero3();   // unit plus a right-zero pair: x*y = y for y != e
std::vector<Monoid> all_monoids(size_t max_size); // every unital table, size <= n

// A computably-presented category: objects enumerable to a depth cap,
// morphisms enumerable per hom. Morphism composition is comp(f, g) = f after
// g, matching Bicat::comp1.
struct Cat {
  std::string name;
  std::function<std::vector<Cell>(int cap)> objects;
  std::function<std::vector<Cell>(const Cell&, const Cell&)> hom;
  std::function<Cell(const Cell&)> id;
  std::function<Cell(const Cell&, const Cell&)> comp;
  std::function<Cell(const Cell&)> mdom, mcod;
};

struct MonCat {
  Cat cat;
  Cell unit;
  std::function<Cell(const Cell&, const Cell&)> ten_obj;
  std::function<Cell(const Cell&, const Cell&)> ten_mor;
  // Structural isomorphisms, with explicit inverses.
  std::function<Cell(const Cell&, const Cell&, const Cell&)> alpha, alpha_inv;
  std::function<Cell(const Cell&)> lam, lam_inv, rho, rho_inv;
  bool symmetric = false;
  std::function<Cell(const Cell&, const Cell&)> braid, braid_inv;
};

// The category of finite sets presented by an object grammar: atoms name the
// base sets, "I" is a fixed singleton, and tensor trees are interpreted by
// the cartesian product. Tensor trees are distinct objects, so the
// structural isomorphisms are honest non-identity bijections.
struct FinSetHost {
  MonCat mc;
  std::function<FinSet(const Cell&)> interp;          // object cell -> carrier
  std::function<Cell(const Cell&, const Cell&, const FinFn&)> mor; // typed morphism
  std::function<const FinFn&(const Cell&)> fn_of;     // morphism cell -> function
};

FinSetHost finset_host(const std::map<std::string, FinSet>& bases);

// The discrete (symmetric, strict) monoidal category of a commutative
// monoid: objects are the elements, only identity morphisms.
MonCat discrete_moncat(const Monoid& m);

// Endofunctors, natural transformations, and strong monads on a MonCat.
struct EndoFun {
  std::string name;
  std::function<Cell(const Cell&)> on_obj;
  std::function<Cell(const Cell&)> on_mor;
};

struct StrongMonad {
  std::string name;
  EndoFun T;
  std::function<Cell(const Cell&)> eta, mu;               // components per object
  std::function<Cell(const Cell&, const Cell&)> strength; // t_{A,B} : A (x) TB -> T(A (x) B)
};

// The writer monad X |-> X (x) M on a FinSet host that has a base set "M"
// interpreting the monoid carrier.
StrongMonad writer_monad(const FinSetHost& host, const Monoid& m);

// Tensor words over objects of a MonCat, used to build canonical structural
// isomorphisms between differently bracketed parameter objects.
struct ObjWord;
using WordP = std::shared_ptr<const ObjWord>;
struct ObjWord {
  enum class K { Leaf, Unit, Ten };
  K k = K::Unit;
  Cell leaf;
  WordP l, r;
};
WordP w_leaf(const Cell& obj);
WordP w_unit();
WordP w_ten(WordP a, WordP b);

Cell w_eval(const MonCat& c, const WordP& w);

// The canonical structural isomorphism (fwd, bwd) between two words with the
// same sequence of non-unit leaves, assembled from alpha/lam/rho moves.
std::pair<Cell, Cell> mc_coherence(const MonCat& c, const WordP& from, const WordP& to);

// Validation caps for 1-categorical law suites.
struct CatSample {
  int obj_cap = 2;   // object grammar depth
  int mor_cap = 24;  // morphisms per hom
  int tuple_cap = 2000;
  std::string str() const;
};

Report validate_moncat(const MonCat& c, const CatSample& s, const std::string& suite = "moncat");
Report validate_strong_monad(const MonCat& c, const StrongMonad& t, const CatSample& s,
                             const std::string& suite = "strong-monad");

} // namespace bk
