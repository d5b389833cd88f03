#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bicatkit/cell.hpp"
#include "bicatkit/finset.hpp"
#include "bicatkit/report.hpp"

namespace bk {

// An invertible 2-cell carried together with its inverse, so structural data
// never needs an inverse search.
struct Iso2 {
  Cell fwd;
  Cell bwd;
  Iso2 reversed() const { return Iso2{bwd, fwd}; }
};

// Sampling caps for law enumeration. Enumerators are exhaustive up to these
// caps; the caps themselves are recorded in every report row.
struct Sample {
  int obj_cap = 2;    // object generation depth / set size cap
  int one_cap = 4;    // 1-cells kept per hom a law quantifies over
  int two_cap = 16;   // 2-cells kept per parallel pair
  int pair_cap = 400; // max tuples per law; 0 means unbounded

  std::string str() const;
};

// A computable bicategory: concrete value domains behind `Cell`, composition
// and structural data as pure procedures, and exhaustive enumeration up to a
// cap. 2-cell equality is decidable via cell keys.
//
// Composition order: comp1(f, g) is "f after g" for g : A -> B, f : B -> C.
// Vertical composition vcomp(t, s) is "t after s"; horizontal composition
// hcomp(t, s) runs s on the inner (first) hom, t on the outer.
struct Bicat {
  std::string name;

  std::function<Cell(const Cell&)> dom1, cod1; // boundaries of a 1-cell
  std::function<Cell(const Cell&)> src2, dst2; // boundaries of a 2-cell

  std::function<Cell(const Cell&)> id1;
  std::function<Cell(const Cell&, const Cell&)> comp1;
  std::function<Cell(const Cell&)> id2;
  std::function<Cell(const Cell&, const Cell&)> vcomp;
  std::function<Cell(const Cell&, const Cell&)> hcomp;

  std::function<Iso2(const Cell&, const Cell&, const Cell&)> assoc; // (f.g).h => f.(g.h)
  std::function<Iso2(const Cell&)> lunit;                           // Id.f => f
  std::function<Iso2(const Cell&)> runit;                           // f.Id => f

  std::function<std::vector<Cell>(int obj_cap)> objects;
  std::function<std::vector<Cell>(const Cell&, const Cell&, int one_cap)> ones;
  std::function<std::vector<Cell>(const Cell&, const Cell&)> twos;

  // Optional fast 2-cell inversion; falls back to an exhaustive hom search.
  std::function<std::optional<Cell>(const Cell&)> inv2_hook;

  bool eq2(const Cell& a, const Cell& b) const { return a == b; }
  Cell whisk_l(const Cell& f, const Cell& t) const { return hcomp(id2(f), t); }
  Cell whisk_r(const Cell& t, const Cell& g) const { return hcomp(t, id2(g)); }
  std::optional<Cell> inv2(const Cell& t) const;
  Cell inv2_or_throw(const Cell& t) const;
};

// Hom-category laws, interchange, naturality of the structural cells,
// triangle and pentagon, checked exhaustively over the sample.
Report check_bicategory(const Bicat& b, const Sample& s, const std::string& suite = "bicat");

// The product bicategory B x C, with cells formed componentwise.
Bicat product_bicat(const Bicat& b, const Bicat& c);

Cell pair_cell(const Cell& a, const Cell& b);
std::pair<Cell, Cell> unpair_cell(const Cell& p);

} // namespace bk
