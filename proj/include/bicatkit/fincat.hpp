#pragma once

#include "bicatkit/cat.hpp"
#include "bicatkit/checkers.hpp"
#include "bicatkit/monoidal.hpp"
#include "bicatkit/strength.hpp"

namespace bk {

// A finite category with explicit composition tables. Objects and morphisms
// are labels; the first |objects| morphisms are the identities.
struct FinCatData {
  std::string name;
  Labels objs;
  Labels mors;
  std::vector<size_t> mdom, mcod;
  std::vector<std::vector<int>> table; // table[g][f] = g . f, or -1 if not composable

  size_t id_of(size_t obj) const { return obj; } // identities come first
  bool well_formed(std::string* why = nullptr) const;
};

FinCatData terminal_cat();
FinCatData walking_arrow();                 // two objects, one nonidentity arrow
FinCatData discrete_cat(const Monoid& m);   // discrete category on the carrier
FinCatData product_cat(const FinCatData& a, const FinCatData& b);

// A functor between finite categories, as explicit maps.
struct FunctorData {
  FinCatData dom, cod;
  std::vector<size_t> obj_map;
  std::vector<size_t> mor_map;
};

// A natural transformation as a component table (one morphism per object).
struct NatData {
  FunctorData src, dst;
  std::vector<size_t> comps;
};

Cell fincat_obj(const FinCatData& c);
Cell fincat_fun(FunctorData f);
Cell fincat_nat(const FunctorData& src, const FunctorData& dst, std::vector<size_t> comps);
const FinCatData& fincat_obj_of(const Cell& c);
const FunctorData& fincat_fun_of(const Cell& c);
const NatData& fincat_nat_of(const Cell& c);

// The strict 2-category of finite categories, functors, and natural
// transformations; the object sample is a fixed list of tiny categories.
Bicat fincat_bicat();

// Cartesian monoidal structure (x, terminal); the structural data is strict
// up to the relabeling functors.
MonoidalBicat fincat_monoidal();

// The writer pseudomonad (-) x C for a monoid's discrete category,
// registered under the standard names.
PseudomonadBundle fincat_writer(MonoidalBicat& m, const Monoid& mon);

// The canonical strength of any pseudomonad on this instance: on objects
// (a, w) |-> T(b |-> (a,b))(w); for the writer this is the evident
// reassociation, and all four modifications are identities.
StrengthBundle fincat_canonical_strength(MonoidalBicat& m, const PseudomonadBundle& t,
                                         const Monoid& mon);

} // namespace bk
