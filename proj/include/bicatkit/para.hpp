#pragma once

#include "bicatkit/cat.hpp"
#include "bicatkit/checkers.hpp"
#include "bicatkit/monoidal.hpp"
#include "bicatkit/strength.hpp"

namespace bk {

// Parametrized morphisms over a monoidal category C: a 1-cell A -> B is a
// parameter object P with a C-morphism P (x) A -> B; 2-cells are
// reparametrizations. Weak associativity and identities come from C's
// structural isomorphisms acting on parameters.
struct ParaArr {
  Cell dom, cod;  // C-objects
  Cell param;     // C-object
  Cell mor;       // C-morphism param (x) dom -> cod
};

struct ParaMap {
  ParaArr src, dst;
  Cell rep; // C-morphism src.param -> dst.param with dst.mor . (rep (x) dom) = src.mor
};

struct ParaWorld {
  std::shared_ptr<MonCat> C;
  MonoidalBicat mb; // host bicategory + tensor structure (when C symmetric)

  const Bicat& B() const { return mb.B(); }
  Env& E() { return mb.E(); }
  const Env& E() const { return mb.E(); }
};

Cell para_arr(const MonCat& c, ParaArr a);
Cell para_map(const MonCat& c, const ParaArr& src, const ParaArr& dst, const Cell& rep);
const ParaArr& para_arr_of(const Cell& c);
const ParaMap& para_map_of(const Cell& c);

// The parameter-I 1-cell of a plain C-morphism.
ParaArr para_of_mor(const MonCat& c, const Cell& mor);

Bicat para_bicat(std::shared_ptr<MonCat> c);

// Para with its symmetric monoidal structure; requires c->symmetric.
ParaWorld para_world(std::shared_ptr<MonCat> c);

// Registers the pseudomonad induced by a strong monad on C into the world's
// environment under the standard names (T, eta, mu, mmon, nmon, pmon).
PseudomonadBundle para_pseudomonad(ParaWorld& w, const StrongMonad& t);

// Registers the induced strength (the parameter-I lift of the categorical
// strength) for a pseudomonad previously registered via para_pseudomonad.
StrengthBundle para_strength(ParaWorld& w, const StrongMonad& t);

// The parameter word of a composite 1-cell expression (tensor pairs split,
// endofunctor applications inherit, structural components contribute units).
WordP para_param_word(const MonCat& c, const OneP& e);

} // namespace bk
