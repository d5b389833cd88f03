#pragma once

#include "bicatkit/checkers.hpp"

namespace bk {

// The Kleisli bicategory of a pseudomonad: same objects, hom(A,B) is the
// base hom(A, TB), identity eta_A, composite mu . T g . f. Structural cells
// are assembled from the pseudomonad data via the pasting evaluator.
struct KlArr {
  Cell base; // base 1-cell A -> TB
  Cell dom, cod;
};

struct KlMap {
  KlArr src, dst;
  Cell base; // base 2-cell between the underlying 1-cells
};

struct KleisliWorld {
  std::shared_ptr<Bicat> bicat;    // the Kleisli instance
  std::shared_ptr<Bicat> base;     // kept alive for the environment
  std::shared_ptr<Env> base_env;   // environment of the base instance
  PseudomonadBundle monad;
};

Cell kl_arr(const Env& base_env, const PseudomonadBundle& t, Cell base_one, Cell dom, Cell cod);
Cell kl_map(const Bicat& base, const KlArr& src, const KlArr& dst, Cell base_two);
const KlArr& kl_arr_of(const Cell& c);
const KlMap& kl_map_of(const Cell& c);

// The identity-on-objects pseudofunctor image of a base 1-cell: eta . f.
Cell kl_pure(const KleisliWorld& w, const Cell& base_one);

KleisliWorld kleisli_world(std::shared_ptr<Bicat> base, std::shared_ptr<Env> base_env,
                           PseudomonadBundle t);

} // namespace bk
