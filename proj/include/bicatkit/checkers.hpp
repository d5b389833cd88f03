#pragma once

#include "bicatkit/family.hpp"
#include "bicatkit/monoidal.hpp"

namespace bk {

// Pseudofunctor laws for a registered functor whose source is the host (or a
// power of it, per its arity): compositor naturality, the associativity
// axiom, and the two unit axioms.
Report check_pseudofunctor(const Paste& p, const std::string& fun, const Sample& s,
                           const std::string& suite);

// Pseudonaturality laws of a registered transformation.
Report check_psnat(const Paste& p, const std::string& nat, const Sample& s,
                   const std::string& suite);

// Named pseudomonad data in an environment.
struct PseudomonadBundle {
  std::string T = "T";
  std::string eta = "eta";
  std::string mu = "mu";
  std::string m = "mmon"; // mu . T mu  => mu . mu_T
  std::string n = "nmon"; // mu . eta_T => Id
  std::string p = "pmon"; // mu . T eta => Id
};

// Boundaries and modification conditions for m, n, p plus the two pseudomonad
// coherence axioms.
Report check_pseudomonad(const Paste& p, const PseudomonadBundle& t, const Sample& s,
                         const std::string& suite);

// Modification-condition data for m, n, p, exposed for mutation tests.
std::vector<FamilyMod> pseudomonad_modifications(const Paste& p, const PseudomonadBundle& t);

// Full monoidal data suite: tensor pseudofunctor laws plus the structural
// suite from check_monoidal_bicat.
Report check_monoidal_full(const MonoidalBicat& m, const Sample& s,
                           const std::string& suite = "monoidal");

} // namespace bk
