#pragma once

#include "bicatkit/checkers.hpp"

namespace bk {

// Names of the registered left-strength data for a pseudomonad (T, eta, mu)
// on a monoidal host. Component shapes:
//   t  ("str"): A (x) TB -> T(A (x) B)                       (arity 2)
//   x  ("sx") : T(lam_B) . t_{I,B}          => lam_{TB}       (arity 1)
//   y  ("sy") : t . (A (x) t) . alpha       => T(alpha) . t   (arity 3)
//   w  ("sw") : mu . T(t) . t               => t . (A (x) mu) (arity 2)
//   z  ("sz") : t . (A (x) eta)             => eta            (arity 2)
struct StrengthBundle {
  std::string t = "str";
  std::string x = "sx";
  std::string y = "sy";
  std::string w = "sw";
  std::string z = "sz";
};

// Mirror data for a right strength s : TA (x) B -> T(A (x) B), with the
// compatibility cell b relating the two; component shapes:
//   b ("bst"): T(alpha) . s . (t (x) C)  =>  t . (A (x) s) . alpha  (arity 3)
struct BistrongBundle {
  StrengthBundle left;
  StrengthBundle right{"str2", "sx2", "sy2", "sw2", "sz2"};
  std::string b = "bst";
};

// The three compatibility axioms of a strong pseudofunctor (unit-left,
// unit-outer, and the pentagon cylinder).
Report check_strong_pseudofunctor(const MonoidalBicat& m, const std::string& T,
                                  const StrengthBundle& s, const Sample& smp,
                                  const std::string& suite);

// The full suite for a strong pseudomonad: pseudofunctor compatibility plus
// the seven axioms tying the strength to eta and mu.
Report check_strong_pseudomonad(const MonoidalBicat& m, const PseudomonadBundle& t,
                                const StrengthBundle& s, const Sample& smp,
                                const std::string& suite);

// Only the seven pseudomonad-compatibility axioms (three monad-structure
// rows, two x-rows, two y-rows), exposed for mutation tests.
Report check_strength_monad_axioms(const MonoidalBicat& m, const PseudomonadBundle& t,
                                   const StrengthBundle& s, const Sample& smp,
                                   const std::string& suite);

// The two bistrong axioms plus the boundary of b.
Report check_bistrong(const MonoidalBicat& m, const PseudomonadBundle& t,
                      const BistrongBundle& bs, const Sample& smp, const std::string& suite);

// Constructs the right strength from the left one through the braiding
//   s = T(beta) . t . beta
// and registers right-side data plus the compatibility cell b.
BistrongBundle right_strength_from_symmetry(MonoidalBicat& m, const PseudomonadBundle& t,
                                            const StrengthBundle& s);

// Registers the x/y/w/z modifications for an already-registered strength
// transformation, using the instance's canonical-cell factory.
void register_strength_mods(MonoidalBicat& m, const PseudomonadBundle& t,
                            const StrengthBundle& s);

} // namespace bk
