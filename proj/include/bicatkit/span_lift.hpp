#pragma once

#include "bicatkit/cat.hpp"
#include "bicatkit/strength.hpp"

namespace bk {

struct NotCartesian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A monad on finite sets given elementwise, used for the span lift.
struct SetMonad {
  std::string name;
  std::function<FinSet(const FinSet&)> on_obj;
  std::function<FinFn(const FinFn&)> on_fn;
  std::function<FinFn(const FinSet&)> eta, mu; // components at each set
};

SetMonad writer_set_monad(const Monoid& m);

// Exhaustive cartesianness check over sample sets: the functor preserves
// pullbacks and every eta/mu naturality square is a pullback.
Report check_cartesian(const SetMonad& t, const std::vector<FinSet>& sets,
                       const std::string& suite = "cartesian");

// Lifts a cartesian monad legwise to spans, registering the pseudomonad data
// in the world's environment; throws NotCartesian when the check fails.
PseudomonadBundle span_lift_monad(MonoidalBicat& m, const SetMonad& t);

// The canonical strength of a lifted pseudomonad for the (+, 0) structure,
// with components [T inl . eta, T inr].
StrengthBundle span_cocartesian_strength(MonoidalBicat& m, const PseudomonadBundle& t,
                                         const SetMonad& tm);

} // namespace bk
