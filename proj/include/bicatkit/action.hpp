#pragma once

#include "bicatkit/kleisli.hpp"
#include "bicatkit/strength.hpp"

namespace bk {

// A left action of the base monoidal bicategory on a Kleisli bicategory,
// together with the icon relating it to the tensor. All cells are concrete;
// mixed-argument laws are checked by dedicated loops.
struct ActionOnKleisli {
  // act on objects / 1-cells / 2-cells; first argument from the base, second
  // from the Kleisli instance.
  std::function<Cell(const Cell&, const Cell&)> obj;
  std::function<Cell(const Cell&, const Cell&)> one;
  std::function<Cell(const Cell&, const Cell&)> two;
  // compositor at outer (f,g), inner (f2,g2); unitor at objects (A, X).
  std::function<Iso2(const Cell&, const Cell&, const Cell&, const Cell&)> compositor;
  std::function<Iso2(const Cell&, const Cell&)> unitor;
  // structural transformations with components in the Kleisli instance
  std::function<Cell(const Cell&)> lam_comp;                            // I |> X -> X
  std::function<Iso2(const Cell&)> lam_cell;                            // at a Kleisli 1-cell
  std::function<Cell(const Cell&, const Cell&, const Cell&)> al_comp;   // (A ten B) |> X -> A |> (B |> X)
  std::function<Iso2(const Cell&, const Cell&, const Cell&)> al_cell_x; // naturality in the Kleisli slot at (A, B, g)
  // structural modifications (components only; the slots are objects)
  std::function<Iso2(const Cell&, const Cell&)> mmodA;                   // (A, X)
  std::function<Iso2(const Cell&, const Cell&)> lmodA;                   // (A, X)
  std::function<Iso2(const Cell&, const Cell&, const Cell&, const Cell&)> pmodA; // (A,B,C,X)
  // icon 2-cells at base 1-cells (f, g0): f |> K g0  =>  K(f ten g0)
  std::function<Iso2(const Cell&, const Cell&)> theta;
};

// The identity-on-objects pseudofunctor K : B -> B_T with its compositor.
struct KData {
  std::function<Cell(const Cell&)> one;                    // base f -> eta . f
  std::function<Cell(const Cell&)> two;                    // base sigma -> eta <| sigma
  std::function<Iso2(const Cell&, const Cell&)> comp;      // K f . K g => K(f . g)
  std::function<Iso2(const Cell&)> unit;                   // Id^K_A => K(Id_A)
};

KData make_k(const MonoidalBicat& m, const KleisliWorld& kw);

ActionOnKleisli action_from_strength(const MonoidalBicat& m, const KleisliWorld& kw,
                                     const PseudomonadBundle& t, const StrengthBundle& s);

Report check_action(const MonoidalBicat& m, const KleisliWorld& kw, const ActionOnKleisli& a,
                    const Sample& smp, const std::string& suite = "action");

Report check_extension(const MonoidalBicat& m, const KleisliWorld& kw, const ActionOnKleisli& a,
                       const Sample& smp, const std::string& suite = "extension");

// The strength recovered from an extension: t'_{A,B} = Id_A |> id_{TB},
// with the four modifications assembled from the action data.
struct RecoveredStrength {
  std::function<Cell(const Cell&, const Cell&)> t;  // base 1-cell A (x) TB -> T(A (x) B)
  std::function<Iso2(const Cell&)> x;               // at B
  std::function<Iso2(const Cell&, const Cell&, const Cell&)> y;
  std::function<Iso2(const Cell&, const Cell&)> w, z;
};

RecoveredStrength strength_from_extension(const MonoidalBicat& m, const KleisliWorld& kw,
                                          const ActionOnKleisli& a);

// Both round trips with explicit comparison cells and their commutation laws.
Report roundtrip_check(const MonoidalBicat& m, const KleisliWorld& kw,
                       const PseudomonadBundle& t, const StrengthBundle& s, const Sample& smp,
                       const std::string& suite = "roundtrip");

} // namespace bk
