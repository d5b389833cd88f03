#pragma once

#include <memory>
#include <optional>

#include "bicatkit/family.hpp"
#include "bicatkit/span.hpp"

namespace bk {

// A symmetric monoidal structure on finite sets, used to induce monoidal
// structure on spans. `interleave` rearranges an element of
// ten(ten(S_f', S_g'), ten(S_f, S_g))-style pullback pairs into
// ten-of-pullback-pairs form; it is the elementwise middle-four move.
struct SetMonStructure {
  std::string name;
  FinSet unit;
  std::function<FinSet(const FinSet&, const FinSet&)> ten;
  std::function<FinFn(const FinFn&, const FinFn&)> ten_fn;
  std::function<FinFn(const FinSet&, const FinSet&, const FinSet&)> alpha; // (AB)C -> A(BC)
  std::function<FinFn(const FinSet&)> lam, rho;                            // IA -> A, AI -> A
  std::function<FinFn(const FinSet&, const FinSet&)> braid;                // AB -> BA
  std::function<Label(const Label&, const Label&)> interleave;
};

SetMonStructure setmon_product();
SetMonStructure setmon_coproduct();

// A monoidal bicategory bundle: a host instance, a tensor pseudofunctor,
// structural pseudonatural equivalences, and the four structural
// modifications, all registered in a shared environment under fixed names:
//   "ten"; "alpha"/"alpha_r"; "lam"/"lam_r"; "rho"/"rho_r"; "beta"/"beta_r";
//   modifications "pmod", "mmod", "lmod", "rmod".
// Modification directions:
//   pmod : (A ten alpha) . alpha . (alpha ten D)  =>  alpha . alpha
//   mmod : (A ten lam) . alpha                    =>  rho ten B
//   lmod : lam ten B                              =>  lam . alpha
//   rmod : rho                                    =>  (A ten rho) . alpha
struct MonoidalBicat {
  std::shared_ptr<Bicat> host;
  std::shared_ptr<Env> env;
  Cell unit;
  bool symmetric = false;

  // Instance-supplied factory for canonical invertible modifications between
  // composites of structural cells (used by derived constructions, which are
  // then re-verified against their axiom suites).
  std::function<Modif(const std::string& name, int arity,
                      std::function<OneP(const std::vector<ObjP>&)> src,
                      std::function<OneP(const std::vector<ObjP>&)> dst)>
      canonical_mod;

  const Bicat& B() const { return *host; }
  Env& E() { return *env; }
  const Env& E() const { return *env; }
  Cell ten_obj(const Cell& a, const Cell& b) const {
    return env->fun("ten").on_obj({a, b});
  }
};

// Span(FinSet) with the monoidal structure induced by a symmetric monoidal
// structure on finite sets.
MonoidalBicat span_monoidal(const SetMonStructure& s);

// Data well-formedness suite for a monoidal bundle: tensor pseudofunctor
// laws, structural pseudonaturality, equivalence witnesses, and the four
// modification conditions.
Report check_monoidal_bicat(const MonoidalBicat& m, const Sample& s,
                            const std::string& suite = "monoidal");

// The four structural modification conditions, exposed for reuse.
std::vector<FamilyMod> monoidal_modifications(const MonoidalBicat& m);

// Pseudonaturality cell for a structural span family: the mediating iso
// between span(fn_cod) . Fu and Gu . span(fn_dom), where apex_fn realizes the
// same structural map on the apexes.
Iso2 span_struct_nat_cell(const SpanArr& Fu, const SpanArr& Gu, const FinFn& fn_dom,
                          const FinFn& fn_cod, const FinFn& apex_fn);

} // namespace bk
