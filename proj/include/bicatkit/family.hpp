#pragma once

#include "bicatkit/paste.hpp"

namespace bk {

// A (possibly composite) pseudonatural family, represented symbolically so
// modification conditions and pseudonaturality laws of derived families can
// all be checked through the pasting evaluator. `cell` produces the
// naturality pasting at 1-cell expressions whose boundary objects are passed
// alongside.
struct NatFamily {
  int arity = 1;
  std::function<OneP(const std::vector<ObjP>&)> comp;
  std::function<TwoP(const std::vector<OneP>&, const std::vector<ObjP>& doms,
                     const std::vector<ObjP>& cods)>
      cell;
  std::function<OneP(const std::vector<OneP>&)> dom_map, cod_map;
  std::function<TwoP(const std::vector<TwoP>&)> dom_map2, cod_map2;
};

// The family of a registered pseudonatural transformation.
NatFamily nf_named(const Env& env, const std::string& nat);

// The identity family on a functor given by its action on 1-cell exprs.
NatFamily nf_identity(int arity, std::function<OneP(const std::vector<OneP>&)> fun,
                      std::function<TwoP(const std::vector<TwoP>&)> fun2);

// Composite family: `after . before`.
NatFamily nf_vcomp(const Bicat&, NatFamily after, NatFamily before);

// Tensor-style pairing through a registered arity-2 pseudofunctor.
NatFamily nf_pair(const std::string& fun, NatFamily left, NatFamily right);

// Apply a registered arity-1 pseudofunctor to a family.
NatFamily nf_apply(const std::string& fun, NatFamily inner);

// Pin some arguments to fixed object expressions; the remaining slots keep
// their order. `pins[i]` gives the object for slot i, or nullptr to keep it
// open.
NatFamily nf_fix(NatFamily base, const std::vector<ObjP>& pins);

// Builds one argument of a reindexed family from the outer arguments.
struct ArgMap {
  std::function<ObjP(const std::vector<ObjP>&)> obj;
  std::function<OneP(const std::vector<OneP>&)> one;
  std::function<TwoP(const std::vector<TwoP>&)> two;
};
ArgMap am_proj(size_t i);
ArgMap am_const(ObjP a);
ArgMap am_app(const std::string& fun, std::vector<ArgMap> parts);

// base composed with an argument substitution of the given outer arity.
NatFamily nf_precompose(NatFamily base, int outer_arity, std::vector<ArgMap> maps);

// The identity family on the identity functor (one open slot).
NatFamily nf_id1();

// A family built from ad-hoc closures producing concrete cells (used for
// centrality witnesses); boundary expressions derive from the maps. The env
// reference must outlive the family.
NatFamily nf_concrete(int arity, std::function<OneP(const std::vector<ObjP>&)> comp,
                      std::function<Iso2(const std::vector<Cell>&)> cell,
                      std::function<OneP(const std::vector<OneP>&)> dom_map,
                      std::function<OneP(const std::vector<OneP>&)> cod_map,
                      std::function<TwoP(const std::vector<TwoP>&)> dom_map2,
                      std::function<TwoP(const std::vector<TwoP>&)> cod_map2, const Env& env);

// A modification between two families: an invertible 2-cell per object tuple.
struct FamilyMod {
  std::string label;
  int arity = 1;
  NatFamily src, dst;
  std::function<TwoP(const std::vector<ObjP>&)> component;
};

// ---------------------------------------------------------------------------
// Checking

// Compare two pastings with the same printed boundary. When the evaluated
// boundaries differ by bracketing only, the right side is conjugated with
// coherence fills first.
bool equal_pastings(const Paste& p, const TwoP& lhs, const TwoP& rhs, std::string* why = nullptr);

// Enumeration helper: all 1-cell tuples for an arity-k family over sampled
// objects, as (exprs, doms, cods) plus the underlying cells.
struct OneTuple {
  std::vector<OneP> ones;
  std::vector<ObjP> doms, cods;
};
std::vector<OneTuple> one_tuples(const Bicat& b, const Sample& s, int arity);
std::vector<std::vector<Cell>> obj_tuples(const Bicat& b, const Sample& s, int arity);

// Pseudonaturality laws for a family: invertibility is implicit in the
// pasting (cells must evaluate), and we check naturality against sampled
// 2-cells plus the identity and composition laws.
Report check_family(const Paste& p, const NatFamily& f, const Sample& s,
                    const std::string& suite, const std::string& label);

// The modification condition for every sampled 1-cell tuple.
Report check_family_mod(const Paste& p, const FamilyMod& m, const Sample& s,
                        const std::string& suite);

} // namespace bk
