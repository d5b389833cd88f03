#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bicatkit/bicategory.hpp"

namespace bk {

struct ObjExpr;
struct OneExpr;
struct TwoExpr;
using ObjP = std::shared_ptr<const ObjExpr>;
using OneP = std::shared_ptr<const OneExpr>;
using TwoP = std::shared_ptr<const TwoExpr>;

// A pseudofunctor value of arity k. Arguments are passed as flat vectors; an
// arity-2 functor (like a tensor) takes both components. Compositor and
// unitor come with inverses so no search is ever needed.
struct PsFun {
  std::string name;
  int arity = 1;
  std::function<Cell(const std::vector<Cell>&)> on_obj;
  std::function<Cell(const std::vector<Cell>&)> on_one;
  std::function<Cell(const std::vector<Cell>&)> on_two;
  // compositor at (f, g): F(f...) . F(g...) => F(f.g, ...)
  std::function<Iso2(const std::vector<Cell>&, const std::vector<Cell>&)> compositor;
  // unitor at A: Id_{F(A...)} => F(Id_A, ...)
  std::function<Iso2(const std::vector<Cell>&)> unitor;
};

// A pseudonatural transformation with invertible naturality cells. The
// `cell` at 1-cells (u_1, ..., u_k) has shape
//     component(cod u) . F(u)  =>  G(u) . component(dom u)
// where F and G are given symbolically by dom_fun / cod_fun acting on 1-cell
// expressions; boundaries derive from these.
struct PsNat {
  std::string name;
  int arity = 1;
  std::function<Cell(const std::vector<Cell>&)> component;
  std::function<Iso2(const std::vector<Cell>&)> cell;
  std::function<OneP(const std::vector<OneP>&)> dom_fun, cod_fun;
  // The same functor shapes acting on 2-cell pastings (for naturality laws).
  std::function<TwoP(const std::vector<TwoP>&)> dom_fun2, cod_fun2;
};

// An invertible modification: a 2-cell per object tuple, between the
// composite 1-cells described by the boundary closures.
struct Modif {
  std::string name;
  int arity = 1;
  std::function<Iso2(const std::vector<Cell>&)> component;
  std::function<OneP(const std::vector<ObjP>&)> src_of, dst_of;
};

// Adjoint-equivalence data for a pseudonatural equivalence: both directions
// plus unit/counit at each object tuple.
struct PsEquiv {
  PsNat fwd, bwd;
  std::function<Iso2(const std::vector<Cell>&)> unit;   // Id => bwd . fwd
  std::function<Iso2(const std::vector<Cell>&)> counit; // fwd . bwd => Id
};

// Symbol environment for pasting expressions: one bicategory plus named
// pseudofunctors, pseudonatural transformations and modifications.
struct Env {
  const Bicat* B = nullptr;
  std::map<std::string, PsFun> funs;
  std::map<std::string, PsNat> nats;
  std::map<std::string, Modif> mods;

  const PsFun& fun(const std::string& n) const;
  const PsNat& nat(const std::string& n) const;
  const Modif& mod(const std::string& n) const;

  void add(PsFun f) { funs[f.name] = std::move(f); }
  void add(PsNat n) { nats[n.name] = std::move(n); }
  void add(Modif m) { mods[m.name] = std::move(m); }
};

Iso2 iso_id(const Bicat& b, const Cell& one);
Iso2 iso_vcomp(const Bicat& b, const Iso2& second, const Iso2& first);
Iso2 iso_hcomp(const Bicat& b, const Iso2& outer, const Iso2& inner);
Iso2 iso_rev(const Iso2& i);

} // namespace bk
