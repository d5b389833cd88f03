#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicatkit/structures.hpp"

namespace bk {

struct NotCoherentlyRelated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundAtom : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Expressions

struct ObjExpr {
  bool cst = true;
  Cell cell;              // when cst
  std::string fun;        // when application
  std::vector<ObjP> args;
};

struct OneExpr {
  enum class K { Const, Id, Comp, App, Nat };
  K k = K::Const;
  Cell cell;               // Const
  ObjP obj;                // Id
  OneP lhs, rhs;           // Comp: lhs . rhs (rhs applied first)
  std::string fun;         // App
  std::vector<OneP> fargs; // App arguments
  std::string nat;         // Nat component
  std::vector<ObjP> idx;   // Nat component indices
};

struct TwoExpr {
  enum class K {
    Id2,      // identity on a 1-cell expression
    Const2,   // a named concrete 2-cell with declared boundary expressions
    Vert,     // vertical paste, kids in application order (kids[0] first)
    Horiz,    // kids = {outer, inner}
    App2,     // pseudofunctor applied to 2-cells
    NatCell,  // pseudonaturality cell of `nat` at 1-cell expressions
    ModCell,  // component of modification `mod` at object expressions
    Assoc,    // structural a_{f,g,h}
    Lunit,    // l_f
    Runit,    // r_f
    CompCell, // compositor of `fun` at two 1-cell argument tuples
    UnitCell, // unitor of `fun` at an object tuple
    Fill,     // explicit coherence fill between two 1-cell expressions
    Inv       // inverse of an invertible 2-cell expression
  };
  K k = K::Id2;
  bool inv = false; // reverses NatCell/ModCell/Assoc/Lunit/Runit/CompCell/UnitCell

  OneP one;                    // Id2
  Cell cell;                   // Const2 payload
  OneP csrc, cdst;             // Const2 / Fill boundaries
  std::vector<TwoP> kids;      // Vert / Horiz / App2 / Inv
  std::string fun;             // App2 / CompCell / UnitCell
  std::string nat;             // NatCell
  std::vector<OneP> oargs;     // NatCell args; CompCell f-args
  std::vector<OneP> oargs2;    // CompCell g-args
  std::string mod;             // ModCell
  std::vector<ObjP> objs;      // ModCell / UnitCell indices
  OneP f, g, h;                // Assoc(f,g,h) / Lunit(f) / Runit(f)
};

// Builders.
ObjP ob(const Cell& c);
ObjP obapp(std::string fun, std::vector<ObjP> args);

OneP onecell(const Cell& c);
OneP oid(ObjP a);
OneP ocomp(OneP lhs, OneP rhs);
OneP ocomp(std::vector<OneP> parts); // parts[0] outermost (applied last)
OneP oapp(std::string fun, std::vector<OneP> args);
OneP onat(std::string nat, std::vector<ObjP> idx);

TwoP tid(OneP one);
TwoP tconst(const Cell& two, OneP src, OneP dst);
TwoP tvert(std::vector<TwoP> kids); // kids[0] applied first
TwoP thoriz(TwoP outer, TwoP inner);
TwoP twhl(OneP f, TwoP t); // whisker f . (-)
TwoP twhr(TwoP t, OneP g); // whisker (-) . g
TwoP tapp(std::string fun, std::vector<TwoP> kids);
TwoP tnat(std::string nat, std::vector<OneP> args, bool inv = false);
TwoP tmod(std::string mod, std::vector<ObjP> objs, bool inv = false);
TwoP tassoc(OneP f, OneP g, OneP h, bool inv = false);
TwoP tlunit(OneP f, bool inv = false);
TwoP trunit(OneP f, bool inv = false);
TwoP tcomp_cell(std::string fun, std::vector<OneP> f, std::vector<OneP> g, bool inv = false);
TwoP tunit_cell(std::string fun, std::vector<ObjP> objs, bool inv = false);
TwoP tfill(OneP src, OneP dst);
TwoP tinv(TwoP t);

std::string render(const ObjP& e);
std::string render(const OneP& e);
std::string render(const TwoP& e);

// ---------------------------------------------------------------------------
// Evaluation

struct Paste {
  const Env& env;

  explicit Paste(const Env& e) : env(e) {}

  Cell eval_obj(const ObjP& e) const;
  Cell eval_one(const OneP& e) const;

  ObjP dom_e(const OneP& e) const; // symbolic boundary objects
  ObjP cod_e(const OneP& e) const;

  // Source and target 1-cell expressions, without evaluating any cells.
  std::pair<OneP, OneP> boundary(const TwoP& e) const;

  // Evaluate a pasting. Vertical seams whose boundary expressions disagree
  // are bridged with coherence fills; nothing else is inserted.
  Cell eval(const TwoP& e) const;
  Iso2 eval_iso(const TwoP& e) const; // also builds the inverse

  // The canonical structural 2-cell from src to dst; defined when both
  // normalize to the same sequence of primitive 1-cells.
  Iso2 coherence(const OneP& src, const OneP& dst) const;

  // Left-normalized composite of an expression: the realized 1-cell and the
  // mediating iso from the expression's own evaluation.
  struct Normal {
    std::vector<Cell> edges; // primitive 1-cells, edges[0] applied last
    Cell realized;
    Iso2 med;
  };
  Normal normal_form(const OneP& e) const;
};

} // namespace bk
