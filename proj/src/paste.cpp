#include "bicatkit/paste.hpp"

#include <sstream>

namespace bk {

const PsFun& Env::fun(const std::string& n) const {
  auto it = funs.find(n);
  if (it == funs.end()) throw UnboundAtom("unbound pseudofunctor: " + n);
  return it->second;
}
const PsNat& Env::nat(const std::string& n) const {
  auto it = nats.find(n);
  if (it == nats.end()) throw UnboundAtom("unbound pseudonatural transformation: " + n);
  return it->second;
}
const Modif& Env::mod(const std::string& n) const {
  auto it = mods.find(n);
  if (it == mods.end()) throw UnboundAtom("unbound modification: " + n);
  return it->second;
}

Iso2 iso_id(const Bicat& b, const Cell& one) {
  Cell i = b.id2(one);
  return Iso2{i, i};
}
Iso2 iso_vcomp(const Bicat& b, const Iso2& second, const Iso2& first) {
  return Iso2{b.vcomp(second.fwd, first.fwd), b.vcomp(first.bwd, second.bwd)};
}
Iso2 iso_hcomp(const Bicat& b, const Iso2& outer, const Iso2& inner) {
  return Iso2{b.hcomp(outer.fwd, inner.fwd), b.hcomp(outer.bwd, inner.bwd)};
}
Iso2 iso_rev(const Iso2& i) { return Iso2{i.bwd, i.fwd}; }

// ---------------------------------------------------------------------------
// Builders

ObjP ob(const Cell& c) {
  auto e = std::make_shared<ObjExpr>();
  e->cst = true;
  e->cell = c;
  return e;
}
ObjP obapp(std::string fun, std::vector<ObjP> args) {
  auto e = std::make_shared<ObjExpr>();
  e->cst = false;
  e->fun = std::move(fun);
  e->args = std::move(args);
  return e;
}

namespace {
std::shared_ptr<OneExpr> one_node(OneExpr::K k) {
  auto e = std::make_shared<OneExpr>();
  e->k = k;
  return e;
}
std::shared_ptr<TwoExpr> two_node(TwoExpr::K k) {
  auto e = std::make_shared<TwoExpr>();
  e->k = k;
  return e;
}
} // namespace

OneP onecell(const Cell& c) {
  auto e = one_node(OneExpr::K::Const);
  e->cell = c;
  return e;
}
OneP oid(ObjP a) {
  auto e = one_node(OneExpr::K::Id);
  e->obj = std::move(a);
  return e;
}
OneP ocomp(OneP lhs, OneP rhs) {
  auto e = one_node(OneExpr::K::Comp);
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}
OneP ocomp(std::vector<OneP> parts) {
  if (parts.empty()) throw std::invalid_argument("ocomp: empty");
  OneP acc = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) acc = ocomp(acc, parts[i]);
  return acc;
}
OneP oapp(std::string fun, std::vector<OneP> args) {
  auto e = one_node(OneExpr::K::App);
  e->fun = std::move(fun);
  e->fargs = std::move(args);
  return e;
}
OneP onat(std::string nat, std::vector<ObjP> idx) {
  auto e = one_node(OneExpr::K::Nat);
  e->nat = std::move(nat);
  e->idx = std::move(idx);
  return e;
}

TwoP tid(OneP one) {
  auto e = two_node(TwoExpr::K::Id2);
  e->one = std::move(one);
  return e;
}
TwoP tconst(const Cell& two, OneP src, OneP dst) {
  auto e = two_node(TwoExpr::K::Const2);
  e->cell = two;
  e->csrc = std::move(src);
  e->cdst = std::move(dst);
  return e;
}
TwoP tvert(std::vector<TwoP> kids) {
  if (kids.empty()) throw std::invalid_argument("tvert: empty");
  if (kids.size() == 1) return kids.front();
  auto e = two_node(TwoExpr::K::Vert);
  e->kids = std::move(kids);
  return e;
}
TwoP thoriz(TwoP outer, TwoP inner) {
  auto e = two_node(TwoExpr::K::Horiz);
  e->kids = {std::move(outer), std::move(inner)};
  return e;
}
TwoP twhl(OneP f, TwoP t) { return thoriz(tid(std::move(f)), std::move(t)); }
TwoP twhr(TwoP t, OneP g) { return thoriz(std::move(t), tid(std::move(g))); }
TwoP tapp(std::string fun, std::vector<TwoP> kids) {
  auto e = two_node(TwoExpr::K::App2);
  e->fun = std::move(fun);
  e->kids = std::move(kids);
  return e;
}
TwoP tnat(std::string nat, std::vector<OneP> args, bool inv) {
  auto e = two_node(TwoExpr::K::NatCell);
  e->nat = std::move(nat);
  e->oargs = std::move(args);
  e->inv = inv;
  return e;
}
TwoP tmod(std::string mod, std::vector<ObjP> objs, bool inv) {
  auto e = two_node(TwoExpr::K::ModCell);
  e->mod = std::move(mod);
  e->objs = std::move(objs);
  e->inv = inv;
  return e;
}
TwoP tassoc(OneP f, OneP g, OneP h, bool inv) {
  auto e = two_node(TwoExpr::K::Assoc);
  e->f = std::move(f);
  e->g = std::move(g);
  e->h = std::move(h);
  e->inv = inv;
  return e;
}
TwoP tlunit(OneP f, bool inv) {
  auto e = two_node(TwoExpr::K::Lunit);
  e->f = std::move(f);
  e->inv = inv;
  return e;
}
TwoP trunit(OneP f, bool inv) {
  auto e = two_node(TwoExpr::K::Runit);
  e->f = std::move(f);
  e->inv = inv;
  return e;
}
TwoP tcomp_cell(std::string fun, std::vector<OneP> f, std::vector<OneP> g, bool inv) {
  auto e = two_node(TwoExpr::K::CompCell);
  e->fun = std::move(fun);
  e->oargs = std::move(f);
  e->oargs2 = std::move(g);
  e->inv = inv;
  return e;
}
TwoP tunit_cell(std::string fun, std::vector<ObjP> objs, bool inv) {
  auto e = two_node(TwoExpr::K::UnitCell);
  e->fun = std::move(fun);
  e->objs = std::move(objs);
  e->inv = inv;
  return e;
}
TwoP tfill(OneP src, OneP dst) {
  auto e = two_node(TwoExpr::K::Fill);
  e->csrc = std::move(src);
  e->cdst = std::move(dst);
  return e;
}
TwoP tinv(TwoP t) {
  auto e = two_node(TwoExpr::K::Inv);
  e->kids = {std::move(t)};
  return e;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(const ObjP& e) {
  if (!e) return "?";
  if (e->cst) return e->cell.key();
  std::string out = e->fun + "(";
  for (size_t i = 0; i < e->args.size(); ++i) {
    if (i) out += ",";
    out += render(e->args[i]);
  }
  return out + ")";
}

std::string render(const OneP& e) {
  if (!e) return "?";
  switch (e->k) {
    case OneExpr::K::Const: return e->cell.key();
    case OneExpr::K::Id: return "Id(" + render(e->obj) + ")";
    case OneExpr::K::Comp: return "(" + render(e->lhs) + " . " + render(e->rhs) + ")";
    case OneExpr::K::App: {
      std::string out = e->fun + "(";
      for (size_t i = 0; i < e->fargs.size(); ++i) {
        if (i) out += ",";
        out += render(e->fargs[i]);
      }
      return out + ")";
    }
    case OneExpr::K::Nat: {
      std::string out = e->nat + "@[";
      for (size_t i = 0; i < e->idx.size(); ++i) {
        if (i) out += ",";
        out += render(e->idx[i]);
      }
      return out + "]";
    }
  }
  return "?";
}

std::string render(const TwoP& e) {
  if (!e) return "?";
  auto tag = [&](const std::string& s) { return e->inv ? s + "^-1" : s; };
  switch (e->k) {
    case TwoExpr::K::Id2: return "id2(" + render(e->one) + ")";
    case TwoExpr::K::Const2: return e->cell.key();
    case TwoExpr::K::Vert: {
      std::string out = "[";
      for (size_t i = 0; i < e->kids.size(); ++i) {
        if (i) out += " ; ";
        out += render(e->kids[i]);
      }
      return out + "]";
    }
    case TwoExpr::K::Horiz:
      return "(" + render(e->kids[0]) + " * " + render(e->kids[1]) + ")";
    case TwoExpr::K::App2: {
      std::string out = e->fun + "2(";
      for (size_t i = 0; i < e->kids.size(); ++i) {
        if (i) out += ",";
        out += render(e->kids[i]);
      }
      return out + ")";
    }
    case TwoExpr::K::NatCell: {
      std::string out = tag("cell(" + e->nat + ")") + "[";
      for (size_t i = 0; i < e->oargs.size(); ++i) {
        if (i) out += ",";
        out += render(e->oargs[i]);
      }
      return out + "]";
    }
    case TwoExpr::K::ModCell: {
      std::string out = tag(e->mod) + "@[";
      for (size_t i = 0; i < e->objs.size(); ++i) {
        if (i) out += ",";
        out += render(e->objs[i]);
      }
      return out + "]";
    }
    case TwoExpr::K::Assoc:
      return tag("a") + "(" + render(e->f) + "," + render(e->g) + "," + render(e->h) + ")";
    case TwoExpr::K::Lunit: return tag("l") + "(" + render(e->f) + ")";
    case TwoExpr::K::Runit: return tag("r") + "(" + render(e->f) + ")";
    case TwoExpr::K::CompCell: return tag("phi(" + e->fun + ")");
    case TwoExpr::K::UnitCell: return tag("psi(" + e->fun + ")");
    case TwoExpr::K::Fill:
      return "fill(" + render(e->csrc) + " => " + render(e->cdst) + ")";
    case TwoExpr::K::Inv: return "inv(" + render(e->kids[0]) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct NFChain;

struct NFEdge {
  Cell one;                  // realized primitive 1-cell
  std::string fun;           // non-empty when this is a functor application
  std::vector<NFChain> args; // argument chains of the application
};

struct NFChain {
  Cell dom, cod;             // boundary objects
  std::vector<NFEdge> edges; // edges[0] applied last
};

struct Engine {
  const Env& env;
  const Bicat& b;

  explicit Engine(const Env& e) : env(e), b(*e.B) {}

  Cell realize(const std::vector<Cell>& edges, const Cell& dom_if_empty) const {
    if (edges.empty()) return b.id1(dom_if_empty);
    Cell acc = edges.front();
    for (size_t i = 1; i < edges.size(); ++i) acc = b.comp1(acc, edges[i]);
    return acc;
  }

  static std::vector<Cell> cells_of(const std::vector<NFEdge>& es) {
    std::vector<Cell> out;
    out.reserve(es.size());
    for (const auto& e : es) out.push_back(e.one);
    return out;
  }

  Cell realize(const NFChain& c) const { return realize(cells_of(c.edges), c.dom); }

  // comp1(comb(L), comb(R)) => comb(L ++ R); `mid` is cod(R) = dom(L).
  Iso2 comb_merge(const std::vector<Cell>& L, const std::vector<Cell>& R, const Cell& mid) const {
    if (L.empty()) return b.lunit(realize(R, mid));
    if (R.empty()) return b.runit(realize(L, mid));
    if (R.size() == 1) return iso_id(b, b.comp1(realize(L, mid), R.front()));
    std::vector<Cell> Rp(R.begin(), R.end() - 1);
    const Cell& rl = R.back();
    Cell combL = realize(L, mid);
    Cell combRp = realize(Rp, mid);
    Iso2 step1 = iso_rev(b.assoc(combL, combRp, rl));
    Iso2 rec = comb_merge(L, Rp, mid);
    Iso2 step2 = iso_hcomp(b, rec, iso_id(b, rl));
    return iso_vcomp(b, step2, step1);
  }

  // realize(edges) => comp1(comb(edges[0..k)), comb(edges[k..n))).
  Iso2 comb_split(const std::vector<Cell>& edges, size_t k, const Cell& dom, const Cell& mid) const {
    std::vector<Cell> L(edges.begin(), edges.begin() + k);
    std::vector<Cell> R(edges.begin() + k, edges.end());
    (void)dom;
    return iso_rev(comb_merge(L, R, mid));
  }

  // Fuse adjacent applications of the same pseudofunctor, left to right.
  // Returns the reduced chain and the iso realize(old) => realize(new).
  std::pair<NFChain, Iso2> reduce(NFChain chain) const {
    Iso2 total = iso_id(b, realize(chain));
    size_t i = 0;
    while (chain.edges.size() >= 2 && i + 1 < chain.edges.size()) {
      NFEdge& e1 = chain.edges[i];
      NFEdge& e2 = chain.edges[i + 1];
      if (e1.fun.empty() || e1.fun != e2.fun) {
        ++i;
        continue;
      }
      const PsFun& F = env.fun(e1.fun);
      // Merge the argument chains pointwise.
      std::vector<Cell> rl, rr, merged_cells;
      for (const auto& a : e1.args) rl.push_back(realize(a));
      for (const auto& a : e2.args) rr.push_back(realize(a));
      std::vector<NFChain> margs;
      std::vector<Cell> med_fwd, med_bwd;
      for (size_t j = 0; j < e1.args.size(); ++j) {
        auto [mc, miso] = seam(e1.args[j], e2.args[j]);
        margs.push_back(mc);
        merged_cells.push_back(realize(mc));
        med_fwd.push_back(miso.fwd);
        med_bwd.push_back(miso.bwd);
      }
      Iso2 phi = F.compositor(rl, rr);
      Iso2 f2{F.on_two(med_fwd), F.on_two(med_bwd)};
      Iso2 edge_iso = iso_vcomp(b, f2, phi);
      NFEdge fused{F.on_one(merged_cells), e1.fun, margs};

      // Embed the edge rewrite into the whole chain.
      Iso2 emb = embed(chain, i, 2, {fused}, edge_iso);
      chain.edges.erase(chain.edges.begin() + i, chain.edges.begin() + i + 2);
      chain.edges.insert(chain.edges.begin() + i, fused);
      total = iso_vcomp(b, emb, total);
      if (i > 0) --i;
    }
    return {chain, total};
  }

  // Iso realize(chain) => realize(chain with edges [i, i+len) replaced),
  // given the iso between the two segment composites.
  Iso2 embed(const NFChain& chain, size_t i, size_t len, const std::vector<NFEdge>& repl,
             const Iso2& seg_iso) const {
    auto cells = cells_of(chain.edges);
    std::vector<Cell> prefix(cells.begin(), cells.begin() + i);
    std::vector<Cell> seg(cells.begin() + i, cells.begin() + i + len);
    std::vector<Cell> suffix(cells.begin() + i + len, cells.end());
    std::vector<Cell> nseg;
    for (const auto& e : repl) nseg.push_back(e.one);

    // Boundary objects of the segment composite.
    Cell seg_dom = suffix.empty() ? chain.dom : b.cod1(suffix.front());
    Cell seg_cod = prefix.empty() ? chain.cod : b.dom1(prefix.back());

    // realize(all) => (comb(prefix ++ seg)) . comb(suffix)
    Iso2 s1 = comb_split(cells, i + len, chain.dom, seg_dom);
    // comb(prefix ++ seg) => comb(prefix) . comb(seg), whiskered by suffix
    std::vector<Cell> preseg(cells.begin(), cells.begin() + i + len);
    Iso2 s2 = iso_hcomp(b, comb_split(presg_cells(preseg), i, seg_dom, seg_cod),
                        iso_id(b, realize(suffix, seg_dom)));
    // whisker the segment iso
    Iso2 s3 = iso_hcomp(b, iso_hcomp(b, iso_id(b, realize(prefix, seg_cod)), seg_iso),
                        iso_id(b, realize(suffix, seg_dom)));
    // reassemble: (comb(prefix) . comb(nseg)) . comb(suffix) => comb(prefix ++ nseg ++ suffix)
    std::vector<Cell> prensg = prefix;
    prensg.insert(prensg.end(), nseg.begin(), nseg.end());
    Iso2 s4 = iso_hcomp(b, comb_merge(prefix, nseg, seg_cod), iso_id(b, realize(suffix, seg_dom)));
    std::vector<Cell> all_new = prensg;
    all_new.insert(all_new.end(), suffix.begin(), suffix.end());
    Iso2 s5 = comb_merge(prensg, suffix, seg_dom);
    return iso_vcomp(b, s5, iso_vcomp(b, s4, iso_vcomp(b, s3, iso_vcomp(b, s2, s1))));
  }

  static std::vector<Cell> presg_cells(const std::vector<Cell>& v) { return v; }

  // comp1(realize(A), realize(B)) => realize(result); requires cod(B) = dom(A).
  std::pair<NFChain, Iso2> seam(const NFChain& A, const NFChain& B) const {
    NFChain col{B.dom, A.cod, {}};
    col.edges = A.edges;
    col.edges.insert(col.edges.end(), B.edges.begin(), B.edges.end());
    Iso2 med0 = comb_merge(cells_of(A.edges), cells_of(B.edges), A.dom);
    auto [chain, med1] = reduce(col);
    return {chain, iso_vcomp(b, med1, med0)};
  }

  struct NF {
    NFChain chain;
    Iso2 med; // eval(expr) => realize(chain)
  };

  NF norm(const Paste& p, const OneP& e) const {
    switch (e->k) {
      case OneExpr::K::Const: {
        NFChain c{b.dom1(e->cell), b.cod1(e->cell), {NFEdge{e->cell, "", {}}}};
        return NF{c, iso_id(b, e->cell)};
      }
      case OneExpr::K::Nat: {
        Cell comp = p.eval_one(e);
        NFChain c{b.dom1(comp), b.cod1(comp), {NFEdge{comp, "", {}}}};
        return NF{c, iso_id(b, comp)};
      }
      case OneExpr::K::Id: {
        Cell a = p.eval_obj(e->obj);
        NFChain c{a, a, {}};
        return NF{c, iso_id(b, b.id1(a))};
      }
      case OneExpr::K::Comp: {
        NF nl = norm(p, e->lhs);
        NF nr = norm(p, e->rhs);
        if (!(nr.chain.cod == nl.chain.dom))
          throw BoundaryMismatch("pasting: non-composable 1-cells in " + render(e));
        auto [chain, med] = seam(nl.chain, nr.chain);
        return NF{chain, iso_vcomp(b, med, iso_hcomp(b, nl.med, nr.med))};
      }
      case OneExpr::K::App: {
        const PsFun& F = env.fun(e->fun);
        if (static_cast<int>(e->fargs.size()) != F.arity)
          throw IllFormed("pasting: arity mismatch for " + e->fun);
        std::vector<NF> args;
        bool all_id = true;
        for (const auto& a : e->fargs) {
          args.push_back(norm(p, a));
          if (!args.back().chain.edges.empty()) all_id = false;
        }
        std::vector<Cell> fwds, bwds, reals, doms;
        std::vector<NFChain> chains;
        for (const auto& a : args) {
          fwds.push_back(a.med.fwd);
          bwds.push_back(a.med.bwd);
          reals.push_back(realize(a.chain));
          doms.push_back(a.chain.dom);
          chains.push_back(a.chain);
        }
        Iso2 f2{F.on_two(fwds), F.on_two(bwds)};
        if (all_id) {
          // F(Id,...) => Id via the unitor, then an empty chain.
          Iso2 psi = F.unitor(doms);
          Cell obj = F.on_obj(doms);
          NFChain c{obj, obj, {}};
          return NF{c, iso_vcomp(b, iso_rev(psi), f2)};
        }
        Cell one = F.on_one(reals);
        std::vector<Cell> cods;
        for (const auto& a : args) cods.push_back(a.chain.cod);
        NFChain c{F.on_obj(doms), F.on_obj(cods), {NFEdge{one, e->fun, chains}}};
        return NF{c, f2};
      }
    }
    throw IllFormed("pasting: unknown 1-cell expression");
  }
};

} // namespace

Cell Paste::eval_obj(const ObjP& e) const {
  if (e->cst) return e->cell;
  const PsFun& F = env.fun(e->fun);
  std::vector<Cell> args;
  for (const auto& a : e->args) args.push_back(eval_obj(a));
  return F.on_obj(args);
}

Cell Paste::eval_one(const OneP& e) const {
  const Bicat& b = *env.B;
  switch (e->k) {
    case OneExpr::K::Const: return e->cell;
    case OneExpr::K::Id: return b.id1(eval_obj(e->obj));
    case OneExpr::K::Comp: return b.comp1(eval_one(e->lhs), eval_one(e->rhs));
    case OneExpr::K::App: {
      const PsFun& F = env.fun(e->fun);
      std::vector<Cell> args;
      for (const auto& a : e->fargs) args.push_back(eval_one(a));
      return F.on_one(args);
    }
    case OneExpr::K::Nat: {
      const PsNat& n = env.nat(e->nat);
      std::vector<Cell> idx;
      for (const auto& a : e->idx) idx.push_back(eval_obj(a));
      return n.component(idx);
    }
  }
  throw IllFormed("eval_one: unknown node");
}

ObjP Paste::dom_e(const OneP& e) const {
  switch (e->k) {
    case OneExpr::K::Const: return ob(env.B->dom1(e->cell));
    case OneExpr::K::Id: return e->obj;
    case OneExpr::K::Comp: return dom_e(e->rhs);
    case OneExpr::K::App: {
      std::vector<ObjP> args;
      for (const auto& a : e->fargs) args.push_back(dom_e(a));
      return obapp(e->fun, std::move(args));
    }
    case OneExpr::K::Nat: {
      const PsNat& n = env.nat(e->nat);
      std::vector<OneP> ids;
      for (const auto& a : e->idx) ids.push_back(oid(a));
      return dom_e(n.dom_fun(ids));
    }
  }
  throw IllFormed("dom_e: unknown node");
}

ObjP Paste::cod_e(const OneP& e) const {
  switch (e->k) {
    case OneExpr::K::Const: return ob(env.B->cod1(e->cell));
    case OneExpr::K::Id: return e->obj;
    case OneExpr::K::Comp: return cod_e(e->lhs);
    case OneExpr::K::App: {
      std::vector<ObjP> args;
      for (const auto& a : e->fargs) args.push_back(cod_e(a));
      return obapp(e->fun, std::move(args));
    }
    case OneExpr::K::Nat: {
      const PsNat& n = env.nat(e->nat);
      std::vector<OneP> ids;
      for (const auto& a : e->idx) ids.push_back(oid(a));
      return dom_e(n.cod_fun(ids));
    }
  }
  throw IllFormed("cod_e: unknown node");
}

std::pair<OneP, OneP> Paste::boundary(const TwoP& e) const {
  auto flip = [&](std::pair<OneP, OneP> p) {
    if (e->inv) std::swap(p.first, p.second);
    return p;
  };
  switch (e->k) {
    case TwoExpr::K::Id2: return {e->one, e->one};
    case TwoExpr::K::Const2: return {e->csrc, e->cdst};
    case TwoExpr::K::Fill: return {e->csrc, e->cdst};
    case TwoExpr::K::Vert: {
      OneP src = boundary(e->kids.front()).first;
      OneP dst = boundary(e->kids.back()).second;
      return {src, dst};
    }
    case TwoExpr::K::Horiz: {
      auto o = boundary(e->kids[0]);
      auto i = boundary(e->kids[1]);
      return {ocomp(o.first, i.first), ocomp(o.second, i.second)};
    }
    case TwoExpr::K::App2: {
      std::vector<OneP> srcs, dsts;
      for (const auto& k : e->kids) {
        auto bd = boundary(k);
        srcs.push_back(bd.first);
        dsts.push_back(bd.second);
      }
      return {oapp(e->fun, srcs), oapp(e->fun, dsts)};
    }
    case TwoExpr::K::NatCell: {
      const PsNat& n = env.nat(e->nat);
      std::vector<ObjP> doms, cods;
      for (const auto& a : e->oargs) {
        doms.push_back(dom_e(a));
        cods.push_back(cod_e(a));
      }
      OneP src = ocomp(onat(e->nat, cods), n.dom_fun(e->oargs));
      OneP dst = ocomp(n.cod_fun(e->oargs), onat(e->nat, doms));
      return flip({src, dst});
    }
    case TwoExpr::K::ModCell: {
      const Modif& m = env.mod(e->mod);
      return flip({m.src_of(e->objs), m.dst_of(e->objs)});
    }
    case TwoExpr::K::Assoc:
      return flip({ocomp(ocomp(e->f, e->g), e->h), ocomp(e->f, ocomp(e->g, e->h))});
    case TwoExpr::K::Lunit: return flip({ocomp(oid(cod_e(e->f)), e->f), e->f});
    case TwoExpr::K::Runit: return flip({ocomp(e->f, oid(dom_e(e->f))), e->f});
    case TwoExpr::K::CompCell: {
      std::vector<OneP> comps;
      for (size_t i = 0; i < e->oargs.size(); ++i)
        comps.push_back(ocomp(e->oargs[i], e->oargs2[i]));
      return flip({ocomp(oapp(e->fun, e->oargs), oapp(e->fun, e->oargs2)), oapp(e->fun, comps)});
    }
    case TwoExpr::K::UnitCell: {
      std::vector<ObjP> objs = e->objs;
      std::vector<OneP> ids;
      for (const auto& o : objs) ids.push_back(oid(o));
      return flip({oid(obapp(e->fun, objs)), oapp(e->fun, ids)});
    }
    case TwoExpr::K::Inv: {
      auto bd = boundary(e->kids[0]);
      return {bd.second, bd.first};
    }
  }
  throw IllFormed("boundary: unknown node");
}

Iso2 Paste::coherence(const OneP& src, const OneP& dst) const {
  Engine eng(env);
  Engine::NF a = eng.norm(*this, src);
  Engine::NF c = eng.norm(*this, dst);
  auto acells = Engine::cells_of(a.chain.edges);
  auto ccells = Engine::cells_of(c.chain.edges);
  if (acells.size() != ccells.size())
    throw NotCoherentlyRelated("coherence: different atom counts:\n  " + render(src) + "\n  " +
                               render(dst));
  for (size_t i = 0; i < acells.size(); ++i)
    if (acells[i] != ccells[i])
      throw NotCoherentlyRelated("coherence: atom mismatch at position " + std::to_string(i) +
                                 ":\n  " + acells[i].key() + "\n  " + ccells[i].key());
  if (acells.empty() && !(a.chain.dom == c.chain.dom))
    throw NotCoherentlyRelated("coherence: empty composites at different objects");
  return iso_vcomp(*env.B, iso_rev(c.med), a.med);
}

Paste::Normal Paste::normal_form(const OneP& e) const {
  Engine eng(env);
  Engine::NF nf = eng.norm(*this, e);
  return Normal{Engine::cells_of(nf.chain.edges), eng.realize(nf.chain), nf.med};
}

Iso2 Paste::eval_iso(const TwoP& e) const {
  const Bicat& b = *env.B;
  auto flip = [&](Iso2 i) { return e->inv ? iso_rev(i) : i; };
  switch (e->k) {
    case TwoExpr::K::Id2: return iso_id(b, eval_one(e->one));
    case TwoExpr::K::Const2: {
      auto inv = b.inv2(e->cell);
      if (!inv) throw NonInvertible("eval: 2-cell not invertible: " + e->cell.key());
      return Iso2{e->cell, *inv};
    }
    case TwoExpr::K::Fill: return coherence(e->csrc, e->cdst);
    case TwoExpr::K::Vert: {
      Iso2 acc = eval_iso(e->kids.front());
      OneP prev_dst = boundary(e->kids.front()).second;
      for (size_t i = 1; i < e->kids.size(); ++i) {
        auto bd = boundary(e->kids[i]);
        Cell need = eval_one(bd.first);
        Cell have = eval_one(prev_dst);
        if (have != need) acc = iso_vcomp(b, coherence(prev_dst, bd.first), acc);
        acc = iso_vcomp(b, eval_iso(e->kids[i]), acc);
        prev_dst = bd.second;
      }
      return acc;
    }
    case TwoExpr::K::Horiz: return iso_hcomp(b, eval_iso(e->kids[0]), eval_iso(e->kids[1]));
    case TwoExpr::K::App2: {
      const PsFun& F = env.fun(e->fun);
      std::vector<Cell> fwds, bwds;
      for (const auto& k : e->kids) {
        Iso2 i = eval_iso(k);
        fwds.push_back(i.fwd);
        bwds.push_back(i.bwd);
      }
      return Iso2{F.on_two(fwds), F.on_two(bwds)};
    }
    case TwoExpr::K::NatCell: {
      const PsNat& n = env.nat(e->nat);
      std::vector<Cell> args;
      for (const auto& a : e->oargs) args.push_back(eval_one(a));
      return flip(n.cell(args));
    }
    case TwoExpr::K::ModCell: {
      const Modif& m = env.mod(e->mod);
      std::vector<Cell> objs;
      for (const auto& o : e->objs) objs.push_back(eval_obj(o));
      return flip(m.component(objs));
    }
    case TwoExpr::K::Assoc:
      return flip(b.assoc(eval_one(e->f), eval_one(e->g), eval_one(e->h)));
    case TwoExpr::K::Lunit: return flip(b.lunit(eval_one(e->f)));
    case TwoExpr::K::Runit: return flip(b.runit(eval_one(e->f)));
    case TwoExpr::K::CompCell: {
      const PsFun& F = env.fun(e->fun);
      std::vector<Cell> fs, gs;
      for (const auto& a : e->oargs) fs.push_back(eval_one(a));
      for (const auto& a : e->oargs2) gs.push_back(eval_one(a));
      return flip(F.compositor(fs, gs));
    }
    case TwoExpr::K::UnitCell: {
      const PsFun& F = env.fun(e->fun);
      std::vector<Cell> objs;
      for (const auto& o : e->objs) objs.push_back(eval_obj(o));
      return flip(F.unitor(objs));
    }
    case TwoExpr::K::Inv: return iso_rev(eval_iso(e->kids[0]));
  }
  throw IllFormed("eval_iso: unknown node");
}

Cell Paste::eval(const TwoP& e) const {
  const Bicat& b = *env.B;
  // Only the nodes that can hold non-invertible cells need a separate path;
  // everything structural reuses eval_iso.
  switch (e->k) {
    case TwoExpr::K::Id2: return b.id2(eval_one(e->one));
    case TwoExpr::K::Const2: return e->cell;
    case TwoExpr::K::Vert: {
      Cell acc = eval(e->kids.front());
      OneP prev_dst = boundary(e->kids.front()).second;
      for (size_t i = 1; i < e->kids.size(); ++i) {
        auto bd = boundary(e->kids[i]);
        if (eval_one(prev_dst) != eval_one(bd.first))
          acc = b.vcomp(coherence(prev_dst, bd.first).fwd, acc);
        acc = b.vcomp(eval(e->kids[i]), acc);
        prev_dst = bd.second;
      }
      return acc;
    }
    case TwoExpr::K::Horiz: return b.hcomp(eval(e->kids[0]), eval(e->kids[1]));
    case TwoExpr::K::App2: {
      const PsFun& F = env.fun(e->fun);
      std::vector<Cell> args;
      for (const auto& k : e->kids) args.push_back(eval(k));
      return F.on_two(args);
    }
    default: return eval_iso(e).fwd;
  }
}

} // namespace bk
