#include "bicatkit/para.hpp"

#include "bicatkit/memo.hpp"

namespace bk {

namespace {

std::string arr_key(const ParaArr& a) {
  return "pa[" + a.param.key() + ";" + a.mor.key() + "]";
}

} // namespace

Cell para_arr(const MonCat& c, ParaArr a) {
  Cell expect_dom = c.ten_obj(a.param, a.dom);
  if (!(c.cat.mdom(a.mor) == expect_dom) || !(c.cat.mcod(a.mor) == a.cod))
    throw IllFormed("para 1-cell: morphism boundary mismatch");
  std::string k = arr_key(a);
  return Cell::make(std::move(k), std::move(a));
}

Cell para_map(const MonCat& c, const ParaArr& src, const ParaArr& dst, const Cell& rep) {
  if (!(src.dom == dst.dom) || !(src.cod == dst.cod))
    throw BoundaryMismatch("para 2-cell: not parallel");
  if (!(c.cat.mdom(rep) == src.param) || !(c.cat.mcod(rep) == dst.param))
    throw BoundaryMismatch("para 2-cell: reparametrization boundary wrong");
  Cell lhs = c.cat.comp(dst.mor, c.ten_mor(rep, c.cat.id(src.dom)));
  if (lhs != src.mor) throw IllFormed("para 2-cell: reparametrization equation fails");
  std::string k = "2pa[" + arr_key(src) + "=>" + arr_key(dst) + ";" + rep.key() + "]";
  return Cell::make(std::move(k), ParaMap{src, dst, rep});
}

const ParaArr& para_arr_of(const Cell& c) { return c.as<ParaArr>(); }
const ParaMap& para_map_of(const Cell& c) { return c.as<ParaMap>(); }

ParaArr para_of_mor(const MonCat& c, const Cell& mor) {
  Cell dom = c.cat.mdom(mor);
  return ParaArr{dom, c.cat.mcod(mor), c.unit, c.cat.comp(mor, c.lam(dom))};
}

namespace {

ParaArr para_compose(const MonCat& c, const ParaArr& f, const ParaArr& g) {
  // f after g: g : A -> B, f : B -> C; parameter P_f (x) P_g.
  if (!(g.cod == f.dom)) throw BoundaryMismatch("para compose: boundaries disagree");
  Cell P = c.ten_obj(f.param, g.param);
  Cell mor = c.cat.comp(
      f.mor, c.cat.comp(c.ten_mor(c.cat.id(f.param), g.mor),
                        c.alpha(f.param, g.param, g.dom)));
  return ParaArr{g.dom, f.cod, P, mor};
}

ParaArr para_id(const MonCat& c, const Cell& a) { return ParaArr{a, a, c.unit, c.lam(a)}; }

} // namespace

Bicat para_bicat(std::shared_ptr<MonCat> cp) {
  const MonCat& c = *cp;
  Bicat b;
  b.name = "para:" + c.cat.name;
  b.dom1 = [cp](const Cell& f) { return para_arr_of(f).dom; };
  b.cod1 = [cp](const Cell& f) { return para_arr_of(f).cod; };
  b.src2 = [cp](const Cell& t) { return para_arr(*cp, para_map_of(t).src); };
  b.dst2 = [cp](const Cell& t) { return para_arr(*cp, para_map_of(t).dst); };
  b.id1 = [cp](const Cell& a) { return para_arr(*cp, para_id(*cp, a)); };
  auto comp_memo = std::make_shared<Memo<Cell>>();
  b.comp1 = [cp, comp_memo](const Cell& f, const Cell& g) {
    return comp_memo->get(f.key() + "|" + g.key(), [&] {
      return para_arr(*cp, para_compose(*cp, para_arr_of(f), para_arr_of(g)));
    });
  };
  b.id2 = [cp](const Cell& f) {
    const ParaArr& a = para_arr_of(f);
    return para_map(*cp, a, a, cp->cat.id(a.param));
  };
  b.vcomp = [cp](const Cell& t, const Cell& s) {
    const ParaMap& tm = para_map_of(t);
    const ParaMap& sm = para_map_of(s);
    if (!(para_arr(*cp, tm.src) == para_arr(*cp, sm.dst)))
      throw BoundaryMismatch("para vcomp: boundaries disagree");
    return para_map(*cp, sm.src, tm.dst, cp->cat.comp(tm.rep, sm.rep));
  };
  b.hcomp = [cp](const Cell& t, const Cell& s) {
    const ParaMap& tm = para_map_of(t);
    const ParaMap& sm = para_map_of(s);
    ParaArr src = para_compose(*cp, tm.src, sm.src);
    ParaArr dst = para_compose(*cp, tm.dst, sm.dst);
    return para_map(*cp, src, dst, cp->ten_mor(tm.rep, sm.rep));
  };
  b.assoc = [cp](const Cell& f, const Cell& g, const Cell& h) {
    const MonCat& c = *cp;
    const ParaArr& fa = para_arr_of(f);
    const ParaArr& ga = para_arr_of(g);
    const ParaArr& ha = para_arr_of(h);
    ParaArr lhs = para_compose(c, para_compose(c, fa, ga), ha);
    ParaArr rhs = para_compose(c, fa, para_compose(c, ga, ha));
    return Iso2{para_map(c, lhs, rhs, c.alpha(fa.param, ga.param, ha.param)),
                para_map(c, rhs, lhs, c.alpha_inv(fa.param, ga.param, ha.param))};
  };
  b.lunit = [cp](const Cell& f) {
    const MonCat& c = *cp;
    const ParaArr& fa = para_arr_of(f);
    ParaArr src = para_compose(c, para_id(c, fa.cod), fa);
    return Iso2{para_map(c, src, fa, c.lam(fa.param)),
                para_map(c, fa, src, c.lam_inv(fa.param))};
  };
  b.runit = [cp](const Cell& f) {
    const MonCat& c = *cp;
    const ParaArr& fa = para_arr_of(f);
    ParaArr src = para_compose(c, fa, para_id(c, fa.dom));
    return Iso2{para_map(c, src, fa, c.rho(fa.param)),
                para_map(c, fa, src, c.rho_inv(fa.param))};
  };
  b.objects = [cp](int cap) { return cp->cat.objects(cap); };
  auto ones_memo = std::make_shared<Memo<std::vector<Cell>>>();
  b.ones = [cp, ones_memo](const Cell& a, const Cell& bb, int cap) {
    return ones_memo->get(a.key() + "|" + bb.key() + "|" + std::to_string(cap), [&] {
      const MonCat& c = *cp;
      std::vector<Cell> out;
      for (const Cell& p : c.cat.objects(1)) {
        for (const Cell& m : c.cat.hom(c.ten_obj(p, a), bb)) {
          out.push_back(para_arr(c, ParaArr{a, bb, p, m}));
          if (static_cast<int>(out.size()) >= cap) return out;
        }
      }
      return out;
    });
  };
  auto twos_memo = std::make_shared<Memo<std::vector<Cell>>>();
  b.twos = [cp, twos_memo](const Cell& f, const Cell& g) {
    return twos_memo->get(f.key() + "|" + g.key(), [&] {
      const MonCat& c = *cp;
      const ParaArr& fa = para_arr_of(f);
      const ParaArr& ga = para_arr_of(g);
      std::vector<Cell> out;
      if (!(fa.dom == ga.dom) || !(fa.cod == ga.cod)) return out;
      for (const Cell& rep : c.cat.hom(fa.param, ga.param)) {
        if (c.cat.comp(ga.mor, c.ten_mor(rep, c.cat.id(fa.dom))) == fa.mor)
          out.push_back(para_map(c, fa, ga, rep));
      }
      return out;
    });
  };
  return b;
}

// ---------------------------------------------------------------------------
// Monoidal structure

namespace {

struct WI {
  Cell fwd, bwd;
};

// (a (x) b) (x) (c (x) d) -> (a (x) c) (x) (b (x) d)
WI middle_four(const MonCat& c, const Cell& a, const Cell& b, const Cell& d, const Cell& e) {
  // alpha; a (x) (alpha_inv; (beta (x) id); alpha); alpha_inv
  Cell bd = c.ten_obj(b, d);
  Cell db = c.ten_obj(d, b);
  auto id = [&](const Cell& x) { return c.cat.id(x); };
  Cell inner_f = c.cat.comp(
      c.alpha(d, b, e),
      c.cat.comp(c.ten_mor(c.braid(b, d), id(e)), c.alpha_inv(b, d, e)));
  Cell inner_b = c.cat.comp(
      c.alpha(b, d, e),
      c.cat.comp(c.ten_mor(c.braid(d, b), id(e)), c.alpha_inv(d, b, e)));
  Cell fwd = c.cat.comp(
      c.alpha_inv(a, d, c.ten_obj(b, e)),
      c.cat.comp(c.ten_mor(id(a), inner_f), c.alpha(a, b, c.ten_obj(d, e))));
  Cell bwd = c.cat.comp(
      c.alpha_inv(a, b, c.ten_obj(d, e)),
      c.cat.comp(c.ten_mor(id(a), inner_b), c.alpha(a, d, c.ten_obj(b, e))));
  (void)bd;
  (void)db;
  return {fwd, bwd};
}

ParaArr para_ten(const MonCat& c, const ParaArr& f, const ParaArr& g) {
  Cell P = c.ten_obj(f.param, g.param);
  Cell dom = c.ten_obj(f.dom, g.dom);
  Cell cod = c.ten_obj(f.cod, g.cod);
  WI m4 = middle_four(c, f.param, g.param, f.dom, g.dom);
  Cell mor = c.cat.comp(c.ten_mor(f.mor, g.mor), m4.fwd);
  return ParaArr{dom, cod, P, mor};
}

Modif para_canonical_mod(std::shared_ptr<MonCat> cp, std::shared_ptr<Env> envp,
                         const std::string& name, int arity,
                         std::function<OneP(const std::vector<ObjP>&)> src,
                         std::function<OneP(const std::vector<ObjP>&)> dst) {
  Modif mo;
  mo.name = name;
  mo.arity = arity;
  mo.src_of = src;
  mo.dst_of = dst;
  mo.component = [cp, envp, src, dst](const std::vector<Cell>& objs) {
    const MonCat& c = *cp;
    Paste p(*envp);
    std::vector<ObjP> os;
    for (const Cell& o : objs) os.push_back(ob(o));
    OneP se = src(os);
    OneP de = dst(os);
    Cell sc = p.eval_one(se);
    Cell dc = p.eval_one(de);
    auto [fwd, bwd] = mc_coherence(c, para_param_word(c, se), para_param_word(c, de));
    return Iso2{para_map(c, para_arr_of(sc), para_arr_of(dc), fwd),
                para_map(c, para_arr_of(dc), para_arr_of(sc), bwd)};
  };
  return mo;
}

} // namespace

WordP para_param_word(const MonCat& c, const OneP& e) {
  switch (e->k) {
    case OneExpr::K::Const: return w_leaf(para_arr_of(e->cell).param);
    case OneExpr::K::Id: return w_unit();
    case OneExpr::K::Comp:
      return w_ten(para_param_word(c, e->lhs), para_param_word(c, e->rhs));
    case OneExpr::K::App:
      if (e->fun == "ten")
        return w_ten(para_param_word(c, e->fargs[0]), para_param_word(c, e->fargs[1]));
      return para_param_word(c, e->fargs[0]); // endofunctor applications keep the parameter
    case OneExpr::K::Nat: return w_unit();    // structural components have parameter I
  }
  throw IllFormed("para_param_word");
}

ParaWorld para_world(std::shared_ptr<MonCat> cp) {
  if (!cp->symmetric) throw IllFormed("para_world: host category must be symmetric");
  ParaWorld w;
  w.C = cp;
  w.mb.host = std::make_shared<Bicat>(para_bicat(cp));
  w.mb.env = std::make_shared<Env>();
  w.mb.env->B = w.mb.host.get();
  w.mb.unit = cp->unit;
  w.mb.symmetric = true;
  Env& env = *w.mb.env;
  const MonCat& c = *cp;

  PsFun ten;
  ten.name = "ten";
  ten.arity = 2;
  ten.on_obj = [cp](const std::vector<Cell>& a) { return cp->ten_obj(a[0], a[1]); };
  ten.on_one = [cp](const std::vector<Cell>& f) {
    return para_arr(*cp, para_ten(*cp, para_arr_of(f[0]), para_arr_of(f[1])));
  };
  ten.on_two = [cp](const std::vector<Cell>& t) {
    const ParaMap& a = para_map_of(t[0]);
    const ParaMap& b = para_map_of(t[1]);
    return para_map(*cp, para_ten(*cp, a.src, b.src), para_ten(*cp, a.dst, b.dst),
                    cp->ten_mor(a.rep, b.rep));
  };
  ten.compositor = [cp](const std::vector<Cell>& f, const std::vector<Cell>& g) {
    const MonCat& c = *cp;
    const ParaArr& f0 = para_arr_of(f[0]);
    const ParaArr& f1 = para_arr_of(f[1]);
    const ParaArr& g0 = para_arr_of(g[0]);
    const ParaArr& g1 = para_arr_of(g[1]);
    ParaArr lhs = para_compose(c, para_ten(c, f0, f1), para_ten(c, g0, g1));
    ParaArr rhs = para_ten(c, para_compose(c, f0, g0), para_compose(c, f1, g1));
    WI m4 = middle_four(c, f0.param, f1.param, g0.param, g1.param);
    return Iso2{para_map(c, lhs, rhs, m4.fwd), para_map(c, rhs, lhs, m4.bwd)};
  };
  ten.unitor = [cp](const std::vector<Cell>& a) {
    const MonCat& c = *cp;
    ParaArr idp = para_id(c, c.ten_obj(a[0], a[1]));
    ParaArr tid = para_ten(c, para_id(c, a[0]), para_id(c, a[1]));
    return Iso2{para_map(c, idp, tid, c.lam_inv(c.unit)),
                para_map(c, tid, idp, c.lam(c.unit))};
  };
  env.add(ten);

  // A pseudonatural family lifted from a structural isomorphism of C. The
  // naturality cell reparametrizes by the canonical word coherence.
  auto lift_nat = [cp, &env](const std::string& name, int arity,
                             std::function<Cell(const MonCat&, const std::vector<Cell>&)> comp_mor,
                             std::function<OneP(const std::vector<OneP>&)> dom_fun,
                             std::function<OneP(const std::vector<OneP>&)> cod_fun,
                             std::function<TwoP(const std::vector<TwoP>&)> dom_fun2,
                             std::function<TwoP(const std::vector<TwoP>&)> cod_fun2) {
    PsNat n;
    n.name = name;
    n.arity = arity;
    n.component = [cp, comp_mor](const std::vector<Cell>& a) {
      return para_arr(*cp, para_of_mor(*cp, comp_mor(*cp, a)));
    };
    n.cell = [cp, comp_mor, dom_fun, cod_fun](const std::vector<Cell>& u) {
      const MonCat& c = *cp;
      std::vector<Cell> doms, cods;
      std::vector<OneP> ue;
      for (const Cell& x : u) {
        doms.push_back(para_arr_of(x).dom);
        cods.push_back(para_arr_of(x).cod);
        ue.push_back(onecell(x));
      }
      ParaArr comp_d = para_of_mor(c, comp_mor(c, doms));
      ParaArr comp_c = para_of_mor(c, comp_mor(c, cods));
      // src: comp(cod) . F(u); dst: G(u) . comp(dom);
      // F(u) and G(u) are tensor words of the us, assembled with para_ten.
      std::function<ParaArr(const OneP&)> evalOne = [&](const OneP& e) -> ParaArr {
        switch (e->k) {
          case OneExpr::K::Const: return para_arr_of(e->cell);
          case OneExpr::K::Id: return para_id(c, e->obj->cell);
          case OneExpr::K::Comp: return para_compose(c, evalOne(e->lhs), evalOne(e->rhs));
          case OneExpr::K::App: return para_ten(c, evalOne(e->fargs[0]), evalOne(e->fargs[1]));
          default: throw IllFormed("lift_nat: unsupported expression");
        }
      };
      ParaArr Fu = evalOne(dom_fun(ue));
      ParaArr Gu = evalOne(cod_fun(ue));
      ParaArr src = para_compose(c, comp_c, Fu);
      ParaArr dst = para_compose(c, Gu, comp_d);
      WordP wsrc = w_ten(w_unit(), para_param_word(c, dom_fun(ue)));
      WordP wdst = w_ten(para_param_word(c, cod_fun(ue)), w_unit());
      auto [fwd, bwd] = mc_coherence(c, wsrc, wdst);
      return Iso2{para_map(c, src, dst, fwd), para_map(c, dst, src, bwd)};
    };
    n.dom_fun = std::move(dom_fun);
    n.cod_fun = std::move(cod_fun);
    n.dom_fun2 = std::move(dom_fun2);
    n.cod_fun2 = std::move(cod_fun2);
    env.add(n);
  };

  lift_nat("alpha", 3,
           [](const MonCat& c, const std::vector<Cell>& a) { return c.alpha(a[0], a[1], a[2]); },
           [](const std::vector<OneP>& u) { return oapp("ten", {oapp("ten", {u[0], u[1]}), u[2]}); },
           [](const std::vector<OneP>& u) { return oapp("ten", {u[0], oapp("ten", {u[1], u[2]})}); },
           [](const std::vector<TwoP>& u) { return tapp("ten", {tapp("ten", {u[0], u[1]}), u[2]}); },
           [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], tapp("ten", {u[1], u[2]})}); });
  lift_nat("alpha_r", 3,
           [](const MonCat& c, const std::vector<Cell>& a) { return c.alpha_inv(a[0], a[1], a[2]); },
           [](const std::vector<OneP>& u) { return oapp("ten", {u[0], oapp("ten", {u[1], u[2]})}); },
           [](const std::vector<OneP>& u) { return oapp("ten", {oapp("ten", {u[0], u[1]}), u[2]}); },
           [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], tapp("ten", {u[1], u[2]})}); },
           [](const std::vector<TwoP>& u) { return tapp("ten", {tapp("ten", {u[0], u[1]}), u[2]}); });

  ObjP I = ob(c.unit);
  lift_nat("lam", 1, [](const MonCat& c, const std::vector<Cell>& a) { return c.lam(a[0]); },
           [I](const std::vector<OneP>& u) { return oapp("ten", {oid(I), u[0]}); },
           [](const std::vector<OneP>& u) { return u[0]; },
           [I](const std::vector<TwoP>& u) { return tapp("ten", {tid(oid(I)), u[0]}); },
           [](const std::vector<TwoP>& u) { return u[0]; });
  lift_nat("lam_r", 1, [](const MonCat& c, const std::vector<Cell>& a) { return c.lam_inv(a[0]); },
           [](const std::vector<OneP>& u) { return u[0]; },
           [I](const std::vector<OneP>& u) { return oapp("ten", {oid(I), u[0]}); },
           [](const std::vector<TwoP>& u) { return u[0]; },
           [I](const std::vector<TwoP>& u) { return tapp("ten", {tid(oid(I)), u[0]}); });
  lift_nat("rho", 1, [](const MonCat& c, const std::vector<Cell>& a) { return c.rho(a[0]); },
           [I](const std::vector<OneP>& u) { return oapp("ten", {u[0], oid(I)}); },
           [](const std::vector<OneP>& u) { return u[0]; },
           [I](const std::vector<TwoP>& u) { return tapp("ten", {u[0], tid(oid(I))}); },
           [](const std::vector<TwoP>& u) { return u[0]; });
  lift_nat("rho_r", 1, [](const MonCat& c, const std::vector<Cell>& a) { return c.rho_inv(a[0]); },
           [](const std::vector<OneP>& u) { return u[0]; },
           [I](const std::vector<OneP>& u) { return oapp("ten", {u[0], oid(I)}); },
           [](const std::vector<TwoP>& u) { return u[0]; },
           [I](const std::vector<TwoP>& u) { return tapp("ten", {u[0], tid(oid(I))}); });

  // Braiding needs an explicit block swap in the reparametrization.
  {
    PsNat beta;
    beta.name = "beta";
    beta.arity = 2;
    beta.component = [cp](const std::vector<Cell>& a) {
      return para_arr(*cp, para_of_mor(*cp, cp->braid(a[0], a[1])));
    };
    beta.cell = [cp](const std::vector<Cell>& u) {
      const MonCat& c = *cp;
      const ParaArr& x = para_arr_of(u[0]);
      const ParaArr& y = para_arr_of(u[1]);
      ParaArr comp_d = para_of_mor(c, c.braid(x.dom, y.dom));
      ParaArr comp_c = para_of_mor(c, c.braid(x.cod, y.cod));
      ParaArr src = para_compose(c, comp_c, para_ten(c, x, y));
      ParaArr dst = para_compose(c, para_ten(c, y, x), comp_d);
      Cell pxy = c.ten_obj(x.param, y.param);
      Cell pyx = c.ten_obj(y.param, x.param);
      Cell fwd = c.cat.comp(c.rho_inv(pyx), c.cat.comp(c.braid(x.param, y.param), c.lam(pxy)));
      Cell bwd = c.cat.comp(c.lam_inv(pxy), c.cat.comp(c.braid(y.param, x.param), c.rho(pyx)));
      return Iso2{para_map(c, src, dst, fwd), para_map(c, dst, src, bwd)};
    };
    beta.dom_fun = [](const std::vector<OneP>& u) { return oapp("ten", {u[0], u[1]}); };
    beta.cod_fun = [](const std::vector<OneP>& u) { return oapp("ten", {u[1], u[0]}); };
    beta.dom_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], u[1]}); };
    beta.cod_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[1], u[0]}); };
    env.add(beta);

    PsNat br = beta;
    br.name = "beta_r";
    br.component = [cp](const std::vector<Cell>& a) {
      return para_arr(*cp, para_of_mor(*cp, cp->braid_inv(a[0], a[1])));
    };
    br.cell = [cp](const std::vector<Cell>& u) {
      const MonCat& c = *cp;
      const ParaArr& x = para_arr_of(u[0]);
      const ParaArr& y = para_arr_of(u[1]);
      ParaArr comp_d = para_of_mor(c, c.braid_inv(x.dom, y.dom));
      ParaArr comp_c = para_of_mor(c, c.braid_inv(x.cod, y.cod));
      ParaArr src = para_compose(c, comp_c, para_ten(c, y, x));
      ParaArr dst = para_compose(c, para_ten(c, x, y), comp_d);
      Cell pxy = c.ten_obj(x.param, y.param);
      Cell pyx = c.ten_obj(y.param, x.param);
      Cell fwd = c.cat.comp(c.rho_inv(pxy), c.cat.comp(c.braid(y.param, x.param), c.lam(pyx)));
      Cell bwd = c.cat.comp(c.lam_inv(pyx), c.cat.comp(c.braid(x.param, y.param), c.rho(pxy)));
      return Iso2{para_map(c, src, dst, fwd), para_map(c, dst, src, bwd)};
    };
    br.dom_fun = [](const std::vector<OneP>& u) { return oapp("ten", {u[1], u[0]}); };
    br.cod_fun = [](const std::vector<OneP>& u) { return oapp("ten", {u[0], u[1]}); };
    br.dom_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[1], u[0]}); };
    br.cod_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], u[1]}); };
    env.add(br);
  }

  // Equivalence witnesses and structural modifications: all components are
  // canonical reparametrizations between unit words, derived from the
  // boundary expressions.
  auto word_mod = [cp, envp = w.mb.env](const std::string& name, int arity,
                                        std::function<OneP(const std::vector<ObjP>&)> src,
                                        std::function<OneP(const std::vector<ObjP>&)> dst) {
    Modif mo;
    mo.name = name;
    mo.arity = arity;
    mo.src_of = src;
    mo.dst_of = dst;
    mo.component = [cp, envp, src, dst](const std::vector<Cell>& objs) {
      const MonCat& c = *cp;
      Paste p(*envp);
      std::vector<ObjP> os;
      for (const Cell& o : objs) os.push_back(ob(o));
      OneP se = src(os);
      OneP de = dst(os);
      Cell sc = p.eval_one(se);
      Cell dc = p.eval_one(de);
      auto [fwd, bwd] = mc_coherence(c, para_param_word(c, se), para_param_word(c, de));
      return Iso2{para_map(c, para_arr_of(sc), para_arr_of(dc), fwd),
                  para_map(c, para_arr_of(dc), para_arr_of(sc), bwd)};
    };
    return mo;
  };

  Env& e2 = *w.mb.env;
  e2.add(word_mod("alpha_unit", 3,
      [](const std::vector<ObjP>& o) {
        return oid(obapp("ten", {obapp("ten", {o[0], o[1]}), o[2]}));
      },
      [](const std::vector<ObjP>& o) { return ocomp(onat("alpha_r", o), onat("alpha", o)); }));
  e2.add(word_mod("alpha_counit", 3,
      [](const std::vector<ObjP>& o) { return ocomp(onat("alpha", o), onat("alpha_r", o)); },
      [](const std::vector<ObjP>& o) {
        return oid(obapp("ten", {o[0], obapp("ten", {o[1], o[2]})}));
      }));
  for (const std::string nm : {"lam", "rho"}) {
    bool is_rho = nm == "rho";
    e2.add(word_mod(nm + "_unit", 1,
        [I, is_rho](const std::vector<ObjP>& o) {
          return oid(is_rho ? obapp("ten", {o[0], I}) : obapp("ten", {I, o[0]}));
        },
        [nm](const std::vector<ObjP>& o) { return ocomp(onat(nm + "_r", o), onat(nm, o)); }));
    e2.add(word_mod(nm + "_counit", 1,
        [nm](const std::vector<ObjP>& o) { return ocomp(onat(nm, o), onat(nm + "_r", o)); },
        [](const std::vector<ObjP>& o) { return oid(o[0]); }));
  }
  e2.add(word_mod("beta_unit", 2,
      [](const std::vector<ObjP>& o) { return oid(obapp("ten", {o[0], o[1]})); },
      [](const std::vector<ObjP>& o) { return ocomp(onat("beta_r", o), onat("beta", o)); }));
  e2.add(word_mod("beta_counit", 2,
      [](const std::vector<ObjP>& o) { return ocomp(onat("beta", o), onat("beta_r", o)); },
      [](const std::vector<ObjP>& o) { return oid(obapp("ten", {o[1], o[0]})); }));

  e2.add(word_mod("pmod", 4,
      [](const std::vector<ObjP>& o) {
        return ocomp({oapp("ten", {oid(o[0]), onat("alpha", {o[1], o[2], o[3]})}),
                      onat("alpha", {o[0], obapp("ten", {o[1], o[2]}), o[3]}),
                      oapp("ten", {onat("alpha", {o[0], o[1], o[2]}), oid(o[3])})});
      },
      [](const std::vector<ObjP>& o) {
        return ocomp(onat("alpha", {o[0], o[1], obapp("ten", {o[2], o[3]})}),
                     onat("alpha", {obapp("ten", {o[0], o[1]}), o[2], o[3]}));
      }));
  e2.add(word_mod("mmod", 2,
      [I](const std::vector<ObjP>& o) {
        return ocomp(oapp("ten", {oid(o[0]), onat("lam", {o[1]})}),
                     onat("alpha", {o[0], I, o[1]}));
      },
      [](const std::vector<ObjP>& o) { return oapp("ten", {onat("rho", {o[0]}), oid(o[1])}); }));
  e2.add(word_mod("lmod", 2,
      [](const std::vector<ObjP>& o) { return oapp("ten", {onat("lam", {o[0]}), oid(o[1])}); },
      [I](const std::vector<ObjP>& o) {
        return ocomp(onat("lam", {obapp("ten", {o[0], o[1]})}),
                     onat("alpha", {I, o[0], o[1]}));
      }));
  e2.add(word_mod("rmod", 2,
      [](const std::vector<ObjP>& o) { return onat("rho", {obapp("ten", {o[0], o[1]})}); },
      [I](const std::vector<ObjP>& o) {
        return ocomp(oapp("ten", {oid(o[0]), onat("rho", {o[1]})}),
                     onat("alpha", {o[0], o[1], I}));
      }));

  w.mb.canonical_mod = [cp, envp = w.mb.env](const std::string& name, int arity,
                                             std::function<OneP(const std::vector<ObjP>&)> src,
                                             std::function<OneP(const std::vector<ObjP>&)> dst) {
    return para_canonical_mod(cp, envp, name, arity, std::move(src), std::move(dst));
  };

  return w;
}

// ---------------------------------------------------------------------------
// Induced pseudomonad

PseudomonadBundle para_pseudomonad(ParaWorld& w, const StrongMonad& t) {
  auto cp = w.C;
  const MonCat& c = *cp;
  Env& env = w.E();
  auto ts = std::make_shared<StrongMonad>(t);

  PsFun T;
  T.name = "T";
  T.arity = 1;
  T.on_obj = [ts](const std::vector<Cell>& a) { return ts->T.on_obj(a[0]); };
  T.on_one = [cp, ts](const std::vector<Cell>& f) {
    const MonCat& c = *cp;
    const ParaArr& fa = para_arr_of(f[0]);
    Cell mor = c.cat.comp(ts->T.on_mor(fa.mor), ts->strength(fa.param, fa.dom));
    return para_arr(c, ParaArr{ts->T.on_obj(fa.dom), ts->T.on_obj(fa.cod), fa.param, mor});
  };
  T.on_two = [cp, ts, T](const std::vector<Cell>& x) {
    const MonCat& c = *cp;
    const ParaMap& m = para_map_of(x[0]);
    Cell src = T.on_one({para_arr(c, m.src)});
    Cell dst = T.on_one({para_arr(c, m.dst)});
    return para_map(c, para_arr_of(src), para_arr_of(dst), m.rep);
  };
  T.compositor = [cp, T](const std::vector<Cell>& f, const std::vector<Cell>& g) {
    const MonCat& c = *cp;
    Cell tf = T.on_one(f), tg = T.on_one(g);
    ParaArr lhs = para_compose(c, para_arr_of(tf), para_arr_of(tg));
    Cell fg = para_arr(c, para_compose(c, para_arr_of(f[0]), para_arr_of(g[0])));
    ParaArr rhs = para_arr_of(T.on_one({fg}));
    Cell idp = c.cat.id(lhs.param);
    return Iso2{para_map(c, lhs, rhs, idp), para_map(c, rhs, lhs, idp)};
  };
  T.unitor = [cp, ts](const std::vector<Cell>& a) {
    const MonCat& c = *cp;
    Cell ta = ts->T.on_obj(a[0]);
    ParaArr idT = para_id(c, ta);
    Cell tid_mor = c.cat.comp(ts->T.on_mor(c.lam(a[0])), ts->strength(c.unit, a[0]));
    ParaArr Tid{ta, ta, c.unit, tid_mor};
    Cell idp = c.cat.id(c.unit);
    return Iso2{para_map(c, idT, Tid, idp), para_map(c, Tid, idT, idp)};
  };
  env.add(T);

  auto lifted_nat = [cp, &env](const std::string& name, std::function<Cell(const Cell&)> comp_mor,
                               std::function<OneP(const std::vector<OneP>&)> dom_fun,
                               std::function<OneP(const std::vector<OneP>&)> cod_fun,
                               std::function<TwoP(const std::vector<TwoP>&)> dom_fun2,
                               std::function<TwoP(const std::vector<TwoP>&)> cod_fun2) {
    PsNat n;
    n.name = name;
    n.arity = 1;
    n.component = [cp, comp_mor](const std::vector<Cell>& a) {
      return para_arr(*cp, para_of_mor(*cp, comp_mor(a[0])));
    };
    const Env* envp = &env;
    n.cell = [cp, comp_mor, dom_fun, cod_fun, envp](const std::vector<Cell>& u) {
      const MonCat& c = *cp;
      Paste p(*envp);
      const ParaArr& x = para_arr_of(u[0]);
      OneP ue = onecell(u[0]);
      ParaArr comp_d = para_of_mor(c, comp_mor(x.dom));
      ParaArr comp_c = para_of_mor(c, comp_mor(x.cod));
      Cell Fu = p.eval_one(dom_fun({ue}));
      Cell Gu = p.eval_one(cod_fun({ue}));
      ParaArr src = para_compose(c, comp_c, para_arr_of(Fu));
      ParaArr dst = para_compose(c, para_arr_of(Gu), comp_d);
      Cell pp = x.param;
      Cell fwd = c.cat.comp(c.rho_inv(pp), c.lam(pp));
      Cell bwd = c.cat.comp(c.lam_inv(pp), c.rho(pp));
      return Iso2{para_map(c, src, dst, fwd), para_map(c, dst, src, bwd)};
    };
    n.dom_fun = std::move(dom_fun);
    n.cod_fun = std::move(cod_fun);
    n.dom_fun2 = std::move(dom_fun2);
    n.cod_fun2 = std::move(cod_fun2);
    env.add(n);
  };

  lifted_nat("eta", [ts](const Cell& a) { return ts->eta(a); },
             [](const std::vector<OneP>& u) { return u[0]; },
             [](const std::vector<OneP>& u) { return oapp("T", {u[0]}); },
             [](const std::vector<TwoP>& u) { return u[0]; },
             [](const std::vector<TwoP>& u) { return tapp("T", {u[0]}); });
  lifted_nat("mu", [ts](const Cell& a) { return ts->mu(a); },
             [](const std::vector<OneP>& u) { return oapp("T", {oapp("T", {u[0]})}); },
             [](const std::vector<OneP>& u) { return oapp("T", {u[0]}); },
             [](const std::vector<TwoP>& u) { return tapp("T", {tapp("T", {u[0]})}); },
             [](const std::vector<TwoP>& u) { return tapp("T", {u[0]}); });

  // m, n, p: canonical unit-word reparametrizations.
  auto word_mod = [cp, envp = w.mb.env](const std::string& name,
                                        std::function<OneP(const std::vector<ObjP>&)> src,
                                        std::function<OneP(const std::vector<ObjP>&)> dst) {
    Modif mo;
    mo.name = name;
    mo.arity = 1;
    mo.src_of = src;
    mo.dst_of = dst;
    mo.component = [cp, envp, src, dst](const std::vector<Cell>& objs) {
      const MonCat& c = *cp;
      Paste p(*envp);
      std::vector<ObjP> os{ob(objs[0])};
      OneP se = src(os);
      OneP de = dst(os);
      Cell sc = p.eval_one(se);
      Cell dc = p.eval_one(de);
      auto [fwd, bwd] = mc_coherence(c, para_param_word(c, se), para_param_word(c, de));
      return Iso2{para_map(c, para_arr_of(sc), para_arr_of(dc), fwd),
                  para_map(c, para_arr_of(dc), para_arr_of(sc), bwd)};
    };
    return mo;
  };

  env.add(word_mod("mmon",
      [](const std::vector<ObjP>& o) {
        return ocomp(onat("mu", o), oapp("T", {onat("mu", o)}));
      },
      [](const std::vector<ObjP>& o) {
        return ocomp(onat("mu", o), onat("mu", {obapp("T", o)}));
      }));
  env.add(word_mod("nmon",
      [](const std::vector<ObjP>& o) {
        return ocomp(onat("mu", o), onat("eta", {obapp("T", o)}));
      },
      [](const std::vector<ObjP>& o) { return oid(obapp("T", o)); }));
  env.add(word_mod("pmon",
      [](const std::vector<ObjP>& o) {
        return ocomp(onat("mu", o), oapp("T", {onat("eta", o)}));
      },
      [](const std::vector<ObjP>& o) { return oid(obapp("T", o)); }));

  return PseudomonadBundle{};
}

StrengthBundle para_strength(ParaWorld& w, const StrongMonad& t) {
  auto cp = w.C;
  Env& env = w.E();
  auto ts = std::make_shared<StrongMonad>(t);
  StrengthBundle s;

  PsNat str;
  str.name = s.t;
  str.arity = 2;
  str.component = [cp, ts](const std::vector<Cell>& a) {
    return para_arr(*cp, para_of_mor(*cp, ts->strength(a[0], a[1])));
  };
  const Env* envp = w.mb.env.get();
  str.dom_fun = [](const std::vector<OneP>& u) {
    return oapp("ten", {u[0], oapp("T", {u[1]})});
  };
  str.cod_fun = [](const std::vector<OneP>& u) { return oapp("T", {oapp("ten", {u[0], u[1]})}); };
  str.dom_fun2 = [](const std::vector<TwoP>& u) {
    return tapp("ten", {u[0], tapp("T", {u[1]})});
  };
  str.cod_fun2 = [](const std::vector<TwoP>& u) { return tapp("T", {tapp("ten", {u[0], u[1]})}); };
  auto dom_fun = str.dom_fun;
  auto cod_fun = str.cod_fun;
  str.cell = [cp, ts, envp, dom_fun, cod_fun](const std::vector<Cell>& u) {
    const MonCat& c = *cp;
    Paste p(*envp);
    std::vector<OneP> ue{onecell(u[0]), onecell(u[1])};
    const ParaArr& x = para_arr_of(u[0]);
    const ParaArr& y = para_arr_of(u[1]);
    ParaArr comp_d = para_of_mor(c, ts->strength(x.dom, y.dom));
    ParaArr comp_c = para_of_mor(c, ts->strength(x.cod, y.cod));
    ParaArr Fu = para_arr_of(p.eval_one(dom_fun(ue)));
    ParaArr Gu = para_arr_of(p.eval_one(cod_fun(ue)));
    ParaArr src = para_compose(c, comp_c, Fu);
    ParaArr dst = para_compose(c, Gu, comp_d);
    Cell pp = Fu.param;
    Cell fwd = c.cat.comp(c.rho_inv(pp), c.lam(pp));
    Cell bwd = c.cat.comp(c.lam_inv(pp), c.rho(pp));
    return Iso2{para_map(c, src, dst, fwd), para_map(c, dst, src, bwd)};
  };
  env.add(str);

  register_strength_mods(w.mb, PseudomonadBundle{}, s);
  return s;
}

} // namespace bk
