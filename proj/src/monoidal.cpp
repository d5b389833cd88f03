#include "bicatkit/monoidal.hpp"

#include "bicatkit/law_runner.hpp"

namespace bk {

SetMonStructure setmon_product() {
  SetMonStructure s;
  s.name = "x";
  s.unit = FinSet::of({"*"});
  s.ten = [](const FinSet& a, const FinSet& b) { return product(a, b).object; };
  s.ten_fn = [](const FinFn& f, const FinFn& g) { return product_fn(f, g); };
  s.alpha = [](const FinSet& a, const FinSet& b, const FinSet& c) {
    FinSet ab = product(a, b).object;
    FinSet bc = product(b, c).object;
    return FinFn::from_map(product(ab, c).object, product(a, bc).object, [](const Label& x) {
      return Label::pair(x.first().first(), Label::pair(x.first().second(), x.second()));
    });
  };
  FinSet unit = s.unit;
  s.lam = [unit](const FinSet& a) {
    return FinFn::from_map(product(unit, a).object, a,
                           [](const Label& x) { return x.second(); });
  };
  s.rho = [unit](const FinSet& a) {
    return FinFn::from_map(product(a, unit).object, a,
                           [](const Label& x) { return x.first(); });
  };
  s.braid = [](const FinSet& a, const FinSet& b) {
    return FinFn::from_map(product(a, b).object, product(b, a).object, [](const Label& x) {
      return Label::pair(x.second(), x.first());
    });
  };
  s.interleave = [](const Label& u, const Label& v) {
    // ((x',y'),(x,y)) -> ((x',x),(y',y))
    return Label::pair(Label::pair(u.first(), v.first()), Label::pair(u.second(), v.second()));
  };
  return s;
}

SetMonStructure setmon_coproduct() {
  SetMonStructure s;
  s.name = "+";
  s.unit = FinSet(Labels{});
  s.ten = [](const FinSet& a, const FinSet& b) { return coproduct(a, b).object; };
  s.ten_fn = [](const FinFn& f, const FinFn& g) { return coproduct_fn(f, g); };
  s.alpha = [](const FinSet& a, const FinSet& b, const FinSet& c) {
    FinSet ab = coproduct(a, b).object;
    FinSet bc = coproduct(b, c).object;
    return FinFn::from_map(coproduct(ab, c).object, coproduct(a, bc).object,
                           [](const Label& x) {
      if (x.text() == "inl") {
        const Label& y = x.inner();
        if (y.text() == "inl") return Label::tag("inl", y.inner());
        return Label::tag("inr", Label::tag("inl", y.inner()));
      }
      return Label::tag("inr", Label::tag("inr", x.inner()));
    });
  };
  FinSet unit = s.unit;
  s.lam = [unit](const FinSet& a) {
    return FinFn::from_map(coproduct(unit, a).object, a,
                           [](const Label& x) { return x.inner(); });
  };
  s.rho = [unit](const FinSet& a) {
    return FinFn::from_map(coproduct(a, unit).object, a,
                           [](const Label& x) { return x.inner(); });
  };
  s.braid = [](const FinSet& a, const FinSet& b) {
    return FinFn::from_map(coproduct(a, b).object, coproduct(b, a).object, [](const Label& x) {
      return Label::tag(x.text() == "inl" ? "inr" : "inl", x.inner());
    });
  };
  s.interleave = [](const Label& u, const Label& v) {
    if (u.text() != v.text()) throw IllFormed("coproduct interleave: tag mismatch");
    return Label::tag(u.text(), Label::pair(u.inner(), v.inner()));
  };
  return s;
}

// Pseudonaturality cell for a structural span family: given the combined
// source span Fu, target span Gu, the structural bijections at the boundary
// objects and at the apexes, produce the mediating iso between
//   span(fn_cod) . Fu   and   Gu . span(fn_dom).
Iso2 span_struct_nat_cell(const SpanArr& Fu, const SpanArr& Gu, const FinFn& fn_dom,
                          const FinFn& fn_cod, const FinFn& apex_fn) {
  SpanArr csrc = span_compose(span_of_fn(fn_cod), Fu);
  SpanArr cdst = span_compose(Gu, span_of_fn(fn_dom));
  FinFn fwd = FinFn::from_map(csrc.apex, cdst.apex, [&](const Label& e) {
    const Label& s = e.first(); // (s, t) with t = Fu.right(s)
    return Label::pair(Fu.left(s), apex_fn(s));
  });
  FinFn apex_inv = apex_fn.inverse();
  FinFn bwd = FinFn::from_map(cdst.apex, csrc.apex, [&](const Label& e) {
    Label s = apex_inv(e.second());
    return Label::pair(s, Fu.right(s));
  });
  return Iso2{span_map(csrc, cdst, fwd), span_map(cdst, csrc, bwd)};
}

namespace {

struct SpanTen {
  SetMonStructure s;

  SpanArr ten(const SpanArr& a, const SpanArr& b) const {
    return SpanArr{s.ten(a.dom, b.dom), s.ten(a.cod, b.cod), s.ten(a.apex, b.apex),
                   s.ten_fn(a.left, b.left), s.ten_fn(a.right, b.right)};
  }
};

Modif span_mediator_mod(std::string name, int arity, std::shared_ptr<Env> env,
                        std::function<OneP(const std::vector<ObjP>&)> src,
                        std::function<OneP(const std::vector<ObjP>&)> dst) {
  Modif m;
  m.name = std::move(name);
  m.arity = arity;
  m.src_of = src;
  m.dst_of = dst;
  m.component = [env, src, dst](const std::vector<Cell>& objs) {
    Paste p(*env);
    std::vector<ObjP> os;
    for (const Cell& o : objs) os.push_back(ob(o));
    Cell sc = p.eval_one(src(os));
    Cell dc = p.eval_one(dst(os));
    return span_unique_mediator_iso(span_arr_of(sc), span_arr_of(dc));
  };
  return m;
}

} // namespace

MonoidalBicat span_monoidal(const SetMonStructure& sm) {
  MonoidalBicat m;
  m.host = std::make_shared<Bicat>(span_bicat());
  m.host->name = "span-finset[" + sm.name + "]";
  m.env = std::make_shared<Env>();
  m.env->B = m.host.get();
  m.unit = span_obj(sm.unit);
  m.symmetric = true;

  SpanTen st{sm};
  SetMonStructure s = sm;

  PsFun ten;
  ten.name = "ten";
  ten.arity = 2;
  ten.on_obj = [s](const std::vector<Cell>& a) {
    return span_obj(s.ten(span_obj_set(a[0]), span_obj_set(a[1])));
  };
  ten.on_one = [st](const std::vector<Cell>& f) {
    return span_arr(st.ten(span_arr_of(f[0]), span_arr_of(f[1])));
  };
  ten.on_two = [st, s](const std::vector<Cell>& t) {
    const SpanMap& a = span_map_of(t[0]);
    const SpanMap& b = span_map_of(t[1]);
    return span_map(st.ten(a.src, b.src), st.ten(a.dst, b.dst), s.ten_fn(a.fn, b.fn));
  };
  ten.compositor = [st, s](const std::vector<Cell>& f, const std::vector<Cell>& g) {
    SpanArr F = st.ten(span_arr_of(f[0]), span_arr_of(f[1]));
    SpanArr G = st.ten(span_arr_of(g[0]), span_arr_of(g[1]));
    SpanArr lhs = span_compose(F, G);
    SpanArr rhs = st.ten(span_compose(span_arr_of(f[0]), span_arr_of(g[0])),
                         span_compose(span_arr_of(f[1]), span_arr_of(g[1])));
    FinFn fwd = FinFn::from_map(lhs.apex, rhs.apex, [&s](const Label& e) {
      return s.interleave(e.first(), e.second());
    });
    return Iso2{span_map(lhs, rhs, fwd), span_map(rhs, lhs, fwd.inverse())};
  };
  ten.unitor = [st, s](const std::vector<Cell>& a) {
    SpanArr id2 = st.ten(span_identity(span_obj_set(a[0])), span_identity(span_obj_set(a[1])));
    Cell c = span_map(id2, id2, FinFn::identity(id2.apex));
    return Iso2{c, c}; // ten of identity spans is literally the identity span
  };
  m.env->add(ten);

  auto obI = ob(m.unit);

  // alpha and its chosen reverse.
  {
    PsNat alpha;
    alpha.name = "alpha";
    alpha.arity = 3;
    alpha.component = [s](const std::vector<Cell>& a) {
      return span_arr(span_of_fn(
          s.alpha(span_obj_set(a[0]), span_obj_set(a[1]), span_obj_set(a[2]))));
    };
    alpha.cell = [s, st](const std::vector<Cell>& u) {
      const SpanArr& x = span_arr_of(u[0]);
      const SpanArr& y = span_arr_of(u[1]);
      const SpanArr& z = span_arr_of(u[2]);
      return span_struct_nat_cell(st.ten(st.ten(x, y), z), st.ten(x, st.ten(y, z)),
                             s.alpha(x.dom, y.dom, z.dom), s.alpha(x.cod, y.cod, z.cod),
                             s.alpha(x.apex, y.apex, z.apex));
    };
    alpha.dom_fun = [](const std::vector<OneP>& u) {
      return oapp("ten", {oapp("ten", {u[0], u[1]}), u[2]});
    };
    alpha.cod_fun = [](const std::vector<OneP>& u) {
      return oapp("ten", {u[0], oapp("ten", {u[1], u[2]})});
    };
    alpha.dom_fun2 = [](const std::vector<TwoP>& u) {
      return tapp("ten", {tapp("ten", {u[0], u[1]}), u[2]});
    };
    alpha.cod_fun2 = [](const std::vector<TwoP>& u) {
      return tapp("ten", {u[0], tapp("ten", {u[1], u[2]})});
    };
    m.env->add(alpha);

    PsNat ar;
    ar.name = "alpha_r";
    ar.arity = 3;
    ar.component = [s](const std::vector<Cell>& a) {
      return span_arr(span_of_fn(
          s.alpha(span_obj_set(a[0]), span_obj_set(a[1]), span_obj_set(a[2])).inverse()));
    };
    ar.cell = [s, st](const std::vector<Cell>& u) {
      const SpanArr& x = span_arr_of(u[0]);
      const SpanArr& y = span_arr_of(u[1]);
      const SpanArr& z = span_arr_of(u[2]);
      return span_struct_nat_cell(st.ten(x, st.ten(y, z)), st.ten(st.ten(x, y), z),
                             s.alpha(x.dom, y.dom, z.dom).inverse(),
                             s.alpha(x.cod, y.cod, z.cod).inverse(),
                             s.alpha(x.apex, y.apex, z.apex).inverse());
    };
    ar.dom_fun = [](const std::vector<OneP>& u) {
      return oapp("ten", {u[0], oapp("ten", {u[1], u[2]})});
    };
    ar.cod_fun = [](const std::vector<OneP>& u) {
      return oapp("ten", {oapp("ten", {u[0], u[1]}), u[2]});
    };
    ar.dom_fun2 = [](const std::vector<TwoP>& u) {
      return tapp("ten", {u[0], tapp("ten", {u[1], u[2]})});
    };
    ar.cod_fun2 = [](const std::vector<TwoP>& u) {
      return tapp("ten", {tapp("ten", {u[0], u[1]}), u[2]});
    };
    m.env->add(ar);
  }

  // Unitors and braiding.
  auto add_unary = [&](const std::string& name, bool reverse, bool left_unitor, bool is_rho) {
    PsNat n;
    n.name = name;
    n.arity = 1;
    n.component = [s, reverse, is_rho](const std::vector<Cell>& a) {
      FinFn fn = is_rho ? s.rho(span_obj_set(a[0])) : s.lam(span_obj_set(a[0]));
      return span_arr(span_of_fn(reverse ? fn.inverse() : fn));
    };
    n.cell = [s, st, reverse, is_rho](const std::vector<Cell>& u) {
      const SpanArr& x = span_arr_of(u[0]);
      SpanArr iu = span_identity(s.unit);
      SpanArr Fu = is_rho ? st.ten(x, iu) : st.ten(iu, x);
      FinFn fd = is_rho ? s.rho(x.dom) : s.lam(x.dom);
      FinFn fc = is_rho ? s.rho(x.cod) : s.lam(x.cod);
      FinFn fa = is_rho ? s.rho(x.apex) : s.lam(x.apex);
      if (!reverse) return span_struct_nat_cell(Fu, x, fd, fc, fa);
      return span_struct_nat_cell(x, Fu, fd.inverse(), fc.inverse(), fa.inverse());
    };
    auto wrap1 = [is_rho, reverse](const OneP& u, const ObjP& I) -> OneP {
      OneP t = is_rho ? oapp("ten", {u, oid(I)}) : oapp("ten", {oid(I), u});
      return reverse ? u : t;
    };
    // dom/cod functor shapes
    ObjP I = obI;
    n.dom_fun = [wrap1, I, reverse](const std::vector<OneP>& u) {
      return reverse ? u[0] : wrap1(u[0], I);
    };
    n.cod_fun = [wrap1, I, reverse, is_rho](const std::vector<OneP>& u) -> OneP {
      if (!reverse) return u[0];
      return is_rho ? oapp("ten", {u[0], oid(I)}) : oapp("ten", {oid(I), u[0]});
    };
    n.dom_fun2 = [I, reverse, is_rho](const std::vector<TwoP>& u) -> TwoP {
      if (reverse) return u[0];
      return is_rho ? tapp("ten", {u[0], tid(oid(I))}) : tapp("ten", {tid(oid(I)), u[0]});
    };
    n.cod_fun2 = [I, reverse, is_rho](const std::vector<TwoP>& u) -> TwoP {
      if (!reverse) return u[0];
      return is_rho ? tapp("ten", {u[0], tid(oid(I))}) : tapp("ten", {tid(oid(I)), u[0]});
    };
    (void)left_unitor;
    m.env->add(n);
  };
  add_unary("lam", false, true, false);
  add_unary("lam_r", true, true, false);
  add_unary("rho", false, false, true);
  add_unary("rho_r", true, false, true);

  {
    PsNat beta;
    beta.name = "beta";
    beta.arity = 2;
    beta.component = [s](const std::vector<Cell>& a) {
      return span_arr(span_of_fn(s.braid(span_obj_set(a[0]), span_obj_set(a[1]))));
    };
    beta.cell = [s, st](const std::vector<Cell>& u) {
      const SpanArr& x = span_arr_of(u[0]);
      const SpanArr& y = span_arr_of(u[1]);
      return span_struct_nat_cell(st.ten(x, y), st.ten(y, x), s.braid(x.dom, y.dom),
                             s.braid(x.cod, y.cod), s.braid(x.apex, y.apex));
    };
    beta.dom_fun = [](const std::vector<OneP>& u) { return oapp("ten", {u[0], u[1]}); };
    beta.cod_fun = [](const std::vector<OneP>& u) { return oapp("ten", {u[1], u[0]}); };
    beta.dom_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], u[1]}); };
    beta.cod_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[1], u[0]}); };
    m.env->add(beta);

    PsNat br = beta;
    br.name = "beta_r";
    br.component = [s](const std::vector<Cell>& a) {
      return span_arr(span_of_fn(s.braid(span_obj_set(a[0]), span_obj_set(a[1])).inverse()));
    };
    br.cell = [s, st](const std::vector<Cell>& u) {
      const SpanArr& x = span_arr_of(u[0]);
      const SpanArr& y = span_arr_of(u[1]);
      return span_struct_nat_cell(st.ten(y, x), st.ten(x, y), s.braid(y.dom, x.dom),
                             s.braid(y.cod, x.cod), s.braid(y.apex, x.apex));
    };
    br.dom_fun = [](const std::vector<OneP>& u) { return oapp("ten", {u[1], u[0]}); };
    br.cod_fun = [](const std::vector<OneP>& u) { return oapp("ten", {u[0], u[1]}); };
    br.dom_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[1], u[0]}); };
    br.cod_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], u[1]}); };
    m.env->add(br);
  }

  // Equivalence witnesses, stored as mediator modifications.
  {
    auto srcObj = [](const std::vector<ObjP>& os) {
      return obapp("ten", {obapp("ten", {os[0], os[1]}), os[2]});
    };
    auto dstObj = [](const std::vector<ObjP>& os) {
      return obapp("ten", {os[0], obapp("ten", {os[1], os[2]})});
    };
    m.env->add(span_mediator_mod("alpha_unit", 3, m.env,
        [srcObj](const std::vector<ObjP>& os) { return oid(srcObj(os)); },
        [](const std::vector<ObjP>& os) { return ocomp(onat("alpha_r", os), onat("alpha", os)); }));
    m.env->add(span_mediator_mod("alpha_counit", 3, m.env,
        [](const std::vector<ObjP>& os) { return ocomp(onat("alpha", os), onat("alpha_r", os)); },
        [dstObj](const std::vector<ObjP>& os) { return oid(dstObj(os)); }));
  }
  {
    auto mk = [&](const std::string& nat, bool is_rho) {
      auto srcObj = [is_rho, obI](const std::vector<ObjP>& os) {
        return is_rho ? obapp("ten", {os[0], obI}) : obapp("ten", {obI, os[0]});
      };
      m.env->add(span_mediator_mod(nat + "_unit", 1, m.env,
          [srcObj](const std::vector<ObjP>& os) { return oid(srcObj(os)); },
          [nat](const std::vector<ObjP>& os) { return ocomp(onat(nat + "_r", os), onat(nat, os)); }));
      m.env->add(span_mediator_mod(nat + "_counit", 1, m.env,
          [nat](const std::vector<ObjP>& os) { return ocomp(onat(nat, os), onat(nat + "_r", os)); },
          [](const std::vector<ObjP>& os) { return oid(os[0]); }));
    };
    mk("lam", false);
    mk("rho", true);
    m.env->add(span_mediator_mod("beta_unit", 2, m.env,
        [](const std::vector<ObjP>& os) { return oid(obapp("ten", {os[0], os[1]})); },
        [](const std::vector<ObjP>& os) { return ocomp(onat("beta_r", os), onat("beta", os)); }));
    m.env->add(span_mediator_mod("beta_counit", 2, m.env,
        [](const std::vector<ObjP>& os) { return ocomp(onat("beta", os), onat("beta_r", os)); },
        [](const std::vector<ObjP>& os) { return oid(obapp("ten", {os[1], os[0]})); }));
  }

  // Structural modifications.
  m.env->add(span_mediator_mod("pmod", 4, m.env,
      [](const std::vector<ObjP>& o) {
        return ocomp({oapp("ten", {oid(o[0]), onat("alpha", {o[1], o[2], o[3]})}),
                      onat("alpha", {o[0], obapp("ten", {o[1], o[2]}), o[3]}),
                      oapp("ten", {onat("alpha", {o[0], o[1], o[2]}), oid(o[3])})});
      },
      [](const std::vector<ObjP>& o) {
        return ocomp(onat("alpha", {o[0], o[1], obapp("ten", {o[2], o[3]})}),
                     onat("alpha", {obapp("ten", {o[0], o[1]}), o[2], o[3]}));
      }));
  m.env->add(span_mediator_mod("mmod", 2, m.env,
      [obI](const std::vector<ObjP>& o) {
        return ocomp(oapp("ten", {oid(o[0]), onat("lam", {o[1]})}),
                     onat("alpha", {o[0], obI, o[1]}));
      },
      [](const std::vector<ObjP>& o) {
        return oapp("ten", {onat("rho", {o[0]}), oid(o[1])});
      }));
  m.env->add(span_mediator_mod("lmod", 2, m.env,
      [](const std::vector<ObjP>& o) {
        return oapp("ten", {onat("lam", {o[0]}), oid(o[1])});
      },
      [obI](const std::vector<ObjP>& o) {
        return ocomp(onat("lam", {obapp("ten", {o[0], o[1]})}),
                     onat("alpha", {obI, o[0], o[1]}));
      }));
  m.env->add(span_mediator_mod("rmod", 2, m.env,
      [](const std::vector<ObjP>& o) {
        return onat("rho", {obapp("ten", {o[0], o[1]})});
      },
      [obI](const std::vector<ObjP>& o) {
        return ocomp(oapp("ten", {oid(o[0]), onat("rho", {o[1]})}),
                     onat("alpha", {o[0], o[1], obI}));
      }));

  m.canonical_mod = [envp = m.env](const std::string& name, int arity,
                                   std::function<OneP(const std::vector<ObjP>&)> src,
                                   std::function<OneP(const std::vector<ObjP>&)> dst) {
    return span_mediator_mod(name, arity, envp, std::move(src), std::move(dst));
  };

  return m;
}

// ---------------------------------------------------------------------------

std::vector<FamilyMod> monoidal_modifications(const MonoidalBicat& m) {
  const Env& env = m.E();
  NatFamily alpha = nf_named(env, "alpha");
  NatFamily lam = nf_named(env, "lam");
  NatFamily rho = nf_named(env, "rho");
  NatFamily id1 = nf_id1();
  ObjP I = ob(m.unit);
  const Bicat& b = m.B();

  auto modc = [&env](const std::string& name) {
    const Modif& mo = env.mod(name);
    return [&env, name](const std::vector<ObjP>& objs) { return tmod(name, objs); };
  };

  std::vector<FamilyMod> out;
  {
    FamilyMod fm;
    fm.label = "pmod";
    fm.arity = 4;
    fm.src = nf_vcomp(b,
        nf_vcomp(b, nf_pair("ten", id1, alpha),
                 nf_precompose(alpha, 4, {am_proj(0), am_app("ten", {am_proj(1), am_proj(2)}),
                                          am_proj(3)})),
        nf_pair("ten", alpha, id1));
    fm.dst = nf_vcomp(b,
        nf_precompose(alpha, 4, {am_proj(0), am_proj(1), am_app("ten", {am_proj(2), am_proj(3)})}),
        nf_precompose(alpha, 4, {am_app("ten", {am_proj(0), am_proj(1)}), am_proj(2), am_proj(3)}));
    fm.component = modc("pmod");
    out.push_back(fm);
  }
  {
    FamilyMod fm;
    fm.label = "mmod";
    fm.arity = 2;
    fm.src = nf_vcomp(b, nf_pair("ten", id1, lam),
                      nf_precompose(alpha, 2, {am_proj(0), am_const(I), am_proj(1)}));
    fm.dst = nf_pair("ten", rho, id1);
    fm.component = modc("mmod");
    out.push_back(fm);
  }
  {
    FamilyMod fm;
    fm.label = "lmod";
    fm.arity = 2;
    fm.src = nf_pair("ten", lam, id1);
    fm.dst = nf_vcomp(b, nf_precompose(lam, 2, {am_app("ten", {am_proj(0), am_proj(1)})}),
                      nf_precompose(alpha, 2, {am_const(I), am_proj(0), am_proj(1)}));
    fm.component = modc("lmod");
    out.push_back(fm);
  }
  {
    FamilyMod fm;
    fm.label = "rmod";
    fm.arity = 2;
    fm.src = nf_precompose(rho, 2, {am_app("ten", {am_proj(0), am_proj(1)})});
    fm.dst = nf_vcomp(b, nf_pair("ten", id1, rho),
                      nf_precompose(alpha, 2, {am_proj(0), am_proj(1), am_const(I)}));
    fm.component = modc("rmod");
    out.push_back(fm);
  }
  return out;
}

Report check_monoidal_bicat(const MonoidalBicat& m, const Sample& s, const std::string& suite) {
  Report rep;
  Paste p(m.E());
  const Bicat& b = m.B();
  const std::string cap = s.str();

  // Tensor pseudofunctor laws are covered by the generic checker in
  // checkers.cpp; here we add the structural families and modifications.
  for (const std::string& nat : {"alpha", "lam", "rho"})
    rep.merge(check_family(p, nf_named(m.E(), nat), s, suite, nat));
  if (m.symmetric) rep.merge(check_family(p, nf_named(m.E(), "beta"), s, suite, "beta"));

  // Equivalence witnesses evaluate and are invertible.
  {
    std::vector<std::pair<std::string, int>> eqs = {{"alpha", 3}, {"lam", 1}, {"rho", 1}};
    if (m.symmetric) eqs.push_back({"beta", 2});
    for (const auto& [nat, arity] : eqs) {
      auto tuples = obj_tuples(b, s, arity);
      rep.add(run_law(suite, nat + "/equivalence", tuples.size(),
                      [&, nat = nat](size_t i) -> std::optional<std::string> {
        const auto& objs = tuples[i];
        Iso2 unit = m.E().mod(nat + "_unit").component(objs);
        Iso2 counit = m.E().mod(nat + "_counit").component(objs);
        if (b.vcomp(unit.bwd, unit.fwd) != b.id2(b.src2(unit.fwd)))
          return nat + " unit not invertible";
        if (b.vcomp(counit.fwd, counit.bwd) != b.id2(b.dst2(counit.fwd)))
          return nat + " counit not invertible";
        return std::nullopt;
      }, cap));
    }
  }

  for (const FamilyMod& fm : monoidal_modifications(m)) rep.merge(check_family_mod(p, fm, s, suite));

  rep.sort();
  return rep;
}

} // namespace bk
