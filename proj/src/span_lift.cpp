#include "bicatkit/span_lift.hpp"

#include "bicatkit/law_runner.hpp"

namespace bk {

SetMonad writer_set_monad(const Monoid& m) {
  auto mp = std::make_shared<Monoid>(m);
  SetMonad t;
  t.name = "writer-" + m.name;
  t.on_obj = [mp](const FinSet& a) { return product(a, mp->carrier).object; };
  t.on_fn = [mp](const FinFn& f) { return product_fn(f, FinFn::identity(mp->carrier)); };
  t.eta = [mp, t](const FinSet& a) {
    return FinFn::from_map(a, t.on_obj(a), [mp](const Label& x) {
      return Label::pair(x, mp->unit_label());
    });
  };
  t.mu = [mp, t](const FinSet& a) {
    FinSet ta = t.on_obj(a);
    FinSet tta = t.on_obj(ta);
    return FinFn::from_map(tta, ta, [mp](const Label& x) {
      return Label::pair(x.first().first(), mp->mult(x.first().second(), x.second()));
    });
  };
  return t;
}

Report check_cartesian(const SetMonad& t, const std::vector<FinSet>& sets,
                       const std::string& suite) {
  Report rep;
  std::vector<std::tuple<FinFn, FinFn>> cospans;
  for (const FinSet& x : sets)
    for (const FinSet& y : sets)
      for (const FinSet& b : sets) {
        if (x.size() > 2 || y.size() > 2 || b.size() > 2) continue;
        auto fs = all_functions(x, b);
        auto gs = all_functions(y, b);
        for (size_t i = 0; i < fs.size(); i += 2)
          for (size_t j = 0; j < gs.size(); j += 2) cospans.push_back({fs[i], gs[j]});
      }
  rep.add(run_law(suite, "preserves-pullbacks", cospans.size(),
                  [&](size_t i) -> std::optional<std::string> {
    const auto& [f, g] = cospans[i];
    PullbackResult pb = pullback(f, g);
    PullbackResult tpb = pullback(t.on_fn(f), t.on_fn(g));
    FinFn med = pullback_mediator(tpb, t.on_fn(pb.left), t.on_fn(pb.right));
    if (!med.is_bijective()) return "T does not preserve the pullback of " + f.str();
    return std::nullopt;
  }, "sets<=" + std::to_string(sets.size())));

  std::vector<FinFn> fns;
  for (const FinSet& x : sets)
    for (const FinSet& y : sets) {
      if (x.size() > 2 || y.size() > 2) continue;
      for (const FinFn& f : all_functions(x, y)) fns.push_back(f);
    }
  rep.add(run_law(suite, "unit-squares", fns.size(), [&](size_t i) -> std::optional<std::string> {
    const FinFn& f = fns[i];
    // the square eta_Y . f = T f . eta_X must be a pullback
    PullbackResult pb = pullback(t.eta(f.cod()), t.on_fn(f));
    FinFn med = pullback_mediator(pb, f, t.eta(f.dom()));
    if (!med.is_bijective()) return "eta square is not a pullback at " + f.str();
    return std::nullopt;
  }, ""));
  rep.add(run_law(suite, "mult-squares", fns.size(), [&](size_t i) -> std::optional<std::string> {
    const FinFn& f = fns[i];
    PullbackResult pb = pullback(t.mu(f.cod()), t.on_fn(t.on_fn(f)));
    FinFn med = pullback_mediator(pb, t.on_fn(f), t.mu(f.dom()));
    if (!med.is_bijective()) return "mu square is not a pullback at " + f.str();
    return std::nullopt;
  }, ""));
  return rep;
}

namespace {

SpanArr lift_span(const SetMonad& t, const SpanArr& a) {
  return SpanArr{t.on_obj(a.dom), t.on_obj(a.cod), t.on_obj(a.apex), t.on_fn(a.left),
                 t.on_fn(a.right)};
}

} // namespace

PseudomonadBundle span_lift_monad(MonoidalBicat& m, const SetMonad& tm) {
  {
    std::vector<FinSet> sets;
    for (const Cell& o : m.B().objects(2)) sets.push_back(span_obj_set(o));
    Report r = check_cartesian(tm, sets);
    if (!r.all_pass()) {
      std::string why;
      for (const auto& law : r.laws)
        if (law.status != LawStatus::Pass) why = law.law + ": " + law.counterexample;
      throw NotCartesian("span_lift_monad: " + why);
    }
  }
  Env& env = m.E();
  const Bicat* bp = m.host.get();
  auto t = std::make_shared<SetMonad>(tm);

  PsFun T;
  T.name = "T";
  T.arity = 1;
  T.on_obj = [t](const std::vector<Cell>& a) { return span_obj(t->on_obj(span_obj_set(a[0]))); };
  T.on_one = [t](const std::vector<Cell>& f) {
    return span_arr(lift_span(*t, span_arr_of(f[0])));
  };
  T.on_two = [t](const std::vector<Cell>& x) {
    const SpanMap& sm = span_map_of(x[0]);
    return span_map(lift_span(*t, sm.src), lift_span(*t, sm.dst), t->on_fn(sm.fn));
  };
  T.compositor = [t](const std::vector<Cell>& f, const std::vector<Cell>& g) {
    const SpanArr& fa = span_arr_of(f[0]);
    const SpanArr& ga = span_arr_of(g[0]);
    SpanArr lhs = span_compose(lift_span(*t, fa), lift_span(*t, ga));
    SpanArr rhs = lift_span(*t, span_compose(fa, ga));
    // the mediating bijection from cartesianness, via the pullback property
    PullbackResult pb = pullback(t->on_fn(ga.right), t->on_fn(fa.left));
    PullbackResult base = pullback(ga.right, fa.left);
    FinFn med = pullback_mediator(pb, t->on_fn(base.left), t->on_fn(base.right));
    FinFn bwd_fn = med.inverse();
    return Iso2{span_map(lhs, rhs, bwd_fn), span_map(rhs, lhs, med)};
  };
  T.unitor = [t, bp](const std::vector<Cell>& a) {
    Cell ta = span_obj(t->on_obj(span_obj_set(a[0])));
    Cell i = bp->id2(bp->id1(ta));
    return Iso2{i, i};
  };
  env.add(T);

  auto lift_nat = [&env, t, bp](const std::string& name,
                                std::function<FinFn(const SetMonad&, const FinSet&)> comp_fn,
                                std::function<SpanArr(const SetMonad&, const SpanArr&)> dom_sp,
                                std::function<SpanArr(const SetMonad&, const SpanArr&)> cod_sp,
                                std::function<OneP(const std::vector<OneP>&)> dom_fun,
                                std::function<OneP(const std::vector<OneP>&)> cod_fun,
                                std::function<TwoP(const std::vector<TwoP>&)> dom_fun2,
                                std::function<TwoP(const std::vector<TwoP>&)> cod_fun2) {
    PsNat n;
    n.name = name;
    n.arity = 1;
    n.component = [t, comp_fn](const std::vector<Cell>& a) {
      return span_arr(span_of_fn(comp_fn(*t, span_obj_set(a[0]))));
    };
    n.cell = [t, comp_fn, dom_sp, cod_sp](const std::vector<Cell>& u) {
      const SpanArr& x = span_arr_of(u[0]);
      return span_struct_nat_cell(dom_sp(*t, x), cod_sp(*t, x), comp_fn(*t, x.dom),
                                  comp_fn(*t, x.cod), comp_fn(*t, x.apex));
    };
    n.dom_fun = std::move(dom_fun);
    n.cod_fun = std::move(cod_fun);
    n.dom_fun2 = std::move(dom_fun2);
    n.cod_fun2 = std::move(cod_fun2);
    env.add(n);
  };

  lift_nat("eta", [](const SetMonad& t, const FinSet& a) { return t.eta(a); },
           [](const SetMonad&, const SpanArr& x) { return x; },
           [](const SetMonad& t, const SpanArr& x) { return lift_span(t, x); },
           [](const std::vector<OneP>& u) { return u[0]; },
           [](const std::vector<OneP>& u) { return oapp("T", {u[0]}); },
           [](const std::vector<TwoP>& u) { return u[0]; },
           [](const std::vector<TwoP>& u) { return tapp("T", {u[0]}); });
  lift_nat("mu", [](const SetMonad& t, const FinSet& a) { return t.mu(a); },
           [](const SetMonad& t, const SpanArr& x) { return lift_span(t, lift_span(t, x)); },
           [](const SetMonad& t, const SpanArr& x) { return lift_span(t, x); },
           [](const std::vector<OneP>& u) { return oapp("T", {oapp("T", {u[0]})}); },
           [](const std::vector<OneP>& u) { return oapp("T", {u[0]}); },
           [](const std::vector<TwoP>& u) { return tapp("T", {tapp("T", {u[0]})}); },
           [](const std::vector<TwoP>& u) { return tapp("T", {u[0]}); });

  PseudomonadBundle pb;
  env.add(m.canonical_mod(pb.m, 1,
      [](const std::vector<ObjP>& o) { return ocomp(onat("mu", o), oapp("T", {onat("mu", o)})); },
      [](const std::vector<ObjP>& o) {
        return ocomp(onat("mu", o), onat("mu", {obapp("T", o)}));
      }));
  env.add(m.canonical_mod(pb.n, 1,
      [](const std::vector<ObjP>& o) {
        return ocomp(onat("mu", o), onat("eta", {obapp("T", o)}));
      },
      [](const std::vector<ObjP>& o) { return oid(obapp("T", o)); }));
  env.add(m.canonical_mod(pb.p, 1,
      [](const std::vector<ObjP>& o) { return ocomp(onat("mu", o), oapp("T", {onat("eta", o)})); },
      [](const std::vector<ObjP>& o) { return oid(obapp("T", o)); }));
  return pb;
}

StrengthBundle span_cocartesian_strength(MonoidalBicat& m, const PseudomonadBundle& t,
                                         const SetMonad& tm) {
  Env& env = m.E();
  auto tp = std::make_shared<SetMonad>(tm);
  StrengthBundle s;

  // t_{A,B} : A + TB -> T(A + B), elementwise [T inl . eta, T inr].
  auto str_fn = [tp](const FinSet& a, const FinSet& b) {
    FinSet tb = tp->on_obj(b);
    FinSet ab = coproduct(a, b).object;
    FinSet tab = tp->on_obj(ab);
    CoproductResult dom = coproduct(a, tb);
    FinFn eta_ab = tp->eta(ab);
    return FinFn::from_map(dom.object, tab, [&](const Label& x) {
      if (x.text() == "inl") return eta_ab(Label::tag("inl", x.inner()));
      // inr: an element of TB; push through T(inr)
      FinFn tinr = tp->on_fn(coproduct(a, b).inj2);
      return tinr(x.inner());
    });
  };

  PsNat str;
  str.name = s.t;
  str.arity = 2;
  str.component = [tp, str_fn](const std::vector<Cell>& a) {
    return span_arr(span_of_fn(str_fn(span_obj_set(a[0]), span_obj_set(a[1]))));
  };
  str.cell = [tp, str_fn](const std::vector<Cell>& u) {
    const SpanArr& x = span_arr_of(u[0]);
    const SpanArr& y = span_arr_of(u[1]);
    SetMonStructure plus = setmon_coproduct();
    SpanArr ty = lift_span(*tp, y);
    SpanArr Fu{plus.ten(x.dom, ty.dom), plus.ten(x.cod, ty.cod), plus.ten(x.apex, ty.apex),
               plus.ten_fn(x.left, ty.left), plus.ten_fn(x.right, ty.right)};
    SpanArr xy{plus.ten(x.dom, y.dom), plus.ten(x.cod, y.cod), plus.ten(x.apex, y.apex),
               plus.ten_fn(x.left, y.left), plus.ten_fn(x.right, y.right)};
    SpanArr Gu = lift_span(*tp, xy);
    return span_struct_nat_cell(Fu, Gu, str_fn(x.dom, y.dom), str_fn(x.cod, y.cod),
                                str_fn(x.apex, y.apex));
  };
  str.dom_fun = [](const std::vector<OneP>& u) {
    return oapp("ten", {u[0], oapp("T", {u[1]})});
  };
  str.cod_fun = [](const std::vector<OneP>& u) { return oapp("T", {oapp("ten", {u[0], u[1]})}); };
  str.dom_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], tapp("T", {u[1]})}); };
  str.cod_fun2 = [](const std::vector<TwoP>& u) { return tapp("T", {tapp("ten", {u[0], u[1]})}); };
  env.add(str);

  register_strength_mods(m, t, s);
  return s;
}

} // namespace bk
