#include "bicatkit/strength.hpp"

#include "bicatkit/law_runner.hpp"

namespace bk {

namespace {

ObjP obT(const std::string& T, const ObjP& a) { return obapp(T, {a}); }
ObjP obten(const ObjP& a, const ObjP& b) { return obapp("ten", {a, b}); }

struct Ax {
  std::string name;
  int arity;
  std::function<std::pair<TwoP, TwoP>(const std::vector<ObjP>&)> sides;
};

struct StrCtx {
  const MonoidalBicat& m;
  std::string T;
  StrengthBundle s;
  PseudomonadBundle mon; // only used by the monad-axiom suite
  ObjP I;

  StrCtx(const MonoidalBicat& mm, std::string Tn, StrengthBundle sb)
      : m(mm), T(std::move(Tn)), s(std::move(sb)), I(ob(mm.unit)) {}

  OneP str(std::vector<ObjP> o) const { return onat(s.t, std::move(o)); }
  OneP al(ObjP a, ObjP b, ObjP c) const { return onat("alpha", {a, b, c}); }
  OneP lam(ObjP a) const { return onat("lam", {a}); }
  OneP rho(ObjP a) const { return onat("rho", {a}); }
  ObjP Tob(const ObjP& a) const { return obT(T, a); }
  OneP Tap(const OneP& f) const { return oapp(T, {f}); }
  OneP tenl(const OneP& f, const OneP& g) const { return oapp("ten", {f, g}); }

  // whisker helpers on 2-cells.
  TwoP tenc(const TwoP& a, const TwoP& b) const { return tapp("ten", {a, b}); }
};

// Fig-2-style axiom 1: the unit-outer cylinder at (A, B).
std::pair<TwoP, TwoP> ax_unit_outer(const StrCtx& c, const std::vector<ObjP>& o) {
  ObjP A = o[0], B = o[1];
  ObjP TB = c.Tob(B);
  // lhs: t-nat at (Id_A, lam_B)^-1 ; (A ten x_B) ; mmod@(A,TB) ; t-nat at (rho_A, Id_B)
  TwoP k1 = twhr(tnat(c.s.t, {oid(A), c.lam(B)}, true),
                 ocomp(c.tenl(oid(A), c.str({c.I, B})), c.al(A, c.I, TB)));
  TwoP k2 = twhl(c.str({A, B}),
                 twhr(c.tenc(tid(oid(A)), tmod(c.s.x, {B})), c.al(A, c.I, TB)));
  TwoP k3 = twhl(c.str({A, B}), tmod("mmod", {A, TB}));
  TwoP k4 = tnat(c.s.t, {c.rho(A), oid(B)});
  TwoP lhs = tvert({k1, k2, k3, k4});

  // rhs: (T(A ten lam_B) <| y@(A,I,B)) ; (T(mmod@(A,B)) |> t_{A(x)I,B})
  TwoP r1 = twhl(c.Tap(c.tenl(oid(A), c.lam(B))), tmod(c.s.y, {A, c.I, B}));
  TwoP r2 = twhr(tapp(c.T, {tmod("mmod", {A, B})}), c.str({obten(A, c.I), B}));
  TwoP rhs = tvert({r1, r2});
  return {lhs, rhs};
}

// Fig-2-style axiom 2: the unit-left cylinder at (A, B).
std::pair<TwoP, TwoP> ax_unit_left(const StrCtx& c, const std::vector<ObjP>& o) {
  ObjP A = o[0], B = o[1];
  ObjP TB = c.Tob(B);
  ObjP AB = obten(A, B);
  OneP rest = ocomp(c.tenl(oid(c.I), c.str({A, B})), c.al(c.I, A, TB));
  TwoP k1 = twhr(tmod(c.s.x, {AB}), rest);
  TwoP k2 = twhr(tnat("lam", {c.str({A, B})}), c.al(c.I, A, TB));
  TwoP k3 = twhl(c.str({A, B}), tmod("lmod", {A, TB}, true));
  TwoP k4 = tnat(c.s.t, {c.lam(A), oid(B)});
  TwoP lhs = tvert({k1, k2, k3, k4});

  TwoP r1 = twhl(c.Tap(c.lam(AB)), tmod(c.s.y, {c.I, A, B}));
  TwoP r2 = twhr(tapp(c.T, {tmod("lmod", {A, B}, true)}), c.str({obten(c.I, A), B}));
  TwoP rhs = tvert({r1, r2});
  return {lhs, rhs};
}

// Fig-2-style axiom 3: the pentagon cylinder at (A, B, C, D).
std::pair<TwoP, TwoP> ax_pentagon(const StrCtx& c, const std::vector<ObjP>& o) {
  ObjP A = o[0], B = o[1], C = o[2], D = o[3];
  ObjP TD = c.Tob(D);
  ObjP BC = obten(B, C), AB = obten(A, B), CD = obten(C, D);

  OneP P3 = ocomp({c.str({A, obten(B, CD)}), c.tenl(oid(A), c.str({B, CD})),
                   c.tenl(oid(A), c.tenl(oid(B), c.str({C, D})))});
  TwoP l1 = twhl(P3, tmod("pmod", {A, B, C, TD}));
  TwoP l2 = twhl(ocomp(c.str({A, obten(B, CD)}), c.tenl(oid(A), c.str({B, CD}))),
                 twhr(tnat("alpha", {oid(A), oid(B), c.str({C, D})}, true),
                      c.al(AB, C, TD)));
  TwoP l3 = twhr(tmod(c.s.y, {A, B, CD}),
                 ocomp(c.tenl(oid(AB), c.str({C, D})), c.al(AB, C, TD)));
  TwoP l4 = twhl(c.Tap(c.al(A, B, CD)), tmod(c.s.y, {AB, C, D}));
  TwoP lhs = tvert({l1, l2, l3, l4});

  TwoP r1 = twhl(c.str({A, obten(B, CD)}),
                 twhr(c.tenc(tid(oid(A)), tmod(c.s.y, {B, C, D})),
                      ocomp(c.al(A, BC, TD), c.tenl(c.al(A, B, C), oid(TD)))));
  TwoP r2 = twhr(tnat(c.s.t, {oid(A), c.al(B, C, D)}),
                 ocomp({c.tenl(oid(A), c.str({BC, D})), c.al(A, BC, TD),
                        c.tenl(c.al(A, B, C), oid(TD))}));
  TwoP r3 = twhl(c.Tap(c.tenl(oid(A), c.al(B, C, D))),
                 twhr(tmod(c.s.y, {A, BC, D}), c.tenl(c.al(A, B, C), oid(TD))));
  TwoP r4 = twhl(ocomp(c.Tap(c.tenl(oid(A), c.al(B, C, D))), c.Tap(c.al(A, BC, D))),
                 tnat(c.s.t, {c.al(A, B, C), oid(D)}));
  TwoP r5 = twhr(tapp(c.T, {tmod("pmod", {A, B, C, D})}), c.str({obten(AB, C), D}));
  TwoP rhs = tvert({r1, r2, r3, r4, r5});
  return {lhs, rhs};
}

// Fig-3-style axioms.
std::pair<TwoP, TwoP> ax_w_n(const StrCtx& c, const std::vector<ObjP>& o) {
  ObjP A = o[0], B = o[1];
  ObjP TB = c.Tob(B), AB = obten(A, B);
  TwoP l1 = twhr(tmod(c.s.w, {A, B}), c.tenl(oid(A), onat(c.mon.eta, {TB})));
  TwoP l2 = twhl(c.str({A, B}), c.tenc(tid(oid(A)), tmod(c.mon.n, {B})));
  TwoP lhs = tvert({l1, l2});

  OneP muTt = ocomp(onat(c.mon.mu, {AB}), c.Tap(c.str({A, B})));
  TwoP r1 = twhl(muTt, tmod(c.s.z, {A, TB}));
  TwoP r2 = twhl(onat(c.mon.mu, {AB}), tnat(c.mon.eta, {c.str({A, B})}, true));
  TwoP r3 = twhr(tmod(c.mon.n, {AB}), c.str({A, B}));
  TwoP rhs = tvert({r1, r2, r3});
  return {lhs, rhs};
}

std::pair<TwoP, TwoP> ax_w_p(const StrCtx& c, const std::vector<ObjP>& o) {
  ObjP A = o[0], B = o[1];
  ObjP AB = obten(A, B);
  TwoP l1 = twhr(tmod(c.s.w, {A, B}), c.tenl(oid(A), c.Tap(onat(c.mon.eta, {B}))));
  TwoP l2 = twhl(c.str({A, B}), c.tenc(tid(oid(A)), tmod(c.mon.p, {B})));
  TwoP lhs = tvert({l1, l2});

  OneP muTt = ocomp(onat(c.mon.mu, {AB}), c.Tap(c.str({A, B})));
  TwoP r1 = twhl(muTt, tnat(c.s.t, {oid(A), onat(c.mon.eta, {B})}));
  TwoP r2 = twhl(onat(c.mon.mu, {AB}), twhr(tapp(c.T, {tmod(c.s.z, {A, B})}), c.str({A, B})));
  TwoP r3 = twhr(tmod(c.mon.p, {AB}), c.str({A, B}));
  TwoP rhs = tvert({r1, r2, r3});
  return {lhs, rhs};
}

std::pair<TwoP, TwoP> ax_w_m(const StrCtx& c, const std::vector<ObjP>& o) {
  ObjP A = o[0], B = o[1];
  ObjP TB = c.Tob(B), T2B = c.Tob(TB), AB = obten(A, B);
  OneP tail = ocomp(ocomp(c.Tap(c.Tap(c.str({A, B}))), c.Tap(c.str({A, TB}))),
                    c.str({A, T2B}));
  TwoP l1 = twhr(tmod(c.mon.m, {AB}), tail);
  TwoP l2 = twhl(onat(c.mon.mu, {AB}),
                 twhr(tnat(c.mon.mu, {c.str({A, B})}),
                      ocomp(c.Tap(c.str({A, TB})), c.str({A, T2B}))));
  TwoP l3 = twhl(ocomp(onat(c.mon.mu, {AB}), c.Tap(c.str({A, B}))), tmod(c.s.w, {A, TB}));
  TwoP l4 = twhr(tmod(c.s.w, {A, B}), c.tenl(oid(A), onat(c.mon.mu, {TB})));
  TwoP lhs = tvert({l1, l2, l3, l4});

  TwoP r1 = twhl(onat(c.mon.mu, {AB}),
                 twhr(tapp(c.T, {tmod(c.s.w, {A, B})}), c.str({A, T2B})));
  TwoP r2 = twhl(ocomp(onat(c.mon.mu, {AB}), c.Tap(c.str({A, B}))),
                 tnat(c.s.t, {oid(A), onat(c.mon.mu, {B})}, true));
  TwoP r3 = twhr(tmod(c.s.w, {A, B}), c.tenl(oid(A), c.Tap(onat(c.mon.mu, {B}))));
  TwoP r4 = twhl(c.str({A, B}), c.tenc(tid(oid(A)), tmod(c.mon.m, {B})));
  TwoP rhs = tvert({r1, r2, r3, r4});
  return {lhs, rhs};
}

std::pair<TwoP, TwoP> ax_x_z(const StrCtx& c, const std::vector<ObjP>& o) {
  ObjP A = o[0];
  TwoP l1 = twhl(c.Tap(c.lam(A)), tmod(c.s.z, {c.I, A}));
  TwoP l2 = tnat(c.mon.eta, {c.lam(A)}, true);
  TwoP lhs = tvert({l1, l2});

  TwoP r1 = twhr(tmod(c.s.x, {A}), c.tenl(oid(c.I), onat(c.mon.eta, {A})));
  TwoP r2 = tnat("lam", {onat(c.mon.eta, {A})});
  TwoP rhs = tvert({r1, r2});
  return {lhs, rhs};
}

std::pair<TwoP, TwoP> ax_x_w(const StrCtx& c, const std::vector<ObjP>& o) {
  ObjP A = o[0];
  ObjP TA = c.Tob(A);
  TwoP l1 = twhl(onat(c.mon.mu, {A}),
                 twhr(tapp(c.T, {tmod(c.s.x, {A})}), c.str({c.I, TA})));
  TwoP l2 = twhl(onat(c.mon.mu, {A}), tmod(c.s.x, {TA}));
  TwoP l3 = tnat("lam", {onat(c.mon.mu, {A})}, true);
  TwoP lhs = tvert({l1, l2, l3});

  TwoP r1 = twhr(tnat(c.mon.mu, {c.lam(A)}),
                 ocomp(c.Tap(c.str({c.I, A})), c.str({c.I, TA})));
  TwoP r2 = twhl(c.Tap(c.lam(A)), tmod(c.s.w, {c.I, A}));
  TwoP r3 = twhr(tmod(c.s.x, {A}), c.tenl(oid(c.I), onat(c.mon.mu, {A})));
  TwoP rhs = tvert({r1, r2, r3});
  return {lhs, rhs};
}

std::pair<TwoP, TwoP> ax_y_w(const StrCtx& c, const std::vector<ObjP>& o) {
  ObjP A = o[0], B = o[1], C = o[2];
  ObjP TC = c.Tob(C), T2C = c.Tob(TC);
  ObjP AB = obten(A, B), BC = obten(B, C);
  ObjP TBC = c.Tob(BC);

  TwoP l1 = twhl(ocomp(onat(c.mon.mu, {obten(A, BC)}), c.Tap(c.str({A, BC}))),
                 twhr(tnat(c.s.t, {oid(A), c.str({B, C})}),
                      ocomp(c.tenl(oid(A), c.str({B, TC})), c.al(A, B, T2C))));
  TwoP l1b = twhl(ocomp({onat(c.mon.mu, {obten(A, BC)}), c.Tap(c.str({A, BC})),
                         c.Tap(c.tenl(oid(A), c.str({B, C})))}),
                  tmod(c.s.y, {A, B, TC}));
  TwoP l2 = twhl(onat(c.mon.mu, {obten(A, BC)}),
                 twhr(tapp(c.T, {tmod(c.s.y, {A, B, C})}), c.str({AB, TC})));
  TwoP l3 = twhr(tnat(c.mon.mu, {c.al(A, B, C)}),
                 ocomp(c.Tap(c.str({AB, C})), c.str({AB, TC})));
  TwoP l4 = twhl(c.Tap(c.al(A, B, C)), tmod(c.s.w, {AB, C}));
  TwoP lhs = tvert({l1, l1b, l2, l3, l4});

  TwoP r1 = twhr(tmod(c.s.w, {A, BC}),
                 ocomp({c.tenl(oid(A), c.Tap(c.str({B, C}))), c.tenl(oid(A), c.str({B, TC})),
                        c.al(A, B, T2C)}));
  TwoP r2 = twhl(c.str({A, BC}),
                 twhr(c.tenc(tid(oid(A)), tmod(c.s.w, {B, C})), c.al(A, B, T2C)));
  TwoP r3 = twhl(ocomp(c.str({A, BC}), c.tenl(oid(A), c.str({B, C}))),
                 tnat("alpha", {oid(A), oid(B), onat(c.mon.mu, {C})}, true));
  TwoP r4 = twhr(tmod(c.s.y, {A, B, C}), c.tenl(oid(AB), onat(c.mon.mu, {C})));
  TwoP rhs = tvert({r1, r2, r3, r4});
  return {lhs, rhs};
}

std::pair<TwoP, TwoP> ax_y_z(const StrCtx& c, const std::vector<ObjP>& o) {
  ObjP A = o[0], B = o[1], C = o[2];
  ObjP AB = obten(A, B), BC = obten(B, C);
  TwoP l1 = twhl(ocomp(c.str({A, BC}), c.tenl(oid(A), c.str({B, C}))),
                 tnat("alpha", {oid(A), oid(B), onat(c.mon.eta, {C})}));
  TwoP l2 = twhl(c.str({A, BC}),
                 twhr(c.tenc(tid(oid(A)), tmod(c.s.z, {B, C})), c.al(A, B, C)));
  TwoP l3 = twhr(tmod(c.s.z, {A, BC}), c.al(A, B, C));
  TwoP lhs = tvert({l1, l2, l3});

  TwoP r1 = twhr(tmod(c.s.y, {A, B, C}), c.tenl(oid(AB), onat(c.mon.eta, {C})));
  TwoP r2 = twhl(c.Tap(c.al(A, B, C)), tmod(c.s.z, {AB, C}));
  TwoP r3 = tnat(c.mon.eta, {c.al(A, B, C)}, true);
  TwoP rhs = tvert({r1, r2, r3});
  return {lhs, rhs};
}

Report run_axioms(const MonoidalBicat& m, const std::vector<Ax>& axioms, const Sample& smp,
                  const std::string& suite) {
  Report rep;
  Paste p(m.E());
  for (const Ax& ax : axioms) {
    auto tuples = obj_tuples(m.B(), smp, ax.arity);
    rep.add(run_law(suite, ax.name, tuples.size(), [&](size_t i) -> std::optional<std::string> {
      std::vector<ObjP> os;
      for (const Cell& c : tuples[i]) os.push_back(ob(c));
      auto [lhs, rhs] = ax.sides(os);
      std::string why;
      if (!equal_pastings(p, lhs, rhs, &why)) return ax.name + " fails: " + why;
      return std::nullopt;
    }, smp.str()));
  }
  return rep;
}

std::vector<FamilyMod> strength_modifications(const MonoidalBicat& m, const std::string& T,
                                              const PseudomonadBundle& mon,
                                              const StrengthBundle& s, bool with_monad) {
  const Env& env = m.E();
  const Bicat& b = m.B();
  NatFamily str = nf_named(env, s.t);
  NatFamily lam = nf_named(env, "lam");
  NatFamily alpha = nf_named(env, "alpha");
  NatFamily id1 = nf_id1();
  ObjP I = ob(m.unit);
  auto atT = [T](ArgMap inner) { return am_app(T, {std::move(inner)}); };

  std::vector<FamilyMod> out;
  {
    FamilyMod fm;
    fm.label = s.x;
    fm.arity = 1;
    fm.src = nf_vcomp(b, nf_apply(T, lam), nf_precompose(str, 1, {am_const(I), am_proj(0)}));
    fm.dst = nf_precompose(lam, 1, {atT(am_proj(0))});
    fm.component = [n = s.x](const std::vector<ObjP>& o) { return tmod(n, o); };
    out.push_back(fm);
  }
  {
    FamilyMod fm;
    fm.label = s.y;
    fm.arity = 3;
    fm.src = nf_vcomp(b,
        nf_vcomp(b, nf_precompose(str, 3, {am_proj(0), am_app("ten", {am_proj(1), am_proj(2)})}),
                 nf_pair("ten", id1, str)),
        nf_precompose(alpha, 3, {am_proj(0), am_proj(1), atT(am_proj(2))}));
    fm.dst = nf_vcomp(b, nf_apply(T, alpha),
                      nf_precompose(str, 3, {am_app("ten", {am_proj(0), am_proj(1)}), am_proj(2)}));
    fm.component = [n = s.y](const std::vector<ObjP>& o) { return tmod(n, o); };
    out.push_back(fm);
  }
  if (with_monad) {
    NatFamily mu = nf_named(env, mon.mu);
    NatFamily eta = nf_named(env, mon.eta);
    {
      FamilyMod fm;
      fm.label = s.w;
      fm.arity = 2;
      fm.src = nf_vcomp(b,
          nf_vcomp(b, nf_precompose(mu, 2, {am_app("ten", {am_proj(0), am_proj(1)})}),
                   nf_apply(T, str)),
          nf_precompose(str, 2, {am_proj(0), atT(am_proj(1))}));
      fm.dst = nf_vcomp(b, str, nf_pair("ten", id1, mu));
      fm.component = [n = s.w](const std::vector<ObjP>& o) { return tmod(n, o); };
      out.push_back(fm);
    }
    {
      FamilyMod fm;
      fm.label = s.z;
      fm.arity = 2;
      fm.src = nf_vcomp(b, str, nf_pair("ten", id1, eta));
      fm.dst = nf_precompose(eta, 2, {am_app("ten", {am_proj(0), am_proj(1)})});
      fm.component = [n = s.z](const std::vector<ObjP>& o) { return tmod(n, o); };
      out.push_back(fm);
    }
  }
  return out;
}

} // namespace

Report check_strong_pseudofunctor(const MonoidalBicat& m, const std::string& T,
                                  const StrengthBundle& s, const Sample& smp,
                                  const std::string& suite) {
  Report rep;
  Paste p(m.E());
  rep.merge(check_family(p, nf_named(m.E(), s.t), smp, suite, s.t));
  PseudomonadBundle dummy;
  for (const FamilyMod& fm : strength_modifications(m, T, dummy, s, false))
    rep.merge(check_family_mod(p, fm, smp, suite));

  StrCtx c(m, T, s);
  std::vector<Ax> axs = {
      {"strength/unit-outer", 2, [c](const std::vector<ObjP>& o) { return ax_unit_outer(c, o); }},
      {"strength/unit-left", 2, [c](const std::vector<ObjP>& o) { return ax_unit_left(c, o); }},
      {"strength/pentagon", 4, [c](const std::vector<ObjP>& o) { return ax_pentagon(c, o); }},
  };
  rep.merge(run_axioms(m, axs, smp, suite));
  rep.sort();
  return rep;
}

Report check_strength_monad_axioms(const MonoidalBicat& m, const PseudomonadBundle& t,
                                   const StrengthBundle& s, const Sample& smp,
                                   const std::string& suite) {
  StrCtx c(m, t.T, s);
  c.mon = t;
  std::vector<Ax> axs = {
      {"strength/w-n", 2, [c](const std::vector<ObjP>& o) { return ax_w_n(c, o); }},
      {"strength/w-p", 2, [c](const std::vector<ObjP>& o) { return ax_w_p(c, o); }},
      {"strength/w-m", 2, [c](const std::vector<ObjP>& o) { return ax_w_m(c, o); }},
      {"strength/x-z", 1, [c](const std::vector<ObjP>& o) { return ax_x_z(c, o); }},
      {"strength/x-w", 1, [c](const std::vector<ObjP>& o) { return ax_x_w(c, o); }},
      {"strength/y-w", 3, [c](const std::vector<ObjP>& o) { return ax_y_w(c, o); }},
      {"strength/y-z", 3, [c](const std::vector<ObjP>& o) { return ax_y_z(c, o); }},
  };
  return run_axioms(m, axs, smp, suite);
}

Report check_strong_pseudomonad(const MonoidalBicat& m, const PseudomonadBundle& t,
                                const StrengthBundle& s, const Sample& smp,
                                const std::string& suite) {
  Report rep = check_strong_pseudofunctor(m, t.T, s, smp, suite);
  Paste p(m.E());
  for (const FamilyMod& fm : strength_modifications(m, t.T, t, s, true)) {
    if (fm.label == s.w || fm.label == s.z) rep.merge(check_family_mod(p, fm, smp, suite));
  }
  rep.merge(check_strength_monad_axioms(m, t, s, smp, suite));
  rep.sort();
  return rep;
}

// ---------------------------------------------------------------------------
// Bistrong structure

namespace {

// Fig-5-style axiom 1 at (A, B, C): the eta compatibility of b.
std::pair<TwoP, TwoP> ax_b_eta(const StrCtx& c, const BistrongBundle& bs,
                               const std::vector<ObjP>& o) {
  ObjP A = o[0], B = o[1], C = o[2];
  ObjP TB = c.Tob(B);
  ObjP BC = obten(B, C), AB = obten(A, B);
  auto str2 = [&bs](std::vector<ObjP> os) { return onat(bs.right.t, std::move(os)); };

  TwoP l1 = twhr(tmod(bs.b, {A, B, C}), c.tenl(c.tenl(oid(A), onat(c.mon.eta, {B})), oid(C)));
  TwoP l2 = twhl(ocomp(c.str({A, BC}), c.tenl(oid(A), str2({B, C}))),
                 tnat("alpha", {oid(A), onat(c.mon.eta, {B}), oid(C)}));
  TwoP l3 = twhl(c.str({A, BC}),
                 twhr(c.tenc(tid(oid(A)), tmod(bs.right.z, {B, C})), c.al(A, B, C)));
  TwoP l4 = twhr(tmod(c.s.z, {A, BC}), c.al(A, B, C));
  TwoP lhs = tvert({l1, l2, l3, l4});

  TwoP r1 = twhl(ocomp(c.Tap(c.al(A, B, C)), str2({AB, C})),
                 c.tenc(tmod(c.s.z, {A, B}), tid(oid(C))));
  TwoP r2 = twhl(c.Tap(c.al(A, B, C)), tmod(bs.right.z, {AB, C}));
  TwoP r3 = tnat(c.mon.eta, {c.al(A, B, C)}, true);
  TwoP rhs = tvert({r1, r2, r3});
  (void)TB;
  return {lhs, rhs};
}

// Fig-5-style axiom 2 at (A, B, C): the mu compatibility of b.
std::pair<TwoP, TwoP> ax_b_mu(const StrCtx& c, const BistrongBundle& bs,
                              const std::vector<ObjP>& o) {
  ObjP A = o[0], B = o[1], C = o[2];
  ObjP TB = c.Tob(B), T2B = c.Tob(TB);
  ObjP BC = obten(B, C), AB = obten(A, B);
  ObjP ABC_r = obten(A, BC);
  auto str2 = [&bs](std::vector<ObjP> os) { return onat(bs.right.t, std::move(os)); };

  // Source: T(alpha) . mu . T(s_{AB,C}) . T(t_{A,B} ten C) . s_{A ten TB, C} . (t_{A,TB} ten C)
  TwoP s1 = twhr(tnat(c.mon.mu, {c.al(A, B, C)}, true),
                 ocomp({c.Tap(str2({AB, C})), c.Tap(c.tenl(c.str({A, B}), oid(C))),
                        str2({obten(A, TB), C}), c.tenl(c.str({A, TB}), oid(C))}));
  TwoP s2 = twhl(onat(c.mon.mu, {ABC_r}),
                 twhr(tapp(c.T, {tmod(bs.b, {A, B, C})}),
                      ocomp(str2({obten(A, TB), C}), c.tenl(c.str({A, TB}), oid(C)))));
  TwoP s3 = twhl(ocomp({onat(c.mon.mu, {ABC_r}), c.Tap(c.str({A, BC})),
                        c.Tap(c.tenl(oid(A), str2({B, C})))}),
                 tmod(bs.b, {A, TB, C}));
  TwoP s4 = twhl(ocomp(onat(c.mon.mu, {ABC_r}), c.Tap(c.str({A, BC}))),
                 twhr(tnat(c.s.t, {oid(A), str2({B, C})}, true),
                      ocomp(c.tenl(oid(A), str2({TB, C})), c.al(A, T2B, C))));
  TwoP s5 = twhr(tmod(c.s.w, {A, BC}),
                 ocomp({c.tenl(oid(A), c.Tap(str2({B, C}))), c.tenl(oid(A), str2({TB, C})),
                        c.al(A, T2B, C)}));
  TwoP s6 = twhl(c.str({A, BC}),
                 twhr(c.tenc(tid(oid(A)), tmod(bs.right.w, {B, C})), c.al(A, T2B, C)));
  TwoP lhs = tvert({s1, s2, s3, s4, s5, s6});

  TwoP r1 = twhl(ocomp({c.Tap(c.al(A, B, C)), onat(c.mon.mu, {obten(AB, C)}),
                        c.Tap(str2({AB, C}))}),
                 twhr(tnat(bs.right.t, {c.str({A, B}), oid(C)}, true),
                      c.tenl(c.str({A, TB}), oid(C))));
  TwoP r2 = twhl(c.Tap(c.al(A, B, C)),
                 twhr(tmod(bs.right.w, {AB, C}),
                      ocomp(c.tenl(c.Tap(c.str({A, B})), oid(C)), c.tenl(c.str({A, TB}), oid(C)))));
  TwoP r3 = twhl(ocomp(c.Tap(c.al(A, B, C)), str2({AB, C})),
                 c.tenc(tmod(c.s.w, {A, B}), tid(oid(C))));
  TwoP r4 = twhr(tmod(bs.b, {A, B, C}), c.tenl(c.tenl(oid(A), onat(c.mon.mu, {B})), oid(C)));
  TwoP r5 = twhl(ocomp(c.str({A, BC}), c.tenl(oid(A), str2({B, C}))),
                 tnat("alpha", {oid(A), onat(c.mon.mu, {B}), oid(C)}));
  TwoP rhs = tvert({r1, r2, r3, r4, r5});
  return {lhs, rhs};
}

} // namespace

Report check_bistrong(const MonoidalBicat& m, const PseudomonadBundle& t,
                      const BistrongBundle& bs, const Sample& smp, const std::string& suite) {
  Report rep;
  Paste p(m.E());
  const Bicat& b = m.B();

  // b has the printed hexagonal boundary and is invertible.
  {
    auto tuples = obj_tuples(b, smp, 3);
    rep.add(run_law(suite, "bistrong/b-boundary", tuples.size(),
                    [&](size_t i) -> std::optional<std::string> {
      std::vector<ObjP> o;
      for (const Cell& x : tuples[i]) o.push_back(ob(x));
      TwoP cell = tmod(bs.b, o);
      auto bd = p.boundary(cell);
      Cell got = p.eval(cell);
      if (b.src2(got) != p.eval_one(bd.first) || b.dst2(got) != p.eval_one(bd.second))
        return "b boundary mismatch";
      Iso2 iso = p.eval_iso(cell);
      if (b.vcomp(iso.bwd, iso.fwd) != b.id2(b.src2(got))) return "b not invertible";
      return std::nullopt;
    }, smp.str()));
  }

  StrCtx c(m, t.T, bs.left);
  c.mon = t;
  std::vector<Ax> axs = {
      {"bistrong/eta-compat", 3,
       [c, bs](const std::vector<ObjP>& o) { return ax_b_eta(c, bs, o); }},
      {"bistrong/mu-compat", 3,
       [c, bs](const std::vector<ObjP>& o) { return ax_b_mu(c, bs, o); }},
  };
  rep.merge(run_axioms(m, axs, smp, suite));
  rep.sort();
  return rep;
}

void register_strength_mods(MonoidalBicat& m, const PseudomonadBundle& t,
                            const StrengthBundle& s) {
  if (!m.canonical_mod) throw IllFormed("register_strength_mods: no canonical-cell factory");
  Env& env = m.E();
  ObjP I = ob(m.unit);
  std::string T = t.T;
  std::string tn = s.t;
  env.add(m.canonical_mod(s.x, 1,
      [tn, T, I](const std::vector<ObjP>& o) {
        return ocomp(oapp(T, {onat("lam", {o[0]})}), onat(tn, {I, o[0]}));
      },
      [T](const std::vector<ObjP>& o) { return onat("lam", {obapp(T, {o[0]})}); }));
  env.add(m.canonical_mod(s.y, 3,
      [tn, T](const std::vector<ObjP>& o) {
        return ocomp({onat(tn, {o[0], obapp("ten", {o[1], o[2]})}),
                      oapp("ten", {oid(o[0]), onat(tn, {o[1], o[2]})}),
                      onat("alpha", {o[0], o[1], obapp(T, {o[2]})})});
      },
      [tn, T](const std::vector<ObjP>& o) {
        return ocomp(oapp(T, {onat("alpha", {o[0], o[1], o[2]})}),
                     onat(tn, {obapp("ten", {o[0], o[1]}), o[2]}));
      }));
  env.add(m.canonical_mod(s.w, 2,
      [tn, T, mu = t.mu](const std::vector<ObjP>& o) {
        return ocomp({onat(mu, {obapp("ten", {o[0], o[1]})}), oapp(T, {onat(tn, {o[0], o[1]})}),
                      onat(tn, {o[0], obapp(T, {o[1]})})});
      },
      [tn, mu = t.mu](const std::vector<ObjP>& o) {
        return ocomp(onat(tn, {o[0], o[1]}), oapp("ten", {oid(o[0]), onat(mu, {o[1]})}));
      }));
  env.add(m.canonical_mod(s.z, 2,
      [tn, eta = t.eta](const std::vector<ObjP>& o) {
        return ocomp(onat(tn, {o[0], o[1]}), oapp("ten", {oid(o[0]), onat(eta, {o[1]})}));
      },
      [eta = t.eta](const std::vector<ObjP>& o) {
        return onat(eta, {obapp("ten", {o[0], o[1]})});
      }));
}

BistrongBundle right_strength_from_symmetry(MonoidalBicat& m, const PseudomonadBundle& t,
                                            const StrengthBundle& s) {
  BistrongBundle bs;
  bs.left = s;
  Env& env = m.E();
  auto envp = m.env;
  std::string T = t.T;
  std::string tn = s.t;

  // s_{A,B} = T(beta_{B,A}) . t_{B,A} . beta_{TA,B}
  PsNat s2;
  s2.name = bs.right.t;
  s2.arity = 2;
  s2.component = [envp, T, tn](const std::vector<Cell>& a) {
    Paste p(*envp);
    ObjP A = ob(a[0]), B = ob(a[1]);
    return p.eval_one(ocomp({oapp(T, {onat("beta", {B, A})}), onat(tn, {B, A}),
                             onat("beta", {obapp(T, {A}), B})}));
  };
  s2.cell = [envp, T, tn](const std::vector<Cell>& u) {
    Paste p(*envp);
    const Bicat& b = *envp->B;
    OneP ue = onecell(u[0]), ve = onecell(u[1]);
    ObjP A = ob(b.dom1(u[0])), A2 = ob(b.cod1(u[0]));
    ObjP B = ob(b.dom1(u[1])), B2 = ob(b.cod1(u[1]));
    OneP TB2A2 = oapp(T, {onat("beta", {B2, A2})});
    TwoP k1 = twhr(tnat("beta", {oapp(T, {ue}), ve}),
                   onat("beta", {obapp(T, {A}), B}));
    TwoP k2 = twhl(TB2A2, twhr(tnat(tn, {ve, ue}), onat("beta", {obapp(T, {A}), B})));
    TwoP k3 = twhr(tapp(T, {tnat("beta", {ue, ve})}),
                   ocomp(onat(tn, {B, A}), onat("beta", {obapp(T, {A}), B})));
    // assemble: s_{A',B'} . (Tu ten v) => ... => T(u ten v) . s_{A,B}
    TwoP full = tvert({twhl(ocomp(TB2A2, onat(tn, {B2, A2})), k1), k2, k3});
    return p.eval_iso(full);
  };
  s2.dom_fun = [T](const std::vector<OneP>& u) {
    return oapp("ten", {oapp(T, {u[0]}), u[1]});
  };
  s2.cod_fun = [T](const std::vector<OneP>& u) { return oapp(T, {oapp("ten", {u[0], u[1]})}); };
  s2.dom_fun2 = [T](const std::vector<TwoP>& u) {
    return tapp("ten", {tapp(T, {u[0]}), u[1]});
  };
  s2.cod_fun2 = [T](const std::vector<TwoP>& u) { return tapp(T, {tapp("ten", {u[0], u[1]})}); };
  env.add(s2);

  if (!m.canonical_mod)
    throw IllFormed("right_strength_from_symmetry: instance lacks a canonical-cell factory");

  ObjP I = ob(m.unit);
  std::string t2 = bs.right.t;
  env.add(m.canonical_mod(bs.right.x, 1,
      [t2, T, I](const std::vector<ObjP>& o) {
        return ocomp(oapp(T, {onat("rho", {o[0]})}), onat(t2, {o[0], I}));
      },
      [T](const std::vector<ObjP>& o) { return onat("rho", {obapp(T, {o[0]})}); }));
  env.add(m.canonical_mod(bs.right.y, 3,
      [t2, T](const std::vector<ObjP>& o) {
        // right-strength associativity: s . (s ten C) . alpha^-1-shape
        return ocomp({onat(t2, {obapp("ten", {o[0], o[1]}), o[2]}),
                      oapp("ten", {onat(t2, {o[0], o[1]}), oid(o[2])}),
                      onat("alpha_r", {obapp(T, {o[0]}), o[1], o[2]})});
      },
      [t2, T](const std::vector<ObjP>& o) {
        return ocomp(oapp(T, {onat("alpha_r", {o[0], o[1], o[2]})}),
                     onat(t2, {o[0], obapp("ten", {o[1], o[2]})}));
      }));
  env.add(m.canonical_mod(bs.right.w, 2,
      [t2, T, mu = t.mu](const std::vector<ObjP>& o) {
        return ocomp({onat(mu, {obapp("ten", {o[0], o[1]})}), oapp(T, {onat(t2, {o[0], o[1]})}),
                      onat(t2, {obapp(T, {o[0]}), o[1]})});
      },
      [t2, mu = t.mu](const std::vector<ObjP>& o) {
        return ocomp(onat(t2, {o[0], o[1]}), oapp("ten", {onat(mu, {o[0]}), oid(o[1])}));
      }));
  env.add(m.canonical_mod(bs.right.z, 2,
      [t2, eta = t.eta](const std::vector<ObjP>& o) {
        return ocomp(onat(t2, {o[0], o[1]}), oapp("ten", {onat(eta, {o[0]}), oid(o[1])}));
      },
      [eta = t.eta](const std::vector<ObjP>& o) {
        return onat(eta, {obapp("ten", {o[0], o[1]})});
      }));
  env.add(m.canonical_mod(bs.b, 3,
      [tn, t2, T](const std::vector<ObjP>& o) {
        return ocomp({oapp(T, {onat("alpha", {o[0], o[1], o[2]})}),
                      onat(t2, {obapp("ten", {o[0], o[1]}), o[2]}),
                      oapp("ten", {onat(tn, {o[0], o[1]}), oid(o[2])})});
      },
      [tn, t2, T](const std::vector<ObjP>& o) {
        return ocomp({onat(tn, {o[0], obapp("ten", {o[1], o[2]})}),
                      oapp("ten", {oid(o[0]), onat(t2, {o[1], o[2]})}),
                      onat("alpha", {o[0], obapp(T, {o[1]}), o[2]})});
      }));
  return bs;
}

} // namespace bk
