#include "bicatkit/checkers.hpp"

#include "bicatkit/law_runner.hpp"
#include "bicatkit/sampling.hpp"

namespace bk {

namespace {

// Composable chains of tuples for an arity-k endo-pseudofunctor on the host:
// each element is a k-tuple of 1-cells, composable slotwise.
struct TupleChain {
  std::vector<std::vector<Cell>> links; // links[step][slot]
};

std::vector<TupleChain> tuple_chains(const Bicat& b, const Sample& s, int arity, int len) {
  // Composable chains in the host, then a strided product across the slots.
  std::vector<std::vector<Cell>> chains;
  {
    std::vector<Cell> objs = b.objects(s.obj_cap);
    std::vector<Cell> cur;
    size_t total = 0;
    std::function<void(const Cell&, size_t*, size_t, bool)> go =
        [&](const Cell& at, size_t* counter, size_t stride, bool collect) {
          if (static_cast<int>(cur.size()) == len) {
            if (collect && (*counter % stride == 0)) chains.push_back(cur);
            ++*counter;
            return;
          }
          for (const Cell& prev : objs)
            for (const Cell& f : b.ones(prev, at, s.one_cap)) {
              cur.push_back(f);
              go(prev, counter, stride, collect);
              cur.pop_back();
            }
        };
    for (const Cell& a : objs) go(a, &total, 1, false);
    size_t per_slot_cap = s.pair_cap ? static_cast<size_t>(2 * s.pair_cap) : total;
    size_t stride = per_slot_cap && total > per_slot_cap ? (total + per_slot_cap - 1) / per_slot_cap : 1;
    size_t counter = 0;
    for (const Cell& a : objs) go(a, &counter, stride, true);
  }
  if (chains.empty()) return {};
  std::vector<size_t> sizes(arity, chains.size());
  std::vector<TupleChain> out;
  for (const auto& idx : strided_product(sizes, s.pair_cap)) {
    TupleChain tc;
    tc.links.assign(len, std::vector<Cell>(arity));
    for (int k = 0; k < arity; ++k)
      for (int i = 0; i < len; ++i) tc.links[i][k] = chains[idx[k]][i];
    out.push_back(std::move(tc));
  }
  return out;
}

std::vector<OneP> wrap(const std::vector<Cell>& cs) {
  std::vector<OneP> out;
  for (const Cell& c : cs) out.push_back(onecell(c));
  return out;
}

} // namespace

Report check_pseudofunctor(const Paste& p, const std::string& fun, const Sample& s,
                           const std::string& suite) {
  Report rep;
  const Bicat& b = *p.env.B;
  const PsFun& F = p.env.fun(fun);
  const std::string cap = s.str();

  // Compositor naturality in both arguments, against sampled 2-cells.
  {
    auto chains = tuple_chains(b, s, F.arity, 2);
    rep.add(run_law(suite, fun + "/compositor-natural", chains.size(),
                    [&](size_t i) -> std::optional<std::string> {
      const auto& outer = chains[i].links[0];
      const auto& inner = chains[i].links[1];
      for (size_t slot = 0; slot < outer.size(); ++slot) {
        for (const Cell& f2 : b.ones(b.dom1(outer[slot]), b.cod1(outer[slot]), 2)) {
          auto tws = b.twos(outer[slot], f2);
          if (tws.size() > 1) tws.resize(1);
          for (const Cell& sg : tws) {
            auto outer2 = outer;
            outer2[slot] = f2;
            std::vector<TwoP> sig, sid;
            for (size_t j = 0; j < outer.size(); ++j) {
              sig.push_back(j == slot ? tconst(sg, onecell(outer[j]), onecell(outer2[j]))
                                      : tid(onecell(outer[j])));
              sid.push_back(tid(onecell(inner[j])));
            }
            TwoP lhs = tvert({tcomp_cell(fun, wrap(outer), wrap(inner)),
                              tapp(fun, [&] {
                                std::vector<TwoP> ks;
                                for (size_t j = 0; j < outer.size(); ++j)
                                  ks.push_back(thoriz(sig[j], sid[j]));
                                return ks;
                              }())});
            TwoP rhs = tvert({thoriz(tapp(fun, sig), tapp(fun, sid)),
                              tcomp_cell(fun, wrap(outer2), wrap(inner))});
            std::string why;
            if (!equal_pastings(p, lhs, rhs, &why)) return "compositor not natural: " + why;
          }
        }
      }
      return std::nullopt;
    }, cap));
  }

  // Associativity axiom.
  {
    auto chains = tuple_chains(b, s, F.arity, 3);
    rep.add(run_law(suite, fun + "/assoc-axiom", chains.size(),
                    [&](size_t i) -> std::optional<std::string> {
      auto f = wrap(chains[i].links[0]);
      auto g = wrap(chains[i].links[1]);
      auto h = wrap(chains[i].links[2]);
      std::vector<OneP> gh, fg;
      for (size_t j = 0; j < f.size(); ++j) {
        gh.push_back(ocomp(g[j], h[j]));
        fg.push_back(ocomp(f[j], g[j]));
      }
      OneP Ff = oapp(fun, f), Fg = oapp(fun, g), Fh = oapp(fun, h);
      // route 1: a_{Ff,Fg,Fh} ; Ff <| phi(g,h) ; phi(f, g.h)
      TwoP r1 = tvert({tassoc(Ff, Fg, Fh), twhl(Ff, tcomp_cell(fun, g, h)),
                       tcomp_cell(fun, f, gh)});
      // route 2: phi(f,g) |> Fh ; phi(f.g, h) ; F(a)
      TwoP r2 = tvert({twhr(tcomp_cell(fun, f, g), Fh), tcomp_cell(fun, fg, h), tapp(fun, [&] {
                         std::vector<TwoP> ks;
                         for (size_t j = 0; j < f.size(); ++j)
                           ks.push_back(tassoc(f[j], g[j], h[j]));
                         return ks;
                       }())});
      std::string why;
      if (!equal_pastings(p, r1, r2, &why)) return "associativity axiom fails: " + why;
      return std::nullopt;
    }, cap));
  }

  // Unit axioms.
  {
    auto chains = tuple_chains(b, s, F.arity, 1);
    rep.add(run_law(suite, fun + "/unit-axioms", chains.size(),
                    [&](size_t i) -> std::optional<std::string> {
      auto f = wrap(chains[i].links[0]);
      std::vector<ObjP> doms, cods;
      std::vector<OneP> ids_d, ids_c, idf_l, f_idr;
      for (const auto& e : f) {
        doms.push_back(ob(b.dom1(p.eval_one(e))));
        cods.push_back(ob(b.cod1(p.eval_one(e))));
      }
      for (size_t j = 0; j < f.size(); ++j) {
        ids_d.push_back(oid(doms[j]));
        ids_c.push_back(oid(cods[j]));
        idf_l.push_back(ocomp(oid(cods[j]), f[j]));
        f_idr.push_back(ocomp(f[j], oid(doms[j])));
      }
      OneP Ff = oapp(fun, f);
      // left: l_{Ff} = F(l) . phi(Id, f) . (psi |> Ff)
      TwoP lhs = tlunit(Ff);
      TwoP rhs = tvert({twhr(tunit_cell(fun, cods), Ff), tcomp_cell(fun, ids_c, f), tapp(fun, [&] {
                          std::vector<TwoP> ks;
                          for (const auto& e : f) ks.push_back(tlunit(e));
                          return ks;
                        }())});
      std::string why;
      if (!equal_pastings(p, lhs, rhs, &why)) return "left unit axiom fails: " + why;
      // right: r_{Ff} = F(r) . phi(f, Id) . (Ff <| psi)
      TwoP lhs2 = trunit(Ff);
      TwoP rhs2 = tvert({twhl(Ff, tunit_cell(fun, doms)), tcomp_cell(fun, f, ids_d), tapp(fun, [&] {
                           std::vector<TwoP> ks;
                           for (const auto& e : f) ks.push_back(trunit(e));
                           return ks;
                         }())});
      if (!equal_pastings(p, lhs2, rhs2, &why)) return "right unit axiom fails: " + why;
      return std::nullopt;
    }, cap));
  }

  return rep;
}

Report check_psnat(const Paste& p, const std::string& nat, const Sample& s,
                   const std::string& suite) {
  return check_family(p, nf_named(p.env, nat), s, suite, nat);
}

std::vector<FamilyMod> pseudomonad_modifications(const Paste& p, const PseudomonadBundle& t) {
  const Env& env = p.env;
  const Bicat& b = *env.B;
  NatFamily mu = nf_named(env, t.mu);
  NatFamily eta = nf_named(env, t.eta);
  NatFamily idT = nf_identity(1,
      [T = t.T](const std::vector<OneP>& u) { return oapp(T, {u[0]}); },
      [T = t.T](const std::vector<TwoP>& u) { return tapp(T, {u[0]}); });
  auto at_T = [T = t.T] { return am_app(T, {am_proj(0)}); };

  std::vector<FamilyMod> out;
  {
    FamilyMod fm;
    fm.label = t.m;
    fm.arity = 1;
    fm.src = nf_vcomp(b, mu, nf_apply(t.T, mu));
    fm.dst = nf_vcomp(b, mu, nf_precompose(mu, 1, {at_T()}));
    fm.component = [m = t.m](const std::vector<ObjP>& objs) { return tmod(m, objs); };
    out.push_back(fm);
  }
  {
    FamilyMod fm;
    fm.label = t.n;
    fm.arity = 1;
    fm.src = nf_vcomp(b, mu, nf_precompose(eta, 1, {at_T()}));
    fm.dst = idT;
    fm.component = [n = t.n](const std::vector<ObjP>& objs) { return tmod(n, objs); };
    out.push_back(fm);
  }
  {
    FamilyMod fm;
    fm.label = t.p;
    fm.arity = 1;
    fm.src = nf_vcomp(b, mu, nf_apply(t.T, eta));
    fm.dst = idT;
    fm.component = [pm = t.p](const std::vector<ObjP>& objs) { return tmod(pm, objs); };
    out.push_back(fm);
  }
  return out;
}

Report check_pseudomonad(const Paste& p, const PseudomonadBundle& t, const Sample& s,
                         const std::string& suite) {
  Report rep;
  const Bicat& b = *p.env.B;
  const std::string cap = s.str();

  rep.merge(check_pseudofunctor(p, t.T, s, suite));
  rep.merge(check_family(p, nf_named(p.env, t.eta), s, suite, t.eta));
  rep.merge(check_family(p, nf_named(p.env, t.mu), s, suite, t.mu));
  for (const FamilyMod& fm : pseudomonad_modifications(p, t))
    rep.merge(check_family_mod(p, fm, s, suite));

  auto objs = b.objects(s.obj_cap);

  auto Tof = [&](const ObjP& a) { return obapp(t.T, {a}); };

  // First coherence axiom: the two pastings
  //   mu . T mu . T^2 mu  =>  mu . mu_T . mu_{T^2}
  rep.add(run_law(suite, "pseudomonad/assoc-coherence", objs.size(),
                  [&](size_t i) -> std::optional<std::string> {
    ObjP A = ob(objs[i]);
    ObjP TA = Tof(A), T2A = Tof(TA), T3A = Tof(T2A);
    OneP muA = onat(t.mu, {A});
    OneP muTA = onat(t.mu, {TA});
    OneP muT2A = onat(t.mu, {T2A});
    OneP TmuA = oapp(t.T, {muA});
    OneP T2muA = oapp(t.T, {TmuA});
    OneP TmuTA = oapp(t.T, {muTA});

    // route 1: (m |> T^2 mu) ; (mu <| cell(mu)_{mu_A}) ; (m |> mu_{T^2})
    TwoP r1 = tvert({twhr(tmod(t.m, {A}), T2muA), twhl(muA, tnat(t.mu, {muA})),
                     twhr(tmod(t.m, {A}), muT2A)});
    // route 2: (mu <| T m) ; (m |> T mu_T) ; (mu <| m_T)
    TwoP r2 = tvert({twhl(muA, tapp(t.T, {tmod(t.m, {A})})), twhr(tmod(t.m, {A}), TmuTA),
                     twhl(muA, tmod(t.m, {TA}))});
    std::string why;
    if (!equal_pastings(p, r1, r2, &why)) return "associativity coherence fails: " + why;
    return std::nullopt;
  }, cap));

  // Second coherence axiom: from mu . T mu . T eta_T both unit routes agree.
  rep.add(run_law(suite, "pseudomonad/unit-coherence", objs.size(),
                  [&](size_t i) -> std::optional<std::string> {
    ObjP A = ob(objs[i]);
    ObjP TA = Tof(A);
    OneP muA = onat(t.mu, {A});
    OneP TetaTA = oapp(t.T, {onat(t.eta, {TA})});

    // route 1: mu <| T(n)
    TwoP r1 = twhl(muA, tapp(t.T, {tmod(t.n, {A})}));
    // route 2: (m |> T eta_T) ; (mu <| p_T)
    TwoP r2 = tvert({twhr(tmod(t.m, {A}), TetaTA), twhl(muA, tmod(t.p, {TA}))});
    std::string why;
    if (!equal_pastings(p, r1, r2, &why)) return "unit coherence fails: " + why;
    return std::nullopt;
  }, cap));

  rep.sort();
  return rep;
}

Report check_monoidal_full(const MonoidalBicat& m, const Sample& s, const std::string& suite) {
  Paste p(m.E());
  Report rep = check_pseudofunctor(p, "ten", s, suite);
  rep.merge(check_monoidal_bicat(m, s, suite));
  rep.sort();
  return rep;
}

} // namespace bk
