#include "bicatkit/family.hpp"

#include "bicatkit/law_runner.hpp"
#include "bicatkit/sampling.hpp"

namespace bk {

NatFamily nf_named(const Env& env, const std::string& nat) {
  const PsNat& n = env.nat(nat);
  NatFamily f;
  f.arity = n.arity;
  f.comp = [nat](const std::vector<ObjP>& objs) { return onat(nat, objs); };
  f.cell = [nat](const std::vector<OneP>& u, const std::vector<ObjP>&,
                 const std::vector<ObjP>&) { return tnat(nat, u); };
  f.dom_map = n.dom_fun;
  f.cod_map = n.cod_fun;
  f.dom_map2 = n.dom_fun2;
  f.cod_map2 = n.cod_fun2;
  return f;
}

NatFamily nf_identity(int arity, std::function<OneP(const std::vector<OneP>&)> fun,
                      std::function<TwoP(const std::vector<TwoP>&)> fun2) {
  NatFamily f;
  f.arity = arity;
  f.comp = [fun](const std::vector<ObjP>& objs) {
    std::vector<OneP> ids;
    for (const auto& o : objs) ids.push_back(oid(o));
    return fun(ids);
  };
  f.cell = [fun](const std::vector<OneP>& u, const std::vector<ObjP>&,
                 const std::vector<ObjP>&) { return tid(fun(u)); };
  f.dom_map = fun;
  f.cod_map = fun;
  f.dom_map2 = fun2;
  f.cod_map2 = fun2;
  return f;
}

NatFamily nf_vcomp(const Bicat&, NatFamily after, NatFamily before) {
  if (after.arity != before.arity) throw IllFormed("nf_vcomp: arity mismatch");
  NatFamily f;
  f.arity = after.arity;
  NatFamily a = std::move(after), b = std::move(before);
  f.comp = [a, b](const std::vector<ObjP>& objs) { return ocomp(a.comp(objs), b.comp(objs)); };
  f.cell = [a, b](const std::vector<OneP>& u, const std::vector<ObjP>& doms,
                  const std::vector<ObjP>& cods) {
    return tvert({twhl(a.comp(cods), b.cell(u, doms, cods)),
                  twhr(a.cell(u, doms, cods), b.comp(doms))});
  };
  f.dom_map = b.dom_map;
  f.cod_map = a.cod_map;
  f.dom_map2 = b.dom_map2;
  f.cod_map2 = a.cod_map2;
  return f;
}

NatFamily nf_pair(const std::string& fun, NatFamily left, NatFamily right) {
  NatFamily f;
  f.arity = left.arity + right.arity;
  NatFamily l = std::move(left), r = std::move(right);
  int la = l.arity;
  auto split_obj = [la](const std::vector<ObjP>& v) {
    return std::make_pair(std::vector<ObjP>(v.begin(), v.begin() + la),
                          std::vector<ObjP>(v.begin() + la, v.end()));
  };
  auto split_one = [la](const std::vector<OneP>& v) {
    return std::make_pair(std::vector<OneP>(v.begin(), v.begin() + la),
                          std::vector<OneP>(v.begin() + la, v.end()));
  };
  auto split_two = [la](const std::vector<TwoP>& v) {
    return std::make_pair(std::vector<TwoP>(v.begin(), v.begin() + la),
                          std::vector<TwoP>(v.begin() + la, v.end()));
  };
  f.comp = [l, r, fun, split_obj](const std::vector<ObjP>& objs) {
    auto [lo, ro] = split_obj(objs);
    return oapp(fun, {l.comp(lo), r.comp(ro)});
  };
  f.cell = [l, r, fun, split_one, split_obj](const std::vector<OneP>& u,
                                             const std::vector<ObjP>& doms,
                                             const std::vector<ObjP>& cods) {
    auto [lu, ru] = split_one(u);
    auto [ld, rd] = split_obj(doms);
    auto [lc, rc] = split_obj(cods);
    return tapp(fun, {l.cell(lu, ld, lc), r.cell(ru, rd, rc)});
  };
  f.dom_map = [l, r, fun, split_one](const std::vector<OneP>& u) {
    auto [lu, ru] = split_one(u);
    return oapp(fun, {l.dom_map(lu), r.dom_map(ru)});
  };
  f.cod_map = [l, r, fun, split_one](const std::vector<OneP>& u) {
    auto [lu, ru] = split_one(u);
    return oapp(fun, {l.cod_map(lu), r.cod_map(ru)});
  };
  f.dom_map2 = [l, r, fun, split_two](const std::vector<TwoP>& u) {
    auto [lu, ru] = split_two(u);
    return tapp(fun, {l.dom_map2(lu), r.dom_map2(ru)});
  };
  f.cod_map2 = [l, r, fun, split_two](const std::vector<TwoP>& u) {
    auto [lu, ru] = split_two(u);
    return tapp(fun, {l.cod_map2(lu), r.cod_map2(ru)});
  };
  return f;
}

NatFamily nf_apply(const std::string& fun, NatFamily inner) {
  NatFamily f;
  f.arity = inner.arity;
  NatFamily i = std::move(inner);
  f.comp = [i, fun](const std::vector<ObjP>& objs) { return oapp(fun, {i.comp(objs)}); };
  f.cell = [i, fun](const std::vector<OneP>& u, const std::vector<ObjP>& doms,
                    const std::vector<ObjP>& cods) {
    return tapp(fun, {i.cell(u, doms, cods)});
  };
  f.dom_map = [i, fun](const std::vector<OneP>& u) { return oapp(fun, {i.dom_map(u)}); };
  f.cod_map = [i, fun](const std::vector<OneP>& u) { return oapp(fun, {i.cod_map(u)}); };
  f.dom_map2 = [i, fun](const std::vector<TwoP>& u) { return tapp(fun, {i.dom_map2(u)}); };
  f.cod_map2 = [i, fun](const std::vector<TwoP>& u) { return tapp(fun, {i.cod_map2(u)}); };
  return f;
}

NatFamily nf_fix(NatFamily base, const std::vector<ObjP>& pins) {
  NatFamily f;
  int open = 0;
  for (const auto& p : pins)
    if (!p) ++open;
  f.arity = open;
  NatFamily b = std::move(base);
  std::vector<ObjP> pn = pins;
  auto fill_obj = [pn](const std::vector<ObjP>& objs) {
    std::vector<ObjP> out;
    size_t j = 0;
    for (const auto& p : pn) out.push_back(p ? p : objs[j++]);
    return out;
  };
  auto fill_one = [pn](const std::vector<OneP>& u) {
    std::vector<OneP> out;
    size_t j = 0;
    for (const auto& p : pn) out.push_back(p ? oid(p) : u[j++]);
    return out;
  };
  auto fill_two = [pn](const std::vector<TwoP>& u) {
    std::vector<TwoP> out;
    size_t j = 0;
    for (const auto& p : pn) out.push_back(p ? tid(oid(p)) : u[j++]);
    return out;
  };
  f.comp = [b, fill_obj](const std::vector<ObjP>& objs) { return b.comp(fill_obj(objs)); };
  f.cell = [b, fill_obj, fill_one](const std::vector<OneP>& u, const std::vector<ObjP>& doms,
                                   const std::vector<ObjP>& cods) {
    return b.cell(fill_one(u), fill_obj(doms), fill_obj(cods));
  };
  f.dom_map = [b, fill_one](const std::vector<OneP>& u) { return b.dom_map(fill_one(u)); };
  f.cod_map = [b, fill_one](const std::vector<OneP>& u) { return b.cod_map(fill_one(u)); };
  f.dom_map2 = [b, fill_two](const std::vector<TwoP>& u) { return b.dom_map2(fill_two(u)); };
  f.cod_map2 = [b, fill_two](const std::vector<TwoP>& u) { return b.cod_map2(fill_two(u)); };
  return f;
}

ArgMap am_proj(size_t i) {
  ArgMap m;
  m.obj = [i](const std::vector<ObjP>& v) { return v.at(i); };
  m.one = [i](const std::vector<OneP>& v) { return v.at(i); };
  m.two = [i](const std::vector<TwoP>& v) { return v.at(i); };
  return m;
}

ArgMap am_const(ObjP a) {
  ArgMap m;
  m.obj = [a](const std::vector<ObjP>&) { return a; };
  m.one = [a](const std::vector<OneP>&) { return oid(a); };
  m.two = [a](const std::vector<TwoP>&) { return tid(oid(a)); };
  return m;
}

ArgMap am_app(const std::string& fun, std::vector<ArgMap> parts) {
  ArgMap m;
  auto ps = std::make_shared<std::vector<ArgMap>>(std::move(parts));
  m.obj = [ps, fun](const std::vector<ObjP>& v) {
    std::vector<ObjP> args;
    for (const auto& p : *ps) args.push_back(p.obj(v));
    return obapp(fun, args);
  };
  m.one = [ps, fun](const std::vector<OneP>& v) {
    std::vector<OneP> args;
    for (const auto& p : *ps) args.push_back(p.one(v));
    return oapp(fun, args);
  };
  m.two = [ps, fun](const std::vector<TwoP>& v) {
    std::vector<TwoP> args;
    for (const auto& p : *ps) args.push_back(p.two(v));
    return tapp(fun, args);
  };
  return m;
}

NatFamily nf_precompose(NatFamily base, int outer_arity, std::vector<ArgMap> maps) {
  NatFamily f;
  f.arity = outer_arity;
  NatFamily b = std::move(base);
  auto ms = std::make_shared<std::vector<ArgMap>>(std::move(maps));
  auto map_obj = [ms](const std::vector<ObjP>& v) {
    std::vector<ObjP> out;
    for (const auto& m : *ms) out.push_back(m.obj(v));
    return out;
  };
  auto map_one = [ms](const std::vector<OneP>& v) {
    std::vector<OneP> out;
    for (const auto& m : *ms) out.push_back(m.one(v));
    return out;
  };
  auto map_two = [ms](const std::vector<TwoP>& v) {
    std::vector<TwoP> out;
    for (const auto& m : *ms) out.push_back(m.two(v));
    return out;
  };
  f.comp = [b, map_obj](const std::vector<ObjP>& objs) { return b.comp(map_obj(objs)); };
  f.cell = [b, map_obj, map_one](const std::vector<OneP>& u, const std::vector<ObjP>& doms,
                                 const std::vector<ObjP>& cods) {
    return b.cell(map_one(u), map_obj(doms), map_obj(cods));
  };
  f.dom_map = [b, map_one](const std::vector<OneP>& u) { return b.dom_map(map_one(u)); };
  f.cod_map = [b, map_one](const std::vector<OneP>& u) { return b.cod_map(map_one(u)); };
  f.dom_map2 = [b, map_two](const std::vector<TwoP>& u) { return b.dom_map2(map_two(u)); };
  f.cod_map2 = [b, map_two](const std::vector<TwoP>& u) { return b.cod_map2(map_two(u)); };
  return f;
}

NatFamily nf_id1() {
  return nf_identity(1, [](const std::vector<OneP>& u) { return u[0]; },
                     [](const std::vector<TwoP>& t) { return t[0]; });
}

NatFamily nf_concrete(int arity, std::function<OneP(const std::vector<ObjP>&)> comp,
                      std::function<Iso2(const std::vector<Cell>&)> cell,
                      std::function<OneP(const std::vector<OneP>&)> dom_map,
                      std::function<OneP(const std::vector<OneP>&)> cod_map,
                      std::function<TwoP(const std::vector<TwoP>&)> dom_map2,
                      std::function<TwoP(const std::vector<TwoP>&)> cod_map2, const Env& env) {
  NatFamily f;
  f.arity = arity;
  f.comp = std::move(comp);
  const Env* envp = &env;
  auto dm = dom_map, cm = cod_map;
  auto cp = f.comp;
  f.cell = [cell, envp, dm, cm, cp](const std::vector<OneP>& u, const std::vector<ObjP>& doms,
                                    const std::vector<ObjP>& cods) {
    Paste p(*envp);
    std::vector<Cell> cs;
    for (const auto& e : u) cs.push_back(p.eval_one(e));
    Iso2 iso = cell(cs);
    OneP src = ocomp(cp(cods), dm(u));
    OneP dst = ocomp(cm(u), cp(doms));
    return tconst(iso.fwd, src, dst);
  };
  f.dom_map = dom_map;
  f.cod_map = cod_map;
  f.dom_map2 = std::move(dom_map2);
  f.cod_map2 = std::move(cod_map2);
  return f;
}

// ---------------------------------------------------------------------------

bool equal_pastings(const Paste& p, const TwoP& lhs, const TwoP& rhs, std::string* why) {
  const Bicat& b = *p.env.B;
  auto bl = p.boundary(lhs);
  auto br = p.boundary(rhs);
  Cell L, R;
  try {
    L = p.eval(lhs);
    R = p.eval(rhs);
    if (p.eval_one(bl.first) != p.eval_one(br.first))
      R = b.vcomp(R, p.coherence(bl.first, br.first).fwd);
    if (p.eval_one(bl.second) != p.eval_one(br.second))
      R = b.vcomp(p.coherence(br.second, bl.second).fwd, R);
  } catch (const std::exception& e) {
    if (why) *why = std::string("evaluation failed: ") + e.what();
    return false;
  }
  if (L == R) return true;
  if (why)
    *why = "pastings differ:\n  lhs " + render(lhs) + "\n  rhs " + render(rhs) + "\n  lhs value " +
           L.key() + "\n  rhs value " + R.key();
  return false;
}

std::vector<OneTuple> one_tuples(const Bicat& b, const Sample& s, int arity) {
  // Flat per-slot candidate list: every sampled 1-cell between sampled objects.
  std::vector<Cell> objs = b.objects(s.obj_cap);
  std::vector<Cell> all;
  for (const Cell& a : objs)
    for (const Cell& c : objs)
      for (const Cell& f : b.ones(a, c, s.one_cap)) all.push_back(f);
  std::vector<size_t> sizes(arity, all.size());
  std::vector<OneTuple> out;
  for (const auto& idx : strided_product(sizes, s.pair_cap)) {
    OneTuple ot;
    for (size_t j : idx) {
      const Cell& f = all[j];
      ot.ones.push_back(onecell(f));
      ot.doms.push_back(ob(b.dom1(f)));
      ot.cods.push_back(ob(b.cod1(f)));
    }
    out.push_back(std::move(ot));
  }
  return out;
}

std::vector<std::vector<Cell>> obj_tuples(const Bicat& b, const Sample& s, int arity) {
  std::vector<Cell> objs = b.objects(s.obj_cap);
  std::vector<size_t> sizes(arity, objs.size());
  std::vector<std::vector<Cell>> out;
  for (const auto& idx : strided_product(sizes, s.pair_cap)) {
    std::vector<Cell> t;
    for (size_t j : idx) t.push_back(objs[j]);
    out.push_back(std::move(t));
  }
  return out;
}

Report check_family(const Paste& p, const NatFamily& f, const Sample& s, const std::string& suite,
                    const std::string& label) {
  Report rep;
  const Bicat& b = *p.env.B;
  const std::string cap = s.str();
  auto tuples = one_tuples(b, s, f.arity);

  rep.add(run_law(suite, label + "/cell-boundaries", tuples.size(),
                  [&](size_t i) -> std::optional<std::string> {
    const OneTuple& t = tuples[i];
    TwoP c = f.cell(t.ones, t.doms, t.cods);
    auto bd = p.boundary(c);
    Cell src = p.eval_one(bd.first);
    Cell dst = p.eval_one(bd.second);
    Cell got = p.eval(c);
    if (b.src2(got) != src || b.dst2(got) != dst) return "cell boundary mismatch";
    return std::nullopt;
  }, cap));

  rep.add(run_law(suite, label + "/natural", tuples.size(), [&](size_t i) -> std::optional<std::string> {
    const OneTuple& t = tuples[i];
    for (size_t slot = 0; slot < t.ones.size(); ++slot) {
      Cell fc = p.eval_one(t.ones[slot]);
      for (const Cell& f2 : b.ones(b.dom1(fc), b.cod1(fc), 2)) {
        auto cells2 = b.twos(fc, f2);
        if (cells2.size() > 2) cells2.resize(2);
        for (const Cell& sg : cells2) {
          auto u2 = t.ones;
          u2[slot] = onecell(f2);
          std::vector<TwoP> sig;
          for (size_t j = 0; j < t.ones.size(); ++j)
            sig.push_back(j == slot ? tconst(sg, t.ones[j], u2[j]) : tid(t.ones[j]));
          TwoP lhs = tvert({twhl(f.comp(t.cods), f.dom_map2(sig)), f.cell(u2, t.doms, t.cods)});
          TwoP rhs = tvert({f.cell(t.ones, t.doms, t.cods), twhr(f.cod_map2(sig), f.comp(t.doms))});
          std::string why;
          if (!equal_pastings(p, lhs, rhs, &why)) return "naturality fails: " + why;
        }
      }
    }
    return std::nullopt;
  }, cap));

  // Identity law: the cell at identities collapses to a coherence fill.
  {
    auto objs = obj_tuples(b, s, f.arity);
    rep.add(run_law(suite, label + "/identity-law", objs.size(),
                    [&](size_t i) -> std::optional<std::string> {
      std::vector<OneP> ids;
      std::vector<ObjP> os;
      for (const Cell& a : objs[i]) {
        os.push_back(ob(a));
        ids.push_back(oid(ob(a)));
      }
      TwoP cell = f.cell(ids, os, os);
      auto bd = p.boundary(cell);
      TwoP fill = tfill(bd.first, bd.second);
      std::string why;
      if (!equal_pastings(p, cell, fill, &why)) return "identity law fails: " + why;
      return std::nullopt;
    }, cap));
  }

  // Composition law: cell at composites equals the two-step pasting.
  {
    struct CompCase {
      OneTuple u, v; // v after u componentwise
    };
    std::vector<CompCase> cases;
    auto tuples2 = one_tuples(b, s, f.arity);
    for (const auto& t : tuples2) {
      CompCase c;
      c.u = t;
      bool ok = true;
      c.v.ones.resize(t.ones.size());
      c.v.doms = t.cods;
      c.v.cods.resize(t.ones.size());
      for (size_t j = 0; j < t.ones.size() && ok; ++j) {
        Cell fc = p.eval_one(t.ones[j]);
        auto nexts = b.ones(b.cod1(fc), b.cod1(fc), 1);
        if (nexts.empty()) {
          ok = false;
          break;
        }
        c.v.ones[j] = onecell(nexts.front());
        c.v.cods[j] = ob(b.cod1(nexts.front()));
      }
      if (ok) cases.push_back(std::move(c));
      if (s.pair_cap && cases.size() >= static_cast<size_t>(s.pair_cap / 4 + 1)) break;
    }
    rep.add(run_law(suite, label + "/composition-law", cases.size(),
                    [&](size_t i) -> std::optional<std::string> {
      const auto& c = cases[i];
      std::vector<OneP> comps;
      for (size_t j = 0; j < c.u.ones.size(); ++j) comps.push_back(ocomp(c.v.ones[j], c.u.ones[j]));
      TwoP lhs = f.cell(comps, c.u.doms, c.v.cods);
      TwoP two_step =
          tvert({twhr(f.cell(c.v.ones, c.v.doms, c.v.cods), f.dom_map(c.u.ones)),
                 twhl(f.cod_map(c.v.ones), f.cell(c.u.ones, c.u.doms, c.u.cods))});
      std::string why;
      if (!equal_pastings(p, lhs, two_step, &why)) return "composition law fails: " + why;
      return std::nullopt;
    }, cap));
  }

  return rep;
}

Report check_family_mod(const Paste& p, const FamilyMod& m, const Sample& s,
                        const std::string& suite) {
  Report rep;
  const Bicat& b = *p.env.B;
  auto tuples = one_tuples(b, s, m.arity);
  rep.add(run_law(suite, m.label + "/modification", tuples.size(),
                  [&](size_t i) -> std::optional<std::string> {
    const OneTuple& t = tuples[i];
    TwoP lhs = tvert({twhr(m.component(t.cods), m.src.dom_map(t.ones)),
                      m.dst.cell(t.ones, t.doms, t.cods)});
    TwoP rhs = tvert({m.src.cell(t.ones, t.doms, t.cods),
                      twhl(m.src.cod_map(t.ones), m.component(t.doms))});
    std::string why;
    if (!equal_pastings(p, lhs, rhs, &why)) return m.label + " fails: " + why;
    return std::nullopt;
  }, s.str()));
  return rep;
}

} // namespace bk
