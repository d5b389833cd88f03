#include "bicatkit/kleisli.hpp"

namespace bk {

namespace {

std::string arr_key(const KlArr& a) { return "kl[" + a.base.key() + "]"; }

} // namespace

Cell kl_arr(const Env& base_env, const PseudomonadBundle& t, Cell base_one, Cell dom, Cell cod) {
  const Bicat& b = *base_env.B;
  Cell expect = base_env.fun(t.T).on_obj({cod});
  if (!(b.dom1(base_one) == dom) || !(b.cod1(base_one) == expect))
    throw BoundaryMismatch("kleisli 1-cell: base boundary must be dom -> T cod");
  KlArr a{std::move(base_one), std::move(dom), std::move(cod)};
  std::string k = arr_key(a);
  return Cell::make(std::move(k), std::move(a));
}

Cell kl_map(const Bicat& base, const KlArr& src, const KlArr& dst, Cell base_two) {
  if (!(src.dom == dst.dom) || !(src.cod == dst.cod))
    throw BoundaryMismatch("kleisli 2-cell: not parallel");
  if (!(base.src2(base_two) == src.base) || !(base.dst2(base_two) == dst.base))
    throw BoundaryMismatch("kleisli 2-cell: base boundary mismatch");
  std::string k = "2kl[" + base_two.key() + "]";
  return Cell::make(std::move(k), KlMap{src, dst, std::move(base_two)});
}

const KlArr& kl_arr_of(const Cell& c) { return c.as<KlArr>(); }
const KlMap& kl_map_of(const Cell& c) { return c.as<KlMap>(); }

Cell kl_pure(const KleisliWorld& w, const Cell& base_one) {
  const Bicat& b = *w.base;
  const Env& env = *w.base_env;
  Cell cod = b.cod1(base_one);
  Cell eta = env.nat(w.monad.eta).component({cod});
  return kl_arr(env, w.monad, b.comp1(eta, base_one), b.dom1(base_one), cod);
}

KleisliWorld kleisli_world(std::shared_ptr<Bicat> base, std::shared_ptr<Env> base_env,
                           PseudomonadBundle t) {
  KleisliWorld w;
  w.base = std::move(base);
  w.base_env = std::move(base_env);
  w.monad = t;

  auto env = w.base_env;
  const Bicat* bp = w.base.get();
  auto B = [bp]() -> const Bicat& { return *bp; };

  auto kb = std::make_shared<Bicat>();
  kb->name = w.base->name + "/kleisli(" + t.T + ")";
  kb->dom1 = [](const Cell& f) { return kl_arr_of(f).dom; };
  kb->cod1 = [](const Cell& f) { return kl_arr_of(f).cod; };
  kb->src2 = [env, t](const Cell& x) {
    const KlMap& m = kl_map_of(x);
    return kl_arr(*env, t, m.src.base, m.src.dom, m.src.cod);
  };
  kb->dst2 = [env, t](const Cell& x) {
    const KlMap& m = kl_map_of(x);
    return kl_arr(*env, t, m.dst.base, m.dst.dom, m.dst.cod);
  };
  kb->id1 = [env, t](const Cell& a) {
    return kl_arr(*env, t, env->nat(t.eta).component({a}), a, a);
  };
  kb->comp1 = [env, t, bp](const Cell& f, const Cell& g) {
    const Bicat& b = *bp;
    const KlArr& fa = kl_arr_of(f);
    const KlArr& ga = kl_arr_of(g);
    if (!(ga.cod == fa.dom)) throw BoundaryMismatch("kleisli compose");
    Cell mu = env->nat(t.mu).component({fa.cod});
    Cell Tf = env->fun(t.T).on_one({fa.base});
    Cell base = b.comp1(b.comp1(mu, Tf), ga.base);
    return kl_arr(*env, t, base, ga.dom, fa.cod);
  };
  kb->id2 = [env, t, bp](const Cell& f) {
    const KlArr& a = kl_arr_of(f);
    return kl_map(*bp, a, a, bp->id2(a.base));
  };
  kb->vcomp = [env, t, bp](const Cell& x, const Cell& y) {
    const KlMap& xm = kl_map_of(x);
    const KlMap& ym = kl_map_of(y);
    return kl_map(*bp, ym.src, xm.dst, bp->vcomp(xm.base, ym.base));
  };
  kb->hcomp = [env, t, bp](const Cell& x, const Cell& y) {
    const Bicat& b = *bp;
    const KlMap& xm = kl_map_of(x); // outer: f => f' in hom(B, C)
    const KlMap& ym = kl_map_of(y); // inner: g => g' in hom(A, B)
    Cell mu = env->nat(t.mu).component({xm.src.cod});
    Cell Tx = env->fun(t.T).on_two({xm.base});
    Cell base = b.hcomp(b.hcomp(b.id2(mu), Tx), ym.base);
    KlArr src{b.src2(base), ym.src.dom, xm.src.cod};
    KlArr dst{b.dst2(base), ym.src.dom, xm.src.cod};
    return kl_map(*bp, src, dst, base);
  };

  // Structural cells via the pasting evaluator over the base environment.
  // src_e / dst_e must mirror the expressions the composites were built from,
  // so coherence fills can bridge the pasting onto the exact boundaries.
  auto mk_iso = [env, bp](const TwoP& expr, const OneP& src_e, const OneP& dst_e,
                          const KlArr& src, const KlArr& dst) {
    Paste p(*env);
    const Bicat& b = *bp;
    if (p.eval_one(src_e) != src.base || p.eval_one(dst_e) != dst.base)
      throw IllFormed("kleisli structural cell: boundary expressions disagree");
    Iso2 iso = p.eval_iso(expr);
    auto bd = p.boundary(expr);
    if (p.eval_one(bd.first) != src.base) iso = iso_vcomp(b, iso, p.coherence(src_e, bd.first));
    if (p.eval_one(bd.second) != dst.base) iso = iso_vcomp(b, p.coherence(bd.second, dst_e), iso);
    return Iso2{kl_map(b, src, dst, iso.fwd), kl_map(b, dst, src, iso.bwd)};
  };
  // The base expression of a Kleisli composite.
  auto kexpr = [t](const OneP& fe, const OneP& ge, const ObjP& cod) {
    return ocomp(ocomp(onat(t.mu, {cod}), oapp(t.T, {fe})), ge);
  };

  kb->assoc = [env, t, bp, kb, mk_iso, kexpr](const Cell& f, const Cell& g, const Cell& h) {
    // f : C -> D, g : B -> C, h : A -> B (Kleisli); both triple composites.
    const KlArr& fa = kl_arr_of(f);
    const KlArr& ga = kl_arr_of(g);
    const KlArr& ha = kl_arr_of(h);
    Cell lhs = kb->comp1(kb->comp1(f, g), h);
    Cell rhs = kb->comp1(f, kb->comp1(g, h));
    ObjP D = ob(fa.cod), C = ob(ga.cod);
    OneP fe = onecell(fa.base), ge = onecell(ga.base), he = onecell(ha.base);
    OneP mue = onat(t.mu, {D});
    OneP lhs_e = kexpr(kexpr(fe, ge, D), he, D);
    OneP rhs_e = kexpr(fe, kexpr(ge, he, C), D);
    OneP rest = ocomp(ocomp(oapp(t.T, {oapp(t.T, {fe})}), oapp(t.T, {ge})), he);
    // mu . T mu . TTf . Tg . h  =m=>  mu . mu_T . TTf . Tg . h
    //                           =cell(mu)_f=>  mu . Tf . mu . Tg . h
    TwoP steps = tvert({
        twhr(tmod(t.m, {D}), rest),
        twhl(mue, twhr(tnat(t.mu, {fe}), ocomp(oapp(t.T, {ge}), he))),
    });
    return mk_iso(steps, lhs_e, rhs_e, kl_arr_of(lhs), kl_arr_of(rhs));
  };
  kb->lunit = [env, t, bp, kb, mk_iso, kexpr](const Cell& f) {
    const KlArr& fa = kl_arr_of(f);
    Cell src = kb->comp1(kb->id1(fa.cod), f);
    ObjP Bo = ob(fa.cod);
    OneP fe = onecell(fa.base);
    OneP src_e = kexpr(onat(t.eta, {Bo}), fe, Bo);
    // mu . T eta . f  =p=>  Id . f  =>  f
    TwoP steps = tvert({twhr(tmod(t.p, {Bo}), fe), tlunit(fe)});
    return mk_iso(steps, src_e, fe, kl_arr_of(src), fa);
  };
  kb->runit = [env, t, bp, kb, mk_iso, kexpr](const Cell& f) {
    const KlArr& fa = kl_arr_of(f);
    Cell src = kb->comp1(f, kb->id1(fa.dom));
    ObjP Ao = ob(fa.dom), Bo = ob(fa.cod);
    OneP fe = onecell(fa.base);
    OneP mue = onat(t.mu, {Bo});
    OneP src_e = kexpr(fe, onat(t.eta, {Ao}), Bo);
    // mu . Tf . eta  =cell(eta)^-1=>  mu . eta_T . f  =n=>  Id . f  =>  f
    TwoP steps = tvert({twhl(mue, tnat(t.eta, {fe}, true)), twhr(tmod(t.n, {Bo}), fe),
                        tlunit(fe)});
    return mk_iso(steps, src_e, fe, kl_arr_of(src), fa);
  };

  kb->objects = [bp](int cap) { return bp->objects(cap); };
  kb->ones = [env, t, bp](const Cell& a, const Cell& c, int cap) {
    const Bicat& b = *bp;
    Cell tc = env->fun(t.T).on_obj({c});
    std::vector<Cell> out;
    for (const Cell& f : b.ones(a, tc, cap)) out.push_back(kl_arr(*env, t, f, a, c));
    return out;
  };
  kb->twos = [env, t, bp](const Cell& f, const Cell& g) {
    const Bicat& b = *bp;
    const KlArr& fa = kl_arr_of(f);
    const KlArr& ga = kl_arr_of(g);
    std::vector<Cell> out;
    if (!(fa.dom == ga.dom) || !(fa.cod == ga.cod)) return out;
    for (const Cell& x : b.twos(fa.base, ga.base)) out.push_back(kl_map(b, fa, ga, x));
    return out;
  };
  kb->inv2_hook = [env, t, bp](const Cell& x) -> std::optional<Cell> {
    const KlMap& m = kl_map_of(x);
    auto inv = bp->inv2(m.base);
    if (!inv) return std::nullopt;
    return kl_map(*bp, m.dst, m.src, *inv);
  };

  w.bicat = kb;
  return w;
}

} // namespace bk
