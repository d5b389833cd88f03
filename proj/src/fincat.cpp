#include "bicatkit/fincat.hpp"

#include "bicatkit/memo.hpp"

#include <sstream>

namespace bk {

namespace {

std::string cat_key(const FinCatData& c) {
  std::ostringstream s;
  s << "cat{";
  for (const Label& o : c.objs) s << o.str() << ";";
  s << "|";
  for (size_t i = 0; i < c.mors.size(); ++i)
    s << c.mors[i].str() << ":" << c.mdom[i] << ">" << c.mcod[i] << ";";
  s << "}";
  return s.str();
}

std::string fun_key(const FunctorData& f) {
  std::ostringstream s;
  s << "fn{" << cat_key(f.dom) << "=>" << cat_key(f.cod) << "|";
  for (size_t i : f.obj_map) s << i << ",";
  s << "|";
  for (size_t i : f.mor_map) s << i << ",";
  s << "}";
  return s.str();
}

} // namespace

bool FinCatData::well_formed(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  size_t no = objs.size(), nm = mors.size();
  if (mdom.size() != nm || mcod.size() != nm || table.size() != nm) return fail("shape");
  for (size_t i = 0; i < no; ++i)
    if (mdom[i] != i || mcod[i] != i) return fail("identities must come first");
  for (size_t g = 0; g < nm; ++g)
    for (size_t f = 0; f < nm; ++f) {
      int c = table[g][f];
      bool composable = mcod[f] == mdom[g];
      if (composable != (c >= 0)) return fail("composability mismatch");
      if (c >= 0) {
        if (mdom[static_cast<size_t>(c)] != mdom[f] || mcod[static_cast<size_t>(c)] != mcod[g])
          return fail("composite boundary wrong");
      }
    }
  for (size_t f = 0; f < nm; ++f) {
    if (table[f][id_of(mdom[f])] != static_cast<int>(f)) return fail("right identity");
    if (table[id_of(mcod[f])][f] != static_cast<int>(f)) return fail("left identity");
  }
  for (size_t h = 0; h < nm; ++h)
    for (size_t g = 0; g < nm; ++g)
      for (size_t f = 0; f < nm; ++f) {
        if (mcod[f] != mdom[g] || mcod[g] != mdom[h]) continue;
        if (table[table[h][g]][f] != table[h][table[g][f]]) return fail("associativity");
      }
  return true;
}

FinCatData terminal_cat() {
  FinCatData c;
  c.name = "1";
  c.objs = {Label::atom("*")};
  c.mors = {Label::atom("id")};
  c.mdom = {0};
  c.mcod = {0};
  c.table = {{0}};
  return c;
}

FinCatData walking_arrow() {
  FinCatData c;
  c.name = "2";
  c.objs = {Label::atom("u"), Label::atom("v")};
  c.mors = {Label::atom("idu"), Label::atom("idv"), Label::atom("ar")};
  c.mdom = {0, 1, 0};
  c.mcod = {0, 1, 1};
  c.table = {{0, -1, -1}, {-1, 1, 2}, {2, -1, -1}};
  return c;
}

FinCatData discrete_cat(const Monoid& m) {
  FinCatData c;
  c.name = "disc-" + m.name;
  c.objs = m.carrier.elements();
  c.mors = m.carrier.elements();
  for (size_t i = 0; i < c.objs.size(); ++i) {
    c.mdom.push_back(i);
    c.mcod.push_back(i);
  }
  c.table.assign(c.mors.size(), std::vector<int>(c.mors.size(), -1));
  for (size_t i = 0; i < c.mors.size(); ++i) c.table[i][i] = static_cast<int>(i);
  return c;
}

FinCatData product_cat(const FinCatData& a, const FinCatData& b) {
  FinCatData c;
  c.name = "(" + a.name + "x" + b.name + ")";
  // objects and identity-first morphisms as pairs
  for (const Label& x : a.objs)
    for (const Label& y : b.objs) c.objs.push_back(Label::pair(x, y));
  auto obj_index = [&](size_t i, size_t j) { return i * b.objs.size() + j; };
  // identities first
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < a.objs.size(); ++i)
    for (size_t j = 0; j < b.objs.size(); ++j) pairs.push_back({a.id_of(i), b.id_of(j)});
  for (size_t f = 0; f < a.mors.size(); ++f)
    for (size_t g = 0; g < b.mors.size(); ++g) {
      bool both_id = f < a.objs.size() && g < b.objs.size();
      if (!both_id) pairs.push_back({f, g});
    }
  auto pair_index = [&](size_t f, size_t g) -> size_t {
    for (size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k].first == f && pairs[k].second == g) return k;
    throw IllFormed("product_cat: pair not found");
  };
  for (const auto& [f, g] : pairs) {
    c.mors.push_back(Label::pair(a.mors[f], b.mors[g]));
    c.mdom.push_back(obj_index(a.mdom[f], b.mdom[g]));
    c.mcod.push_back(obj_index(a.mcod[f], b.mcod[g]));
  }
  c.table.assign(c.mors.size(), std::vector<int>(c.mors.size(), -1));
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = 0; j < pairs.size(); ++j) {
      int cf = a.table[pairs[i].first][pairs[j].first];
      int cg = b.table[pairs[i].second][pairs[j].second];
      if (cf >= 0 && cg >= 0)
        c.table[i][j] = static_cast<int>(pair_index(static_cast<size_t>(cf),
                                                    static_cast<size_t>(cg)));
    }
  return c;
}

Cell fincat_obj(const FinCatData& c) { return Cell::make("fc:" + cat_key(c), c); }

Cell fincat_fun(FunctorData f) {
  // validate
  const FinCatData& A = f.dom;
  const FinCatData& B = f.cod;
  if (f.obj_map.size() != A.objs.size() || f.mor_map.size() != A.mors.size())
    throw IllFormed("functor: map sizes wrong");
  for (size_t m = 0; m < A.mors.size(); ++m) {
    if (B.mdom[f.mor_map[m]] != f.obj_map[A.mdom[m]] ||
        B.mcod[f.mor_map[m]] != f.obj_map[A.mcod[m]])
      throw IllFormed("functor: boundary not preserved");
  }
  for (size_t o = 0; o < A.objs.size(); ++o)
    if (f.mor_map[A.id_of(o)] != B.id_of(f.obj_map[o]))
      throw IllFormed("functor: identities not preserved");
  for (size_t g = 0; g < A.mors.size(); ++g)
    for (size_t h = 0; h < A.mors.size(); ++h) {
      int c = A.table[g][h];
      if (c < 0) continue;
      if (B.table[f.mor_map[g]][f.mor_map[h]] != static_cast<int>(f.mor_map[c]))
        throw IllFormed("functor: composition not preserved");
    }
  std::string k = fun_key(f);
  return Cell::make(std::move(k), std::move(f));
}

Cell fincat_nat(const FunctorData& src, const FunctorData& dst, std::vector<size_t> comps) {
  const FinCatData& A = src.dom;
  const FinCatData& B = src.cod;
  if (!(cat_key(src.dom) == cat_key(dst.dom)) || !(cat_key(src.cod) == cat_key(dst.cod)))
    throw BoundaryMismatch("nat: functors not parallel");
  if (comps.size() != A.objs.size()) throw IllFormed("nat: component count wrong");
  for (size_t o = 0; o < A.objs.size(); ++o) {
    if (B.mdom[comps[o]] != src.obj_map[o] || B.mcod[comps[o]] != dst.obj_map[o])
      throw IllFormed("nat: component boundary wrong");
  }
  for (size_t m = 0; m < A.mors.size(); ++m) {
    size_t d = A.mdom[m], cod = A.mcod[m];
    if (B.table[comps[cod]][src.mor_map[m]] != B.table[dst.mor_map[m]][comps[d]])
      throw IllFormed("nat: naturality fails");
  }
  std::ostringstream key;
  key << "nt{" << fun_key(src) << "=>" << fun_key(dst) << "|";
  for (size_t i : comps) key << i << ",";
  key << "}";
  return Cell::make(key.str(), NatData{src, dst, std::move(comps)});
}

const FinCatData& fincat_obj_of(const Cell& c) { return c.as<FinCatData>(); }
const FunctorData& fincat_fun_of(const Cell& c) { return c.as<FunctorData>(); }
const NatData& fincat_nat_of(const Cell& c) { return c.as<NatData>(); }

namespace {

FunctorData fun_id(const FinCatData& a) {
  FunctorData f;
  f.dom = a;
  f.cod = a;
  for (size_t i = 0; i < a.objs.size(); ++i) f.obj_map.push_back(i);
  for (size_t i = 0; i < a.mors.size(); ++i) f.mor_map.push_back(i);
  return f;
}

FunctorData fun_comp(const FunctorData& f, const FunctorData& g) {
  // f after g
  if (!(cat_key(g.cod) == cat_key(f.dom))) throw BoundaryMismatch("functor compose");
  FunctorData h;
  h.dom = g.dom;
  h.cod = f.cod;
  for (size_t i : g.obj_map) h.obj_map.push_back(f.obj_map[i]);
  for (size_t i : g.mor_map) h.mor_map.push_back(f.mor_map[i]);
  return h;
}

} // namespace

Bicat fincat_bicat() {
  Bicat b;
  b.name = "fincat";
  b.dom1 = [](const Cell& f) { return fincat_obj(fincat_fun_of(f).dom); };
  b.cod1 = [](const Cell& f) { return fincat_obj(fincat_fun_of(f).cod); };
  b.src2 = [](const Cell& t) { return fincat_fun(fincat_nat_of(t).src); };
  b.dst2 = [](const Cell& t) { return fincat_fun(fincat_nat_of(t).dst); };
  b.id1 = [](const Cell& a) { return fincat_fun(fun_id(fincat_obj_of(a))); };
  b.comp1 = [](const Cell& f, const Cell& g) {
    return fincat_fun(fun_comp(fincat_fun_of(f), fincat_fun_of(g)));
  };
  b.id2 = [](const Cell& f) {
    const FunctorData& fd = fincat_fun_of(f);
    std::vector<size_t> comps;
    for (size_t o = 0; o < fd.dom.objs.size(); ++o)
      comps.push_back(fd.cod.id_of(fd.obj_map[o]));
    return fincat_nat(fd, fd, std::move(comps));
  };
  b.vcomp = [](const Cell& t, const Cell& s) {
    const NatData& td = fincat_nat_of(t);
    const NatData& sd = fincat_nat_of(s);
    std::vector<size_t> comps;
    for (size_t o = 0; o < td.src.dom.objs.size(); ++o) {
      int c = td.src.cod.table[td.comps[o]][sd.comps[o]];
      if (c < 0) throw BoundaryMismatch("nat vcomp");
      comps.push_back(static_cast<size_t>(c));
    }
    return fincat_nat(sd.src, td.dst, std::move(comps));
  };
  b.hcomp = [](const Cell& t, const Cell& s) {
    // t : f => f' (outer), s : g => g' (inner); composite at o:
    //   f'(s_o) . t_{g o}
    const NatData& td = fincat_nat_of(t);
    const NatData& sd = fincat_nat_of(s);
    FunctorData src = fun_comp(td.src, sd.src);
    FunctorData dst = fun_comp(td.dst, sd.dst);
    std::vector<size_t> comps;
    for (size_t o = 0; o < sd.src.dom.objs.size(); ++o) {
      size_t go = sd.src.obj_map[o];
      size_t part1 = td.comps[go];                  // f(g o) -> f'(g o)
      size_t part2 = td.dst.mor_map[sd.comps[o]];   // f'(g o) -> f'(g' o)
      int c = td.src.cod.table[part2][part1];
      if (c < 0) throw BoundaryMismatch("nat hcomp");
      comps.push_back(static_cast<size_t>(c));
    }
    return fincat_nat(src, dst, std::move(comps));
  };
  auto strict_iso = [b](const Cell& f) {
    Cell i = b.id2(f);
    return Iso2{i, i};
  };
  b.assoc = [b](const Cell& f, const Cell& g, const Cell& h) {
    Cell both = b.comp1(b.comp1(f, g), h);
    Cell i = b.id2(both);
    return Iso2{i, i};
  };
  b.lunit = [b](const Cell& f) {
    Cell i = b.id2(f);
    return Iso2{i, i};
  };
  b.runit = [b](const Cell& f) {
    Cell i = b.id2(f);
    return Iso2{i, i};
  };
  (void)strict_iso;
  b.objects = [](int cap) {
    std::vector<Cell> out;
    out.push_back(fincat_obj(terminal_cat()));
    out.push_back(fincat_obj(discrete_cat(monoid_z2())));
    if (cap >= 2) out.push_back(fincat_obj(walking_arrow()));
    return out;
  };
  auto ones_memo = std::make_shared<Memo<std::vector<Cell>>>();
  b.ones = [ones_memo](const Cell& a, const Cell& c, int cap) {
    return ones_memo->get(a.key() + "|" + c.key() + "|" + std::to_string(cap), [&] {
      const FinCatData& A = fincat_obj_of(a);
      const FinCatData& B = fincat_obj_of(c);
      std::vector<Cell> out;
      // enumerate object maps, then valid morphism maps
      std::vector<size_t> om(A.objs.size(), 0);
      while (true) {
        // mormap: try all (small) or derive: for each morphism pick any image
        std::vector<size_t> mm(A.mors.size(), 0);
        std::function<bool(size_t)> fill = [&](size_t m) -> bool {
          if (m == A.mors.size()) {
            FunctorData f{A, B, om, mm};
            try {
              out.push_back(fincat_fun(f));
            } catch (const IllFormed&) {
              return false;
            }
            return false; // keep enumerating
          }
          if (m < A.objs.size()) {
            mm[m] = B.id_of(om[m]);
            fill(m + 1);
            return false;
          }
          for (size_t im = 0; im < B.mors.size(); ++im) {
            if (B.mdom[im] != om[A.mdom[m]] || B.mcod[im] != om[A.mcod[m]]) continue;
            mm[m] = im;
            fill(m + 1);
            if (static_cast<int>(out.size()) >= cap) return true;
          }
          return false;
        };
        fill(0);
        if (static_cast<int>(out.size()) >= cap) break;
        size_t k = 0;
        while (k < om.size()) {
          if (++om[k] < B.objs.size()) break;
          om[k] = 0;
          ++k;
        }
        if (k == om.size() || om.empty()) break;
      }
      if (static_cast<int>(out.size()) > cap) out.resize(cap);
      return out;
    });
  };
  b.twos = [](const Cell& f, const Cell& g) {
    const FunctorData& F = fincat_fun_of(f);
    const FunctorData& G = fincat_fun_of(g);
    std::vector<Cell> out;
    if (!(cat_key(F.dom) == cat_key(G.dom)) || !(cat_key(F.cod) == cat_key(G.cod))) return out;
    std::vector<size_t> comps(F.dom.objs.size(), 0);
    if (comps.empty()) {
      try {
        out.push_back(fincat_nat(F, G, {}));
      } catch (const IllFormed&) {
      }
      return out;
    }
    std::function<void(size_t)> go = [&](size_t o) {
      if (o == comps.size()) {
        try {
          out.push_back(fincat_nat(F, G, comps));
        } catch (const IllFormed&) {
        }
        return;
      }
      for (size_t m = 0; m < F.cod.mors.size(); ++m) {
        if (F.cod.mdom[m] != F.obj_map[o] || F.cod.mcod[m] != G.obj_map[o]) continue;
        comps[o] = m;
        go(o + 1);
      }
    };
    go(0);
    return out;
  };
  return b;
}

MonoidalBicat fincat_monoidal() {
  MonoidalBicat m;
  m.host = std::make_shared<Bicat>(fincat_bicat());
  m.env = std::make_shared<Env>();
  m.env->B = m.host.get();
  m.unit = fincat_obj(terminal_cat());
  m.symmetric = true;
  const Bicat* bp = m.host.get();

  PsFun ten;
  ten.name = "ten";
  ten.arity = 2;
  ten.on_obj = [](const std::vector<Cell>& a) {
    return fincat_obj(product_cat(fincat_obj_of(a[0]), fincat_obj_of(a[1])));
  };
  ten.on_one = [](const std::vector<Cell>& f) {
    const FunctorData& F = fincat_fun_of(f[0]);
    const FunctorData& G = fincat_fun_of(f[1]);
    FinCatData D = product_cat(F.dom, G.dom);
    FinCatData C = product_cat(F.cod, G.cod);
    FunctorData H;
    H.dom = D;
    H.cod = C;
    // product_cat object order is row-major over (a, b)
    for (size_t i = 0; i < F.dom.objs.size(); ++i)
      for (size_t j = 0; j < G.dom.objs.size(); ++j)
        H.obj_map.push_back(F.obj_map[i] * G.cod.objs.size() + G.obj_map[j]);
    for (size_t mi = 0; mi < D.mors.size(); ++mi) {
      // find the pair (f, g) this morphism stands for, via labels
      const Label& lab = D.mors[mi];
      size_t fa = 0, gb = 0;
      bool found = false;
      for (size_t x = 0; x < F.dom.mors.size() && !found; ++x)
        for (size_t y = 0; y < G.dom.mors.size() && !found; ++y)
          if (Label::pair(F.dom.mors[x], G.dom.mors[y]) == lab) {
            fa = x;
            gb = y;
            found = true;
          }
      if (!found) throw IllFormed("ten.on_one: pair label not found");
      const Label target = Label::pair(F.cod.mors[F.mor_map[fa]], G.cod.mors[G.mor_map[gb]]);
      bool placed = false;
      for (size_t z = 0; z < C.mors.size() && !placed; ++z)
        if (C.mors[z] == target) {
          H.mor_map.push_back(z);
          placed = true;
        }
      if (!placed) throw IllFormed("ten.on_one: image morphism not found");
    }
    return fincat_fun(H);
  };
  ten.on_two = [bp, ten](const std::vector<Cell>& t) {
    const NatData& X = fincat_nat_of(t[0]);
    const NatData& Y = fincat_nat_of(t[1]);
    Cell src = ten.on_one({fincat_fun(X.src), fincat_fun(Y.src)});
    Cell dst = ten.on_one({fincat_fun(X.dst), fincat_fun(Y.dst)});
    const FunctorData& S = fincat_fun_of(src);
    std::vector<size_t> comps;
    for (size_t i = 0; i < X.src.dom.objs.size(); ++i)
      for (size_t j = 0; j < Y.src.dom.objs.size(); ++j) {
        const Label target = Label::pair(X.src.cod.mors[X.comps[i]], Y.src.cod.mors[Y.comps[j]]);
        bool placed = false;
        for (size_t z = 0; z < S.cod.mors.size() && !placed; ++z)
          if (S.cod.mors[z] == target) {
            comps.push_back(z);
            placed = true;
          }
        if (!placed) throw IllFormed("ten.on_two: component not found");
      }
    return fincat_nat(S, fincat_fun_of(dst), std::move(comps));
  };
  ten.compositor = [bp, ten](const std::vector<Cell>& f, const std::vector<Cell>& g) {
    Cell lhs = bp->comp1(ten.on_one(f), ten.on_one(g));
    Cell rhs = ten.on_one({bp->comp1(f[0], g[0]), bp->comp1(f[1], g[1])});
    if (lhs != rhs) throw IllFormed("fincat tensor compositor: functors differ");
    Cell i = bp->id2(lhs);
    return Iso2{i, i};
  };
  ten.unitor = [bp, ten](const std::vector<Cell>& a) {
    Cell lhs = bp->id1(ten.on_obj(a));
    Cell rhs = ten.on_one({bp->id1(a[0]), bp->id1(a[1])});
    if (lhs != rhs) throw IllFormed("fincat tensor unitor: functors differ");
    Cell i = bp->id2(lhs);
    return Iso2{i, i};
  };
  m.env->add(ten);

  // Structural transformations as relabeling functors with identity cells.
  auto relabel_fun = [](const FinCatData& d, const FinCatData& c,
                        const std::function<Label(const Label&)>& on_obj,
                        const std::function<Label(const Label&)>& on_mor) {
    FunctorData F;
    F.dom = d;
    F.cod = c;
    for (const Label& o : d.objs) {
      Label t = on_obj(o);
      bool ok = false;
      for (size_t i = 0; i < c.objs.size(); ++i)
        if (c.objs[i] == t) {
          F.obj_map.push_back(i);
          ok = true;
          break;
        }
      if (!ok) throw IllFormed("relabel: object not found");
    }
    for (const Label& mm : d.mors) {
      Label t = on_mor(mm);
      bool ok = false;
      for (size_t i = 0; i < c.mors.size(); ++i)
        if (c.mors[i] == t) {
          F.mor_map.push_back(i);
          ok = true;
          break;
        }
      if (!ok) throw IllFormed("relabel: morphism not found");
    }
    return fincat_fun(F);
  };

  auto add_strict_nat = [&, bp](const std::string& name, int arity,
                                std::function<Cell(const std::vector<Cell>&)> comp,
                                std::function<OneP(const std::vector<OneP>&)> dom_fun,
                                std::function<OneP(const std::vector<OneP>&)> cod_fun,
                                std::function<TwoP(const std::vector<TwoP>&)> dom_fun2,
                                std::function<TwoP(const std::vector<TwoP>&)> cod_fun2) {
    PsNat n;
    n.name = name;
    n.arity = arity;
    n.component = comp;
    auto envp = m.env;
    n.cell = [comp, envp, dom_fun, cod_fun, bp, name](const std::vector<Cell>& u) {
      // strict: both composites are equal functors
      Paste p(*envp);
      std::vector<OneP> ue;
      std::vector<Cell> doms, cods;
      for (const Cell& x : u) {
        ue.push_back(onecell(x));
        doms.push_back(fincat_obj(fincat_fun_of(x).dom));
        cods.push_back(fincat_obj(fincat_fun_of(x).cod));
      }
      Cell lhs = bp->comp1(comp(cods), p.eval_one(dom_fun(ue)));
      Cell rhs = bp->comp1(p.eval_one(cod_fun(ue)), comp(doms));
      if (lhs != rhs) throw IllFormed("fincat " + name + ": naturality is not strict");
      Cell i = bp->id2(lhs);
      return Iso2{i, i};
    };
    n.dom_fun = dom_fun;
    n.cod_fun = cod_fun;
    n.dom_fun2 = dom_fun2;
    n.cod_fun2 = cod_fun2;
    m.env->add(n);
  };

  Cell I = m.unit;
  auto tenobj = ten.on_obj;
  add_strict_nat("alpha", 3,
      [relabel_fun, tenobj](const std::vector<Cell>& a) {
        const FinCatData& A = fincat_obj_of(a[0]);
        const FinCatData& B = fincat_obj_of(a[1]);
        const FinCatData& C = fincat_obj_of(a[2]);
        FinCatData d = product_cat(product_cat(A, B), C);
        FinCatData c = product_cat(A, product_cat(B, C));
        auto re = [](const Label& x) {
          return Label::pair(x.first().first(), Label::pair(x.first().second(), x.second()));
        };
        return relabel_fun(d, c, re, re);
      },
      [](const std::vector<OneP>& u) { return oapp("ten", {oapp("ten", {u[0], u[1]}), u[2]}); },
      [](const std::vector<OneP>& u) { return oapp("ten", {u[0], oapp("ten", {u[1], u[2]})}); },
      [](const std::vector<TwoP>& u) { return tapp("ten", {tapp("ten", {u[0], u[1]}), u[2]}); },
      [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], tapp("ten", {u[1], u[2]})}); });
  add_strict_nat("alpha_r", 3,
      [relabel_fun, tenobj](const std::vector<Cell>& a) {
        const FinCatData& A = fincat_obj_of(a[0]);
        const FinCatData& B = fincat_obj_of(a[1]);
        const FinCatData& C = fincat_obj_of(a[2]);
        FinCatData d = product_cat(A, product_cat(B, C));
        FinCatData c = product_cat(product_cat(A, B), C);
        auto re = [](const Label& x) {
          return Label::pair(Label::pair(x.first(), x.second().first()), x.second().second());
        };
        return relabel_fun(d, c, re, re);
      },
      [](const std::vector<OneP>& u) { return oapp("ten", {u[0], oapp("ten", {u[1], u[2]})}); },
      [](const std::vector<OneP>& u) { return oapp("ten", {oapp("ten", {u[0], u[1]}), u[2]}); },
      [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], tapp("ten", {u[1], u[2]})}); },
      [](const std::vector<TwoP>& u) { return tapp("ten", {tapp("ten", {u[0], u[1]}), u[2]}); });

  ObjP Ie = ob(I);
  auto unary = [&](const std::string& name, bool right, bool reverse) {
    add_strict_nat(name, 1,
        [relabel_fun, right, reverse](const std::vector<Cell>& a) {
          const FinCatData& A = fincat_obj_of(a[0]);
          FinCatData IA = right ? product_cat(A, terminal_cat()) : product_cat(terminal_cat(), A);
          auto fwd = [right](const Label& x) { return right ? x.first() : x.second(); };
          auto bwd = [right](const Label& x) {
            Label star = Label::atom("*");
            Label id = Label::atom("id");
            (void)id;
            return right ? Label::pair(x, star) : Label::pair(star, x);
          };
          auto bwdm = [right](const Label& x) {
            Label idm = Label::atom("id");
            return right ? Label::pair(x, idm) : Label::pair(idm, x);
          };
          if (!reverse) return relabel_fun(IA, A, fwd, fwd);
          return relabel_fun(A, IA, bwd, bwdm);
        },
        [Ie, right, reverse](const std::vector<OneP>& u) -> OneP {
          if (reverse) return u[0];
          return right ? oapp("ten", {u[0], oid(Ie)}) : oapp("ten", {oid(Ie), u[0]});
        },
        [Ie, right, reverse](const std::vector<OneP>& u) -> OneP {
          if (!reverse) return u[0];
          return right ? oapp("ten", {u[0], oid(Ie)}) : oapp("ten", {oid(Ie), u[0]});
        },
        [Ie, right, reverse](const std::vector<TwoP>& u) -> TwoP {
          if (reverse) return u[0];
          return right ? tapp("ten", {u[0], tid(oid(Ie))}) : tapp("ten", {tid(oid(Ie)), u[0]});
        },
        [Ie, right, reverse](const std::vector<TwoP>& u) -> TwoP {
          if (!reverse) return u[0];
          return right ? tapp("ten", {u[0], tid(oid(Ie))}) : tapp("ten", {tid(oid(Ie)), u[0]});
        });
  };
  unary("lam", false, false);
  unary("lam_r", false, true);
  unary("rho", true, false);
  unary("rho_r", true, true);

  add_strict_nat("beta", 2,
      [relabel_fun](const std::vector<Cell>& a) {
        const FinCatData& A = fincat_obj_of(a[0]);
        const FinCatData& B = fincat_obj_of(a[1]);
        FinCatData d = product_cat(A, B);
        FinCatData c = product_cat(B, A);
        auto re = [](const Label& x) { return Label::pair(x.second(), x.first()); };
        return relabel_fun(d, c, re, re);
      },
      [](const std::vector<OneP>& u) { return oapp("ten", {u[0], u[1]}); },
      [](const std::vector<OneP>& u) { return oapp("ten", {u[1], u[0]}); },
      [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], u[1]}); },
      [](const std::vector<TwoP>& u) { return tapp("ten", {u[1], u[0]}); });
  {
    PsNat br = m.env->nat("beta");
    br.name = "beta_r";
    auto comp = m.env->nat("beta").component;
    br.component = [comp](const std::vector<Cell>& a) { return comp({a[1], a[0]}); };
    br.dom_fun = [](const std::vector<OneP>& u) { return oapp("ten", {u[1], u[0]}); };
    br.cod_fun = [](const std::vector<OneP>& u) { return oapp("ten", {u[0], u[1]}); };
    br.dom_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[1], u[0]}); };
    br.cod_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], u[1]}); };
    auto envp = m.env;
    const Bicat* bb = bp;
    br.cell = [comp, envp, bb](const std::vector<Cell>& u) {
      Paste p(*envp);
      std::vector<Cell> doms, cods;
      for (const Cell& x : u) {
        doms.push_back(fincat_obj(fincat_fun_of(x).dom));
        cods.push_back(fincat_obj(fincat_fun_of(x).cod));
      }
      Cell lhs = bb->comp1(comp({cods[1], cods[0]}),
                           p.eval_one(oapp("ten", {onecell(u[1]), onecell(u[0])})));
      Cell rhs = bb->comp1(p.eval_one(oapp("ten", {onecell(u[0]), onecell(u[1])})),
                           comp({doms[1], doms[0]}));
      if (lhs != rhs) throw IllFormed("fincat beta_r: naturality is not strict");
      Cell i = bb->id2(lhs);
      return Iso2{i, i};
    };
    m.env->add(br);
  }

  // All structural modifications are identities between equal composites.
  m.canonical_mod = [envp = m.env, bp](const std::string& name, int arity,
                                       std::function<OneP(const std::vector<ObjP>&)> src,
                                       std::function<OneP(const std::vector<ObjP>&)> dst) {
    Modif mo;
    mo.name = name;
    mo.arity = arity;
    mo.src_of = src;
    mo.dst_of = dst;
    mo.component = [envp, bp, src, dst, name](const std::vector<Cell>& objs) {
      Paste p(*envp);
      std::vector<ObjP> os;
      for (const Cell& o : objs) os.push_back(ob(o));
      Cell sc = p.eval_one(src(os));
      Cell dc = p.eval_one(dst(os));
      if (sc != dc)
        throw IllFormed("fincat " + name + ": composites differ; no canonical cell");
      Cell i = bp->id2(sc);
      return Iso2{i, i};
    };
    return mo;
  };

  for (const auto& [name, arity] : std::vector<std::pair<std::string, int>>{
           {"pmod", 4}, {"mmod", 2}, {"lmod", 2}, {"rmod", 2}}) {
    // reuse the same boundary shapes as the span/para worlds
    if (name == "pmod")
      m.env->add(m.canonical_mod(name, 4,
          [](const std::vector<ObjP>& o) {
            return ocomp({oapp("ten", {oid(o[0]), onat("alpha", {o[1], o[2], o[3]})}),
                          onat("alpha", {o[0], obapp("ten", {o[1], o[2]}), o[3]}),
                          oapp("ten", {onat("alpha", {o[0], o[1], o[2]}), oid(o[3])})});
          },
          [](const std::vector<ObjP>& o) {
            return ocomp(onat("alpha", {o[0], o[1], obapp("ten", {o[2], o[3]})}),
                         onat("alpha", {obapp("ten", {o[0], o[1]}), o[2], o[3]}));
          }));
    else if (name == "mmod")
      m.env->add(m.canonical_mod(name, 2,
          [Ie](const std::vector<ObjP>& o) {
            return ocomp(oapp("ten", {oid(o[0]), onat("lam", {o[1]})}),
                         onat("alpha", {o[0], Ie, o[1]}));
          },
          [](const std::vector<ObjP>& o) {
            return oapp("ten", {onat("rho", {o[0]}), oid(o[1])});
          }));
    else if (name == "lmod")
      m.env->add(m.canonical_mod(name, 2,
          [](const std::vector<ObjP>& o) {
            return oapp("ten", {onat("lam", {o[0]}), oid(o[1])});
          },
          [Ie](const std::vector<ObjP>& o) {
            return ocomp(onat("lam", {obapp("ten", {o[0], o[1]})}),
                         onat("alpha", {Ie, o[0], o[1]}));
          }));
    else
      m.env->add(m.canonical_mod(name, 2,
          [](const std::vector<ObjP>& o) {
            return onat("rho", {obapp("ten", {o[0], o[1]})});
          },
          [Ie](const std::vector<ObjP>& o) {
            return ocomp(oapp("ten", {oid(o[0]), onat("rho", {o[1]})}),
                         onat("alpha", {o[0], o[1], Ie}));
          }));
  }
  for (const std::string nm : {"alpha", "lam", "rho", "beta"}) {
    int ar = nm == "alpha" ? 3 : (nm == "beta" ? 2 : 1);
    m.env->add(m.canonical_mod(nm + "_unit", ar,
        [nm, ar, Ie](const std::vector<ObjP>& o) -> OneP {
          if (nm == "alpha") return oid(obapp("ten", {obapp("ten", {o[0], o[1]}), o[2]}));
          if (nm == "beta") return oid(obapp("ten", {o[0], o[1]}));
          if (nm == "lam") return oid(obapp("ten", {Ie, o[0]}));
          return oid(obapp("ten", {o[0], Ie}));
        },
        [nm](const std::vector<ObjP>& o) { return ocomp(onat(nm + "_r", o), onat(nm, o)); }));
    m.env->add(m.canonical_mod(nm + "_counit", ar,
        [nm](const std::vector<ObjP>& o) { return ocomp(onat(nm, o), onat(nm + "_r", o)); },
        [nm, ar](const std::vector<ObjP>& o) -> OneP {
          if (nm == "alpha") return oid(obapp("ten", {o[0], obapp("ten", {o[1], o[2]})}));
          if (nm == "beta") return oid(obapp("ten", {o[1], o[0]}));
          return oid(o[0]);
        }));
  }
  return m;
}

PseudomonadBundle fincat_writer(MonoidalBicat& m, const Monoid& mon) {
  Env& env = m.E();
  const Bicat* bp = m.host.get();
  FinCatData C = discrete_cat(mon);
  Cell Cc = fincat_obj(C);
  auto monp = std::make_shared<Monoid>(mon);

  PsFun T;
  T.name = "T";
  T.arity = 1;
  auto ten = env.fun("ten");
  T.on_obj = [ten, Cc](const std::vector<Cell>& a) { return ten.on_obj({a[0], Cc}); };
  T.on_one = [ten, Cc, bp](const std::vector<Cell>& f) {
    return ten.on_one({f[0], bp->id1(Cc)});
  };
  T.on_two = [ten, Cc, bp](const std::vector<Cell>& t) {
    return ten.on_two({t[0], bp->id2(bp->id1(Cc))});
  };
  T.compositor = [bp, T](const std::vector<Cell>& f, const std::vector<Cell>& g) {
    Cell lhs = bp->comp1(T.on_one(f), T.on_one(g));
    Cell rhs = T.on_one({bp->comp1(f[0], g[0])});
    if (lhs != rhs) throw IllFormed("fincat writer: compositor not strict");
    Cell i = bp->id2(lhs);
    return Iso2{i, i};
  };
  T.unitor = [bp, T](const std::vector<Cell>& a) {
    Cell lhs = bp->id1(T.on_obj(a));
    Cell rhs = T.on_one({bp->id1(a[0])});
    if (lhs != rhs) throw IllFormed("fincat writer: unitor not strict");
    Cell i = bp->id2(lhs);
    return Iso2{i, i};
  };
  env.add(T);

  auto strict_unary_nat = [&env, bp](const std::string& name,
                                     std::function<Cell(const Cell&)> comp,
                                     std::function<OneP(const std::vector<OneP>&)> dom_fun,
                                     std::function<OneP(const std::vector<OneP>&)> cod_fun,
                                     std::function<TwoP(const std::vector<TwoP>&)> dom_fun2,
                                     std::function<TwoP(const std::vector<TwoP>&)> cod_fun2) {
    PsNat n;
    n.name = name;
    n.arity = 1;
    n.component = [comp](const std::vector<Cell>& a) { return comp(a[0]); };
    const Env* envp = &env;
    n.cell = [comp, envp, bp, dom_fun, cod_fun, name](const std::vector<Cell>& u) {
      Paste p(*envp);
      Cell dom = fincat_obj(fincat_fun_of(u[0]).dom);
      Cell cod = fincat_obj(fincat_fun_of(u[0]).cod);
      Cell lhs = bp->comp1(comp(cod), p.eval_one(dom_fun({onecell(u[0])})));
      Cell rhs = bp->comp1(p.eval_one(cod_fun({onecell(u[0])})), comp(dom));
      if (lhs != rhs) throw IllFormed("fincat " + name + ": not strictly natural");
      Cell i = bp->id2(lhs);
      return Iso2{i, i};
    };
    n.dom_fun = dom_fun;
    n.cod_fun = cod_fun;
    n.dom_fun2 = dom_fun2;
    n.cod_fun2 = cod_fun2;
    env.add(n);
  };

  // eta: D -> D x C picking the unit; mu multiplies the two C components.
  strict_unary_nat("eta",
      [monp, Cc](const Cell& a) {
        const FinCatData& A = fincat_obj_of(a);
        FinCatData AC = product_cat(A, discrete_cat(*monp));
        FunctorData F;
        F.dom = A;
        F.cod = AC;
        Label e = monp->unit_label();
        for (const Label& o : A.objs) {
          Label t = Label::pair(o, e);
          for (size_t i = 0; i < AC.objs.size(); ++i)
            if (AC.objs[i] == t) F.obj_map.push_back(i);
        }
        for (const Label& mm : A.mors) {
          Label t = Label::pair(mm, e);
          for (size_t i = 0; i < AC.mors.size(); ++i)
            if (AC.mors[i] == t) F.mor_map.push_back(i);
        }
        return fincat_fun(F);
      },
      [](const std::vector<OneP>& u) { return u[0]; },
      [](const std::vector<OneP>& u) { return oapp("T", {u[0]}); },
      [](const std::vector<TwoP>& u) { return u[0]; },
      [](const std::vector<TwoP>& u) { return tapp("T", {u[0]}); });
  strict_unary_nat("mu",
      [monp, Cc](const Cell& a) {
        const FinCatData& A = fincat_obj_of(a);
        FinCatData C = discrete_cat(*monp);
        FinCatData AC = product_cat(A, C);
        FinCatData ACC = product_cat(AC, C);
        FunctorData F;
        F.dom = ACC;
        F.cod = AC;
        auto mult = [monp](const Label& x) {
          // ((a, m), n) -> (a, m * n)
          return Label::pair(x.first().first(), monp->mult(x.first().second(), x.second()));
        };
        for (const Label& o : ACC.objs) {
          Label t = mult(o);
          for (size_t i = 0; i < AC.objs.size(); ++i)
            if (AC.objs[i] == t) F.obj_map.push_back(i);
        }
        for (const Label& mm : ACC.mors) {
          // ((f, idm), idn) -> (f, id_{m*n}); identities on C are labeled by
          // the carrier element itself
          Label t = Label::pair(mm.first().first(),
                                monp->mult(mm.first().second(), mm.second()));
          for (size_t i = 0; i < AC.mors.size(); ++i)
            if (AC.mors[i] == t) F.mor_map.push_back(i);
        }
        return fincat_fun(F);
      },
      [](const std::vector<OneP>& u) { return oapp("T", {oapp("T", {u[0]})}); },
      [](const std::vector<OneP>& u) { return oapp("T", {u[0]}); },
      [](const std::vector<TwoP>& u) { return tapp("T", {tapp("T", {u[0]})}); },
      [](const std::vector<TwoP>& u) { return tapp("T", {u[0]}); });

  PseudomonadBundle t;
  env.add(m.canonical_mod(t.m, 1,
      [](const std::vector<ObjP>& o) { return ocomp(onat("mu", o), oapp("T", {onat("mu", o)})); },
      [](const std::vector<ObjP>& o) {
        return ocomp(onat("mu", o), onat("mu", {obapp("T", o)}));
      }));
  env.add(m.canonical_mod(t.n, 1,
      [](const std::vector<ObjP>& o) {
        return ocomp(onat("mu", o), onat("eta", {obapp("T", o)}));
      },
      [](const std::vector<ObjP>& o) { return oid(obapp("T", o)); }));
  env.add(m.canonical_mod(t.p, 1,
      [](const std::vector<ObjP>& o) { return ocomp(onat("mu", o), oapp("T", {onat("eta", o)})); },
      [](const std::vector<ObjP>& o) { return oid(obapp("T", o)); }));
  return t;
}

StrengthBundle fincat_canonical_strength(MonoidalBicat& m, const PseudomonadBundle& t,
                                         const Monoid& mon) {
  Env& env = m.E();
  const Bicat* bp = m.host.get();
  auto monp = std::make_shared<Monoid>(mon);
  StrengthBundle s;

  PsNat str;
  str.name = s.t;
  str.arity = 2;
  str.component = [monp](const std::vector<Cell>& a) {
    // (a, (b, c)) |-> ((a, b), c): the canonical functor built from the
    // partial-pairing functors b |-> (a, b).
    const FinCatData& A = fincat_obj_of(a[0]);
    const FinCatData& B = fincat_obj_of(a[1]);
    FinCatData C = discrete_cat(*monp);
    FinCatData BC = product_cat(B, C);
    FinCatData ABC = product_cat(A, BC);
    FinCatData AB = product_cat(A, B);
    FinCatData ABc = product_cat(AB, C);
    FunctorData F;
    F.dom = ABC;
    F.cod = ABc;
    auto re = [](const Label& x) {
      return Label::pair(Label::pair(x.first(), x.second().first()), x.second().second());
    };
    for (const Label& o : ABC.objs) {
      Label tl = re(o);
      for (size_t i = 0; i < ABc.objs.size(); ++i)
        if (ABc.objs[i] == tl) F.obj_map.push_back(i);
    }
    for (const Label& mm : ABC.mors) {
      Label tl = re(mm);
      for (size_t i = 0; i < ABc.mors.size(); ++i)
        if (ABc.mors[i] == tl) F.mor_map.push_back(i);
    }
    return fincat_fun(F);
  };
  const Env* envp = &env;
  auto comp = str.component;
  str.dom_fun = [](const std::vector<OneP>& u) {
    return oapp("ten", {u[0], oapp("T", {u[1]})});
  };
  str.cod_fun = [](const std::vector<OneP>& u) { return oapp("T", {oapp("ten", {u[0], u[1]})}); };
  str.dom_fun2 = [](const std::vector<TwoP>& u) { return tapp("ten", {u[0], tapp("T", {u[1]})}); };
  str.cod_fun2 = [](const std::vector<TwoP>& u) { return tapp("T", {tapp("ten", {u[0], u[1]})}); };
  auto dom_fun = str.dom_fun;
  auto cod_fun = str.cod_fun;
  str.cell = [comp, envp, bp, dom_fun, cod_fun](const std::vector<Cell>& u) {
    Paste p(*envp);
    std::vector<Cell> doms, cods;
    for (const Cell& x : u) {
      doms.push_back(fincat_obj(fincat_fun_of(x).dom));
      cods.push_back(fincat_obj(fincat_fun_of(x).cod));
    }
    std::vector<OneP> ue{onecell(u[0]), onecell(u[1])};
    Cell lhs = bp->comp1(comp(cods), p.eval_one(dom_fun(ue)));
    Cell rhs = bp->comp1(p.eval_one(cod_fun(ue)), comp(doms));
    if (lhs != rhs) throw IllFormed("fincat strength: not strictly natural");
    Cell i = bp->id2(lhs);
    return Iso2{i, i};
  };
  env.add(str);
  register_strength_mods(m, t, s);
  return s;
}

} // namespace bk
