#include "bicatkit/cat.hpp"

#include "bicatkit/law_runner.hpp"
#include "bicatkit/memo.hpp"
#include "bicatkit/sampling.hpp"

#include <sstream>

namespace bk {

Label Monoid::mult(const Label& a, const Label& b) const {
  auto i = carrier.index_of(a), j = carrier.index_of(b);
  if (!i || !j) throw IllFormed("Monoid::mult: element not in carrier");
  return carrier.at(table[*i][*j]);
}

bool Monoid::commutative() const {
  for (size_t i = 0; i < carrier.size(); ++i)
    for (size_t j = 0; j < carrier.size(); ++j)
      if (table[i][j] != table[j][i]) return false;
  return true;
}

bool Monoid::well_formed(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  size_t n = carrier.size();
  if (unit >= n || table.size() != n) return fail("shape");
  for (const auto& row : table)
    if (row.size() != n) return fail("shape");
  for (size_t i = 0; i < n; ++i)
    if (table[unit][i] != i || table[i][unit] != i) return fail("unit law");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]]) return fail("associativity");
  return true;
}

Monoid monoid_z2() {
  return Monoid{"z2", FinSet::of({"0", "1"}), 0, {{0, 1}, {1, 0}}};
}

Monoid monoid_max01() {
  return Monoid{"max01", FinSet::of({"0", "1"}), 0, {{0, 1}, {1, 1}}};
}

Monoid monoid_right_zero3() {
  // e is the unit; on {a,b}: x*y = y.
  return Monoid{"rz3", FinSet::of({"e", "a", "b"}), 0, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}};
}

std::vector<Monoid> all_monoids(size_t max_size) {
  std::vector<Monoid> out;
  for (size_t n = 1; n <= max_size; ++n) {
    Labels elems;
    elems.push_back(Label::atom("e"));
    for (size_t i = 1; i < n; ++i) elems.push_back(Label::atom("m" + std::to_string(i)));
    FinSet carrier(elems);
    // Fill the non-unit part of the table in all ways, keep associative ones.
    size_t free_cells = (n - 1) * (n - 1);
    std::vector<size_t> choice(free_cells, 0);
    while (true) {
      Monoid m;
      m.name = "monoid" + std::to_string(n) + "#" + std::to_string(out.size());
      m.carrier = carrier;
      m.unit = 0;
      m.table.assign(n, std::vector<size_t>(n, 0));
      for (size_t i = 0; i < n; ++i) {
        m.table[0][i] = i;
        m.table[i][0] = i;
      }
      size_t c = 0;
      for (size_t i = 1; i < n; ++i)
        for (size_t j = 1; j < n; ++j) m.table[i][j] = choice[c++];
      if (m.well_formed()) out.push_back(m);
      // next choice
      size_t k = 0;
      while (k < free_cells) {
        if (++choice[k] < n) break;
        choice[k] = 0;
        ++k;
      }
      if (k == free_cells || free_cells == 0) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// FinSet host

namespace {

struct HostMor {
  Cell dom, cod;
  FinFn fn;
};

Cell host_obj(const Label& tree) { return Cell::make("ob:" + tree.str(), tree); }

const Label& host_obj_tree(const Cell& c) { return c.as<Label>(); }

FinSet interp_tree(const std::map<std::string, FinSet>& bases, const Label& t) {
  if (t.is_atom()) {
    if (t.text() == "I") return FinSet::of({"*"});
    auto it = bases.find(t.text());
    if (it == bases.end()) throw IllFormed("finset host: unknown base object " + t.text());
    return it->second;
  }
  if (t.is_tag() && t.text() == "t") {
    const Label& p = t.inner();
    return product(interp_tree(bases, p.first()), interp_tree(bases, p.second())).object;
  }
  throw IllFormed("finset host: bad object tree " + t.str());
}

Label ten_tree(const Label& a, const Label& b) { return Label::tag("t", Label::pair(a, b)); }

} // namespace

FinSetHost finset_host(const std::map<std::string, FinSet>& bases_in) {
  auto bases = std::make_shared<std::map<std::string, FinSet>>(bases_in);
  auto interp_memo = std::make_shared<Memo<FinSet>>();
  auto interp = [bases, interp_memo](const Cell& ob) {
    return interp_memo->get(ob.key(),
                            [&] { return interp_tree(*bases, host_obj_tree(ob)); });
  };
  auto mor = [interp](const Cell& dom, const Cell& cod, const FinFn& fn) {
    if (!(fn.dom() == interp(dom)) || !(fn.cod() == interp(cod)))
      throw IllFormed("finset host: morphism function does not match boundary objects");
    return Cell::make("hm:" + host_obj_tree(dom).str() + "=>" + host_obj_tree(cod).str() + ";" +
                          fn.str(),
                      HostMor{dom, cod, fn});
  };

  MonCat mc;
  mc.cat.name = "finset";
  mc.cat.objects = [bases](int cap) {
    std::vector<std::vector<Label>> by_depth(1); // index d-1 holds depth-d trees
    by_depth[0].push_back(Label::atom("I"));
    for (const auto& [n, s] : *bases) by_depth[0].push_back(Label::atom(n));
    for (int d = 2; d <= cap; ++d) {
      std::vector<Label> next;
      for (int da = 1; da < d; ++da)
        for (int db = 1; db < d; ++db) {
          if (std::max(da, db) != d - 1) continue;
          for (const Label& a : by_depth[da - 1])
            for (const Label& b : by_depth[db - 1]) next.push_back(ten_tree(a, b));
        }
      by_depth.push_back(std::move(next));
    }
    std::vector<Cell> out;
    for (const auto& level : by_depth)
      for (const Label& t : level) out.push_back(host_obj(t));
    return out;
  };
  auto hom_memo = std::make_shared<Memo<std::vector<Cell>>>();
  mc.cat.hom = [interp, mor, hom_memo](const Cell& a, const Cell& b) {
    return hom_memo->get(a.key() + "|" + b.key(), [&] {
      std::vector<Cell> out;
      for (const FinFn& f : all_functions(interp(a), interp(b))) out.push_back(mor(a, b, f));
      return out;
    });
  };
  mc.cat.id = [interp, mor](const Cell& a) { return mor(a, a, FinFn::identity(interp(a))); };
  mc.cat.comp = [mor](const Cell& f, const Cell& g) {
    const HostMor& fm = f.as<HostMor>();
    const HostMor& gm = g.as<HostMor>();
    if (!(gm.cod == fm.dom)) throw BoundaryMismatch("finset host compose");
    return mor(gm.dom, fm.cod, compose(fm.fn, gm.fn));
  };
  mc.cat.mdom = [](const Cell& f) { return f.as<HostMor>().dom; };
  mc.cat.mcod = [](const Cell& f) { return f.as<HostMor>().cod; };

  mc.unit = host_obj(Label::atom("I"));
  mc.ten_obj = [](const Cell& a, const Cell& b) {
    return host_obj(ten_tree(host_obj_tree(a), host_obj_tree(b)));
  };
  mc.ten_mor = [mor, interp](const Cell& f, const Cell& g) {
    const HostMor& fm = f.as<HostMor>();
    const HostMor& gm = g.as<HostMor>();
    Cell dom = host_obj(ten_tree(host_obj_tree(fm.dom), host_obj_tree(gm.dom)));
    Cell cod = host_obj(ten_tree(host_obj_tree(fm.cod), host_obj_tree(gm.cod)));
    return mor(dom, cod, product_fn(fm.fn, gm.fn));
  };
  auto t3 = [](const Cell& a, const Cell& b, const Cell& c, bool left) {
    Label ta = host_obj_tree(a), tb = host_obj_tree(b), tc = host_obj_tree(c);
    return host_obj(left ? ten_tree(ten_tree(ta, tb), tc) : ten_tree(ta, ten_tree(tb, tc)));
  };
  mc.alpha = [mor, interp, t3](const Cell& a, const Cell& b, const Cell& c) {
    Cell dom = t3(a, b, c, true), cod = t3(a, b, c, false);
    FinFn fn = FinFn::from_map(interp(dom), interp(cod), [](const Label& x) {
      return Label::pair(x.first().first(), Label::pair(x.first().second(), x.second()));
    });
    return mor(dom, cod, fn);
  };
  mc.alpha_inv = [mor, interp, t3](const Cell& a, const Cell& b, const Cell& c) {
    Cell dom = t3(a, b, c, false), cod = t3(a, b, c, true);
    FinFn fn = FinFn::from_map(interp(dom), interp(cod), [](const Label& x) {
      return Label::pair(Label::pair(x.first(), x.second().first()), x.second().second());
    });
    return mor(dom, cod, fn);
  };
  mc.lam = [mor, interp](const Cell& a) {
    Cell dom = host_obj(ten_tree(Label::atom("I"), host_obj_tree(a)));
    FinFn fn = FinFn::from_map(interp(dom), interp(a), [](const Label& x) { return x.second(); });
    return mor(dom, a, fn);
  };
  mc.lam_inv = [mor, interp](const Cell& a) {
    Cell cod = host_obj(ten_tree(Label::atom("I"), host_obj_tree(a)));
    FinFn fn = FinFn::from_map(interp(a), interp(cod), [](const Label& x) {
      return Label::pair(Label::atom("*"), x);
    });
    return mor(a, cod, fn);
  };
  mc.rho = [mor, interp](const Cell& a) {
    Cell dom = host_obj(ten_tree(host_obj_tree(a), Label::atom("I")));
    FinFn fn = FinFn::from_map(interp(dom), interp(a), [](const Label& x) { return x.first(); });
    return mor(dom, a, fn);
  };
  mc.rho_inv = [mor, interp](const Cell& a) {
    Cell cod = host_obj(ten_tree(host_obj_tree(a), Label::atom("I")));
    FinFn fn = FinFn::from_map(interp(a), interp(cod), [](const Label& x) {
      return Label::pair(x, Label::atom("*"));
    });
    return mor(a, cod, fn);
  };
  mc.symmetric = true;
  mc.braid = [mor, interp](const Cell& a, const Cell& b) {
    Cell dom = host_obj(ten_tree(host_obj_tree(a), host_obj_tree(b)));
    Cell cod = host_obj(ten_tree(host_obj_tree(b), host_obj_tree(a)));
    FinFn fn = FinFn::from_map(interp(dom), interp(cod), [](const Label& x) {
      return Label::pair(x.second(), x.first());
    });
    return mor(dom, cod, fn);
  };
  auto braid = mc.braid;
  mc.braid_inv = [braid](const Cell& a, const Cell& b) { return braid(b, a); };

  FinSetHost host;
  host.mc = mc;
  host.interp = interp;
  host.mor = mor;
  host.fn_of = [](const Cell& m) -> const FinFn& { return m.as<HostMor>().fn; };
  return host;
}

// ---------------------------------------------------------------------------
// Discrete monoidal category of a monoid

namespace {
struct DiscId {
  Cell obj;
};
} // namespace

MonCat discrete_moncat(const Monoid& m) {
  auto mm = std::make_shared<Monoid>(m);
  auto obj = [](const Label& x) { return Cell::make("ob:" + x.str(), x); };
  auto idm = [obj](const Cell& a) {
    return Cell::make("idm:" + a.key(), DiscId{a});
  };
  MonCat mc;
  mc.cat.name = "disc-" + m.name;
  mc.cat.objects = [mm, obj](int) {
    std::vector<Cell> out;
    for (const Label& x : mm->carrier.elements()) out.push_back(obj(x));
    return out;
  };
  mc.cat.hom = [idm](const Cell& a, const Cell& b) {
    std::vector<Cell> out;
    if (a == b) out.push_back(idm(a));
    return out;
  };
  mc.cat.id = idm;
  mc.cat.comp = [](const Cell& f, const Cell& g) {
    if (f != g) throw BoundaryMismatch("discrete compose");
    return f;
  };
  mc.cat.mdom = [](const Cell& f) { return f.as<DiscId>().obj; };
  mc.cat.mcod = [](const Cell& f) { return f.as<DiscId>().obj; };
  mc.unit = obj(m.unit_label());
  mc.ten_obj = [mm, obj](const Cell& a, const Cell& b) {
    return obj(mm->mult(a.as<Label>(), b.as<Label>()));
  };
  mc.ten_mor = [mm, obj, idm](const Cell& f, const Cell& g) {
    return idm(obj(mm->mult(f.as<DiscId>().obj.as<Label>(), g.as<DiscId>().obj.as<Label>())));
  };
  mc.alpha = [mm, obj, idm](const Cell& a, const Cell& b, const Cell& c) {
    return idm(obj(mm->mult(mm->mult(a.as<Label>(), b.as<Label>()), c.as<Label>())));
  };
  mc.alpha_inv = mc.alpha;
  mc.lam = idm;
  mc.lam_inv = idm;
  mc.rho = idm;
  mc.rho_inv = idm;
  mc.symmetric = m.commutative();
  if (mc.symmetric) {
    mc.braid = [mm, obj, idm](const Cell& a, const Cell& b) {
      return idm(obj(mm->mult(a.as<Label>(), b.as<Label>())));
    };
    mc.braid_inv = mc.braid;
  }
  return mc;
}

// ---------------------------------------------------------------------------
// Writer monad

StrongMonad writer_monad(const FinSetHost& host, const Monoid& m) {
  auto interp = host.interp;
  auto mor = host.mor;
  auto mm = std::make_shared<Monoid>(m);
  Cell mobj = Cell::make("ob:M", Label::atom("M"));
  auto ten = host.mc.ten_obj;

  StrongMonad t;
  t.name = "writer-" + m.name;
  t.T.name = "writer";
  t.T.on_obj = [ten, mobj](const Cell& a) { return ten(a, mobj); };
  auto id_m = host.mc.cat.id(mobj);
  auto ten_mor = host.mc.ten_mor;
  t.T.on_mor = [ten_mor, id_m](const Cell& f) { return ten_mor(f, id_m); };
  t.eta = [interp, mor, ten, mobj, mm](const Cell& a) {
    Cell ta = ten(a, mobj);
    FinFn fn = FinFn::from_map(interp(a), interp(ta), [mm](const Label& x) {
      return Label::pair(x, mm->unit_label());
    });
    return mor(a, ta, fn);
  };
  t.mu = [interp, mor, ten, mobj, mm](const Cell& a) {
    Cell ta = ten(a, mobj);
    Cell tta = ten(ta, mobj);
    FinFn fn = FinFn::from_map(interp(tta), interp(ta), [mm](const Label& x) {
      return Label::pair(x.first().first(), mm->mult(x.first().second(), x.second()));
    });
    return mor(tta, ta, fn);
  };
  t.strength = [interp, mor, ten, mobj](const Cell& a, const Cell& b) {
    Cell tb = ten(b, mobj);
    Cell dom = ten(a, tb);
    Cell cod = ten(ten(a, b), mobj);
    FinFn fn = FinFn::from_map(interp(dom), interp(cod), [](const Label& x) {
      return Label::pair(Label::pair(x.first(), x.second().first()), x.second().second());
    });
    return mor(dom, cod, fn);
  };
  return t;
}

// ---------------------------------------------------------------------------
// Tensor-word coherence

WordP w_leaf(const Cell& obj) {
  auto w = std::make_shared<ObjWord>();
  w->k = ObjWord::K::Leaf;
  w->leaf = obj;
  return w;
}
WordP w_unit() {
  auto w = std::make_shared<ObjWord>();
  w->k = ObjWord::K::Unit;
  return w;
}
WordP w_ten(WordP a, WordP b) {
  auto w = std::make_shared<ObjWord>();
  w->k = ObjWord::K::Ten;
  w->l = std::move(a);
  w->r = std::move(b);
  return w;
}

Cell w_eval(const MonCat& c, const WordP& w) {
  switch (w->k) {
    case ObjWord::K::Leaf: return w->leaf;
    case ObjWord::K::Unit: return c.unit;
    case ObjWord::K::Ten: return c.ten_obj(w_eval(c, w->l), w_eval(c, w->r));
  }
  throw IllFormed("w_eval");
}

namespace {

struct WIso {
  Cell fwd, bwd;
};

WIso w_id(const MonCat& c, const Cell& obj) {
  Cell i = c.cat.id(obj);
  return {i, i};
}
WIso w_comp(const MonCat& c, const WIso& second, const WIso& first) {
  return {c.cat.comp(second.fwd, first.fwd), c.cat.comp(first.bwd, second.bwd)};
}
WIso w_tenmor(const MonCat& c, const WIso& a, const WIso& b) {
  return {c.ten_mor(a.fwd, b.fwd), c.ten_mor(a.bwd, b.bwd)};
}

Cell fold_obj(const MonCat& c, const std::vector<Cell>& xs) {
  if (xs.empty()) return c.unit;
  Cell acc = xs.front();
  for (size_t i = 1; i < xs.size(); ++i) acc = c.ten_obj(acc, xs[i]);
  return acc;
}

// (fold(L) (x) fold(R)) => fold(L ++ R)
WIso w_merge(const MonCat& c, const std::vector<Cell>& L, const std::vector<Cell>& R) {
  if (L.empty()) {
    Cell r = fold_obj(c, R);
    return {c.lam(r), c.lam_inv(r)};
  }
  if (R.empty()) {
    Cell l = fold_obj(c, L);
    return {c.rho(l), c.rho_inv(l)};
  }
  if (R.size() == 1) return w_id(c, c.ten_obj(fold_obj(c, L), R.front()));
  std::vector<Cell> Rp(R.begin(), R.end() - 1);
  Cell rl = R.back();
  Cell lf = fold_obj(c, L);
  Cell rp = fold_obj(c, Rp);
  WIso step1{c.alpha_inv(lf, rp, rl), c.alpha(lf, rp, rl)};
  WIso rec = w_merge(c, L, Rp);
  WIso step2 = w_tenmor(c, rec, w_id(c, rl));
  return w_comp(c, step2, step1);
}

// word => left fold of its non-unit leaves
WIso w_canon(const MonCat& c, const WordP& w, std::vector<Cell>* leaves) {
  switch (w->k) {
    case ObjWord::K::Leaf:
      leaves->push_back(w->leaf);
      return w_id(c, w->leaf);
    case ObjWord::K::Unit: return w_id(c, c.unit);
    case ObjWord::K::Ten: {
      std::vector<Cell> ll, rl;
      WIso cl = w_canon(c, w->l, &ll);
      WIso cr = w_canon(c, w->r, &rl);
      WIso ten = w_tenmor(c, cl, cr);
      WIso merge = w_merge(c, ll, rl);
      leaves->insert(leaves->end(), ll.begin(), ll.end());
      leaves->insert(leaves->end(), rl.begin(), rl.end());
      return w_comp(c, merge, ten);
    }
  }
  throw IllFormed("w_canon");
}

} // namespace

std::pair<Cell, Cell> mc_coherence(const MonCat& c, const WordP& from, const WordP& to) {
  std::vector<Cell> lf, lt;
  WIso cf = w_canon(c, from, &lf);
  WIso ct = w_canon(c, to, &lt);
  if (lf.size() != lt.size()) throw IllFormed("mc_coherence: leaf sequences differ");
  for (size_t i = 0; i < lf.size(); ++i)
    if (lf[i] != lt[i]) throw IllFormed("mc_coherence: leaf mismatch at " + std::to_string(i));
  return {c.cat.comp(ct.bwd, cf.fwd), c.cat.comp(cf.bwd, ct.fwd)};
}

// ---------------------------------------------------------------------------
// Validators

std::string CatSample::str() const {
  std::ostringstream s;
  s << "obj<=" << obj_cap << ",mor<=" << mor_cap << ",tuples<=" << tuple_cap;
  return s.str();
}

namespace {

struct MorSample {
  std::vector<Cell> objs;
  // morphisms per hom, truncated
  std::function<std::vector<Cell>(const Cell&, const Cell&)> hom;

  std::vector<Cell> all; // flattened morphisms
};

MorSample collect(const MonCat& c, const CatSample& s) {
  MorSample ms;
  ms.objs = c.cat.objects(s.obj_cap);
  int cap = s.mor_cap;
  auto base = c.cat.hom;
  ms.hom = [base, cap](const Cell& a, const Cell& b) {
    auto out = base(a, b);
    if (static_cast<int>(out.size()) > cap) out.resize(cap);
    return out;
  };
  for (const Cell& a : ms.objs)
    for (const Cell& b : ms.objs)
      for (const Cell& f : ms.hom(a, b)) ms.all.push_back(f);
  return ms;
}

} // namespace

Report validate_moncat(const MonCat& c, const CatSample& s, const std::string& suite) {
  Report rep;
  const std::string cap = s.str();
  MorSample ms = collect(c, s);

  // Category laws.
  rep.add(run_law(suite, "category/unit", ms.all.size(), [&](size_t i) -> std::optional<std::string> {
    const Cell& f = ms.all[i];
    if (c.cat.comp(f, c.cat.id(c.cat.mdom(f))) != f) return "right unit fails at " + f.key();
    if (c.cat.comp(c.cat.id(c.cat.mcod(f)), f) != f) return "left unit fails at " + f.key();
    return std::nullopt;
  }, cap));

  {
    std::vector<std::array<Cell, 3>> triples;
    for (const Cell& f : ms.all) {
      for (const Cell& g : ms.all) {
        if (!(c.cat.mcod(g) == c.cat.mdom(f))) continue;
        for (const Cell& h : ms.all) {
          if (!(c.cat.mcod(h) == c.cat.mdom(g))) continue;
          triples.push_back({f, g, h});
          if (s.tuple_cap && triples.size() >= static_cast<size_t>(s.tuple_cap)) goto full;
        }
      }
    }
  full:
    rep.add(run_law(suite, "category/assoc", triples.size(), [&](size_t i) -> std::optional<std::string> {
      const auto& [f, g, h] = triples[i];
      if (c.cat.comp(c.cat.comp(f, g), h) != c.cat.comp(f, c.cat.comp(g, h)))
        return "associativity fails at " + f.key();
      return std::nullopt;
    }, cap));
  }

  // Tensor functoriality.
  {
    std::vector<std::array<Cell, 4>> quads;
    for (const Cell& f : ms.all)
      for (const Cell& g : ms.all) {
        if (!(c.cat.mcod(g) == c.cat.mdom(f))) continue;
        for (const Cell& f2 : ms.all)
          for (const Cell& g2 : ms.all) {
            if (!(c.cat.mcod(g2) == c.cat.mdom(f2))) continue;
            quads.push_back({f, g, f2, g2});
            if (s.tuple_cap && quads.size() >= static_cast<size_t>(s.tuple_cap)) goto full2;
          }
      }
  full2:
    rep.add(run_law(suite, "tensor/functorial", quads.size(), [&](size_t i) -> std::optional<std::string> {
      const auto& [f, g, f2, g2] = quads[i];
      Cell lhs = c.ten_mor(c.cat.comp(f, g), c.cat.comp(f2, g2));
      Cell rhs = c.cat.comp(c.ten_mor(f, f2), c.ten_mor(g, g2));
      if (lhs != rhs) return "tensor not functorial at " + f.key();
      return std::nullopt;
    }, cap));

    rep.add(run_law(suite, "tensor/identities", ms.objs.size() * ms.objs.size(),
                    [&](size_t i) -> std::optional<std::string> {
      const Cell& a = ms.objs[i / ms.objs.size()];
      const Cell& b = ms.objs[i % ms.objs.size()];
      if (c.ten_mor(c.cat.id(a), c.cat.id(b)) != c.cat.id(c.ten_obj(a, b)))
        return "tensor of identities wrong at " + a.key() + "," + b.key();
      return std::nullopt;
    }, cap));
  }

  // Naturality of alpha, lambda, rho (and braid when present).
  {
    std::vector<std::array<Cell, 3>> triples;
    for (const Cell& f : ms.all)
      for (const Cell& g : ms.all)
        for (const Cell& h : ms.all) {
          triples.push_back({f, g, h});
          if (s.tuple_cap && triples.size() >= static_cast<size_t>(s.tuple_cap)) goto full3;
        }
  full3:
    rep.add(run_law(suite, "alpha/natural", triples.size(), [&](size_t i) -> std::optional<std::string> {
      const auto& [f, g, h] = triples[i];
      Cell a = c.cat.mdom(f), b = c.cat.mdom(g), d = c.cat.mdom(h);
      Cell a2 = c.cat.mcod(f), b2 = c.cat.mcod(g), d2 = c.cat.mcod(h);
      Cell lhs = c.cat.comp(c.alpha(a2, b2, d2), c.ten_mor(c.ten_mor(f, g), h));
      Cell rhs = c.cat.comp(c.ten_mor(f, c.ten_mor(g, h)), c.alpha(a, b, d));
      if (lhs != rhs) return "alpha not natural at " + f.key();
      return std::nullopt;
    }, cap));
  }

  rep.add(run_law(suite, "unitors/natural", ms.all.size(), [&](size_t i) -> std::optional<std::string> {
    const Cell& f = ms.all[i];
    Cell a = c.cat.mdom(f), a2 = c.cat.mcod(f);
    Cell idI = c.cat.id(c.unit);
    if (c.cat.comp(c.lam(a2), c.ten_mor(idI, f)) != c.cat.comp(f, c.lam(a)))
      return "lambda not natural at " + f.key();
    if (c.cat.comp(c.rho(a2), c.ten_mor(f, idI)) != c.cat.comp(f, c.rho(a)))
      return "rho not natural at " + f.key();
    return std::nullopt;
  }, cap));

  rep.add(run_law(suite, "structural/invertible", ms.objs.size(), [&](size_t i) -> std::optional<std::string> {
    const Cell& a = ms.objs[i];
    if (c.cat.comp(c.lam(a), c.lam_inv(a)) != c.cat.id(a)) return "lambda not iso at " + a.key();
    if (c.cat.comp(c.rho(a), c.rho_inv(a)) != c.cat.id(a)) return "rho not iso at " + a.key();
    return std::nullopt;
  }, cap));

  // Pentagon and triangle.
  {
    size_t n = ms.objs.size();
    auto quads = strided_product({n, n, n, n}, s.tuple_cap);
    rep.add(run_law(suite, "pentagon", quads.size(), [&](size_t i) -> std::optional<std::string> {
      const Cell& a = ms.objs[quads[i][0]];
      const Cell& b = ms.objs[quads[i][1]];
      const Cell& d = ms.objs[quads[i][2]];
      const Cell& e = ms.objs[quads[i][3]];
      Cell lhs = c.cat.comp(c.alpha(a, b, c.ten_obj(d, e)), c.alpha(c.ten_obj(a, b), d, e));
      Cell rhs = c.cat.comp(c.ten_mor(c.cat.id(a), c.alpha(b, d, e)),
                            c.cat.comp(c.alpha(a, c.ten_obj(b, d), e),
                                       c.ten_mor(c.alpha(a, b, d), c.cat.id(e))));
      if (lhs != rhs) return "pentagon fails at " + a.key() + "," + b.key();
      return std::nullopt;
    }, cap));

    rep.add(run_law(suite, "triangle", n * n, [&](size_t i) -> std::optional<std::string> {
      const Cell& a = ms.objs[i / n];
      const Cell& b = ms.objs[i % n];
      Cell lhs = c.cat.comp(c.ten_mor(c.cat.id(a), c.lam(b)), c.alpha(a, c.unit, b));
      Cell rhs = c.ten_mor(c.rho(a), c.cat.id(b));
      if (lhs != rhs) return "triangle fails at " + a.key() + "," + b.key();
      return std::nullopt;
    }, cap));
  }

  if (c.symmetric) {
    auto pairs_b = strided_product({ms.all.size(), ms.all.size()}, s.tuple_cap);
    rep.add(run_law(suite, "braid/natural+sym", pairs_b.size(),
                    [&](size_t i) -> std::optional<std::string> {
      const Cell& f = ms.all[pairs_b[i][0]];
      const Cell& g = ms.all[pairs_b[i][1]];
      Cell a = c.cat.mdom(f), b = c.cat.mdom(g);
      Cell a2 = c.cat.mcod(f), b2 = c.cat.mcod(g);
      Cell lhs = c.cat.comp(c.braid(a2, b2), c.ten_mor(f, g));
      Cell rhs = c.cat.comp(c.ten_mor(g, f), c.braid(a, b));
      if (lhs != rhs) return "braid not natural at " + f.key();
      if (c.cat.comp(c.braid(b, a), c.braid(a, b)) != c.cat.id(c.ten_obj(a, b)))
        return "braid not involutive at " + a.key() + "," + b.key();
      return std::nullopt;
    }, cap));

    size_t n = ms.objs.size();
    auto tris = strided_product({n, n, n}, s.tuple_cap);
    rep.add(run_law(suite, "braid/hexagon", tris.size(), [&](size_t i) -> std::optional<std::string> {
      const Cell& a = ms.objs[tris[i][0]];
      const Cell& b = ms.objs[tris[i][1]];
      const Cell& d = ms.objs[tris[i][2]];
      // alpha . braid . alpha = (id (x) braid) . alpha . (braid (x) id)
      Cell lhs = c.cat.comp(c.alpha(b, d, a),
                            c.cat.comp(c.braid(a, c.ten_obj(b, d)), c.alpha(a, b, d)));
      Cell rhs = c.cat.comp(c.ten_mor(c.cat.id(b), c.braid(a, d)),
                            c.cat.comp(c.alpha(b, a, d), c.ten_mor(c.braid(a, b), c.cat.id(d))));
      if (lhs != rhs) return "hexagon fails at " + a.key();
      return std::nullopt;
    }, cap));
  }

  rep.sort();
  return rep;
}

Report validate_strong_monad(const MonCat& c, const StrongMonad& t, const CatSample& s,
                             const std::string& suite) {
  Report rep;
  const std::string cap = s.str();
  MorSample ms = collect(c, s);

  rep.add(run_law(suite, "functor/laws", ms.all.size(), [&](size_t i) -> std::optional<std::string> {
    const Cell& f = ms.all[i];
    if (t.T.on_mor(c.cat.id(c.cat.mdom(f))) != c.cat.id(t.T.on_obj(c.cat.mdom(f))))
      return "T does not preserve id at " + f.key();
    for (const Cell& g : c.cat.hom(c.cat.mcod(f), c.cat.mcod(f))) {
      if (t.T.on_mor(c.cat.comp(g, f)) != c.cat.comp(t.T.on_mor(g), t.T.on_mor(f)))
        return "T does not preserve composition at " + f.key();
      break;
    }
    return std::nullopt;
  }, cap));

  rep.add(run_law(suite, "eta-mu/natural", ms.all.size(), [&](size_t i) -> std::optional<std::string> {
    const Cell& f = ms.all[i];
    Cell a = c.cat.mdom(f), b = c.cat.mcod(f);
    if (c.cat.comp(t.eta(b), f) != c.cat.comp(t.T.on_mor(f), t.eta(a)))
      return "eta not natural at " + f.key();
    if (c.cat.comp(t.mu(b), t.T.on_mor(t.T.on_mor(f))) != c.cat.comp(t.T.on_mor(f), t.mu(a)))
      return "mu not natural at " + f.key();
    return std::nullopt;
  }, cap));

  rep.add(run_law(suite, "monad/laws", ms.objs.size(), [&](size_t i) -> std::optional<std::string> {
    const Cell& a = ms.objs[i];
    Cell ta = t.T.on_obj(a);
    if (c.cat.comp(t.mu(a), t.eta(ta)) != c.cat.id(ta)) return "left unit fails at " + a.key();
    if (c.cat.comp(t.mu(a), t.T.on_mor(t.eta(a))) != c.cat.id(ta))
      return "right unit fails at " + a.key();
    if (c.cat.comp(t.mu(a), t.T.on_mor(t.mu(a))) != c.cat.comp(t.mu(a), t.mu(ta)))
      return "associativity fails at " + a.key();
    return std::nullopt;
  }, cap));

  size_t n = ms.objs.size();
  auto pairs_s = strided_product({ms.all.size(), ms.all.size()}, s.tuple_cap);
  rep.add(run_law(suite, "strength/natural", pairs_s.size(),
                  [&](size_t i) -> std::optional<std::string> {
    const Cell& f = ms.all[pairs_s[i][0]];
    const Cell& g = ms.all[pairs_s[i][1]];
    Cell a = c.cat.mdom(f), b = c.cat.mdom(g);
    Cell a2 = c.cat.mcod(f), b2 = c.cat.mcod(g);
    Cell lhs = c.cat.comp(t.strength(a2, b2), c.ten_mor(f, t.T.on_mor(g)));
    Cell rhs = c.cat.comp(t.T.on_mor(c.ten_mor(f, g)), t.strength(a, b));
    if (lhs != rhs) return "strength not natural at " + f.key() + "," + g.key();
    return std::nullopt;
  }, cap));

  rep.add(run_law(suite, "strength/unit", n, [&](size_t i) -> std::optional<std::string> {
    const Cell& b = ms.objs[i];
    // T(lam_B) . t_{I,B} = lam_{TB}
    Cell lhs = c.cat.comp(t.T.on_mor(c.lam(b)), t.strength(c.unit, b));
    if (lhs != c.lam(t.T.on_obj(b))) return "strength unit fails at " + b.key();
    return std::nullopt;
  }, cap));

  auto tris_s = strided_product({n, n, n}, s.tuple_cap);
  rep.add(run_law(suite, "strength/assoc", tris_s.size(), [&](size_t i) -> std::optional<std::string> {
    const Cell& a = ms.objs[tris_s[i][0]];
    const Cell& b = ms.objs[tris_s[i][1]];
    const Cell& d = ms.objs[tris_s[i][2]];
    // t_{A(x)B, D}-route versus alpha route.
    Cell td = t.T.on_obj(d);
    Cell lhs = c.cat.comp(t.T.on_mor(c.alpha(a, b, d)), t.strength(c.ten_obj(a, b), d));
    Cell rhs = c.cat.comp(t.strength(a, c.ten_obj(b, d)),
                          c.cat.comp(c.ten_mor(c.cat.id(a), t.strength(b, d)), c.alpha(a, b, td)));
    if (lhs != rhs) return "strength assoc fails at " + a.key();
    return std::nullopt;
  }, cap));

  rep.add(run_law(suite, "strength/eta", n * n, [&](size_t i) -> std::optional<std::string> {
    const Cell& a = ms.objs[i / n];
    const Cell& b = ms.objs[i % n];
    Cell ab = c.ten_obj(a, b);
    Cell lhs = c.cat.comp(t.strength(a, b), c.ten_mor(c.cat.id(a), t.eta(b)));
    if (lhs != t.eta(ab)) return "strength-eta fails at " + a.key() + "," + b.key();
    return std::nullopt;
  }, cap));

  rep.add(run_law(suite, "strength/mu", n * n, [&](size_t i) -> std::optional<std::string> {
    const Cell& a = ms.objs[i / n];
    const Cell& b = ms.objs[i % n];
    Cell ab = c.ten_obj(a, b);
    Cell tb = t.T.on_obj(b);
    Cell lhs = c.cat.comp(t.mu(ab), c.cat.comp(t.T.on_mor(t.strength(a, b)), t.strength(a, tb)));
    Cell rhs = c.cat.comp(t.strength(a, b), c.ten_mor(c.cat.id(a), t.mu(b)));
    if (lhs != rhs) return "strength-mu fails at " + a.key() + "," + b.key();
    return std::nullopt;
  }, cap));

  rep.sort();
  return rep;
}

} // namespace bk
