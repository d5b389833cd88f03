#include "bicatkit/bicategory.hpp"

#include "bicatkit/law_runner.hpp"

#include <sstream>

namespace bk {

std::string Sample::str() const {
  std::ostringstream s;
  s << "obj<=" << obj_cap << ",one<=" << one_cap << ",two<=" << two_cap
    << ",tuples<=" << pair_cap;
  return s.str();
}

std::optional<Cell> Bicat::inv2(const Cell& t) const {
  if (inv2_hook) {
    if (auto fast = inv2_hook(t)) return fast;
  }
  const Cell f = src2(t), g = dst2(t);
  const Cell idf = id2(f), idg = id2(g);
  for (const Cell& u : twos(g, f))
    if (vcomp(u, t) == idf && vcomp(t, u) == idg) return u;
  return std::nullopt;
}

Cell Bicat::inv2_or_throw(const Cell& t) const {
  auto u = inv2(t);
  if (!u) throw IllFormed(name + ": 2-cell is not invertible: " + t.key());
  return *u;
}

namespace {

std::string show(const Cell& c) { return c.key(); }

struct Enumerator {
  const Bicat& b;
  const Sample& s;
  std::vector<Cell> objs;

  Enumerator(const Bicat& bb, const Sample& ss) : b(bb), s(ss), objs(bb.objects(ss.obj_cap)) {}

  bool full(size_t n) const { return s.pair_cap && n >= static_cast<size_t>(s.pair_cap); }

  std::vector<Cell> ones(const Cell& a, const Cell& c) const { return b.ones(a, c, s.one_cap); }

  std::vector<Cell> twos(const Cell& f, const Cell& g, size_t cap) const {
    auto ts = b.twos(f, g);
    if (ts.size() > cap) ts.resize(cap);
    return ts;
  }

  // Composable 1-cell chains [f1, ..., fn] with fn applied first. Two-pass:
  // count, then collect a strided subset so truncation stays representative.
  std::vector<std::vector<Cell>> chains(int len) const {
    size_t total = 0;
    std::vector<Cell> cur;
    std::function<void(const Cell&, int, size_t*, size_t, std::vector<std::vector<Cell>>*)> go =
        [&](const Cell& at, int left, size_t* counter, size_t stride,
            std::vector<std::vector<Cell>>* sink) {
          if (left == 0) {
            if (sink && (*counter % stride == 0)) sink->push_back(cur);
            ++*counter;
            return;
          }
          for (const Cell& prev : objs)
            for (const Cell& f : ones(prev, at)) {
              cur.push_back(f);
              go(prev, left - 1, counter, stride, sink);
              cur.pop_back();
            }
        };
    for (const Cell& a : objs) go(a, len, &total, 1, nullptr);
    size_t want = s.pair_cap ? static_cast<size_t>(s.pair_cap) : total;
    size_t stride = want && total > want ? (total + want - 1) / want : 1;
    std::vector<std::vector<Cell>> out;
    size_t counter = 0;
    for (const Cell& a : objs) go(a, len, &counter, stride, &out);
    return out;
  }

  // Vertically composable 2-cell pairs (y, x) with y after x, per hom.
  std::vector<std::pair<Cell, Cell>> vert_pairs() const {
    std::vector<std::pair<Cell, Cell>> out;
    for (const Cell& a : objs)
      for (const Cell& c : objs) {
        auto fs = ones(a, c);
        for (const Cell& f : fs)
          for (const Cell& g : fs)
            for (const Cell& x : twos(f, g, 4))
              for (const Cell& h : fs)
                for (const Cell& y : twos(g, h, 4)) {
                  out.push_back({y, x});
                  if (full(out.size())) return out;
                }
      }
    return out;
  }

  // Sampled 2-cells together, per hom.
  std::vector<Cell> all_twos() const {
    std::vector<Cell> out;
    for (const Cell& a : objs)
      for (const Cell& c : objs) {
        auto fs = ones(a, c);
        for (const Cell& f : fs)
          for (const Cell& g : fs)
            for (const Cell& x : twos(f, g, s.two_cap)) {
              out.push_back(x);
              if (full(out.size())) return out;
            }
      }
    return out;
  }
};

} // namespace

Report check_bicategory(const Bicat& b, const Sample& s, const std::string& suite) {
  Report rep;
  Enumerator e(b, s);
  const std::string cap = s.str();

  // Vertical unit.
  auto twos = e.all_twos();
  rep.add(run_law(suite, "hom/identity", twos.size(), [&](size_t i) -> std::optional<std::string> {
    const Cell& x = twos[i];
    if (b.vcomp(x, b.id2(b.src2(x))) != x || b.vcomp(b.id2(b.dst2(x)), x) != x)
      return "2-cell " + show(x) + " fails vertical unit";
    return std::nullopt;
  }, cap));

  // Vertical associativity over composable triples.
  {
    auto pairs = e.vert_pairs();
    std::vector<std::array<Cell, 3>> triples;
    for (const auto& [y, x] : pairs) {
      const Cell top = b.dst2(y);
      for (const Cell& h : e.ones(b.dom1(top), b.cod1(top)))
        for (const Cell& z : e.twos(top, h, 2)) {
          triples.push_back({z, y, x});
          if (e.full(triples.size())) goto collected;
        }
    }
  collected:
    rep.add(run_law(suite, "hom/assoc", triples.size(), [&](size_t i) -> std::optional<std::string> {
      const auto& [z, y, x] = triples[i];
      if (b.vcomp(z, b.vcomp(y, x)) != b.vcomp(b.vcomp(z, y), x))
        return "vertical associativity fails at " + show(x);
      return std::nullopt;
    }, cap));
  }

  // Interchange and horizontal identity.
  {
    struct IntCase {
      Cell y2, y1, x2, x1; // inner pair (x2 after x1), outer pair (y2 after y1)
    };
    std::vector<IntCase> cases;
    for (const Cell& a : e.objs) {
      for (const Cell& m : e.objs)
        for (const Cell& c : e.objs) {
          auto inner_fs = e.ones(a, m);
          auto outer_fs = e.ones(m, c);
          std::vector<std::pair<Cell, Cell>> inner, outer;
          for (const Cell& f : inner_fs)
            for (const Cell& g : inner_fs)
              for (const Cell& x1 : e.twos(f, g, 2))
                for (const Cell& h : inner_fs)
                  for (const Cell& x2 : e.twos(g, h, 2)) inner.push_back({x2, x1});
          for (const Cell& f : outer_fs)
            for (const Cell& g : outer_fs)
              for (const Cell& y1 : e.twos(f, g, 2))
                for (const Cell& h : outer_fs)
                  for (const Cell& y2 : e.twos(g, h, 2)) outer.push_back({y2, y1});
          for (const auto& [x2, x1] : inner)
            for (const auto& [y2, y1] : outer) {
              cases.push_back({y2, y1, x2, x1});
              if (e.full(cases.size())) goto enough;
            }
        }
    }
  enough:
    rep.add(run_law(suite, "hom/interchange", cases.size(), [&](size_t i) -> std::optional<std::string> {
      const auto& c = cases[i];
      Cell lhs = b.vcomp(b.hcomp(c.y2, c.x2), b.hcomp(c.y1, c.x1));
      Cell rhs = b.hcomp(b.vcomp(c.y2, c.y1), b.vcomp(c.x2, c.x1));
      if (lhs != rhs) return "interchange fails at " + show(c.x1) + " ; " + show(c.y1);
      return std::nullopt;
    }, cap));

    auto chains2 = e.chains(2);
    rep.add(run_law(suite, "hom/id-horizontal", chains2.size(), [&](size_t i) -> std::optional<std::string> {
      const Cell& f = chains2[i][0];
      const Cell& g = chains2[i][1];
      if (b.hcomp(b.id2(f), b.id2(g)) != b.id2(b.comp1(f, g)))
        return "id2(f).id2(g) != id2(f.g) at " + show(f) + " ; " + show(g);
      return std::nullopt;
    }, cap));
  }

  // Naturality of associator (middle slot) and unitors.
  {
    auto chains3 = e.chains(3);
    rep.add(run_law(suite, "assoc/natural", chains3.size(), [&](size_t i) -> std::optional<std::string> {
      const Cell& f = chains3[i][0];
      const Cell& g = chains3[i][1];
      const Cell& h = chains3[i][2];
      for (const Cell& g2 : e.ones(b.dom1(g), b.cod1(g)))
        for (const Cell& x : e.twos(g, g2, 2)) {
          Cell lhs = b.vcomp(b.assoc(f, g2, h).fwd,
                             b.hcomp(b.hcomp(b.id2(f), x), b.id2(h)));
          Cell rhs = b.vcomp(b.hcomp(b.id2(f), b.hcomp(x, b.id2(h))),
                             b.assoc(f, g, h).fwd);
          if (lhs != rhs) return "associator not natural at " + show(x);
        }
      return std::nullopt;
    }, cap));

    auto chains1 = e.chains(1);
    rep.add(run_law(suite, "unitors/natural", chains1.size(), [&](size_t i) -> std::optional<std::string> {
      const Cell& f = chains1[i][0];
      for (const Cell& f2 : e.ones(b.dom1(f), b.cod1(f)))
        for (const Cell& x : e.twos(f, f2, 4)) {
          Cell l1 = b.vcomp(b.lunit(f2).fwd, b.whisk_l(b.id1(b.cod1(f)), x));
          Cell l2 = b.vcomp(x, b.lunit(f).fwd);
          if (l1 != l2) return "left unitor not natural at " + show(x);
          Cell r1 = b.vcomp(b.runit(f2).fwd, b.whisk_r(x, b.id1(b.dom1(f))));
          Cell r2 = b.vcomp(x, b.runit(f).fwd);
          if (r1 != r2) return "right unitor not natural at " + show(x);
        }
      return std::nullopt;
    }, cap));

    auto chains3b = e.chains(3);
    rep.add(run_law(suite, "structural/invertible", chains3b.size(), [&](size_t i) -> std::optional<std::string> {
      const Cell& f = chains3b[i][0];
      const Cell& g = chains3b[i][1];
      const Cell& h = chains3b[i][2];
      Iso2 a = b.assoc(f, g, h);
      if (b.vcomp(a.bwd, a.fwd) != b.id2(b.src2(a.fwd)) ||
          b.vcomp(a.fwd, a.bwd) != b.id2(b.dst2(a.fwd)))
        return "associator inverse wrong at " + show(f);
      Iso2 l = b.lunit(f), r = b.runit(f);
      if (b.vcomp(l.bwd, l.fwd) != b.id2(b.src2(l.fwd))) return "lunit inverse wrong at " + show(f);
      if (b.vcomp(r.bwd, r.fwd) != b.id2(b.src2(r.fwd))) return "runit inverse wrong at " + show(f);
      return std::nullopt;
    }, cap));
  }

  // Triangle: (f <| lunit(g)) . assoc(f, Id, g) = runit(f) |> g.
  {
    auto chains2 = e.chains(2);
    rep.add(run_law(suite, "triangle", chains2.size(), [&](size_t i) -> std::optional<std::string> {
      const Cell& f = chains2[i][0];
      const Cell& g = chains2[i][1];
      Cell mid = b.id1(b.dom1(f));
      Cell lhs = b.vcomp(b.whisk_l(f, b.lunit(g).fwd), b.assoc(f, mid, g).fwd);
      Cell rhs = b.whisk_r(b.runit(f).fwd, g);
      if (lhs != rhs) return "triangle fails at " + show(f) + " ; " + show(g);
      return std::nullopt;
    }, cap));
  }

  // Pentagon.
  {
    auto chains4 = e.chains(4);
    rep.add(run_law(suite, "pentagon", chains4.size(), [&](size_t i) -> std::optional<std::string> {
      const Cell& f = chains4[i][0];
      const Cell& g = chains4[i][1];
      const Cell& h = chains4[i][2];
      const Cell& k = chains4[i][3];
      Cell lhs = b.vcomp(b.whisk_l(f, b.assoc(g, h, k).fwd),
                         b.vcomp(b.assoc(f, b.comp1(g, h), k).fwd,
                                 b.whisk_r(b.assoc(f, g, h).fwd, k)));
      Cell rhs = b.vcomp(b.assoc(f, g, b.comp1(h, k)).fwd, b.assoc(b.comp1(f, g), h, k).fwd);
      if (lhs != rhs) return "pentagon fails at " + show(f);
      return std::nullopt;
    }, cap));
  }

  rep.sort();
  return rep;
}

Cell pair_cell(const Cell& a, const Cell& b) {
  return Cell::make("<" + a.key() + "|" + b.key() + ">", std::make_pair(a, b));
}

std::pair<Cell, Cell> unpair_cell(const Cell& p) { return p.as<std::pair<Cell, Cell>>(); }

Bicat product_bicat(const Bicat& b, const Bicat& c) {
  Bicat p;
  p.name = b.name + "*" + c.name;
  auto lift1 = [](auto fb, auto fc) {
    return [fb, fc](const Cell& x) {
      auto [l, r] = unpair_cell(x);
      return pair_cell(fb(l), fc(r));
    };
  };
  auto lift2 = [](auto fb, auto fc) {
    return [fb, fc](const Cell& x, const Cell& y) {
      auto [xl, xr] = unpair_cell(x);
      auto [yl, yr] = unpair_cell(y);
      return pair_cell(fb(xl, yl), fc(xr, yr));
    };
  };
  p.dom1 = lift1(b.dom1, c.dom1);
  p.cod1 = lift1(b.cod1, c.cod1);
  p.src2 = lift1(b.src2, c.src2);
  p.dst2 = lift1(b.dst2, c.dst2);
  p.id1 = lift1(b.id1, c.id1);
  p.id2 = lift1(b.id2, c.id2);
  p.comp1 = lift2(b.comp1, c.comp1);
  p.vcomp = lift2(b.vcomp, c.vcomp);
  p.hcomp = lift2(b.hcomp, c.hcomp);
  p.assoc = [&b, &c](const Cell& f, const Cell& g, const Cell& h) {
    auto [fl, fr] = unpair_cell(f);
    auto [gl, gr] = unpair_cell(g);
    auto [hl, hr] = unpair_cell(h);
    Iso2 l = b.assoc(fl, gl, hl), r = c.assoc(fr, gr, hr);
    return Iso2{pair_cell(l.fwd, r.fwd), pair_cell(l.bwd, r.bwd)};
  };
  p.lunit = [&b, &c](const Cell& f) {
    auto [l, r] = unpair_cell(f);
    Iso2 x = b.lunit(l), y = c.lunit(r);
    return Iso2{pair_cell(x.fwd, y.fwd), pair_cell(x.bwd, y.bwd)};
  };
  p.runit = [&b, &c](const Cell& f) {
    auto [l, r] = unpair_cell(f);
    Iso2 x = b.runit(l), y = c.runit(r);
    return Iso2{pair_cell(x.fwd, y.fwd), pair_cell(x.bwd, y.bwd)};
  };
  p.objects = [&b, &c](int cap) {
    std::vector<Cell> out;
    for (const Cell& x : b.objects(cap))
      for (const Cell& y : c.objects(cap)) out.push_back(pair_cell(x, y));
    return out;
  };
  p.ones = [&b, &c](const Cell& a0, const Cell& b0, int cap) {
    auto [al, ar] = unpair_cell(a0);
    auto [bl, br] = unpair_cell(b0);
    std::vector<Cell> out;
    for (const Cell& x : b.ones(al, bl, cap))
      for (const Cell& y : c.ones(ar, br, cap)) out.push_back(pair_cell(x, y));
    return out;
  };
  p.twos = [&b, &c](const Cell& f, const Cell& g) {
    auto [fl, fr] = unpair_cell(f);
    auto [gl, gr] = unpair_cell(g);
    std::vector<Cell> out;
    for (const Cell& x : b.twos(fl, gl))
      for (const Cell& y : c.twos(fr, gr)) out.push_back(pair_cell(x, y));
    return out;
  };
  return p;
}

} // namespace bk
