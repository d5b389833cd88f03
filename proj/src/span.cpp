#include "bicatkit/span.hpp"

namespace bk {

namespace {

std::string arr_key(const SpanArr& a) {
  return "sp[" + a.dom.str() + "<-" + a.apex.str() + "->" + a.cod.str() + ";l=" +
         a.left.str() + ";r=" + a.right.str() + "]";
}

void check_arr(const SpanArr& a) {
  if (!(a.left.dom() == a.apex) || !(a.right.dom() == a.apex) ||
      !(a.left.cod() == a.dom) || !(a.right.cod() == a.cod))
    throw IllFormed("span: leg boundaries do not match");
}

} // namespace

Cell span_obj(const FinSet& s) { return Cell::make("S:" + s.str(), s); }

Cell span_arr(SpanArr a) {
  check_arr(a);
  std::string k = arr_key(a);
  return Cell::make(std::move(k), std::move(a));
}

Cell span_map(const SpanArr& src, const SpanArr& dst, const FinFn& fn) {
  if (!(src.dom == dst.dom) || !(src.cod == dst.cod))
    throw BoundaryMismatch("span 2-cell: spans not parallel");
  if (!(fn.dom() == src.apex) || !(fn.cod() == dst.apex))
    throw BoundaryMismatch("span 2-cell: map boundaries wrong");
  if (!(compose(dst.left, fn) == src.left) || !(compose(dst.right, fn) == src.right))
    throw IllFormed("span 2-cell: map does not commute with legs");
  std::string k = "2sp[" + arr_key(src) + "=>" + arr_key(dst) + ";" + fn.str() + "]";
  return Cell::make(std::move(k), SpanMap{src, dst, fn});
}

const FinSet& span_obj_set(const Cell& c) { return c.as<FinSet>(); }
const SpanArr& span_arr_of(const Cell& c) { return c.as<SpanArr>(); }
const SpanMap& span_map_of(const Cell& c) { return c.as<SpanMap>(); }

SpanArr span_of_fn(const FinFn& f) {
  return SpanArr{f.dom(), f.cod(), f.dom(), FinFn::identity(f.dom()), f};
}

SpanArr span_of_fn_rev(const FinFn& f) {
  return SpanArr{f.cod(), f.dom(), f.dom(), f, FinFn::identity(f.dom())};
}

SpanArr reverse_span(const SpanArr& a) { return SpanArr{a.cod, a.dom, a.apex, a.right, a.left}; }

Cell span_unique_mediator(const SpanArr& src, const SpanArr& dst) {
  FinFn fn = FinFn::from_map(src.apex, dst.apex, [&](const Label& x) -> Label {
    std::optional<Label> found;
    for (const Label& y : dst.apex.elements()) {
      if (dst.left(y) == src.left(x) && dst.right(y) == src.right(x)) {
        if (found) throw IllFormed("span_unique_mediator: mediator not unique at " + x.str());
        found = y;
      }
    }
    if (!found) throw IllFormed("span_unique_mediator: no image for " + x.str());
    return *found;
  });
  return span_map(src, dst, fn);
}

Iso2 span_unique_mediator_iso(const SpanArr& src, const SpanArr& dst) {
  return Iso2{span_unique_mediator(src, dst), span_unique_mediator(dst, src)};
}

SpanArr span_compose(const SpanArr& f, const SpanArr& g) {
  // f after g: g : A -> B, f : B -> C.
  if (!(g.cod == f.dom)) throw BoundaryMismatch("span compose: inner boundaries disagree");
  PullbackResult pb = pullback(g.right, f.left);
  return SpanArr{g.dom, f.cod, pb.apex, compose(g.left, pb.left), compose(f.right, pb.right)};
}

SpanArr span_identity(const FinSet& a) {
  return SpanArr{a, a, a, FinFn::identity(a), FinFn::identity(a)};
}

namespace {

SpanArr compose_spans(const SpanArr& f, const SpanArr& g) { return span_compose(f, g); }

SpanArr id_span(const FinSet& a) { return span_identity(a); }

} // namespace

Bicat span_bicat() {
  Bicat b;
  b.name = "span-finset";
  b.dom1 = [](const Cell& f) { return span_obj(span_arr_of(f).dom); };
  b.cod1 = [](const Cell& f) { return span_obj(span_arr_of(f).cod); };
  b.src2 = [](const Cell& t) { return span_arr(span_map_of(t).src); };
  b.dst2 = [](const Cell& t) { return span_arr(span_map_of(t).dst); };
  b.id1 = [](const Cell& a) { return span_arr(id_span(span_obj_set(a))); };
  b.comp1 = [](const Cell& f, const Cell& g) {
    return span_arr(compose_spans(span_arr_of(f), span_arr_of(g)));
  };
  b.id2 = [](const Cell& f) {
    const SpanArr& a = span_arr_of(f);
    return span_map(a, a, FinFn::identity(a.apex));
  };
  b.vcomp = [](const Cell& t, const Cell& s) {
    const SpanMap& ts = span_map_of(t);
    const SpanMap& ss = span_map_of(s);
    if (!(span_arr(ts.src) == span_arr(ss.dst)))
      throw BoundaryMismatch("span vcomp: boundaries disagree");
    return span_map(ss.src, ts.dst, compose(ts.fn, ss.fn));
  };
  b.hcomp = [](const Cell& t, const Cell& s) {
    // t : f => f' on the outer hom, s : g => g' on the inner hom.
    const SpanMap& tm = span_map_of(t);
    const SpanMap& sm = span_map_of(s);
    SpanArr src = compose_spans(tm.src, sm.src);
    SpanArr dst = compose_spans(tm.dst, sm.dst);
    FinFn fn = FinFn::from_map(src.apex, dst.apex, [&](const Label& xy) {
      return Label::pair(sm.fn(xy.first()), tm.fn(xy.second()));
    });
    return span_map(src, dst, fn);
  };
  b.assoc = [](const Cell& f, const Cell& g, const Cell& h) {
    const SpanArr& fa = span_arr_of(f);
    const SpanArr& ga = span_arr_of(g);
    const SpanArr& ha = span_arr_of(h);
    SpanArr lhs = compose_spans(compose_spans(fa, ga), ha);
    SpanArr rhs = compose_spans(fa, compose_spans(ga, ha));
    // (u, (x, y)) -> ((u, x), y) over u in S_h, x in S_g, y in S_f.
    FinFn fwd = FinFn::from_map(lhs.apex, rhs.apex, [](const Label& e) {
      const Label& u = e.first();
      const Label& xy = e.second();
      return Label::pair(Label::pair(u, xy.first()), xy.second());
    });
    FinFn bwd = FinFn::from_map(rhs.apex, lhs.apex, [](const Label& e) {
      const Label& ux = e.first();
      const Label& y = e.second();
      return Label::pair(ux.first(), Label::pair(ux.second(), y));
    });
    return Iso2{span_map(lhs, rhs, fwd), span_map(rhs, lhs, bwd)};
  };
  b.lunit = [](const Cell& f) {
    const SpanArr& fa = span_arr_of(f);
    SpanArr src = compose_spans(id_span(fa.cod), fa);
    FinFn fwd = FinFn::from_map(src.apex, fa.apex, [](const Label& e) { return e.first(); });
    FinFn bwd = FinFn::from_map(fa.apex, src.apex,
                                [&](const Label& y) { return Label::pair(y, fa.right(y)); });
    return Iso2{span_map(src, fa, fwd), span_map(fa, src, bwd)};
  };
  b.runit = [](const Cell& f) {
    const SpanArr& fa = span_arr_of(f);
    SpanArr src = compose_spans(fa, id_span(fa.dom));
    FinFn fwd = FinFn::from_map(src.apex, fa.apex, [](const Label& e) { return e.second(); });
    FinFn bwd = FinFn::from_map(fa.apex, src.apex,
                                [&](const Label& y) { return Label::pair(fa.left(y), y); });
    return Iso2{span_map(src, fa, fwd), span_map(fa, src, bwd)};
  };
  b.objects = [](int cap) {
    std::vector<Cell> out;
    for (int n = 0; n <= cap; ++n) {
      Labels xs;
      for (int i = 0; i < n; ++i) xs.push_back(Label::atom("e" + std::to_string(i)));
      out.push_back(span_obj(FinSet(std::move(xs))));
    }
    return out;
  };
  b.ones = [](const Cell& a, const Cell& c, int cap) {
    const FinSet& A = span_obj_set(a);
    const FinSet& C = span_obj_set(c);
    std::vector<Cell> out;
    for (int n = 0; n <= 2 && static_cast<int>(out.size()) < cap; ++n) {
      Labels xs;
      for (int i = 0; i < n; ++i) xs.push_back(Label::atom("p" + std::to_string(i)));
      FinSet apex(std::move(xs));
      for (const FinFn& l : all_functions(apex, A)) {
        for (const FinFn& r : all_functions(apex, C)) {
          out.push_back(span_arr(SpanArr{A, C, apex, l, r}));
          if (static_cast<int>(out.size()) >= cap) break;
        }
        if (static_cast<int>(out.size()) >= cap) break;
      }
    }
    return out;
  };
  b.twos = [](const Cell& f, const Cell& g) {
    const SpanArr& fa = span_arr_of(f);
    const SpanArr& ga = span_arr_of(g);
    std::vector<Cell> out;
    if (!(fa.dom == ga.dom) || !(fa.cod == ga.cod)) return out;
    for (const FinFn& fn : all_functions(fa.apex, ga.apex))
      if (compose(ga.left, fn) == fa.left && compose(ga.right, fn) == fa.right)
        out.push_back(span_map(fa, ga, fn));
    return out;
  };
  b.inv2_hook = [](const Cell& t) -> std::optional<Cell> {
    const SpanMap& m = span_map_of(t);
    if (!m.fn.is_bijective()) return std::nullopt;
    return span_map(m.dst, m.src, m.fn.inverse());
  };
  return b;
}

} // namespace bk
