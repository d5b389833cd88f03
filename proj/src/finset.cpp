#include "bicatkit/finset.hpp"

#include <algorithm>

namespace bk {

FinSet::FinSet(Labels elements) : elems_(std::move(elements)) {
  for (size_t i = 0; i < elems_.size(); ++i)
    for (size_t j = i + 1; j < elems_.size(); ++j)
      if (elems_[i] == elems_[j])
        throw IllFormed("FinSet: duplicate label " + elems_[i].str());
}

FinSet FinSet::of(std::initializer_list<const char*> atoms) {
  Labels xs;
  for (const char* a : atoms) xs.push_back(Label::atom(a));
  return FinSet(std::move(xs));
}

std::optional<size_t> FinSet::index_of(const Label& x) const {
  for (size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == x) return i;
  return std::nullopt;
}

std::string FinSet::str() const {
  std::string out = "{";
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += elems_[i].str();
  }
  return out + "}";
}

FinFn::FinFn(FinSet dom, FinSet cod, std::vector<size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size())
    throw IllFormed("FinFn: table size does not match domain");
  for (size_t i : table_)
    if (i >= cod_.size()) throw IllFormed("FinFn: image index out of range");
}

FinFn FinFn::identity(const FinSet& a) {
  std::vector<size_t> t(a.size());
  for (size_t i = 0; i < a.size(); ++i) t[i] = i;
  return FinFn(a, a, std::move(t));
}

FinFn FinFn::from_map(const FinSet& dom, const FinSet& cod,
                      const std::function<Label(const Label&)>& f) {
  std::vector<size_t> t;
  t.reserve(dom.size());
  for (const Label& x : dom.elements()) {
    Label y = f(x);
    auto j = cod.index_of(y);
    if (!j) throw IllFormed("FinFn: image " + y.str() + " not in codomain " + cod.str());
    t.push_back(*j);
  }
  return FinFn(dom, cod, std::move(t));
}

FinFn FinFn::constant(const FinSet& dom, const FinSet& cod, const Label& value) {
  auto j = cod.index_of(value);
  if (!j) throw IllFormed("FinFn: constant value not in codomain");
  return FinFn(dom, cod, std::vector<size_t>(dom.size(), *j));
}

Label FinFn::operator()(const Label& x) const {
  auto i = dom_.index_of(x);
  if (!i) throw BoundaryMismatch("FinFn: " + x.str() + " not in domain " + dom_.str());
  return cod_.at(table_[*i]);
}

bool FinFn::is_injective() const {
  std::vector<bool> seen(cod_.size(), false);
  for (size_t i : table_) {
    if (seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

bool FinFn::is_surjective() const {
  std::vector<bool> seen(cod_.size(), false);
  for (size_t i : table_) seen[i] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

FinFn FinFn::inverse() const {
  if (!is_bijective()) throw IllFormed("FinFn::inverse: not a bijection");
  std::vector<size_t> t(cod_.size());
  for (size_t i = 0; i < table_.size(); ++i) t[table_[i]] = i;
  return FinFn(cod_, dom_, std::move(t));
}

std::string FinFn::str() const {
  std::string out = dom_.str() + "->" + cod_.str() + "[";
  for (size_t i = 0; i < table_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(table_[i]);
  }
  return out + "]";
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (!(f.cod() == g.dom()))
    throw BoundaryMismatch("compose: cod(f) != dom(g): " + f.cod().str() + " vs " + g.dom().str());
  std::vector<size_t> t;
  t.reserve(f.dom().size());
  for (size_t i : f.table()) t.push_back(g.table()[i]);
  return FinFn(f.dom(), g.cod(), std::move(t));
}

PullbackResult pullback(const FinFn& f, const FinFn& g) {
  if (!(f.cod() == g.cod()))
    throw BoundaryMismatch("pullback: cod(f) != cod(g)");
  Labels apex;
  std::vector<size_t> lt, rt;
  for (size_t i = 0; i < f.dom().size(); ++i)
    for (size_t j = 0; j < g.dom().size(); ++j)
      if (f.table()[i] == g.table()[j]) {
        apex.push_back(Label::pair(f.dom().at(i), g.dom().at(j)));
        lt.push_back(i);
        rt.push_back(j);
      }
  FinSet a(std::move(apex));
  return PullbackResult{a, FinFn(a, f.dom(), std::move(lt)), FinFn(a, g.dom(), std::move(rt))};
}

ProductResult product(const FinSet& a, const FinSet& b) {
  Labels xs;
  std::vector<size_t> p1, p2;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) {
      xs.push_back(Label::pair(a.at(i), b.at(j)));
      p1.push_back(i);
      p2.push_back(j);
    }
  FinSet ab(std::move(xs));
  return ProductResult{ab, FinFn(ab, a, std::move(p1)), FinFn(ab, b, std::move(p2))};
}

CoproductResult coproduct(const FinSet& a, const FinSet& b) {
  Labels xs;
  for (const Label& x : a.elements()) xs.push_back(Label::tag("inl", x));
  for (const Label& y : b.elements()) xs.push_back(Label::tag("inr", y));
  FinSet ab(std::move(xs));
  std::vector<size_t> i1(a.size()), i2(b.size());
  for (size_t i = 0; i < a.size(); ++i) i1[i] = i;
  for (size_t j = 0; j < b.size(); ++j) i2[j] = a.size() + j;
  return CoproductResult{ab, FinFn(a, ab, std::move(i1)), FinFn(b, ab, std::move(i2))};
}

FinFn copair(const CoproductResult& ab, const FinFn& f, const FinFn& g) {
  if (!(f.cod() == g.cod())) throw BoundaryMismatch("copair: codomains differ");
  std::vector<size_t> t;
  t.reserve(ab.object.size());
  for (size_t i = 0; i < f.dom().size(); ++i) t.push_back(f.table()[i]);
  for (size_t j = 0; j < g.dom().size(); ++j) t.push_back(g.table()[j]);
  return FinFn(ab.object, f.cod(), std::move(t));
}

FinFn pairing(const ProductResult& ab, const FinFn& f, const FinFn& g) {
  if (!(f.dom() == g.dom())) throw BoundaryMismatch("pairing: domains differ");
  return FinFn::from_map(f.dom(), ab.object, [&](const Label& x) {
    return Label::pair(f(x), g(x));
  });
}

FinFn product_fn(const FinFn& f, const FinFn& g) {
  ProductResult d = product(f.dom(), g.dom());
  ProductResult c = product(f.cod(), g.cod());
  return FinFn::from_map(d.object, c.object, [&](const Label& x) {
    return Label::pair(f(x.first()), g(x.second()));
  });
}

FinFn coproduct_fn(const FinFn& f, const FinFn& g) {
  CoproductResult d = coproduct(f.dom(), g.dom());
  CoproductResult c = coproduct(f.cod(), g.cod());
  return FinFn::from_map(d.object, c.object, [&](const Label& x) {
    if (x.text() == "inl") return Label::tag("inl", f(x.inner()));
    return Label::tag("inr", g(x.inner()));
  });
}

FinFn pullback_mediator(const PullbackResult& pb, const FinFn& h, const FinFn& k) {
  if (!(h.dom() == k.dom())) throw BoundaryMismatch("pullback_mediator: cone legs disagree");
  return FinFn::from_map(h.dom(), pb.apex, [&](const Label& x) {
    return Label::pair(h(x), k(x));
  });
}

std::vector<FinFn> all_functions(const FinSet& dom, const FinSet& cod) {
  std::vector<FinFn> out;
  if (dom.empty()) {
    out.push_back(FinFn(dom, cod, {}));
    return out;
  }
  if (cod.empty()) return out; // no total functions into the empty set
  std::vector<size_t> t(dom.size(), 0);
  while (true) {
    out.push_back(FinFn(dom, cod, t));
    size_t i = 0;
    while (i < t.size()) {
      if (++t[i] < cod.size()) break;
      t[i] = 0;
      ++i;
    }
    if (i == t.size()) break;
  }
  return out;
}

} // namespace bk
