#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bicatkit/label.hpp"

namespace bk {

struct BoundaryMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IllFormed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite set of distinct labels. The element order is fixed at construction
// and is part of the value: two FinSets are equal iff they list the same
// labels in the same order.
class FinSet {
public:
  FinSet() = default;
  explicit FinSet(Labels elements);

  static FinSet of(std::initializer_list<const char*> atoms);

  size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Labels& elements() const { return elems_; }
  const Label& at(size_t i) const { return elems_.at(i); }

  bool contains(const Label& x) const { return index_of(x).has_value(); }
  std::optional<size_t> index_of(const Label& x) const;

  std::string str() const;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.elems_ == b.elems_; }

private:
  Labels elems_;
};

// A total function between finite sets, stored as an index table.
class FinFn {
public:
  FinFn() = default;
  FinFn(FinSet dom, FinSet cod, std::vector<size_t> table);

  static FinFn identity(const FinSet& a);
  static FinFn from_map(const FinSet& dom, const FinSet& cod,
                        const std::function<Label(const Label&)>& f);
  static FinFn constant(const FinSet& dom, const FinSet& cod, const Label& value);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<size_t>& table() const { return table_; }

  Label operator()(const Label& x) const;
  size_t map_index(size_t i) const { return table_.at(i); }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  FinFn inverse() const; // requires bijectivity

  std::string str() const;

  friend bool operator==(const FinFn& a, const FinFn& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

private:
  FinSet dom_, cod_;
  std::vector<size_t> table_;
};

// g(f(x)); requires cod(f) = dom(g).
FinFn compose(const FinFn& g, const FinFn& f);

struct PullbackResult {
  FinSet apex;  // pairs (x,y) with f(x)=g(y), lexicographic in source order
  FinFn left;   // apex -> dom(f)
  FinFn right;  // apex -> dom(g)
};

// Pullback of f : X -> B along g : Y -> B; requires cod(f) = cod(g).
PullbackResult pullback(const FinFn& f, const FinFn& g);

struct ProductResult {
  FinSet object; // labels "(a,b)"
  FinFn proj1, proj2;
};

struct CoproductResult {
  FinSet object; // labels "inl:a" / "inr:b"
  FinFn inj1, inj2;
};

ProductResult product(const FinSet& a, const FinSet& b);
CoproductResult coproduct(const FinSet& a, const FinSet& b);

// Copairing [f,g] : A+B -> C of f : A -> C and g : B -> C.
FinFn copair(const CoproductResult& ab, const FinFn& f, const FinFn& g);

// Pairing <f,g> : X -> A x B of f : X -> A and g : X -> B.
FinFn pairing(const ProductResult& ab, const FinFn& f, const FinFn& g);

// f x g : A x A' -> B x B' acting componentwise on pair labels.
FinFn product_fn(const FinFn& f, const FinFn& g);

// f + g : A + A' -> B + B' acting on tagged labels.
FinFn coproduct_fn(const FinFn& f, const FinFn& g);

// The mediating map into a pullback apex, from a cone (h,k) with f.h = g.k.
FinFn pullback_mediator(const PullbackResult& pb, const FinFn& h, const FinFn& k);

// All total functions dom -> cod in lexicographic table order.
std::vector<FinFn> all_functions(const FinSet& dom, const FinSet& cod);

} // namespace bk
