#pragma once

#include "bicatkit/bicategory.hpp"
#include "bicatkit/finset.hpp"

namespace bk {

// Spans of finite sets: 1-cells A <- S -> B, 2-cells apex maps commuting with
// both legs. Composition is by pullback, so associativity and identity hold
// only up to the canonical apex isomorphisms.
struct SpanArr {
  FinSet dom, cod;
  FinSet apex;
  FinFn left;  // apex -> dom
  FinFn right; // apex -> cod
};

struct SpanMap {
  SpanArr src, dst;
  FinFn fn; // src.apex -> dst.apex
};

Cell span_obj(const FinSet& s);
Cell span_arr(SpanArr a);
Cell span_map(const SpanArr& src, const SpanArr& dst, const FinFn& fn);

const FinSet& span_obj_set(const Cell& c);
const SpanArr& span_arr_of(const Cell& c);
const SpanMap& span_map_of(const Cell& c);

// The span A <- A -> B with identity left leg and right leg f.
SpanArr span_of_fn(const FinFn& f);
// The reversed span B <- A -> A of the same function.
SpanArr span_of_fn_rev(const FinFn& f);
SpanArr reverse_span(const SpanArr& a);

// The unique 2-cell src => dst commuting with both legs, if there is exactly
// one choice elementwise; throws IllFormed otherwise. Sound for spans whose
// legs are jointly injective (e.g. composites of function spans).
Cell span_unique_mediator(const SpanArr& src, const SpanArr& dst);
Iso2 span_unique_mediator_iso(const SpanArr& src, const SpanArr& dst);

SpanArr span_compose(const SpanArr& f, const SpanArr& g); // f after g
SpanArr span_identity(const FinSet& a);

Bicat span_bicat();

} // namespace bk
