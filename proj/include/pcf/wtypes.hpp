#pragma once

// Indexed W-types over finite arities, with decidable equality.
//
// A spec (A, B, I, s, t) gives constructors A with decidable equality, a finite
// arity B(a) for each, the index t(a) a node built from a lives at, and the
// index s(a, b) its b-th child must live at. Equality of two trees at the same
// index is decided by comparing heads and, on a match, quantifying over the
// finite arity.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "pcf/error.hpp"
#include "pcf/syntax.hpp"

namespace pcf::w {

template <class Index, class Ctor>
struct WSpec {
  std::function<bool(const Index&, const Index&)> index_eq;
  std::function<bool(const Ctor&, const Ctor&)> ctor_eq;
  std::function<std::size_t(const Ctor&)> arity;
  std::function<Index(const Ctor&)> target;
  std::function<Index(const Ctor&, std::size_t)> source;
};

template <class Ctor>
struct WTree {
  Ctor head;
  // Ordered by the arity enumeration 0 .. arity(head) - 1.
  std::vector<WTree> children;
};

// Pi over a finite domain {0, ..., n-1}; vacuously true when n = 0.
template <class Pred>
bool decide_forall_finite(std::size_t n, Pred&& pred) {
  for (std::size_t b = 0; b < n; ++b) {
    if (!pred(b)) return false;
  }
  return true;
}

template <class Index, class Ctor>
struct Fiber {
  Ctor head;
  Index index;
};

template <class Index, class Ctor>
Fiber<Index, Ctor> get_fib(const WSpec<Index, Ctor>& spec, const WTree<Ctor>& w) {
  return {w.head, spec.target(w.head)};
}

template <class Ctor>
const std::vector<WTree<Ctor>>& subtrees(const WTree<Ctor>& w) {
  return w.children;
}

template <class Index, class Ctor>
WTree<Ctor> rebuild(const Fiber<Index, Ctor>& fib, std::vector<WTree<Ctor>> children) {
  return {fib.head, std::move(children)};
}

// Whether w is a well-formed tree at index i: right number of children, each
// at the index its position demands.
template <class Index, class Ctor>
bool valid_at(const WSpec<Index, Ctor>& spec, const WTree<Ctor>& w, const Index& i) {
  if (!spec.index_eq(spec.target(w.head), i)) return false;
  const std::size_t n = spec.arity(w.head);
  if (w.children.size() != n) return false;
  return decide_forall_finite(n, [&](std::size_t b) { return valid_at(spec, w.children[b], spec.source(w.head, b)); });
}

namespace detail {

template <class Index, class Ctor>
bool equal_at_same_index(const WSpec<Index, Ctor>& spec, const WTree<Ctor>& u, const WTree<Ctor>& v) {
  if (!spec.ctor_eq(u.head, v.head)) return false;
  // Equal heads put corresponding children at equal indices.
  return decide_forall_finite(spec.arity(u.head), [&](std::size_t b) {
    return equal_at_same_index(spec, u.children[b], v.children[b]);
  });
}

}  // namespace detail

// Throws IndexMismatch if u and v do not sit at the same index.
template <class Index, class Ctor>
bool w_equal(const WSpec<Index, Ctor>& spec, const WTree<Ctor>& u, const WTree<Ctor>& v) {
  if (!spec.index_eq(spec.target(u.head), spec.target(v.head))) {
    throw IndexMismatch("trees live at different indices");
  }
  return detail::equal_at_same_index(spec, u, v);
}

// PCF types over the unit index: a leaf for iota, a binary node for arrows.
struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
};
enum class TypeCtor { Iota, Arrow };

const WSpec<Unit, TypeCtor>& type_spec();
WTree<TypeCtor> encode_type(const PcfType& sigma);
// Throws InvalidTree on a malformed tree.
PcfType decode_type(const WTree<TypeCtor>& w);

// PCF terms indexed by PCF types. Constants are leaves at their own type;
// app(sigma, tau) has children at sigma -> tau and sigma and lives at tau.
struct TermCtor {
  TermKind tag;
  // k: (sigma, tau); s: (sigma, tau, rho); fix: (sigma); app: (sigma, tau).
  std::vector<PcfType> params;

  friend bool operator==(const TermCtor&, const TermCtor&) = default;
};

const WSpec<PcfType, TermCtor>& term_spec();
// Throws TypeMismatch when t is ill-typed.
WTree<TermCtor> encode_term(const Term& t);
// Throws InvalidTree on a malformed tree.
Term decode_term(const WTree<TermCtor>& w);

}  // namespace pcf::w
