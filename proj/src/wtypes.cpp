#include "pcf/wtypes.hpp"

namespace pcf::w {

const WSpec<Unit, TypeCtor>& type_spec() {
  static const WSpec<Unit, TypeCtor> spec{
      [](const Unit&, const Unit&) { return true; },
      [](const TypeCtor& a, const TypeCtor& b) { return a == b; },
      [](const TypeCtor& a) -> std::size_t { return a == TypeCtor::Iota ? 0 : 2; },
      [](const TypeCtor&) { return Unit{}; },
      [](const TypeCtor&, std::size_t) { return Unit{}; },
  };
  return spec;
}

WTree<TypeCtor> encode_type(const PcfType& sigma) {
  if (sigma.is_iota()) return {TypeCtor::Iota, {}};
  return {TypeCtor::Arrow, {encode_type(sigma.domain()), encode_type(sigma.codomain())}};
}

PcfType decode_type(const WTree<TypeCtor>& w) {
  if (!valid_at(type_spec(), w, Unit{})) throw InvalidTree("malformed type tree");
  if (w.head == TypeCtor::Iota) return PcfType::iota();
  return PcfType::arrow(decode_type(w.children[0]), decode_type(w.children[1]));
}

namespace {

PcfType ctor_target(const TermCtor& a) {
  const PcfType i = PcfType::iota();
  const auto& p = a.params;
  switch (a.tag) {
    case TermKind::Zero: return i;
    case TermKind::Succ:
    case TermKind::Pred: return arrows({i, i});
    case TermKind::Ifz: return arrows({i, i, i, i});
    case TermKind::K: return arrows({p.at(0), p.at(1), p.at(0)});
    case TermKind::S: return arrows({arrows({p.at(0), p.at(1), p.at(2)}), arrows({p.at(0), p.at(1)}), p.at(0), p.at(2)});
    case TermKind::Fix: return arrows({arrows({p.at(0), p.at(0)}), p.at(0)});
    case TermKind::App: return p.at(1);
  }
  throw InvalidTree("unknown constructor");
}

std::size_t expected_params(TermKind tag) {
  switch (tag) {
    case TermKind::K:
    case TermKind::App: return 2;
    case TermKind::S: return 3;
    case TermKind::Fix: return 1;
    default: return 0;
  }
}

// Indices of a tree whose head has the wrong number of type parameters are
// meaningless; report them as a malformed tree rather than going out of range.
bool well_formed_heads(const WTree<TermCtor>& w) {
  if (w.head.params.size() != expected_params(w.head.tag)) return false;
  for (const auto& c : w.children) {
    if (!well_formed_heads(c)) return false;
  }
  return true;
}

}  // namespace

const WSpec<PcfType, TermCtor>& term_spec() {
  static const WSpec<PcfType, TermCtor> spec{
      [](const PcfType& a, const PcfType& b) { return a == b; },
      [](const TermCtor& a, const TermCtor& b) { return a == b; },
      [](const TermCtor& a) -> std::size_t { return a.tag == TermKind::App ? 2 : 0; },
      ctor_target,
      [](const TermCtor& a, std::size_t b) {
        return b == 0 ? PcfType::arrow(a.params.at(0), a.params.at(1)) : a.params.at(0);
      },
  };
  return spec;
}

WTree<TermCtor> encode_term(const Term& t) {
  if (!t.is_app()) return {TermCtor{t.kind(), t.params()}, {}};
  const PcfType fun_type = type_of(t.fun());
  type_of(t);
  return {TermCtor{TermKind::App, {fun_type.domain(), fun_type.codomain()}},
          {encode_term(t.fun()), encode_term(t.arg())}};
}

namespace {

Term decode_valid(const WTree<TermCtor>& w) {
  const auto& p = w.head.params;
  switch (w.head.tag) {
    case TermKind::Zero: return Term::zero();
    case TermKind::Succ: return Term::succ();
    case TermKind::Pred: return Term::pred();
    case TermKind::Ifz: return Term::ifz();
    case TermKind::K: return Term::k(p[0], p[1]);
    case TermKind::S: return Term::s(p[0], p[1], p[2]);
    case TermKind::Fix: return Term::fix(p[0]);
    case TermKind::App: return Term::app(decode_valid(w.children[0]), decode_valid(w.children[1]));
  }
  throw InvalidTree("unknown constructor");
}

}  // namespace

Term decode_term(const WTree<TermCtor>& w) {
  if (!well_formed_heads(w) || !valid_at(term_spec(), w, ctor_target(w.head))) {
    throw InvalidTree("malformed term tree");
  }
  return decode_valid(w);
}

}  // namespace pcf::w
