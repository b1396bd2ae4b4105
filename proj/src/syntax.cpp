#include "pcf/syntax.hpp"

#include <limits>
#include <utility>

namespace pcf {

struct PcfType::Node {
  Kind kind;
  std::optional<PcfType> domain;
  std::optional<PcfType> codomain;
  std::size_t depth;
};

PcfType PcfType::iota() {
  static const PcfType instance{std::make_shared<const Node>(Node{Kind::Iota, {}, {}, 0})};
  return instance;
}

PcfType PcfType::arrow(PcfType domain, PcfType codomain) {
  const std::size_t depth = 1 + std::max(domain.depth(), codomain.depth());
  return PcfType{std::make_shared<const Node>(
      Node{Kind::Arrow, std::move(domain), std::move(codomain), depth})};
}

PcfType::Kind PcfType::kind() const { return node_->kind; }
const PcfType& PcfType::domain() const { return *node_->domain; }
const PcfType& PcfType::codomain() const { return *node_->codomain; }
std::size_t PcfType::depth() const { return node_->depth; }

bool operator==(const PcfType& a, const PcfType& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_iota()) return true;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

PcfType arrows(std::initializer_list<PcfType> types) {
  std::vector<PcfType> list(types);
  PcfType result = list.back();
  for (std::size_t i = list.size() - 1; i-- > 0;) result = PcfType::arrow(list[i], result);
  return result;
}

struct Term::Node {
  TermKind kind;
  std::vector<PcfType> params;
  std::optional<Term> fun;
  std::optional<Term> arg;
  std::optional<Natural> numeral;
  std::optional<PcfType> type;
  std::size_t size;

  // Releasing a long spine recursively would exhaust the stack, so children
  // that are about to die are detached onto a worklist first.
  ~Node() {
    std::vector<std::shared_ptr<const Node>> pending;
    auto detach = [&](std::optional<Term>& t) {
      if (t && t->node_.use_count() == 1) pending.push_back(std::move(t->node_));
    };
    detach(fun);
    detach(arg);
    while (!pending.empty()) {
      std::shared_ptr<const Node> n = std::move(pending.back());
      pending.pop_back();
      // Nodes are allocated non-const, so this is a plain mutable access.
      auto& m = const_cast<Node&>(*n);
      detach(m.fun);
      detach(m.arg);
    }
  }
};

namespace {

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max()
                                                         : a + b;
}

PcfType constant_type(TermKind kind, const std::vector<PcfType>& p) {
  const PcfType i = PcfType::iota();
  switch (kind) {
    case TermKind::Zero: return i;
    case TermKind::Succ:
    case TermKind::Pred: return arrows({i, i});
    case TermKind::Ifz: return arrows({i, i, i, i});
    case TermKind::K: return arrows({p[0], p[1], p[0]});
    case TermKind::S:
      return arrows({arrows({p[0], p[1], p[2]}), arrows({p[0], p[1]}), p[0], p[2]});
    case TermKind::Fix: return arrows({arrows({p[0], p[0]}), p[0]});
    case TermKind::App: break;
  }
  throw std::logic_error("constant_type called on an application");
}

}  // namespace

Term Term::zero() {
  static const Term instance{std::make_shared<Node>(
      Node{TermKind::Zero, {}, {}, {}, Natural{0}, PcfType::iota(), 1})};
  return instance;
}

Term Term::succ() {
  static const Term instance{std::make_shared<Node>(
      Node{TermKind::Succ, {}, {}, {}, {}, constant_type(TermKind::Succ, {}), 1})};
  return instance;
}

Term Term::pred() {
  static const Term instance{std::make_shared<Node>(
      Node{TermKind::Pred, {}, {}, {}, {}, constant_type(TermKind::Pred, {}), 1})};
  return instance;
}

Term Term::ifz() {
  static const Term instance{std::make_shared<Node>(
      Node{TermKind::Ifz, {}, {}, {}, {}, constant_type(TermKind::Ifz, {}), 1})};
  return instance;
}

Term Term::k(PcfType sigma, PcfType tau) {
  std::vector<PcfType> p{std::move(sigma), std::move(tau)};
  PcfType ty = constant_type(TermKind::K, p);
  return Term{std::make_shared<Node>(Node{TermKind::K, std::move(p), {}, {}, {}, std::move(ty), 1})};
}

Term Term::s(PcfType sigma, PcfType tau, PcfType rho) {
  std::vector<PcfType> p{std::move(sigma), std::move(tau), std::move(rho)};
  PcfType ty = constant_type(TermKind::S, p);
  return Term{std::make_shared<Node>(Node{TermKind::S, std::move(p), {}, {}, {}, std::move(ty), 1})};
}

Term Term::fix(PcfType sigma) {
  std::vector<PcfType> p{std::move(sigma)};
  PcfType ty = constant_type(TermKind::Fix, p);
  return Term{std::make_shared<Node>(Node{TermKind::Fix, std::move(p), {}, {}, {}, std::move(ty), 1})};
}

Term Term::app(Term fun, Term arg) {
  std::optional<Natural> num;
  if (fun.kind() == TermKind::Succ) {
    if (auto inner = arg.numeral_value()) num = *inner + 1;
  }
  std::optional<PcfType> type;
  const auto& ft = fun.cached_type();
  const auto& at = arg.cached_type();
  if (ft && at && ft->is_arrow() && ft->domain() == *at) type = ft->codomain();
  const std::size_t size = saturating_add(saturating_add(fun.size(), arg.size()), 1);
  return Term{std::make_shared<Node>(
      Node{TermKind::App, {}, std::move(fun), std::move(arg), num, std::move(type), size})};
}

TermKind Term::kind() const { return node_->kind; }
const Term& Term::fun() const { return *node_->fun; }
const Term& Term::arg() const { return *node_->arg; }
const std::vector<PcfType>& Term::params() const { return node_->params; }
std::optional<Natural> Term::numeral_value() const { return node_->numeral; }
const std::optional<PcfType>& Term::cached_type() const { return node_->type; }
std::size_t Term::size() const { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  // Iterative so that long succ/app spines do not exhaust the stack.
  std::vector<std::pair<const Term*, const Term*>> work{{&a, &b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x->node_ == y->node_) continue;
    if (x->kind() != y->kind()) return false;
    if (x->numeral_value() != y->numeral_value()) return false;
    if (x->numeral_value()) continue;
    if (x->is_app()) {
      work.emplace_back(&x->fun(), &y->fun());
      work.emplace_back(&x->arg(), &y->arg());
    } else if (x->params() != y->params()) {
      return false;
    }
  }
  return true;
}

Term apply(Term fun, std::initializer_list<Term> args) {
  for (const Term& a : args) fun = Term::app(std::move(fun), a);
  return fun;
}

TypeMismatch::TypeMismatch(Term subterm, std::optional<PcfType> expected, PcfType actual)
    : TypeError("type mismatch in " + to_sexpr(subterm) + ": expected " +
            (expected ? to_sexpr(*expected) : std::string("an arrow type")) + ", found " +
            to_sexpr(actual)),
      subterm_(std::move(subterm)),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

PcfType type_of(const Term& t) {
  if (t.cached_type()) return *t.cached_type();
  // Walk to the innermost ill-typed application.
  const Term* cur = &t;
  while (true) {
    if (!cur->fun().cached_type()) {
      cur = &cur->fun();
    } else if (!cur->arg().cached_type()) {
      cur = &cur->arg();
    } else {
      const PcfType& ft = *cur->fun().cached_type();
      if (!ft.is_arrow()) throw TypeMismatch(*cur, std::nullopt, ft);
      throw TypeMismatch(*cur, ft.domain(), *cur->arg().cached_type());
    }
  }
}

Term numeral(Natural n) {
  Term t = Term::zero();
  const Term s = Term::succ();
  for (Natural i = 0; i < n; ++i) t = Term::app(s, std::move(t));
  return t;
}

std::optional<Natural> as_numeral(const Term& t) { return t.numeral_value(); }

}  // namespace pcf
