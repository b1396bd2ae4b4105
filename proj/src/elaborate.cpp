#include <utility>
#include <vector>

#include "pcf/frontend.hpp"

namespace pcf::frontend {

namespace {

// Combinatory term that may still mention lambda-bound variables.
struct Open;
using OpenPtr = std::shared_ptr<const Open>;

struct OpenVar {
  std::string name;
};
struct OpenApp {
  OpenPtr fun;
  OpenPtr arg;
};

struct Open {
  std::variant<Term, OpenVar, OpenApp> node;
  PcfType type;
};

OpenPtr closed(Term t) {
  PcfType ty = type_of(t);
  return std::make_shared<const Open>(Open{std::move(t), std::move(ty)});
}

OpenPtr open_app(OpenPtr f, OpenPtr a) {
  PcfType ty = f->type.codomain();
  return std::make_shared<const Open>(Open{OpenApp{std::move(f), std::move(a)}, std::move(ty)});
}

bool free_in(const std::string& x, const Open& m) {
  if (const auto* v = std::get_if<OpenVar>(&m.node)) return v->name == x;
  if (const auto* a = std::get_if<OpenApp>(&m.node)) return free_in(x, *a->fun) || free_in(x, *a->arg);
  return false;
}

// [x:sigma] m
OpenPtr abstract(const std::string& x, const PcfType& sigma, const OpenPtr& m) {
  if (!free_in(x, *m)) return open_app(closed(Term::k(m->type, sigma)), m);
  if (std::holds_alternative<OpenVar>(m->node)) {
    // s k k at sigma
    const PcfType endo = PcfType::arrow(sigma, sigma);
    return closed(apply(Term::s(sigma, endo, sigma), {Term::k(sigma, endo), Term::k(sigma, sigma)}));
  }
  const auto& a = std::get<OpenApp>(m->node);
  const PcfType& tau = a.fun->type.domain();
  const PcfType& rho = a.fun->type.codomain();
  return open_app(open_app(closed(Term::s(sigma, tau, rho)), abstract(x, sigma, a.fun)), abstract(x, sigma, a.arg));
}

Term to_closed(const Open& m) {
  if (const auto* t = std::get_if<Term>(&m.node)) return *t;
  if (const auto* a = std::get_if<OpenApp>(&m.node)) return Term::app(to_closed(*a->fun), to_closed(*a->arg));
  throw std::logic_error("variable survived bracket abstraction");
}

using Env = std::vector<std::pair<std::string, PcfType>>;

OpenPtr translate(const SurfaceTerm& e, Env& env) {
  return std::visit(
      [&](const auto& x) -> OpenPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          for (auto it = env.rbegin(); it != env.rend(); ++it) {
            if (it->first == x.name) return std::make_shared<const Open>(Open{OpenVar{x.name}, it->second});
          }
          throw ElaborationError("unbound variable '" + x.name + "'");
        } else if constexpr (std::is_same_v<T, Lam>) {
          env.emplace_back(x.name, x.annot);
          OpenPtr body = translate(*x.body, env);
          env.pop_back();
          return abstract(x.name, x.annot, body);
        } else if constexpr (std::is_same_v<T, App>) {
          if (const auto* c = std::get_if<Constant>(&x.fun->node); c && c->keyword == Keyword::Fix) {
            OpenPtr f = translate(*x.arg, env);
            if (!f->type.is_arrow() || !(f->type.domain() == f->type.codomain())) {
              throw ElaborationError("fix needs an argument of type t -> t, found " + to_surface(f->type) + " in " +
                                     to_surface(e));
            }
            OpenPtr fix = closed(Term::fix(f->type.domain()));
            return open_app(std::move(fix), std::move(f));
          }
          OpenPtr f = translate(*x.fun, env);
          OpenPtr a = translate(*x.arg, env);
          if (!f->type.is_arrow()) {
            throw ElaborationError("cannot apply a term of type " + to_surface(f->type) + " in " + to_surface(e));
          }
          if (!(f->type.domain() == a->type)) {
            throw ElaborationError("argument has type " + to_surface(a->type) + " but " + to_surface(f->type.domain()) +
                                   " was expected in " + to_surface(e));
          }
          return open_app(std::move(f), std::move(a));
        } else if constexpr (std::is_same_v<T, Constant>) {
          switch (x.keyword) {
            case Keyword::Zero: return closed(Term::zero());
            case Keyword::Succ: return closed(Term::succ());
            case Keyword::Pred: return closed(Term::pred());
            case Keyword::Ifz: return closed(Term::ifz());
            case Keyword::Fix: break;
          }
          throw ElaborationError("cannot infer the type of an unapplied fix");
        } else {
          return closed(numeral(x.value));
        }
      },
      e.node);
}

// Plain simply-typed inference on the surface tree, independent of bracket
// abstraction.
PcfType infer_in(const SurfaceTerm& e, Env& env) {
  return std::visit(
      [&](const auto& x) -> PcfType {
        using T = std::decay_t<decltype(x)>;
        const PcfType i = PcfType::iota();
        if constexpr (std::is_same_v<T, Var>) {
          for (auto it = env.rbegin(); it != env.rend(); ++it) {
            if (it->first == x.name) return it->second;
          }
          throw ElaborationError("unbound variable '" + x.name + "'");
        } else if constexpr (std::is_same_v<T, Lam>) {
          env.emplace_back(x.name, x.annot);
          PcfType body = infer_in(*x.body, env);
          env.pop_back();
          return PcfType::arrow(x.annot, std::move(body));
        } else if constexpr (std::is_same_v<T, App>) {
          const PcfType a = infer_in(*x.arg, env);
          if (const auto* c = std::get_if<Constant>(&x.fun->node); c && c->keyword == Keyword::Fix) {
            if (!a.is_arrow() || !(a.domain() == a.codomain())) throw ElaborationError("ill-typed fix");
            return a.domain();
          }
          const PcfType f = infer_in(*x.fun, env);
          if (!f.is_arrow() || !(f.domain() == a)) throw ElaborationError("ill-typed application");
          return f.codomain();
        } else if constexpr (std::is_same_v<T, Constant>) {
          switch (x.keyword) {
            case Keyword::Zero: return i;
            case Keyword::Succ:
            case Keyword::Pred: return arrows({i, i});
            case Keyword::Ifz: return arrows({i, i, i, i});
            case Keyword::Fix: break;
          }
          throw ElaborationError("cannot infer the type of an unapplied fix");
        } else {
          return i;
        }
      },
      e.node);
}

}  // namespace

PcfType infer(const SurfaceTerm& e) {
  Env env;
  return infer_in(e, env);
}

Term elaborate(const SurfaceTerm& e) {
  Env env;
  const OpenPtr m = translate(e, env);
  Term t = to_closed(*m);
  if (!(type_of(t) == m->type)) throw std::logic_error("elaboration changed the type");
  return t;
}

SourceProgram compile_program(std::string text) {
  SurfacePtr surface = parse(text);
  Term term = elaborate(*surface);
  PcfType type = type_of(term);
  return SourceProgram{std::move(text), std::move(surface), std::move(term), std::move(type)};
}

}  // namespace pcf::frontend
