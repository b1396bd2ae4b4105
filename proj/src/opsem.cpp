#include "pcf/opsem.hpp"

#include <utility>

namespace pcf {

namespace {

bool is_ifz2(const Term& f) {
  return f.is_app() && f.fun().is_app() && f.fun().fun().kind() == TermKind::Ifz;
}

// Axiom instances at the root of t (the seven rules without premises).
StepResult contract(const Term& t) {
  if (!t.is_app()) return std::nullopt;
  const Term& f = t.fun();
  const Term& a = t.arg();
  switch (f.kind()) {
    case TermKind::Pred:
      if (auto n = as_numeral(a)) {
        if (*n == 0) return Step{Term::zero(), RuleName::PredZero};
        return Step{a.arg(), RuleName::PredSucc};
      }
      return std::nullopt;
    case TermKind::Fix: return Step{Term::app(a, t), RuleName::FixRule};
    case TermKind::App: break;
    default: return std::nullopt;
  }
  const Term& g = f.fun();
  const Term& b = f.arg();
  if (g.kind() == TermKind::K) return Step{b, RuleName::KRule};
  if (!g.is_app()) return std::nullopt;
  const Term& h = g.fun();
  const Term& c = g.arg();
  if (h.kind() == TermKind::Ifz) {
    if (auto n = as_numeral(a)) return *n == 0 ? Step{c, RuleName::IfzZero} : Step{b, RuleName::IfzSucc};
    return std::nullopt;
  }
  if (h.kind() == TermKind::S) {
    return Step{Term::app(Term::app(c, a), Term::app(b, a)), RuleName::SRule};
  }
  return std::nullopt;
}

// The unique position a congruence rule could reduce under, if any.
std::optional<std::pair<Frame, Term>> decompose(const Term& t) {
  if (!t.is_app() || t.numeral_value()) return std::nullopt;
  const Term& f = t.fun();
  const Term& a = t.arg();
  if (f.kind() == TermKind::Succ) return std::pair{Frame{RuleName::SuccArg, f}, a};
  if (f.kind() == TermKind::Pred) return std::pair{Frame{RuleName::PredArg, f}, a};
  if (is_ifz2(f)) return std::pair{Frame{RuleName::IfzScrut, f}, a};
  if (f.is_app()) return std::pair{Frame{RuleName::AppLeft, a}, f};
  return std::nullopt;
}

}  // namespace

Term plug(const Frame& frame, Term focus) {
  if (frame.rule == RuleName::AppLeft) return Term::app(std::move(focus), frame.other);
  return Term::app(frame.other, std::move(focus));
}

std::string_view rule_name(RuleName rule) {
  switch (rule) {
    case RuleName::PredZero: return "PredZero";
    case RuleName::PredSucc: return "PredSucc";
    case RuleName::IfzZero: return "IfzZero";
    case RuleName::IfzSucc: return "IfzSucc";
    case RuleName::KRule: return "KRule";
    case RuleName::SRule: return "SRule";
    case RuleName::FixRule: return "FixRule";
    case RuleName::AppLeft: return "AppLeft";
    case RuleName::SuccArg: return "SuccArg";
    case RuleName::PredArg: return "PredArg";
    case RuleName::IfzScrut: return "IfzScrut";
  }
  return "?";
}

StepResult step(const Term& t) {
  if (auto r = contract(t)) return r;
  if (!t.is_app()) return std::nullopt;
  const Term& f = t.fun();
  const Term& a = t.arg();
  if (f.kind() == TermKind::Succ) {
    if (auto r = step(a)) return Step{Term::app(f, std::move(r->next)), RuleName::SuccArg};
    return std::nullopt;
  }
  if (f.kind() == TermKind::Pred) {
    if (auto r = step(a)) return Step{Term::app(f, std::move(r->next)), RuleName::PredArg};
    return std::nullopt;
  }
  if (is_ifz2(f)) {
    if (auto r = step(a)) return Step{Term::app(f, std::move(r->next)), RuleName::IfzScrut};
    return std::nullopt;
  }
  if (auto r = step(f)) return Step{Term::app(std::move(r->next), a), RuleName::AppLeft};
  return std::nullopt;
}

std::vector<Term> successors(const Term& t) {
  std::vector<Term> out;
  if (!t.is_app()) return out;
  const Term& f = t.fun();
  const Term& a = t.arg();
  const auto n = as_numeral(a);

  // pred 0 ~> 0
  if (f.kind() == TermKind::Pred && n && *n == 0) out.push_back(Term::zero());
  // pred (n+1) ~> n
  if (f.kind() == TermKind::Pred && n && *n > 0) out.push_back(a.arg());
  // ifz s t 0 ~> s
  if (is_ifz2(f) && n && *n == 0) out.push_back(f.fun().arg());
  // ifz s t (n+1) ~> t
  if (is_ifz2(f) && n && *n > 0) out.push_back(f.arg());
  // k s t ~> s
  if (f.is_app() && f.fun().kind() == TermKind::K) out.push_back(f.arg());
  // s f g t ~> f t (g t)
  if (f.is_app() && f.fun().is_app() && f.fun().fun().kind() == TermKind::S) {
    out.push_back(Term::app(Term::app(f.fun().arg(), a), Term::app(f.arg(), a)));
  }
  // fix f ~> f (fix f)
  if (f.kind() == TermKind::Fix) out.push_back(Term::app(a, Term::app(f, a)));
  // f ~> g  =>  f t ~> g t
  for (Term& g : successors(f)) out.push_back(Term::app(std::move(g), a));
  // s ~> t  =>  succ s ~> succ t
  if (f.kind() == TermKind::Succ) {
    for (Term& u : successors(a)) out.push_back(Term::app(f, std::move(u)));
  }
  // s ~> t  =>  pred s ~> pred t
  if (f.kind() == TermKind::Pred) {
    for (Term& u : successors(a)) out.push_back(Term::app(f, std::move(u)));
  }
  // r ~> r'  =>  ifz s t r ~> ifz s t r'
  if (is_ifz2(f)) {
    for (Term& u : successors(a)) out.push_back(Term::app(f, std::move(u)));
  }
  return out;
}

Reduction reduce(const Term& t, std::size_t max_steps) {
  Reduction result{t, {}, false};
  while (auto s = step(result.final)) {
    if (result.trace.size() == max_steps) {
      result.exhausted = true;
      break;
    }
    result.final = s->next;
    result.trace.push_back(std::move(*s));
  }
  return result;
}

Normalization walk(const Term& t, std::size_t max_steps, ZipperObserver& observer) {
  Term focus = t;
  std::vector<Frame> context;
  std::size_t steps = 0;
  bool exhausted = false;
  // While climbing: the frame just plugged, whose hole is normal.
  bool climbing = false;
  RuleName came_from = RuleName::AppLeft;
  auto climb = [&] {
    focus = plug(context.back(), std::move(focus));
    context.pop_back();
    observer.climbed(focus);
  };
  while (true) {
    if (auto r = contract(focus)) {
      if (steps == max_steps) {
        exhausted = true;
        break;
      }
      observer.contracted(focus, *r);
      focus = std::move(r->next);
      ++steps;
      climbing = false;
      continue;
    }
    // After an AppLeft hole normalizes, the head may have become succ, pred or
    // ifz s t, which opens the argument position. Otherwise keep climbing.
    if (auto d = decompose(focus)) {
      if (!climbing || (came_from == RuleName::AppLeft && d->first.rule != RuleName::AppLeft)) {
        context.push_back(std::move(d->first));
        focus = std::move(d->second);
        observer.descended(context.back(), focus);
        climbing = false;
        continue;
      }
    }
    if (context.empty()) break;
    climbing = true;
    came_from = context.back().rule;
    climb();
  }
  while (!context.empty()) climb();
  return Normalization{std::move(focus), steps, exhausted};
}

Normalization normalize(const Term& t, std::size_t max_steps) {
  ZipperObserver silent;
  return walk(t, max_steps, silent);
}

std::optional<Natural> reaches_numeral(const Term& t, std::size_t k) {
  const PcfType ty = type_of(t);
  if (!ty.is_iota()) throw WrongType("expected a term of type iota, found " + to_sexpr(ty));
  return as_numeral(normalize(t, k).final);
}

}  // namespace pcf
