#include "pcf/scott.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace pcf {

SemValue SemValue::base(PartialNat value) { return SemValue(value); }

SemValue SemValue::func(Function f) { return SemValue(std::make_shared<const Function>(std::move(f))); }

const PartialNat& SemValue::base_value() const {
  if (const auto* p = std::get_if<PartialNat>(&rep_)) return *p;
  throw WrongType("expected a base value, found a function");
}

SemValue SemValue::apply(const SemValue& arg) const {
  if (const auto* f = std::get_if<std::shared_ptr<const Function>>(&rep_)) return (**f)(arg);
  throw WrongType("cannot apply a base value");
}

SemValue bottom_value(const PcfType& sigma) {
  if (sigma.is_iota()) return SemValue::base(PartialNat::bot());
  SemValue result = bottom_value(sigma.codomain());
  return SemValue::func([result](const SemValue&) { return result; });
}

namespace {

// Same function, with results cached per iota argument at every curried
// position whose domain is iota.
SemValue memoize(const PcfType& sigma, SemValue v) {
  if (sigma.is_iota()) return v;
  PcfType tau = sigma.codomain();
  if (!sigma.domain().is_iota()) {
    return SemValue::func([v = std::move(v), tau](const SemValue& x) { return memoize(tau, v.apply(x)); });
  }
  struct Table {
    std::mutex mutex;
    std::map<std::optional<Natural>, SemValue> entries;
  };
  auto table = std::make_shared<Table>();
  return SemValue::func([v = std::move(v), tau, table](const SemValue& x) {
    const auto key = x.base_value().as_optional();
    {
      std::lock_guard lock(table->mutex);
      if (auto it = table->entries.find(key); it != table->entries.end()) return it->second;
    }
    SemValue result = memoize(tau, v.apply(x));
    std::lock_guard lock(table->mutex);
    return table->entries.emplace(key, std::move(result)).first->second;
  });
}

Natural predecessor(Natural n) { return n == 0 ? 0 : n - 1; }

}  // namespace

class Denoter::Interpreter {
 public:
  Interpreter(Fuel fuel, DenoteOptions options) : fuel_(fuel), options_(options) {}

  SemValue eval(const Term& t) {
    // Reduction traces share subterms heavily; evaluate each node once.
    if (auto it = cache_.find(t.identity()); it != cache_.end()) return it->second.second;
    SemValue v = t.is_app() ? eval(t.fun()).apply(eval(t.arg())) : constant(t);
    // The stored term keeps the node, and so the key, alive.
    cache_.emplace(t.identity(), std::pair{t, v});
    return v;
  }

  void remember(const Term& t, SemValue v) { cache_.emplace(t.identity(), std::pair{t, std::move(v)}); }

 private:
  SemValue constant(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Zero: return SemValue::base(unit(0));
      case TermKind::Succ:
        return SemValue::func([](const SemValue& x) {
          return SemValue::base(map([](Natural n) { return n + 1; }, x.base_value()));
        });
      case TermKind::Pred:
        return SemValue::func([](const SemValue& x) { return SemValue::base(map(predecessor, x.base_value())); });
      case TermKind::Ifz:
        return SemValue::func([](const SemValue& zero_case) {
          return SemValue::func([zero_case](const SemValue& succ_case) {
            return SemValue::func([zero_case, succ_case](const SemValue& scrutinee) {
              const PartialNat x = zero_case.base_value();
              const PartialNat y = succ_case.base_value();
              return SemValue::base(kleisli([&](Natural n) { return n == 0 ? x : y; }, scrutinee.base_value()));
            });
          });
        });
      case TermKind::K:
        return SemValue::func([](const SemValue& x) {
          return SemValue::func([x](const SemValue&) { return x; });
        });
      case TermKind::S:
        return SemValue::func([](const SemValue& f) {
          return SemValue::func([f](const SemValue& g) {
            return SemValue::func([f, g](const SemValue& x) { return f.apply(x).apply(g.apply(x)); });
          });
        });
      case TermKind::Fix: {
        const PcfType sigma = t.params()[0];
        const std::size_t iterations = fuel_.iterations;
        const bool memo = options_.memoize_fix;
        return SemValue::func([sigma, iterations, memo](const SemValue& f) {
          SemValue v = bottom_value(sigma);
          for (std::size_t i = 0; i < iterations; ++i) {
            v = f.apply(v);
            if (memo) v = memoize(sigma, std::move(v));
          }
          return v;
        });
      }
      case TermKind::App: break;
    }
    throw std::logic_error("constant() on an application");
  }

  Fuel fuel_;
  DenoteOptions options_;
  std::unordered_map<const void*, std::pair<Term, SemValue>> cache_;
};

Denoter::Denoter(Fuel fuel, DenoteOptions options) : interpreter_(std::make_unique<Interpreter>(fuel, options)) {}

Denoter::~Denoter() = default;

SemValue Denoter::denote(const Term& t) {
  type_of(t);
  return interpreter_->eval(t);
}

PartialNat Denoter::denote_base(const Term& t) {
  const PcfType ty = type_of(t);
  if (!ty.is_iota()) throw WrongType("expected a term of type iota, found " + to_sexpr(ty));
  return interpreter_->eval(t).base_value();
}

void Denoter::remember(const Term& t, SemValue v) { interpreter_->remember(t, std::move(v)); }

SemValue denote(const Term& t, Fuel fuel, DenoteOptions options) { return Denoter(fuel, options).denote(t); }

PartialNat denote_base(const Term& t, Fuel fuel, DenoteOptions options) {
  return Denoter(fuel, options).denote_base(t);
}

}  // namespace pcf
