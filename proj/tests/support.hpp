#pragma once

// Generators and independent oracles shared by the unit suites and the
// acceptance runner.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcf/domain.hpp"
#include "pcf/frontend.hpp"
#include "pcf/generate.hpp"
#include "pcf/lifting.hpp"
#include "pcf/relations.hpp"
#include "pcf/syntax.hpp"

namespace testing {

using pcf::Natural;
using pcf::PartialNat;
using pcf::PcfType;
using pcf::Term;

inline const char* const kAddSource =
    "fix (\\add:nat -> nat -> nat. \\x:nat. \\y:nat. ifz y (succ (add (pred x) y)) x)";

inline Term compiled_add() { return pcf::frontend::compile_program(kAddSource).term; }

inline Term add_applied(Natural a, Natural b) {
  return pcf::apply(compiled_add(), {pcf::numeral(a), pcf::numeral(b)});
}

inline Term fix_succ() { return Term::app(Term::fix(PcfType::iota()), Term::succ()); }

inline PcfType nat_to_nat() { return PcfType::arrow(PcfType::iota(), PcfType::iota()); }

// Replaces one leaf, reached by a random path, with a different term of the
// same type: succ and pred swap, zero becomes one, anything else is
// regenerated (and may come out equal).
inline Term near_miss(const Term& t, pcf::TermGenerator& gen) {
  if (t.is_app()) {
    if (gen.rng()() % 2 == 0) return Term::app(near_miss(t.fun(), gen), t.arg());
    return Term::app(t.fun(), near_miss(t.arg(), gen));
  }
  switch (t.kind()) {
    case pcf::TermKind::Succ: return Term::pred();
    case pcf::TermKind::Pred: return Term::succ();
    case pcf::TermKind::Zero: return pcf::numeral(1);
    default: return gen.term(pcf::type_of(t), 3);
  }
}

// ---------------------------------------------------------------------------
// Finite relations

inline pcf::FiniteRelation random_single_valued(std::mt19937_64& rng, std::size_t max_nodes) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_nodes);
  pcf::FiniteRelation g;
  g.node_count = size_dist(rng);
  std::uniform_int_distribution<std::size_t> node(0, g.node_count - 1);
  std::bernoulli_distribution has_edge(0.8);
  for (std::size_t x = 0; x < g.node_count; ++x) {
    if (has_edge(rng)) g.edges.emplace_back(x, node(rng));
  }
  return g;
}

// y is in the k-th frontier of x: the set reached by exactly k steps, computed
// layer by layer without assuming single-valuedness.
inline std::vector<std::set<std::size_t>> frontiers(const pcf::FiniteRelation& g, std::size_t x, std::size_t k) {
  std::vector<std::set<std::size_t>> layers{{x}};
  for (std::size_t j = 0; j < k; ++j) {
    std::set<std::size_t> next;
    for (std::size_t u : layers.back()) {
      for (const auto& [s, d] : g.edges) {
        if (s == u) next.insert(d);
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

// ---------------------------------------------------------------------------
// Posets

// Random poset with a least element: random relation, force one row to true,
// reflexive-transitive closure, keep only antisymmetric results.
inline std::optional<pcf::domain::FiniteDcpoBot> random_dcpo(std::mt19937_64& rng, std::size_t size) {
  std::bernoulli_distribution edge(0.3);
  std::vector<std::vector<bool>> m(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) m[a][b] = a == b || edge(rng);
  }
  const std::size_t bottom = std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  for (std::size_t b = 0; b < size; ++b) m[bottom][b] = true;
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) m[a][b] = m[a][b] || (m[a][k] && m[k][b]);
    }
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (a != b && m[a][b] && m[b][a]) return std::nullopt;
    }
  }
  return pcf::domain::FiniteDcpoBot(pcf::domain::FinitePoset(std::move(m)), bottom);
}

inline std::vector<pcf::domain::FiniteDcpoBot> dcpo_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::vector<pcf::domain::FiniteDcpoBot> out;
  // Retry at a fixed size: rejecting across sizes would favour small posets.
  while (out.size() < count) {
    const std::size_t n = size(rng);
    std::optional<pcf::domain::FiniteDcpoBot> d;
    while (!(d = random_dcpo(rng, n))) {}
    out.push_back(std::move(*d));
  }
  return out;
}

// Every function table from a size-n carrier to a size-m carrier.
inline std::vector<std::vector<std::size_t>> all_tables(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(n, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = 0;
    while (i < n && ++t[i] == m) t[i++] = 0;
    if (i == n) return out;
  }
}

// ---------------------------------------------------------------------------
// Partial functions

// A random partial function on naturals, described by data so that failures
// can be reported: undefined on a residue class, affine elsewhere.
struct RandomPartialFn {
  Natural modulus;
  Natural undefined_residue;
  Natural scale;
  Natural offset;

  PartialNat operator()(Natural n) const {
    if (n % modulus == undefined_residue) return PartialNat::bot();
    return PartialNat::eta(scale * n + offset);
  }
};

inline RandomPartialFn random_partial_fn(std::mt19937_64& rng) {
  std::uniform_int_distribution<Natural> small(0, 6);
  const Natural modulus = small(rng) + 2;
  // A residue equal to the modulus never matches: a total function.
  const Natural residue = std::uniform_int_distribution<Natural>(0, modulus)(rng);
  return {modulus, residue, small(rng), small(rng)};
}

inline std::vector<PartialNat> partial_nats_below(Natural n) {
  std::vector<PartialNat> out{PartialNat::bot()};
  for (Natural i = 0; i < n; ++i) out.push_back(PartialNat::eta(i));
  return out;
}

// ---------------------------------------------------------------------------
// Surface programs and a reference evaluator

namespace fe = pcf::frontend;

// Random closed surface programs over nat and nat -> nat variables.
class SurfaceGenerator {
 public:
  explicit SurfaceGenerator(std::uint64_t seed) : rng_(seed) {}

  fe::SurfacePtr program() {
    scope_.clear();
    fresh_ = 0;
    return gen(PcfType::iota(), 5);
  }

 private:
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  fe::SurfacePtr numlit(Natural n) {
    fe::SurfacePtr e = fe::constant(fe::Keyword::Zero);
    for (Natural i = 0; i < n; ++i) e = fe::app(fe::constant(fe::Keyword::Succ), e);
    return e;
  }

  std::optional<fe::SurfacePtr> variable(const PcfType& t) {
    std::vector<std::string> names;
    for (const auto& [name, type] : scope_) {
      if (type == t) names.push_back(name);
    }
    if (names.empty()) return std::nullopt;
    return fe::var(names[below(static_cast<int>(names.size()))]);
  }

  fe::SurfacePtr lambda(const PcfType& t, int depth) {
    const std::string name = "v" + std::to_string(fresh_++);
    scope_.emplace_back(name, t.domain());
    fe::SurfacePtr body = gen(t.codomain(), depth - 1);
    scope_.pop_back();
    return fe::lam(name, t.domain(), body);
  }

  fe::SurfacePtr gen(const PcfType& t, int depth) {
    if (depth <= 0 || chance(0.15)) {
      if (auto v = variable(t); v && chance(0.7)) return *v;
      if (t.is_iota()) return numlit(static_cast<Natural>(below(4)));
      if (t == nat_to_nat() && chance(0.5)) return fe::constant(chance(0.5) ? fe::Keyword::Succ : fe::Keyword::Pred);
      return lambda(t, 1);
    }
    if (t.is_iota()) {
      switch (below(7)) {
        case 0: return fe::app(fe::constant(fe::Keyword::Succ), gen(t, depth - 1));
        case 1: return fe::app(fe::constant(fe::Keyword::Pred), gen(t, depth - 1));
        case 2:
          return fe::app(fe::app(fe::app(fe::constant(fe::Keyword::Ifz), gen(t, depth - 1)), gen(t, depth - 1)),
                         gen(t, depth - 1));
        case 3: {
          // A recursive nat -> nat function applied to an argument.
          const PcfType f = nat_to_nat();
          const std::string self = "r" + std::to_string(fresh_++);
          scope_.emplace_back(self, f);
          fe::SurfacePtr body = lambda(f, depth - 1);
          scope_.pop_back();
          return fe::app(fe::app(fe::constant(fe::Keyword::Fix), fe::lam(self, f, body)), gen(t, depth - 1));
        }
        case 4:
          if (chance(0.2)) {
            const std::string self = "r" + std::to_string(fresh_++);
            scope_.emplace_back(self, t);
            fe::SurfacePtr body = gen(t, depth - 1);
            scope_.pop_back();
            return fe::app(fe::constant(fe::Keyword::Fix), fe::lam(self, t, body));
          }
          [[fallthrough]];
        default: {
          const PcfType a = chance(0.75) ? PcfType::iota() : nat_to_nat();
          return fe::app(gen(PcfType::arrow(a, t), depth - 1), gen(a, depth - 1));
        }
      }
    }
    if (auto v = variable(t); v && chance(0.3)) return *v;
    return lambda(t, depth);
  }

  std::mt19937_64 rng_;
  std::vector<std::pair<std::string, PcfType>> scope_;
  int fresh_ = 0;
};

// Environment-passing evaluator on surface terms. fix f at fuel F is
// f^F(bottom), the same approximant the combinatory model uses, but nothing
// here goes through bracket abstraction.
class ReferenceEvaluator {
 public:
  struct Value;
  using ValuePtr = std::shared_ptr<const Value>;
  using Env = std::shared_ptr<const std::map<std::string, ValuePtr>>;
  struct Value {
    PartialNat nat = PartialNat::bot();
    std::function<ValuePtr(const ValuePtr&)> fn;
  };

  explicit ReferenceEvaluator(std::size_t fuel) : fuel_(fuel) {}

  PartialNat run(const fe::SurfaceTerm& e) {
    return eval(e, std::make_shared<const std::map<std::string, ValuePtr>>())->nat;
  }

 private:
  static ValuePtr nat(PartialNat p) { return std::make_shared<const Value>(Value{p, {}}); }
  static ValuePtr fn(std::function<ValuePtr(const ValuePtr&)> f) {
    return std::make_shared<const Value>(Value{PartialNat::bot(), std::move(f)});
  }

  static ValuePtr bottom(const PcfType& t) {
    if (t.is_iota()) return nat(PartialNat::bot());
    const PcfType cod = t.codomain();
    return fn([cod](const ValuePtr&) { return bottom(cod); });
  }

  ValuePtr eval(const fe::SurfaceTerm& e, const Env& env) {
    if (const auto* v = std::get_if<fe::Var>(&e.node)) return env->at(v->name);
    if (const auto* n = std::get_if<fe::NumLit>(&e.node)) return nat(PartialNat::eta(n->value));
    if (const auto* l = std::get_if<fe::Lam>(&e.node)) {
      const fe::SurfacePtr body = l->body;
      const std::string name = l->name;
      // A closure is a pure function of its argument. Caching calls on nat
      // arguments keeps nested fix approximants from recomputing each other.
      auto cache = std::make_shared<std::map<std::optional<Natural>, ValuePtr>>();
      return fn([this, body, name, env, cache](const ValuePtr& x) {
        std::optional<std::optional<Natural>> key;
        if (!x->fn) key = x->nat.is_defined() ? std::optional<Natural>(x->nat.value()) : std::nullopt;
        if (key) {
          if (auto hit = cache->find(*key); hit != cache->end()) return hit->second;
        }
        auto extended = std::make_shared<std::map<std::string, ValuePtr>>(*env);
        (*extended)[name] = x;
        ValuePtr result = eval(*body, extended);
        if (key) cache->emplace(*key, result);
        return result;
      });
    }
    if (const auto* c = std::get_if<fe::Constant>(&e.node)) {
      switch (c->keyword) {
        case fe::Keyword::Zero: return nat(PartialNat::eta(0));
        case fe::Keyword::Succ:
          return fn([](const ValuePtr& x) {
            return nat(x->nat.is_defined() ? PartialNat::eta(x->nat.value() + 1) : PartialNat::bot());
          });
        case fe::Keyword::Pred:
          return fn([](const ValuePtr& x) {
            if (!x->nat.is_defined()) return nat(PartialNat::bot());
            return nat(PartialNat::eta(x->nat.value() == 0 ? 0 : x->nat.value() - 1));
          });
        case fe::Keyword::Ifz:
          return fn([](const ValuePtr& z) {
            return fn([z](const ValuePtr& s) {
              return fn([z, s](const ValuePtr& r) {
                if (!r->nat.is_defined()) return nat(PartialNat::bot());
                return r->nat.value() == 0 ? z : s;
              });
            });
          });
        case fe::Keyword::Fix: break;
      }
      throw std::logic_error("bare fix in reference evaluator");
    }
    const auto& a = std::get<fe::App>(e.node);
    if (const auto* c = std::get_if<fe::Constant>(&a.fun->node); c && c->keyword == fe::Keyword::Fix) {
      const auto* self = std::get_if<fe::Lam>(&a.arg->node);
      if (self == nullptr) throw std::logic_error("reference evaluator expects fix (\\f:T. ...)");
      const ValuePtr f = eval(*a.arg, env);
      ValuePtr x = bottom(self->annot);
      for (std::size_t i = 0; i < fuel_; ++i) x = f->fn(x);
      return x;
    }
    const ValuePtr f = eval(*a.fun, env);
    return f->fn(eval(*a.arg, env));
  }

  std::size_t fuel_;
};

}  // namespace testing
