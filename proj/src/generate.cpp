#include "pcf/generate.hpp"

#include <utility>
#include <vector>

namespace pcf {

namespace {

// Constants whose type is exactly `target`.
std::vector<Term> matching_constants(const PcfType& target) {
  std::vector<Term> out;
  const PcfType i = PcfType::iota();
  if (target == arrows({i, i})) {
    out.push_back(Term::succ());
    out.push_back(Term::pred());
  }
  if (target == arrows({i, i, i, i})) out.push_back(Term::ifz());
  if (!target.is_arrow()) return out;

  // k_{a,b} : a -> b -> a
  const PcfType& a = target.domain();
  const PcfType& rest = target.codomain();
  if (rest.is_arrow() && rest.codomain() == a) out.push_back(Term::k(a, rest.domain()));

  // fix_a : (a -> a) -> a
  if (a.is_arrow() && a.domain() == a.codomain() && rest == a.domain()) out.push_back(Term::fix(rest));

  // s_{x,y,z} : (x -> y -> z) -> (x -> y) -> x -> z
  if (a.is_arrow() && a.codomain().is_arrow()) {
    const PcfType& x = a.domain();
    const PcfType& y = a.codomain().domain();
    const PcfType& z = a.codomain().codomain();
    if (Term::s(x, y, z).cached_type() == target) out.push_back(Term::s(x, y, z));
  }
  return out;
}

}  // namespace

TermGenerator::TermGenerator(std::uint64_t seed, GeneratorOptions options)
    : rng_(seed), options_(options) {}

bool TermGenerator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

int TermGenerator::below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

PcfType TermGenerator::type() { return type(options_.max_type_depth); }

PcfType TermGenerator::type(int max_depth) {
  if (max_depth <= 0 || chance(0.4)) return PcfType::iota();
  return PcfType::arrow(type(max_depth - 1), type(max_depth - 1));
}

PcfType TermGenerator::small_type() {
  const PcfType i = PcfType::iota();
  return chance(0.75) ? i : arrows({i, i});
}

Term TermGenerator::leaf(const PcfType& target) {
  if (target.is_iota()) {
    return numeral(std::uniform_int_distribution<Natural>(0, options_.max_leaf_numeral)(rng_));
  }
  auto constants = matching_constants(target);
  if (!constants.empty()) return constants[below(static_cast<int>(constants.size()))];
  return Term::app(Term::k(target.codomain(), target.domain()), leaf(target.codomain()));
}

Term TermGenerator::term(const PcfType& target) { return term(target, options_.max_depth); }

Term TermGenerator::term(const PcfType& target, int depth) {
  if (depth <= 0) return leaf(target);
  const int next = depth - 1;
  const PcfType i = PcfType::iota();

  enum class Choice { Leaf, Constant, Apply, Fix, Succ, Pred, Ifz, Konst, SPartial };
  std::vector<std::pair<Choice, int>> weights{{Choice::Leaf, 1}, {Choice::Apply, 3}, {Choice::Fix, 1}};
  const auto constants = matching_constants(target);
  if (!constants.empty()) weights.emplace_back(Choice::Constant, 3);
  if (target.is_iota()) {
    weights.emplace_back(Choice::Succ, 2);
    weights.emplace_back(Choice::Pred, 2);
    weights.emplace_back(Choice::Ifz, 2);
  } else {
    weights.emplace_back(Choice::Konst, 2);
    weights.emplace_back(Choice::SPartial, 2);
  }

  int total = 0;
  for (const auto& [c, w] : weights) total += w;
  int roll = below(total);
  Choice choice = Choice::Leaf;
  for (const auto& [c, w] : weights) {
    if (roll < w) {
      choice = c;
      break;
    }
    roll -= w;
  }

  switch (choice) {
    case Choice::Leaf: return leaf(target);
    case Choice::Constant: return constants[below(static_cast<int>(constants.size()))];
    case Choice::Apply: {
      const PcfType sigma = small_type();
      Term f = term(PcfType::arrow(sigma, target), next);
      Term a = term(sigma, next);
      return Term::app(std::move(f), std::move(a));
    }
    case Choice::Fix: return Term::app(Term::fix(target), term(PcfType::arrow(target, target), next));
    case Choice::Succ: return Term::app(Term::succ(), term(i, next));
    case Choice::Pred: return Term::app(Term::pred(), term(i, next));
    case Choice::Ifz: {
      Term zero_case = term(i, next);
      Term succ_case = term(i, next);
      Term scrutinee = term(i, next);
      return apply(Term::ifz(), {std::move(zero_case), std::move(succ_case), std::move(scrutinee)});
    }
    case Choice::Konst:
      return Term::app(Term::k(target.codomain(), target.domain()), term(target.codomain(), next));
    case Choice::SPartial: {
      // s f g : a -> c with f : a -> b -> c and g : a -> b
      const PcfType& a = target.domain();
      const PcfType& c = target.codomain();
      const PcfType b = small_type();
      Term f = term(arrows({a, b, c}), next);
      Term g = term(arrows({a, b}), next);
      return apply(Term::s(a, b, c), {std::move(f), std::move(g)});
    }
  }
  return leaf(target);
}

}  // namespace pcf
