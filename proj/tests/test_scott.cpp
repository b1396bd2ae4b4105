#include "doctest.h"

#include <random>
#include <thread>

#include "pcf/generate.hpp"
#include "pcf/opsem.hpp"
#include "pcf/scott.hpp"
#include "support.hpp"

using namespace pcf;

namespace {

const PcfType i = PcfType::iota();

PartialNat at(const Term& t, std::size_t fuel) { return denote_base(t, Fuel{fuel}); }

// Applies a closed term of type nat -> ... -> nat to numerals until base type.
Term saturate(Term t, std::mt19937_64& rng) {
  PcfType ty = type_of(t);
  while (ty.is_arrow()) {
    if (!ty.domain().is_iota()) return t;
    t = Term::app(t, numeral(rng() % 4));
    ty = ty.codomain();
  }
  return t;
}

}  // namespace

TEST_SUITE("scott") {

TEST_CASE("numerals denote themselves at fuel 0") {
  for (Natural n = 0; n <= 100; ++n) CHECK(at(numeral(n), 0) == PartialNat::eta(n));
}

TEST_CASE("constants") {
  CHECK(at(apply(Term::ifz(), {numeral(9), numeral(4), numeral(0)}), 0) == PartialNat::eta(9));
  CHECK(at(apply(Term::ifz(), {numeral(9), numeral(4), numeral(3)}), 0) == PartialNat::eta(4));
  CHECK(at(Term::app(Term::pred(), Term::zero()), 0) == PartialNat::eta(0));
  CHECK(at(Term::app(Term::pred(), numeral(5)), 0) == PartialNat::eta(4));
  CHECK(at(apply(Term::k(i, i), {numeral(2), testing::fix_succ()}), 0) == PartialNat::eta(2));
  CHECK(at(apply(Term::s(i, i, i), {Term::k(i, i), Term::succ(), numeral(6)}), 0) == PartialNat::eta(6));
  // ifz is strict only in its scrutinee.
  CHECK(at(apply(Term::ifz(), {numeral(1), testing::fix_succ(), numeral(0)}), 3) == PartialNat::eta(1));
  CHECK(at(apply(Term::ifz(), {numeral(1), numeral(2), testing::fix_succ()}), 3) == PartialNat::bot());
}

TEST_CASE("bottom values") {
  CHECK(bottom_value(i).base_value() == PartialNat::bot());
  const SemValue f = bottom_value(arrows({i, i}));
  CHECK(f.apply(SemValue::base(PartialNat::eta(3))).base_value() == PartialNat::bot());
  const SemValue h = bottom_value(arrows({arrows({i, i}), i}));
  CHECK(h.apply(denote(Term::succ(), Fuel{0})).base_value() == PartialNat::bot());
  CHECK_THROWS_AS(f.base_value(), WrongType);
  CHECK_THROWS_AS(bottom_value(i).apply(bottom_value(i)), WrongType);
}

TEST_CASE("fix") {
  for (std::size_t fuel : {0u, 1u, 10u, 50u, 100u}) CHECK(at(testing::fix_succ(), fuel) == PartialNat::bot());
  CHECK(at(testing::add_applied(2, 1), 10) == PartialNat::eta(3));
  // add recurses on its first argument: fuel must exceed it.
  CHECK(at(testing::add_applied(5, 1), 5) == PartialNat::bot());
  CHECK(at(testing::add_applied(5, 1), 6) == PartialNat::eta(6));
  CHECK(at(testing::add_applied(30, 12), 32) == PartialNat::eta(42));
}

TEST_CASE("denote rejects ill-typed input and non-base observations") {
  CHECK_THROWS_AS(denote(Term::app(Term::zero(), Term::zero()), Fuel{1}), TypeMismatch);
  CHECK_THROWS_AS(denote_base(Term::succ(), Fuel{1}), WrongType);
  const Term ill = apply(Term::k(i, arrows({i, i})), {Term::zero(), Term::zero()});
  CHECK_THROWS_AS(check_adequacy(ill, Fuel{1}, 10), TypeError);
  CHECK_THROWS_AS(check_adequacy(Term::succ(), Fuel{1}, 10), WrongType);
}

TEST_CASE("soundness examples") {
  auto v = check_soundness(Term::app(Term::pred(), numeral(1)), 100, Fuel{0});
  CHECK(v.kind == Verdict::Kind::Ok);
  CHECK(v.value == 0u);
  v = check_soundness(testing::add_applied(2, 1), 10000, Fuel{10});
  CHECK(v.kind == Verdict::Kind::Ok);
  CHECK(v.value == 3u);
  v = check_soundness(testing::fix_succ(), 200, Fuel{32});
  CHECK(v.kind == Verdict::Kind::Vacuous);
  CHECK(v.passed());
}

TEST_CASE("adequacy examples") {
  auto v = check_adequacy(numeral(4), Fuel{0}, 0);
  CHECK(v.kind == Verdict::Kind::Ok);
  CHECK(v.value == 4u);
  v = check_adequacy(testing::add_applied(2, 1), Fuel{10}, 10000);
  CHECK(v.kind == Verdict::Kind::Ok);
  CHECK(v.value == 3u);
  v = check_adequacy(testing::fix_succ(), Fuel{10}, 100);
  CHECK(v.kind == Verdict::Kind::Vacuous);
  // Too small a step budget is reported, not hidden.
  v = check_adequacy(testing::add_applied(2, 1), Fuel{10}, 3);
  CHECK(v.kind == Verdict::Kind::Violation);
}

TEST_CASE("semidecidability examples") {
  auto v = check_semidecidability(numeral(3), Fuel{0}, 0);
  CHECK(v.kind == Verdict::Kind::Ok);
  CHECK(v.value == 3u);
  v = check_semidecidability(testing::fix_succ(), Fuel{32}, 1000);
  CHECK(v.kind == Verdict::Kind::Vacuous);
  CHECK(v.passed());
  // Operationally reached, denotationally out of fuel.
  v = check_semidecidability(testing::add_applied(5, 1), Fuel{2}, 10000);
  CHECK(v.kind == Verdict::Kind::Inconclusive);
  CHECK(v.detail == "budget-inconclusive");
  v = check_semidecidability(testing::add_applied(3, 4), Fuel{32}, 10000);
  CHECK(v.kind == Verdict::Kind::Ok);
  CHECK(v.value == 7u);
}

TEST_CASE("soundness walk agrees with denoting every term of the trace") {
  TermGenerator gen(56);
  for (int n = 0; n < 400; ++n) {
    const Term t = gen.base_term();
    const std::size_t fuel = n % 5;
    const Reduction r = reduce(t, 150);
    std::optional<Natural> first;
    bool conflict = false;
    for (std::size_t j = 0; j <= r.trace.size(); ++j) {
      const PartialNat p = at(j == 0 ? t : r.trace[j - 1].next, fuel);
      if (!p.is_defined()) continue;
      if (first && *first != p.value()) conflict = true;
      if (!first) first = p.value();
    }
    const Verdict v = check_soundness(t, 150, Fuel{fuel});
    REQUIRE_FALSE(conflict);
    CHECK(v.kind == (first ? Verdict::Kind::Ok : Verdict::Kind::Vacuous));
    CHECK(v.value == first);
  }
}

TEST_CASE("fuel monotonicity on fuzzed terms") {
  TermGenerator gen(51);
  for (int n = 0; n < 150; ++n) {
    const Term t = gen.base_term();
    std::optional<Natural> first;
    for (std::size_t fuel = 0; fuel <= 40; ++fuel) {
      const PartialNat p = at(t, fuel);
      if (first) REQUIRE(p == PartialNat::eta(*first));
      if (p.is_defined()) first = p.value();
    }
  }
}

TEST_CASE("memoisation does not change denotations") {
  TermGenerator gen(52);
  for (int n = 0; n < 300; ++n) {
    const Term t = gen.base_term();
    for (std::size_t fuel : {0u, 1u, 3u, 6u}) {
      CHECK(denote_base(t, Fuel{fuel}, {true}) == denote_base(t, Fuel{fuel}, {false}));
    }
  }
  CHECK(denote_base(testing::add_applied(4, 3), Fuel{6}, {false}) == PartialNat::eta(7));
}

TEST_CASE("combinator equations at base observations") {
  TermGenerator gen(53);
  std::mt19937_64 rng(54);
  const std::size_t fuel = 12;
  for (int n = 0; n < 200; ++n) {
    const PcfType a = gen.type(1);
    const PcfType b = gen.type(1);
    const Term x = gen.term(a, 4);
    const Term y = gen.term(b, 4);
    // k x y = x, both sides fed the same numeral arguments.
    std::mt19937_64 r1(n);
    std::mt19937_64 r2(n);
    const Term lhs = saturate(apply(Term::k(a, b), {x, y}), r1);
    const Term rhs = saturate(x, r2);
    if (type_of(lhs).is_iota()) CHECK(at(lhs, fuel) == at(rhs, fuel));
    // s f g z = f z (g z) at sigma = iota
    const Term f = gen.term(arrows({i, b, i}), 4);
    const Term g = gen.term(arrows({i, b}), 4);
    const Term z = numeral(rng() % 4);
    const Term s_side = apply(Term::s(i, b, i), {f, g, z});
    const Term expanded = apply(f, {z, Term::app(g, z)});
    CHECK(at(s_side, fuel) == at(expanded, fuel));
  }
}

TEST_CASE("soundness has no converse") {
  // k 0 and k (pred 0) are distinct normal forms with the same meaning.
  const Term a = Term::app(Term::k(i, i), numeral(0));
  const Term b = Term::app(Term::k(i, i), Term::app(Term::pred(), Term::zero()));
  CHECK_FALSE(a == b);
  CHECK_FALSE(step(a));
  CHECK_FALSE(step(b));
  std::mt19937_64 rng(55);
  for (int n = 0; n < 50; ++n) {
    const Term arg = numeral(rng() % 20);
    CHECK(at(Term::app(a, arg), 0) == PartialNat::eta(0));
    CHECK(at(Term::app(b, arg), 0) == PartialNat::eta(0));
  }
  CHECK(at(Term::app(a, testing::fix_succ()), 8) == PartialNat::eta(0));
  CHECK(at(Term::app(b, testing::fix_succ()), 8) == PartialNat::eta(0));
}

TEST_CASE("denotations can be computed concurrently") {
  const Term t = testing::add_applied(9, 4);
  std::vector<std::thread> workers;
  std::vector<PartialNat> results(8, PartialNat::bot());
  for (std::size_t w = 0; w < results.size(); ++w) {
    workers.emplace_back([&, w] { results[w] = at(t, 16); });
  }
  for (auto& th : workers) th.join();
  for (const auto& r : results) CHECK(r == PartialNat::eta(13));
}

}  // TEST_SUITE
