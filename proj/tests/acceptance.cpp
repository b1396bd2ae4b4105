// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pcf/domain.hpp"
#include "pcf/frontend.hpp"
#include "pcf/generate.hpp"
#include "pcf/lifting.hpp"
#include "pcf/opsem.hpp"
#include "pcf/relations.hpp"
#include "pcf/scott.hpp"
#include "pcf/wtypes.hpp"
#include "support.hpp"

using namespace pcf;

namespace {

// A criterion body returns an empty string on success, otherwise the first
// counterexample it found.
struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<std::string()> body;
};

template <class T>
std::string show(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::vector<Term> base_corpus(std::uint64_t seed, std::size_t count) {
  TermGenerator gen(seed);
  std::vector<Term> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(gen.base_term());
  return out;
}

std::string addition() {
  const Term t = apply(frontend::compile_program(testing::kAddSource).term, {numeral(2), numeral(1)});
  const auto n = reaches_numeral(t, 10000);
  if (n != Natural{3}) return "reaches_numeral gave " + (n ? show(*n) : std::string("nothing"));
  const PartialNat d = denote_base(t, Fuel{10});
  if (d != PartialNat::eta(3)) return "denote_base gave " + render(d);
  return {};
}

std::string divergence() {
  const Term t = testing::fix_succ();
  if (const auto n = reaches_numeral(t, 10000)) return "reached " + show(*n);
  const PartialNat d = denote_base(t, Fuel{100});
  if (d != PartialNat::bot()) return "denote_base gave " + render(d);
  return {};
}

std::string numerals() {
  for (Natural n = 0; n <= 100; ++n) {
    const PartialNat d = denote_base(numeral(n), Fuel{0});
    if (d != PartialNat::eta(n)) return "numeral " + show(n) + " denotes " + render(d);
  }
  return {};
}

std::string verdicts(const std::function<Verdict(const Term&)>& check) {
  for (const Term& t : base_corpus(4001, 1000)) {
    const Verdict v = check(t);
    if (v.kind == Verdict::Kind::Violation) return v.detail + " on " + to_sexpr(t);
  }
  return {};
}

std::string fuel_monotonicity() {
  for (const Term& t : base_corpus(4006, 500)) {
    std::optional<Natural> first;
    for (std::size_t fuel = 0; fuel <= 64; ++fuel) {
      const PartialNat d = denote_base(t, Fuel{fuel});
      if (first && d != PartialNat::eta(*first)) {
        return "value " + show(*first) + " became " + render(d) + " at fuel " + show(fuel) + " on " + to_sexpr(t);
      }
      if (d.is_defined() && !first) first = d.value();
    }
  }
  return {};
}

std::string kleisli_laws() {
  std::mt19937_64 rng(4007);
  const auto inputs = testing::partial_nats_below(50);
  std::vector<testing::RandomPartialFn> fns;
  for (int n = 0; n < 100; ++n) fns.push_back(testing::random_partial_fn(rng));
  for (std::size_t a = 0; a < fns.size(); ++a) {
    const auto& f = fns[a];
    const auto& g = fns[(a + 1) % fns.size()];
    for (const PartialNat& l : inputs) {
      if (kleisli(unit, l) != l) return "right unit fails at " + render(l);
      if (l.is_defined() && kleisli(f, unit(l.value())) != f(l.value())) return "left unit fails at " + render(l);
      const PartialNat lhs = kleisli(g, kleisli(f, l));
      const PartialNat rhs = kleisli([&](Natural x) { return kleisli(g, f(x)); }, l);
      if (lhs != rhs) return "associativity fails at " + render(l);
    }
  }
  return {};
}

std::string fixed_points() {
  using namespace domain;
  for (const FiniteDcpoBot& d : testing::dcpo_corpus(4008, 500)) {
    for (const auto& table : testing::all_tables(d.size(), d.size())) {
      if (!is_monotone(d, d, table)) continue;
      const MonotoneMap f(d, d, table);
      const Index mu = least_fixed_point(f);
      if (f(mu) != mu) return "mu is not fixed, size " + show(d.size());
      for (Index x = 0; x < d.size(); ++x) {
        if (d.leq(f(x), x) && !d.leq(mu, x)) return "mu is not least prefixed, size " + show(d.size());
      }
    }
  }
  return {};
}

std::string k_step_closure() {
  std::mt19937_64 rng(4009);
  constexpr std::size_t kMax = 60;
  for (int n = 0; n < 200; ++n) {
    const FiniteRelation g = testing::random_single_valued(rng, 50);
    const FiniteStepFunction r(g);
    for (std::size_t x = 0; x < g.node_count; ++x) {
      const auto dist = bfs_closure_oracle(g, x);
      const auto layers = testing::frontiers(g, x, kMax);
      for (std::size_t y = 0; y < g.node_count; ++y) {
        const auto d = dist.find(y);
        for (std::size_t k = 0; k <= kMax; ++k) {
          const bool within = d != dist.end() && d->second <= k;
          if (decide_reaches_within(r, x, y, k) != within) {
            return "reaches_within(" + show(x) + ", " + show(y) + ", " + show(k) + ") disagrees with BFS";
          }
          if (decide_k_step(r, x, y, k) != (layers[k].count(y) > 0)) {
            return "k_step(" + show(x) + ", " + show(y) + ", " + show(k) + ") disagrees with frontier";
          }
          if (d != dist.end() && k == d->second && !decide_k_step(r, x, y, k)) {
            return "k_step false at the BFS distance";
          }
        }
      }
    }
  }
  return {};
}

std::string single_valuedness() {
  TermGenerator gen(4010);
  for (int n = 0; n < 10000; ++n) {
    const Term t = gen.term(gen.type());
    const auto succs = successors(t);
    const auto s = step(t);
    if (succs.size() > 1) return show(succs.size()) + " successors of " + to_sexpr(t);
    if (succs.empty() != !s) return "successors and step disagree on " + to_sexpr(t);
    if (s && !(succs.front() == s->next)) return "successors and step differ on " + to_sexpr(t);
  }
  return {};
}

std::string w_equality() {
  TermGenerator gen(4011);
  for (int n = 0; n < 10000; ++n) {
    const PcfType ty = gen.type(1);
    const Term a = gen.term(ty, 5);
    const Term b = n % 3 == 0 ? gen.term(ty, 5) : n % 3 == 1 ? testing::near_miss(a, gen) : parse_term_sexpr(to_sexpr(a));
    // The oracle compares printed forms, which share nothing with the W encoding.
    const bool expected = to_sexpr(a) == to_sexpr(b);
    if (w::w_equal(w::term_spec(), w::encode_term(a), w::encode_term(b)) != expected) {
      return "w_equal wrong on " + to_sexpr(a) + " vs " + to_sexpr(b);
    }
  }
  return {};
}

std::string semidecidability() {
  for (const Term& t : base_corpus(4012, 500)) {
    const Verdict v = check_semidecidability(t, Fuel{32}, 10000);
    if (v.kind == Verdict::Kind::Violation) return v.detail + " on " + to_sexpr(t);
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "addition example", 1, addition},
      {2, "divergence of fix succ", 1, divergence},
      {3, "numerals denote themselves", 1, numerals},
      {4, "soundness suite", 60,
       [] { return verdicts([](const Term& t) { return check_soundness(t, 2000, Fuel{32}); }); }},
      {5, "adequacy suite", 60,
       [] { return verdicts([](const Term& t) { return check_adequacy(t, Fuel{32}, 10000); }); }},
      {6, "fuel monotonicity", 60, fuel_monotonicity},
      {7, "kleisli laws", 5, kleisli_laws},
      {8, "fixed-point theorem", 60, fixed_points},
      {9, "k-step closure", 30, k_step_closure},
      {10, "single-valued reduction", 30, single_valuedness},
      {11, "W-type equality", 30, w_equality},
      {12, "semidecidability cross-check", 60, semidecidability},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds >= c.limit_seconds) problem = "over time limit";
    const bool pass = problem.empty();
    if (!pass) ++failures;
    std::printf("%s %2d %-30s %8.3fs (limit %gs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, pass ? "" : ": ", problem.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
