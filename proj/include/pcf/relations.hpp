#pragma once

// k-step closure of a single-valued relation with decidable equality, and the
// bounded semi-decision procedure for its reflexive transitive closure.

#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pcf/opsem.hpp"

namespace pcf {

// next(x) is the unique successor of x, if any; eq decides equality on the
// carrier. Together these are the three hypotheses of the decision procedure:
// decidable equality, single-valuedness, decidable existence of a successor.
template <class R>
concept StepFunction = requires(const R& r, const typename R::value_type& x) {
  { r.next(x) } -> std::same_as<std::optional<typename R::value_type>>;
  { r.eq(x, x) } -> std::convertible_to<bool>;
};

// x R^k y with the recursion R_0 = equality, R_{k+1} = R ; R_k. Exactly k
// steps are taken before comparing.
template <StepFunction R>
bool decide_k_step(const R& r, typename R::value_type x, const typename R::value_type& y,
                   std::size_t k) {
  for (; k > 0; --k) {
    auto nx = r.next(x);
    if (!nx) return false;
    x = std::move(*nx);
  }
  return r.eq(x, y);
}

// Whether x R^j y for some j <= k.
template <StepFunction R>
bool decide_reaches_within(const R& r, typename R::value_type x, const typename R::value_type& y,
                           std::size_t k) {
  for (std::size_t j = 0;; ++j) {
    if (r.eq(x, y)) return true;
    if (j == k) return false;
    auto nx = r.next(x);
    if (!nx) return false;
    x = std::move(*nx);
  }
}

struct FiniteRelation {
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool single_valued() const;
};

// Text fixture: first line node_count, then one `src dst` pair per line.
FiniteRelation parse_finite_relation(std::string_view text);

// Minimal walk length from source to every reachable node, by breadth-first
// search. Works for relations that are not single-valued.
std::map<std::size_t, std::size_t> bfs_closure_oracle(const FiniteRelation& g, std::size_t source);

class FiniteStepFunction {
 public:
  using value_type = std::size_t;

  // Throws InvalidStructure unless g is single-valued with in-range edges.
  explicit FiniteStepFunction(const FiniteRelation& g);

  std::optional<std::size_t> next(std::size_t x) const { return successor_.at(x); }
  bool eq(std::size_t x, std::size_t y) const { return x == y; }

 private:
  std::vector<std::optional<std::size_t>> successor_;
};

// The small-step relation of PCF as a StepFunction over terms.
struct PcfStepFunction {
  using value_type = Term;

  std::optional<Term> next(const Term& t) const {
    if (auto s = step(t)) return std::move(s->next);
    return std::nullopt;
  }
  bool eq(const Term& a, const Term& b) const { return a == b; }
};

}  // namespace pcf
