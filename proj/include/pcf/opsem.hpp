#pragma once

// Small-step operational semantics of combinatory PCF.

#include <optional>
#include <string_view>
#include <vector>

#include "pcf/syntax.hpp"

namespace pcf {

enum class RuleName {
  PredZero,   // pred 0 ~> 0
  PredSucc,   // pred (n+1) ~> n
  IfzZero,    // ifz s t 0 ~> s
  IfzSucc,    // ifz s t (n+1) ~> t
  KRule,      // k s t ~> s
  SRule,      // s f g t ~> f t (g t)
  FixRule,    // fix f ~> f (fix f)
  AppLeft,    // f ~> g  =>  f t ~> g t
  SuccArg,    // s ~> t  =>  succ s ~> succ t
  PredArg,    // s ~> t  =>  pred s ~> pred t
  IfzScrut,   // r ~> r' =>  ifz s t r ~> ifz s t r'
};

std::string_view rule_name(RuleName rule);

struct Step {
  Term next;
  // Last rule of the derivation, i.e. the one whose conclusion is t ~> next.
  RuleName rule;
};

// Steps when present, Stuck when empty.
using StepResult = std::optional<Step>;

StepResult step(const Term& t);

// Every conclusion derivable from t, found by trying each rule schema on its
// own rather than going through step(). Duplicates are kept.
std::vector<Term> successors(const Term& t);

struct Reduction {
  Term final;
  std::vector<Step> trace;
  // The step budget ran out while the final term could still step.
  bool exhausted = false;
};

// Iterates step() at most max_steps times.
Reduction reduce(const Term& t, std::size_t max_steps);

struct Normalization {
  Term final;
  std::size_t steps = 0;
  bool exhausted = false;
};

// Same reduction sequence as reduce() without materialising the trace: the
// term is kept as a focused subterm plus a stack of evaluation frames, so a
// step costs time proportional to the redex rather than the whole term.
Normalization normalize(const Term& t, std::size_t max_steps);

// One layer of an evaluation context. For AppLeft the hole is the function
// and `other` the argument; for SuccArg, PredArg and IfzScrut the hole is the
// argument and `other` is succ, pred or ifz s t.
struct Frame {
  RuleName rule;
  Term other;
};

Term plug(const Frame& frame, Term focus);

// Hooks into the walk behind normalize(). At every call the current term is
// the focus plugged into the frames pushed so far, innermost last.
class ZipperObserver {
 public:
  virtual ~ZipperObserver() = default;
  // A frame was pushed; `focus` is the subterm in its hole.
  virtual void descended(const Frame&, const Term& /*focus*/) {}
  // The innermost frame was popped; `focus` is the term it was plugged into.
  virtual void climbed(const Term& /*focus*/) {}
  // The focus is about to be replaced by step.next.
  virtual void contracted(const Term& /*redex*/, const Step&) {}
};

// normalize() with callbacks. The rebuild of the final term is reported as
// ordinary climbs.
Normalization walk(const Term& t, std::size_t max_steps, ZipperObserver& observer);

// The n with t ~>^j numeral(n) for some j <= k. Throws WrongType when t is not
// of type iota.
std::optional<Natural> reaches_numeral(const Term& t, std::size_t k);

}  // namespace pcf
