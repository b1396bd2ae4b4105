#pragma once

// Fuel-indexed denotational interpreter for combinatory PCF, and the
// executable cross-checks between it and the operational semantics.
//
// At fuel F, fix_s denotes f |-> f^F(bot_s): the F-th Kleene approximant of the
// least fixed point. Every other constant gets its exact meaning, so the
// denotation at fuel F sits below the limit denotation in the information
// order, and raising the fuel can only add definedness.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "pcf/lifting.hpp"
#include "pcf/syntax.hpp"

namespace pcf {

struct Fuel {
  std::size_t iterations = 0;
};

class SemValue {
 public:
  using Function = std::function<SemValue(const SemValue&)>;

  static SemValue base(PartialNat value);
  static SemValue func(Function f);

  bool is_base() const { return std::holds_alternative<PartialNat>(rep_); }
  // Throws WrongType on a function value.
  const PartialNat& base_value() const;
  // Throws WrongType on a base value.
  SemValue apply(const SemValue& arg) const;

 private:
  explicit SemValue(PartialNat p) : rep_(p) {}
  explicit SemValue(std::shared_ptr<const Function> f) : rep_(std::move(f)) {}
  std::variant<PartialNat, std::shared_ptr<const Function>> rep_;
};

struct DenoteOptions {
  // Cache the Kleene approximants of fix on their iota-domain arguments.
  // Semantically invisible; keeps recursive definitions that call themselves
  // more than once per level from costing 2^fuel.
  bool memoize_fix = true;
};

// Least element of [[sigma]]: bot at iota, the constant-bottom map at arrows.
SemValue bottom_value(const PcfType& sigma);

// Throws TypeMismatch when t is ill-typed.
SemValue denote(const Term& t, Fuel fuel, DenoteOptions options = {});

// Throws WrongType unless t has type iota.
PartialNat denote_base(const Term& t, Fuel fuel, DenoteOptions options = {});

// Denotes many terms at one fuel and shares the work on subterm nodes they
// have in common, such as consecutive terms of a reduction trace.
class Denoter {
 public:
  explicit Denoter(Fuel fuel, DenoteOptions options = {});
  ~Denoter();
  Denoter(const Denoter&) = delete;
  Denoter& operator=(const Denoter&) = delete;

  SemValue denote(const Term& t);
  PartialNat denote_base(const Term& t);
  // Records v as the denotation of t, for callers that already computed it
  // from t's parts. v must be what denote(t) would return.
  void remember(const Term& t, SemValue v);

 private:
  class Interpreter;
  std::unique_ptr<Interpreter> interpreter_;
};

struct Verdict {
  enum class Kind {
    Ok,            // the check held and a defined value was observed
    Vacuous,       // nothing defined to compare
    Inconclusive,  // one side committed, the other ran out of budget
    Violation,
  };

  Kind kind = Kind::Vacuous;
  std::optional<Natural> value;
  std::string detail;

  bool passed() const { return kind != Kind::Violation; }
};

// Walks the trace of reduce(s, max_steps) and checks that every term on it
// that is defined at `fuel` denotes the same natural. Throws WrongType unless
// s has type iota.
Verdict check_soundness(const Term& s, std::size_t max_steps, Fuel fuel);

// If denote_base(t, fuel) = eta n then t must reach numeral(n) within
// max_steps. Throws WrongType unless t has type iota.
Verdict check_adequacy(const Term& t, Fuel fuel, std::size_t max_steps);

// The operational and denotational semi-decisions of definedness must never
// commit to different values. A side that stays undefined only for lack of
// budget makes the verdict Inconclusive.
Verdict check_semidecidability(const Term& t, Fuel fuel, std::size_t max_steps);

}  // namespace pcf
