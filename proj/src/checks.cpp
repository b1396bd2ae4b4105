#include <string>

#include "pcf/opsem.hpp"
#include "pcf/scott.hpp"

namespace pcf {

namespace {

void require_iota(const Term& t) {
  const PcfType ty = type_of(t);
  if (!ty.is_iota()) throw WrongType("expected a term of type iota, found " + to_sexpr(ty));
}

}  // namespace

namespace {

// Follows the reduction of a base-type term on the zipper and keeps the
// denotation of every context level. After a contraction the new value is
// pushed outwards only until it meets a base-type level whose value did not
// change; everything above that level is then unchanged too.
class SoundnessWalk : public ZipperObserver {
 public:
  SoundnessWalk(const Term& s, Fuel fuel) : denoter_(fuel), focus_(s), focus_value_(denoter_.denote(s)) {
    observe(0, focus_value_.base_value());
  }

  void descended(const Frame& frame, const Term& focus) override {
    levels_.push_back(Level{frame, denoter_.denote(frame.other), focus_value_, type_of(focus_).is_iota()});
    focus_ = focus;
    focus_value_ = denoter_.denote(focus);
  }

  void climbed(const Term& focus) override {
    focus_ = focus;
    focus_value_ = levels_.back().value;
    levels_.pop_back();
    denoter_.remember(focus_, focus_value_);
  }

  void contracted(const Term& redex, const Step& step) override {
    ++steps_;
    if (violation_) return;
    const bool base = type_of(redex).is_iota();
    const SemValue before = focus_value_;
    focus_ = step.next;
    focus_value_ = denoter_.denote(focus_);
    if (base && before.base_value() == focus_value_.base_value()) return;

    SemValue v = focus_value_;
    for (auto level = levels_.rbegin(); level != levels_.rend(); ++level) {
      v = level->frame.rule == RuleName::AppLeft ? v.apply(level->other) : level->other.apply(v);
      if (level->base && level->value.base_value() == v.base_value()) return;
      level->value = v;
    }
    observe(steps_, v.base_value());
  }

  Verdict verdict() const {
    if (violation_) return *violation_;
    if (!witness_) return Verdict{Verdict::Kind::Vacuous, std::nullopt, "no term on the trace is defined"};
    return Verdict{Verdict::Kind::Ok, witness_->second, "trace of " + std::to_string(steps_) + " steps"};
  }

 private:
  struct Level {
    Frame frame;
    SemValue other;
    SemValue value;  // of the subterm this frame sits in
    bool base;
  };

  // The whole term, rebuilt only to report it.
  Term current() const {
    Term t = focus_;
    for (auto level = levels_.rbegin(); level != levels_.rend(); ++level) t = plug(level->frame, std::move(t));
    return t;
  }

  // Called whenever the denotation of the whole term changes.
  void observe(std::size_t position, const PartialNat& value) {
    if (!value.is_defined()) return;
    if (!witness_) {
      witness_.emplace(position, value.value());
    } else if (witness_->second != value.value()) {
      violation_ = Verdict{Verdict::Kind::Violation, std::nullopt,
                           "term #" + std::to_string(witness_->first) + " denotes eta " +
                               std::to_string(witness_->second) + " but term #" + std::to_string(position) + " (" +
                               to_sexpr(current()) + ") denotes eta " + std::to_string(value.value())};
    }
  }

  Denoter denoter_;
  Term focus_;
  SemValue focus_value_;
  std::vector<Level> levels_;
  std::size_t steps_ = 0;
  std::optional<std::pair<std::size_t, Natural>> witness_;
  std::optional<Verdict> violation_;
};

}  // namespace

Verdict check_soundness(const Term& s, std::size_t max_steps, Fuel fuel) {
  require_iota(s);
  // Position 0 is s itself, position i > 0 the target of the i-th step. Every
  // defined denotation along the way must agree with the first one.
  SoundnessWalk w(s, fuel);
  walk(s, max_steps, w);
  return w.verdict();
}

Verdict check_adequacy(const Term& t, Fuel fuel, std::size_t max_steps) {
  require_iota(t);
  const PartialNat value = denote_base(t, fuel);
  if (!value.is_defined()) return Verdict{Verdict::Kind::Vacuous, std::nullopt, "denotation is bot"};

  const Normalization run = normalize(t, max_steps);
  if (auto m = as_numeral(run.final); m && *m == value.value()) {
    return Verdict{Verdict::Kind::Ok, *m, "reached in " + std::to_string(run.steps) + " steps"};
  }
  std::string found;
  if (run.exhausted) {
    found = "no numeral within " + std::to_string(max_steps) + " steps";
  } else if (auto m = as_numeral(run.final)) {
    found = "numeral " + std::to_string(*m);
  } else {
    found = "stuck at " + to_sexpr(run.final);
  }
  return Verdict{Verdict::Kind::Violation, value.value(),
                 "denotes eta " + std::to_string(value.value()) + " but reduces to " + found};
}

Verdict check_semidecidability(const Term& t, Fuel fuel, std::size_t max_steps) {
  require_iota(t);
  const PartialNat denotational = denote_base(t, fuel);
  const Normalization run = normalize(t, max_steps);
  const auto operational = as_numeral(run.final);

  if (denotational.is_defined() && operational) {
    if (denotational.value() == *operational) return Verdict{Verdict::Kind::Ok, *operational, {}};
    return Verdict{Verdict::Kind::Violation, std::nullopt,
                   "denotes eta " + std::to_string(denotational.value()) + " but reduces to numeral " +
                       std::to_string(*operational)};
  }
  if (denotational.is_defined() && !run.exhausted) {
    // The reduction finished on a non-numeral: definitively undefined.
    return Verdict{Verdict::Kind::Violation, std::nullopt,
                   "denotes eta " + std::to_string(denotational.value()) + " but is stuck at " +
                       to_sexpr(run.final)};
  }
  if (denotational.is_defined() || operational) {
    return Verdict{Verdict::Kind::Inconclusive, denotational.is_defined() ? denotational.value() : *operational,
                   "budget-inconclusive"};
  }
  return Verdict{Verdict::Kind::Vacuous, std::nullopt, "neither side defined"};
}

}  // namespace pcf
