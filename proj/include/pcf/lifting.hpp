#pragma once

// The lifting monad on naturals at finite approximation: a partial natural is
// either undefined (bot) or a defined value (eta n).

#include <functional>
#include <optional>
#include <string>

#include "pcf/syntax.hpp"

namespace pcf {

class PartialNat {
 public:
  static PartialNat bot() { return PartialNat(); }
  static PartialNat eta(Natural n) { return PartialNat(n); }

  bool is_defined() const { return value_.has_value(); }
  // Only meaningful when defined.
  Natural value() const { return *value_; }
  const std::optional<Natural>& as_optional() const { return value_; }

  friend bool operator==(const PartialNat&, const PartialNat&) = default;
  friend auto operator<=>(const PartialNat&, const PartialNat&) = default;

 private:
  PartialNat() = default;
  explicit PartialNat(Natural n) : value_(n) {}
  std::optional<Natural> value_;
};

using PartialFn = std::function<PartialNat(Natural)>;

inline PartialNat unit(Natural n) { return PartialNat::eta(n); }

PartialNat kleisli(const PartialFn& f, const PartialNat& l);
PartialNat map(const std::function<Natural(Natural)>& g, const PartialNat& l);

// The information order: bot below everything, eta n below eta m iff n = m.
bool below(const PartialNat& l, const PartialNat& m);

// `bot` or `eta <n>`.
std::string render(const PartialNat& l);

}  // namespace pcf
