#include "pcf/lifting.hpp"

namespace pcf {

PartialNat kleisli(const PartialFn& f, const PartialNat& l) {
  if (!l.is_defined()) return PartialNat::bot();
  return f(l.value());
}

PartialNat map(const std::function<Natural(Natural)>& g, const PartialNat& l) {
  if (!l.is_defined()) return PartialNat::bot();
  return PartialNat::eta(g(l.value()));
}

bool below(const PartialNat& l, const PartialNat& m) { return !l.is_defined() || l == m; }

std::string render(const PartialNat& l) {
  return l.is_defined() ? "eta " + std::to_string(l.value()) : std::string("bot");
}

}  // namespace pcf
