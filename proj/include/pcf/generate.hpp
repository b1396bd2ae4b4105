#pragma once

// Random generators of PCF types and closed well-typed terms, used by the
// property suites of every module.

#include <cstdint>
#include <random>

#include "pcf/syntax.hpp"

namespace pcf {

struct GeneratorOptions {
  int max_depth = 8;
  int max_type_depth = 2;
  // Largest literal numeral placed at a leaf.
  Natural max_leaf_numeral = 3;
};

class TermGenerator {
 public:
  explicit TermGenerator(std::uint64_t seed, GeneratorOptions options = {});

  PcfType type();
  PcfType type(int max_depth);

  // A closed term whose type_of is exactly `target`.
  Term term(const PcfType& target);
  Term term(const PcfType& target, int depth);
  Term base_term() { return term(PcfType::iota()); }

  std::mt19937_64& rng() { return rng_; }

 private:
  Term leaf(const PcfType& target);
  PcfType small_type();
  bool chance(double p);
  int below(int n);

  std::mt19937_64 rng_;
  GeneratorOptions options_;
};

}  // namespace pcf
