#pragma once

// Finite posets, dcpos with a least element, pointwise exponentials and least
// fixed points. On finite carriers every claim about these is decidable, so
// the constructors check their invariants exhaustively.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pcf/error.hpp"

namespace pcf::domain {

using Index = std::size_t;
using Subset = std::vector<Index>;

class FinitePoset {
 public:
  // Throws InvalidStructure unless leq is reflexive, antisymmetric and
  // transitive.
  explicit FinitePoset(std::vector<std::vector<bool>> leq);

  std::size_t size() const { return leq_.size(); }
  bool leq(Index a, Index b) const { return leq_[a][b]; }
  const std::vector<std::vector<bool>>& matrix() const { return leq_; }

  static FinitePoset chain(std::size_t n);
  // Bottom below n pairwise incomparable elements.
  static FinitePoset flat(std::size_t n);
  // 0 < 1, 2 < 3 with 1 and 2 incomparable.
  static FinitePoset diamond();

 private:
  std::vector<std::vector<bool>> leq_;
};

// Fixture format: first line size, then size lines of 0/1 entries.
FinitePoset parse_poset(std::string_view text);

// Nonempty, and every pair has an upper bound inside the subset.
bool check_directed(const FinitePoset& p, const Subset& subset);

std::optional<Index> lub(const FinitePoset& p, const Subset& subset);

class FiniteDcpoBot {
 public:
  // Throws InvalidStructure unless bottom is least and every directed subset
  // has a least upper bound. The subset scan is exhaustive up to
  // kExhaustiveLimit elements; past that it is skipped, since a finite
  // directed set always contains its own maximum.
  FiniteDcpoBot(FinitePoset poset, Index bottom);

  static constexpr std::size_t kExhaustiveLimit = 6;

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Index bottom() const { return bottom_; }
  bool leq(Index a, Index b) const { return poset_.leq(a, b); }

 private:
  FinitePoset poset_;
  Index bottom_;
};

// The least element, if the poset has one.
std::optional<Index> least_element(const FinitePoset& p);

bool is_monotone(const FiniteDcpoBot& source, const FiniteDcpoBot& target, const std::vector<Index>& table);

// Preserves the lub of every directed subset (exhaustive; small carriers).
bool preserves_directed_lubs(const FiniteDcpoBot& source, const FiniteDcpoBot& target,
                             const std::vector<Index>& table);

class MonotoneMap {
 public:
  // Throws InvalidStructure if the table is out of range or not monotone.
  // Holds references: source and target must outlive the map.
  MonotoneMap(const FiniteDcpoBot& source, const FiniteDcpoBot& target, std::vector<Index> table);

  const FiniteDcpoBot& source() const { return *source_; }
  const FiniteDcpoBot& target() const { return *target_; }
  Index operator()(Index x) const { return table_[x]; }
  const std::vector<Index>& table() const { return table_; }

 private:
  const FiniteDcpoBot* source_;
  const FiniteDcpoBot* target_;
  std::vector<Index> table_;
};

struct Exponential {
  FiniteDcpoBot dcpo;
  // maps[i] is the table of the monotone map that carrier element i stands for.
  std::vector<std::vector<Index>> maps;
};

inline constexpr std::size_t kMaxExponentialTables = 1'000'000;

// All monotone maps d -> e, ordered pointwise, with the constant-bottom map as
// least element. Throws TooLarge when size(e)^size(d) exceeds
// kMaxExponentialTables.
Exponential exponential(const FiniteDcpoBot& d, const FiniteDcpoBot& e);

// Kleene iteration from bottom; stabilises within size() steps. Throws
// InvalidStructure unless f is an endomap.
Index least_fixed_point(const MonotoneMap& f);

}  // namespace pcf::domain
