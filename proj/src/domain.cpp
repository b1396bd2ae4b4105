#include "pcf/domain.hpp"

#include <sstream>
#include <string>

namespace pcf::domain {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const std::size_t n = leq_.size();
  for (const auto& row : leq_) {
    if (row.size() != n) throw InvalidStructure("order matrix is not square");
  }
  for (Index a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw InvalidStructure("order is not reflexive at " + std::to_string(a));
    for (Index b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) throw InvalidStructure("order is not antisymmetric");
      for (Index c = 0; c < n; ++c) {
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) throw InvalidStructure("order is not transitive");
      }
    }
  }
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) m[a][b] = true;
  return FinitePoset(std::move(m));
}

FinitePoset FinitePoset::flat(std::size_t n) {
  std::vector<std::vector<bool>> m(n + 1, std::vector<bool>(n + 1));
  for (Index a = 0; a <= n; ++a) {
    m[a][a] = true;
    m[0][a] = true;
  }
  return FinitePoset(std::move(m));
}

FinitePoset FinitePoset::diamond() {
  return FinitePoset({{true, true, true, true},
                      {false, true, false, true},
                      {false, false, true, true},
                      {false, false, false, true}});
}

FinitePoset parse_poset(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  if (!(in >> n)) throw InvalidStructure("poset fixture: missing size");
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      // Entries may be separated by whitespace or packed, as in `0110`.
      char bit = 0;
      if (!(in >> bit) || (bit != '0' && bit != '1')) throw InvalidStructure("poset fixture: expected 0 or 1");
      m[a][b] = bit == '1';
    }
  }
  if (char extra = 0; in >> extra) throw InvalidStructure("poset fixture: trailing input");
  return FinitePoset(std::move(m));
}

bool check_directed(const FinitePoset& p, const Subset& subset) {
  if (subset.empty()) return false;
  for (Index a : subset) {
    for (Index b : subset) {
      bool bounded = false;
      for (Index c : subset) {
        if (p.leq(a, c) && p.leq(b, c)) {
          bounded = true;
          break;
        }
      }
      if (!bounded) return false;
    }
  }
  return true;
}

std::optional<Index> lub(const FinitePoset& p, const Subset& subset) {
  std::vector<Index> upper;
  for (Index u = 0; u < p.size(); ++u) {
    bool above = true;
    for (Index x : subset) above = above && p.leq(x, u);
    if (above) upper.push_back(u);
  }
  for (Index u : upper) {
    bool least = true;
    for (Index v : upper) least = least && p.leq(u, v);
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<Index> least_element(const FinitePoset& p) {
  for (Index b = 0; b < p.size(); ++b) {
    bool least = true;
    for (Index x = 0; x < p.size(); ++x) least = least && p.leq(b, x);
    if (least) return b;
  }
  return std::nullopt;
}

namespace {

template <class F>
void for_each_subset(std::size_t n, F&& visit) {
  Subset subset;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    subset.clear();
    for (Index i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    visit(subset);
  }
}

}  // namespace

FiniteDcpoBot::FiniteDcpoBot(FinitePoset poset, Index bottom) : poset_(std::move(poset)), bottom_(bottom) {
  if (bottom_ >= poset_.size()) throw InvalidStructure("bottom out of range");
  for (Index x = 0; x < poset_.size(); ++x) {
    if (!poset_.leq(bottom_, x)) throw InvalidStructure("bottom is not below " + std::to_string(x));
  }
  if (poset_.size() <= kExhaustiveLimit) {
    for_each_subset(poset_.size(), [&](const Subset& s) {
      if (check_directed(poset_, s) && !lub(poset_, s)) {
        throw InvalidStructure("directed subset without least upper bound");
      }
    });
  }
}

bool is_monotone(const FiniteDcpoBot& source, const FiniteDcpoBot& target, const std::vector<Index>& table) {
  if (table.size() != source.size()) return false;
  for (Index a = 0; a < source.size(); ++a) {
    if (table[a] >= target.size()) return false;
    for (Index b = 0; b < source.size(); ++b) {
      if (source.leq(a, b) && !target.leq(table[a], table[b])) return false;
    }
  }
  return true;
}

bool preserves_directed_lubs(const FiniteDcpoBot& source, const FiniteDcpoBot& target,
                             const std::vector<Index>& table) {
  bool ok = true;
  for_each_subset(source.size(), [&](const Subset& s) {
    if (!ok || !check_directed(source.poset(), s)) return;
    Subset image;
    for (Index x : s) image.push_back(table[x]);
    const auto in = lub(source.poset(), s);
    const auto out = lub(target.poset(), image);
    ok = in && out && table[*in] == *out;
  });
  return ok;
}

MonotoneMap::MonotoneMap(const FiniteDcpoBot& source, const FiniteDcpoBot& target, std::vector<Index> table)
    : source_(&source), target_(&target), table_(std::move(table)) {
  if (!is_monotone(source, target, table_)) throw InvalidStructure("table is not a monotone map");
}

Exponential exponential(const FiniteDcpoBot& d, const FiniteDcpoBot& e) {
  const std::size_t n = d.size();
  const std::size_t m = e.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kMaxExponentialTables / m) throw TooLarge("exponential carrier would exceed 10^6 tables");
    total *= m;
  }

  std::vector<std::vector<Index>> maps;
  std::vector<Index> table(n, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (Index i = 0; i < n; ++i) {
      table[i] = rest % m;
      rest /= m;
    }
    if (is_monotone(d, e, table)) maps.push_back(table);
  }

  std::vector<std::vector<bool>> leq(maps.size(), std::vector<bool>(maps.size()));
  std::optional<Index> bottom;
  for (Index f = 0; f < maps.size(); ++f) {
    bool constant_bottom = true;
    for (Index x = 0; x < n; ++x) constant_bottom = constant_bottom && maps[f][x] == e.bottom();
    if (constant_bottom) bottom = f;
    for (Index g = 0; g < maps.size(); ++g) {
      bool below = true;
      for (Index x = 0; x < n && below; ++x) below = e.leq(maps[f][x], maps[g][x]);
      leq[f][g] = below;
    }
  }
  return Exponential{FiniteDcpoBot(FinitePoset(std::move(leq)), *bottom), std::move(maps)};
}

Index least_fixed_point(const MonotoneMap& f) {
  if (&f.source() != &f.target() &&
      (f.source().poset().matrix() != f.target().poset().matrix() || f.source().bottom() != f.target().bottom())) {
    throw InvalidStructure("least fixed point needs an endomap");
  }
  Index x = f.source().bottom();
  for (std::size_t i = 0; i <= f.source().size(); ++i) {
    const Index next = f(x);
    if (next == x) return x;
    x = next;
  }
  throw std::logic_error("Kleene iteration did not stabilise on a finite carrier");
}

}  // namespace pcf::domain
