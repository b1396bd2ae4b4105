#include "pcf/relations.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <string>

namespace pcf {

bool FiniteRelation::single_valued() const {
  std::set<std::size_t> sources;
  for (const auto& [src, dst] : edges) {
    if (!sources.insert(src).second) return false;
  }
  return true;
}

FiniteRelation parse_finite_relation(std::string_view text) {
  std::istringstream in{std::string(text)};
  FiniteRelation g;
  if (!(in >> g.node_count)) throw InvalidStructure("relation fixture: missing node count");
  std::size_t src = 0;
  std::size_t dst = 0;
  while (in >> src) {
    if (!(in >> dst)) throw InvalidStructure("relation fixture: dangling source " + std::to_string(src));
    if (src >= g.node_count || dst >= g.node_count) {
      throw InvalidStructure("relation fixture: edge out of range");
    }
    g.edges.emplace_back(src, dst);
  }
  if (!in.eof()) throw InvalidStructure("relation fixture: malformed edge line");
  return g;
}

std::map<std::size_t, std::size_t> bfs_closure_oracle(const FiniteRelation& g, std::size_t source) {
  std::vector<std::vector<std::size_t>> adjacency(g.node_count);
  for (const auto& [src, dst] : g.edges) adjacency.at(src).push_back(dst);

  std::map<std::size_t, std::size_t> distance{{source, 0}};
  std::deque<std::size_t> queue{source};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adjacency[x]) {
      if (distance.emplace(y, distance[x] + 1).second) queue.push_back(y);
    }
  }
  return distance;
}

FiniteStepFunction::FiniteStepFunction(const FiniteRelation& g) : successor_(g.node_count) {
  if (!g.single_valued()) throw InvalidStructure("relation is not single-valued");
  for (const auto& [src, dst] : g.edges) {
    if (src >= g.node_count || dst >= g.node_count) throw InvalidStructure("edge out of range");
    successor_[src] = dst;
  }
}

}  // namespace pcf
