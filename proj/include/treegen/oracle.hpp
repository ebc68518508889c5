#pragma once

// Exact counting and exhaustive enumeration of trees for a degree multiset.
//
// A multiset with n nodes and multiplicities m_d has n!/prod(m_d!) distinct
// arrangements; exactly 1/n of them are prefix codes, hence
//   count = (n-1)! / prod(m_d!).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treegen/degree.hpp"
#include "treegen/errors.hpp"

namespace treegen {

using TreeCount = boost::multiprecision::cpp_int;

inline constexpr std::size_t default_exhaustive_bound = 10;

inline TreeCount factorial(std::size_t n) {
  TreeCount out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

/// n!/prod(m_d!): arrangements that differ as sequences.
inline TreeCount distinct_arrangements(const DegreeMultiset& m) {
  TreeCount out = factorial(m.total_nodes());
  for (const auto& [degree, count] : m.entries()) out /= factorial(count);
  return out;
}

inline TreeCount count_trees(const DegreeMultiset& m) {
  const Charge c = charge(m);
  if (c != 1) throw not_constructible(c);
  const TreeCount arrangements = distinct_arrangements(m);
  const TreeCount n = m.total_nodes();
  if (arrangements % n != 0) throw invariant_violation("arrangement count is not divisible by the node count");
  return arrangements / n;
}

/// (2n)! / (n! (n+1)!)
inline TreeCount catalan(std::size_t n) { return factorial(2 * n) / (factorial(n) * factorial(n + 1)); }

/// Leaves needed to complete n binary nodes into a tree: C + l = 1 gives l = n + 1.
inline std::size_t binary_leaf_count(std::size_t n) { return n + 1; }

/// All well-formed arrangements of m, in lexicographic order.
inline std::set<DegreeSequence> enumerate_trees(const DegreeMultiset& m,
                                                std::size_t bound = default_exhaustive_bound) {
  if (m.total_nodes() > bound) throw too_large(m.total_nodes(), bound);
  std::set<DegreeSequence> out;
  if (charge(m) != 1) return out;
  // next_permutation over a sorted multiset visits each distinct
  // arrangement once, in lexicographic order.
  DegreeSequence s = m.expand();
  do {
    if (is_well_formed(s)) out.insert(out.end(), s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

// Calls visit(sequence) for each of the n! orderings of the multiset's
// nodes, treating equal degrees at different positions as distinct.
template <typename Visit>
void for_each_labeled_ordering(const DegreeMultiset& m, Visit&& visit,
                               std::size_t bound = default_exhaustive_bound) {
  if (m.total_nodes() > bound) throw too_large(m.total_nodes(), bound);
  const DegreeSequence nodes = m.expand();
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  DegreeSequence s(nodes.size());
  do {
    for (std::size_t i = 0; i < order.size(); ++i) s[i] = nodes[order[i]];
    visit(std::as_const(s));
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace treegen
