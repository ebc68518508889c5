#pragma once

// Brute-force reference routines shared by the test suites. None of these
// call into the code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "treegen/degree.hpp"

namespace treegen::testing {

// Calls fn(seq) for every sequence of length 0..max_len over {0..max_degree}.
inline void for_each_sequence(std::size_t max_len, Degree max_degree,
                              const std::function<void(const DegreeSequence&)>& fn) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    DegreeSequence s(len, 0);
    for (;;) {
      fn(s);
      std::size_t i = 0;
      while (i < len && s[i] == max_degree) s[i++] = 0;
      if (i == len) break;
      ++s[i];
    }
  }
}

inline std::int64_t direct_charge(const DegreeSequence& s) {
  std::int64_t c = 0;
  for (Degree d : s) c += 1 - static_cast<std::int64_t>(d);
  return c;
}

// Recursive reading of the Polish-notation definition: a symbol of arity k
// followed by k expressions.
inline bool parse_expression(const DegreeSequence& s, std::size_t& pos) {
  if (pos >= s.size()) return false;
  const Degree arity = s[pos++];
  for (Degree i = 0; i < arity; ++i)
    if (!parse_expression(s, pos)) return false;
  return true;
}

inline bool reference_well_formed(const DegreeSequence& s) {
  std::size_t pos = 0;
  return parse_expression(s, pos) && pos == s.size();
}

// Every multiset of total size 1..max_nodes over degrees {0..max_degree},
// feasible or not.
inline std::vector<DegreeMultiset> multiset_family(std::size_t max_nodes, Degree max_degree) {
  std::vector<DegreeMultiset> out;
  std::vector<std::size_t> counts(max_degree + 1, 0);
  for (;;) {
    const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    if (total >= 1 && total <= max_nodes) {
      DegreeMultiset::Entries entries;
      for (Degree d = 0; d <= max_degree; ++d)
        if (counts[d] > 0) entries[d] = counts[d];
      out.emplace_back(std::move(entries));
    }
    std::size_t i = 0;
    while (i < counts.size() && counts[i] == max_nodes) counts[i++] = 0;
    if (i == counts.size()) break;
    ++counts[i];
  }
  return out;
}

inline std::int64_t direct_charge(const DegreeMultiset& m) {
  std::int64_t c = 0;
  for (const auto& [d, k] : m.entries()) c += static_cast<std::int64_t>(k) * (1 - static_cast<std::int64_t>(d));
  return c;
}

// All distinct well-formed arrangements, found by trying every labeled
// ordering of the nodes.
inline std::set<DegreeSequence> brute_force_trees(const DegreeMultiset& m) {
  DegreeSequence nodes;
  for (const auto& [d, k] : m.entries()) nodes.insert(nodes.end(), k, d);
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::set<DegreeSequence> out;
  DegreeSequence s(nodes.size());
  do {
    for (std::size_t i = 0; i < order.size(); ++i) s[i] = nodes[order[i]];
    if (reference_well_formed(s)) out.insert(s);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline std::uint64_t small_factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace treegen::testing
