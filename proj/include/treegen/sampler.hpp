#pragma once

// Uniform sampling of ordered trees with a prescribed outdegree multiset.
//
// A uniformly shuffled arrangement of the degrees is turned into a prefix
// code by rotating it: among the n rotations of any charge-1 sequence exactly
// one is well-formed, so every tree receives the same number of arrangements.
//
// Index convention: rotation points are reported 1-based, as the number k of
// leading elements that move to the back. Within a 0-based container the
// last element of the moved block is at k - 1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <utility>

#include "treegen/degree.hpp"
#include "treegen/errors.hpp"
#include "treegen/random.hpp"

namespace treegen {

// Fisher-Yates, drawing j uniformly from [0, i) for i = n down to 2. Swap
// targets depend only on the draws, so they are drawn a window ahead and
// prefetched; the draw sequence and result are those of the plain loop.
template <typename T, BoundedRandom R>
void shuffle_in_place(std::span<T> s, R& r) {
  constexpr std::size_t window = 32;
  const std::size_t n = s.size();
  if (n < 2) return;
  const std::size_t swaps = n - 1;
  std::array<std::size_t, window> ahead;
  std::size_t drawn = 0;
  auto draw = [&] {
    const auto j = static_cast<std::size_t>(r.next_below(n - drawn));
    __builtin_prefetch(s.data() + j, 1);
    ahead[drawn % window] = j;
    ++drawn;
  };
  while (drawn < swaps && drawn < window) draw();
  for (std::size_t t = 0; t < swaps; ++t) {
    std::swap(s[n - 1 - t], s[ahead[t % window]]);
    if (drawn < swaps) draw();
  }
}

template <BoundedRandom R>
DegreeSequence fisher_yates_shuffle(DegreeSequence s, R& r) {
  shuffle_in_place(std::span<Degree>(s), r);
  return s;
}

/// Running state of the rotation-point scan.
struct ScanState {
  Charge running_charge = 0;      // charge since the last reset
  std::size_t last_reset_index = 0;  // 1-based end of the last complete expression, 0 if none
  Charge total_charge = 0;

  // Feed the element at 1-based position `index`.
  void advance(std::size_t index, Degree d) { advance_by(index, detail::node_charge(d)); }

  void advance_by(std::size_t index, Charge c) {
    total_charge = detail::checked_add(total_charge, c);
    running_charge += c;
    if (running_charge == 1) {
      running_charge = 0;
      last_reset_index = index;
    }
  }
};

/// 1-based end of the last complete leading expression of a charge-1 sequence.
inline std::size_t find_rotation_point(std::span<const Degree> s) {
  ScanState state;
  for (std::size_t i = 0; i < s.size(); ++i) state.advance(i + 1, s[i]);
  if (state.total_charge != 1) throw charge_not_one(state.total_charge);
  if (state.last_reset_index == 0) throw invariant_violation("charge-1 sequence has no complete leading expression");
  return state.last_reset_index;
}

/// s[k..] ++ s[..k] with k counted 1-based as in find_rotation_point.
inline DegreeSequence rotate(std::span<const Degree> s, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > s.size()) throw index_out_of_range(k, s.size());
  DegreeSequence out;
  out.reserve(s.size());
  out.insert(out.end(), s.begin() + k, s.end());
  out.insert(out.end(), s.begin(), s.begin() + k);
  return out;
}

/// Rotates a charge-1 sequence into the unique well-formed rotation.
inline DegreeSequence correct_by_rotation(std::span<const Degree> s) {
  return rotate(s, static_cast<std::int64_t>(find_rotation_point(s)));
}

namespace detail {

// Shuffles indices into the ascending table of distinct degrees rather than
// the degrees themselves; the smaller element type keeps the random swaps
// in cache. The index order matches the degree order, so with the same
// draws the result equals shuffling m.expand() directly.
template <typename Index, BoundedRandom R>
DegreeSequence sample_by_symbol_index(const DegreeMultiset& m, R& r) {
  std::vector<Degree> symbols;
  std::vector<Charge> charges;
  std::vector<Index> order;
  order.reserve(m.total_nodes());
  for (const auto& [degree, count] : m.entries()) {
    order.insert(order.end(), count, static_cast<Index>(symbols.size()));
    symbols.push_back(degree);
    charges.push_back(node_charge(degree));
  }
  shuffle_in_place(std::span<Index>(order), r);

  ScanState state;
  for (std::size_t i = 0; i < order.size(); ++i) state.advance_by(i + 1, charges[order[i]]);
  if (state.total_charge != 1) throw charge_not_one(state.total_charge);
  if (state.last_reset_index == 0) throw invariant_violation("charge-1 sequence has no complete leading expression");

  // Emit the rotation directly: positions k+1..n, then 1..k.
  const std::size_t k = state.last_reset_index;
  DegreeSequence out;
  out.reserve(order.size());
  for (std::size_t i = k; i < order.size(); ++i) out.push_back(symbols[order[i]]);
  for (std::size_t i = 0; i < k; ++i) out.push_back(symbols[order[i]]);
  return out;
}

}  // namespace detail

// Linear in total_nodes: one shuffle, one scan, one rotated copy.
template <BoundedRandom R>
DegreeSequence sample_tree(const DegreeMultiset& m, R& r) {
  const Charge c = charge(m);
  if (c != 1) throw not_constructible(c);
  const std::size_t distinct = m.entries().size();
  if (distinct <= 0x100) return detail::sample_by_symbol_index<std::uint8_t>(m, r);
  if (distinct <= 0x10000) return detail::sample_by_symbol_index<std::uint16_t>(m, r);
  if (distinct <= 0xffffffff) return detail::sample_by_symbol_index<std::uint32_t>(m, r);
  return detail::sample_by_symbol_index<std::size_t>(m, r);
}

}  // namespace treegen
