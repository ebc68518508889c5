#pragma once

// Degree sequences, degree multisets and the charge function.
//
// The charge of a sequence or multiset of nodes is the number of nodes minus
// the sum of their outdegrees. A multiset of nodes can be assembled into a
// single ordered tree exactly when its charge is 1, and a sequence is a
// prefix (Polish) code of a tree exactly when its charge is 1 and no proper
// prefix reaches charge 1.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "treegen/errors.hpp"

namespace treegen {

using Degree = std::uint64_t;
using Charge = std::int64_t;
using DegreeSequence = std::vector<Degree>;

namespace detail {

inline Charge checked_add(Charge a, Charge b) {
  Charge out;
  if (__builtin_add_overflow(a, b, &out)) throw charge_overflow();
  return out;
}

// 1 - d, representable for d <= 2^63.
inline Charge node_charge(Degree d) {
  constexpr Degree limit = Degree{1} << 63;
  if (d > limit) throw charge_overflow();
  return d == limit ? std::numeric_limits<Charge>::min() + 1 : Charge{1} - static_cast<Charge>(d);
}

}  // namespace detail

/// Bag of outdegrees with multiplicities. Always holds at least one node.
class DegreeMultiset {
 public:
  using Entries = std::map<Degree, std::size_t>;

  explicit DegreeMultiset(Entries entries) : entries_(std::move(entries)) {
    for (const auto& [degree, count] : entries_) {
      if (count == 0) throw std::invalid_argument("multiplicity of degree " + std::to_string(degree) + " is zero");
      if (__builtin_add_overflow(total_, count, &total_)) throw std::invalid_argument("too many nodes");
    }
    if (total_ == 0) throw std::invalid_argument("degree multiset is empty");
  }

  DegreeMultiset(std::initializer_list<Entries::value_type> entries) : DegreeMultiset(Entries(entries)) {}

  static DegreeMultiset from_sequence(std::span<const Degree> degrees) {
    Entries entries;
    for (Degree d : degrees) ++entries[d];
    return DegreeMultiset(std::move(entries));
  }

  const Entries& entries() const noexcept { return entries_; }
  std::size_t total_nodes() const noexcept { return total_; }

  std::size_t multiplicity(Degree d) const {
    auto it = entries_.find(d);
    return it == entries_.end() ? 0 : it->second;
  }

  // Canonical ordering: ascending by degree.
  DegreeSequence expand() const {
    DegreeSequence out;
    out.reserve(total_);
    for (const auto& [degree, count] : entries_) out.insert(out.end(), count, degree);
    return out;
  }

  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;

 private:
  Entries entries_;
  std::size_t total_ = 0;
};

inline Charge charge(std::span<const Degree> s) {
  Charge total = 0;
  for (Degree d : s) total = detail::checked_add(total, detail::node_charge(d));
  return total;
}

inline Charge charge(const DegreeMultiset& m) {
  Charge total = 0;
  for (const auto& [degree, count] : m.entries()) {
    Charge per = detail::node_charge(degree);
    if (count > static_cast<std::size_t>(std::numeric_limits<Charge>::max())) throw charge_overflow();
    Charge part;
    if (__builtin_mul_overflow(per, static_cast<Charge>(count), &part)) throw charge_overflow();
    total = detail::checked_add(total, part);
  }
  return total;
}

inline bool is_constructible(const DegreeMultiset& m) { return charge(m) == 1; }

/// Element i is the charge of s[0..i].
inline std::vector<Charge> prefix_charges(std::span<const Degree> s) {
  std::vector<Charge> out;
  out.reserve(s.size());
  Charge running = 0;
  for (Degree d : s) {
    running = detail::checked_add(running, detail::node_charge(d));
    out.push_back(running);
  }
  return out;
}

inline bool is_well_formed(std::span<const Degree> s) {
  if (s.empty()) return false;
  Charge running = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    running = detail::checked_add(running, detail::node_charge(s[i]));
    if (running > 0) return i + 1 == s.size() && running == 1;
  }
  return false;
}

/// A charge-1 sequence split as u ++ w, where u is the longest leading run of
/// complete expressions (h of them) and w is the deficient tail.
struct SegmentDecomposition {
  std::size_t complete_prefix_length = 0;
  std::size_t complete_expression_count = 0;
  Charge tail_charge = 0;

  friend bool operator==(const SegmentDecomposition&, const SegmentDecomposition&) = default;
};

// Greedy: each expression is the shortest prefix of the remainder whose
// charge reaches 1.
inline SegmentDecomposition decompose(std::span<const Degree> s) {
  const Charge total = charge(s);
  if (total != 1) throw charge_not_one(total);

  SegmentDecomposition out;
  std::size_t start = 0;
  while (start < s.size()) {
    Charge running = 0;
    std::size_t end = start;
    bool complete = false;
    while (end < s.size()) {
      running += detail::node_charge(s[end++]);
      if (running == 1) {
        complete = true;
        break;
      }
    }
    if (!complete) break;
    ++out.complete_expression_count;
    out.complete_prefix_length = end;
    start = end;
  }
  out.tail_charge = total - static_cast<Charge>(out.complete_expression_count);
  return out;
}

}  // namespace treegen
