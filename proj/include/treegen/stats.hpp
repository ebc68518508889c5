#pragma once

// Empirical frequency check of the sampler over an enumerable outcome space.

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "treegen/degree.hpp"
#include "treegen/errors.hpp"
#include "treegen/oracle.hpp"
#include "treegen/random.hpp"
#include "treegen/sampler.hpp"

namespace treegen {

struct FrequencyReport {
  std::map<DegreeSequence, std::uint64_t> outcome_counts;  // every possible tree, zero counts included
  std::uint64_t total_samples = 0;
  double chi_square = 0.0;
  std::uint64_t degrees_of_freedom = 0;
  std::uint64_t seed = 0;
};

// Draws `samples` trees and tabulates them against the enumerated outcome
// space. The report carries the statistic only; thresholds are up to the
// caller.
inline FrequencyReport uniformity_report(const DegreeMultiset& m, std::uint64_t samples, RandomSource& r,
                                         std::size_t bound = default_exhaustive_bound) {
  if (samples == 0) throw std::invalid_argument("sample count must be positive");
  const Charge c = charge(m);
  if (c != 1) throw not_constructible(c);

  FrequencyReport report;
  report.seed = r.seed();
  report.total_samples = samples;
  for (auto& code : enumerate_trees(m, bound)) report.outcome_counts.emplace_hint(report.outcome_counts.end(), code, 0);

  for (std::uint64_t i = 0; i < samples; ++i) {
    auto it = report.outcome_counts.find(sample_tree(m, r));
    if (it == report.outcome_counts.end()) throw invariant_violation("sampled a sequence outside the outcome space");
    ++it->second;
  }

  const auto outcomes = report.outcome_counts.size();
  report.degrees_of_freedom = outcomes - 1;
  if (outcomes > 1) {
    const double expected = static_cast<double>(samples) / static_cast<double>(outcomes);
    for (const auto& [code, observed] : report.outcome_counts) {
      const double diff = static_cast<double>(observed) - expected;
      report.chi_square += diff * diff / expected;
    }
  }
  return report;
}

inline nlohmann::ordered_json to_json_value(const FrequencyReport& report) {
  nlohmann::ordered_json outcomes = nlohmann::ordered_json::array();
  for (const auto& [code, count] : report.outcome_counts)
    outcomes.push_back(nlohmann::ordered_json{{"code", code}, {"count", count}});
  return nlohmann::ordered_json{{"seed", report.seed},
                                {"samples", report.total_samples},
                                {"outcomes", std::move(outcomes)},
                                {"chi_square", report.chi_square},
                                {"df", report.degrees_of_freedom}};
}

inline std::string to_json(const FrequencyReport& report) { return to_json_value(report).dump(); }

}  // namespace treegen
