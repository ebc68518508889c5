// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Build in Release; the timing criteria assume optimized code.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "golden_cases.hpp"
#include "test_support.hpp"
#include "treegen/cli.hpp"
#include "treegen/treegen.hpp"

namespace {

using namespace treegen;
using clock_type = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

int failures = 0;

void report(int id, const char* title, const Outcome& o, double elapsed) {
  std::printf("%s  [%d] %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, elapsed,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

// Criteria 1 and 2 share one sweep over all sequences of length <= 9 with
// entries in {0..4}.
void correction_and_uniqueness() {
  Outcome correction, uniqueness;
  std::size_t charge_one = 0, well_formed = 0;
  const auto start = clock_type::now();
  testing::for_each_sequence(9, 4, [&](const DegreeSequence& s) {
    if (testing::direct_charge(s) != 1) return;
    ++charge_one;
    const auto fixed = rotate(s, static_cast<std::int64_t>(find_rotation_point(s)));
    correction.require(is_well_formed(fixed) && testing::reference_well_formed(fixed),
                       "rotation did not produce a well-formed code for " + to_prefix_text(s));
    if (!testing::reference_well_formed(s)) return;
    ++well_formed;
    for (std::size_t j = 1; j < s.size(); ++j)
      uniqueness.require(!is_well_formed(rotate(s, static_cast<std::int64_t>(j))),
                         "non-identity rotation of " + to_prefix_text(s) + " is well-formed");
  });
  const double elapsed = seconds_since(start);
  correction.require(charge_one > 0, "sweep visited no charge-1 sequences");
  correction.require(elapsed < 30.0, "sweep exceeded 30 s");
  uniqueness.require(well_formed > 0, "sweep visited no well-formed sequences");
  uniqueness.require(elapsed < 30.0, "sweep exceeded 30 s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "exhaustive correction sweep, %zu charge-1 sequences", charge_one);
  report(1, buf, correction, elapsed);
  std::snprintf(buf, sizeof buf, "rotation uniqueness, %zu well-formed sequences", well_formed);
  report(2, buf, uniqueness, elapsed);
}

// Criteria 3 and 6 share the n! labeled-ordering pass.
void derandomized_uniformity_and_one_in_n() {
  Outcome uniform, one_in_n;
  std::size_t instances = 0;
  const auto start = clock_type::now();
  for (const auto& m : testing::multiset_family(8, 4)) {
    if (testing::direct_charge(m) != 1) continue;
    ++instances;
    const std::size_t n = m.total_nodes();
    std::uint64_t orderings = 0, well_formed = 0;
    std::map<DegreeSequence, std::uint64_t> hits;
    for_each_labeled_ordering(m, [&](const DegreeSequence& s) {
      ++orderings;
      if (is_well_formed(s)) ++well_formed;
      ++hits[rotate(s, static_cast<std::int64_t>(find_rotation_point(s)))];
    });
    std::uint64_t per_tree = n;
    for (const auto& [d, k] : m.entries()) per_tree *= testing::small_factorial(k);
    const auto support = testing::brute_force_trees(m);
    const std::string name = to_prefix_text(m.expand());
    uniform.require(hits.size() == support.size(), "wrong number of distinct codes for " + name);
    for (const auto& [code, count] : hits) {
      uniform.require(support.contains(code), "produced a non-tree for " + name);
      uniform.require(count == per_tree, "uneven hit count for " + name);
    }
    one_in_n.require(orderings == testing::small_factorial(n), "ordering count for " + name);
    one_in_n.require(well_formed * n == orderings, "well-formed fraction is not 1/n for " + name);
  }
  const double elapsed = seconds_since(start);
  uniform.require(elapsed < 60.0, "exceeded 60 s");
  one_in_n.require(instances > 0, "no instances");
  std::string title3 = "derandomized uniformity over " + std::to_string(instances) + " multisets (n <= 8)";
  report(3, title3.c_str(), uniform, elapsed);
  report(6, "1/n law over all labeled orderings (n <= 8)", one_in_n, elapsed);
}

void counting_agreement() {
  Outcome o;
  std::size_t instances = 0;
  const auto start = clock_type::now();
  for (const auto& m : testing::multiset_family(9, 4)) {
    if (!is_constructible(m)) continue;
    ++instances;
    try {
      o.require(count_trees(m) == TreeCount(enumerate_trees(m).size()),
                "count/enumeration mismatch for " + to_prefix_text(m.expand()));
    } catch (const invariant_violation& e) {
      o.require(false, e.what());
    }
  }
  const DegreeMultiset fig({{0, 4}, {1, 1}, {2, 1}, {3, 1}});
  o.require(count_trees(fig) == 30 && enumerate_trees(fig).size() == 30, "figure instance does not give 30");
  const double elapsed = seconds_since(start);
  o.require(elapsed < 60.0, "exceeded 60 s");
  std::string title = "count_trees equals enumeration over " + std::to_string(instances) + " multisets (n <= 9)";
  report(4, title.c_str(), o, elapsed);
}

void catalan_reproduction() {
  Outcome o;
  const auto start = clock_type::now();
  for (std::size_t n = 0; n <= 8; ++n) {
    const DegreeMultiset m = n == 0 ? DegreeMultiset({{0, 1}}) : DegreeMultiset({{0, n + 1}, {2, n}});
    o.require(catalan(n) == count_trees(m), "catalan(" + std::to_string(n) + ") differs from count_trees");
  }
  o.require(catalan(3) == 5 && enumerate_trees(DegreeMultiset({{0, 4}, {2, 3}})).size() == 5, "catalan(3)");
  o.require(catalan(4) == 14 && enumerate_trees(DegreeMultiset({{0, 5}, {2, 4}})).size() == 14, "catalan(4)");
  const double elapsed = seconds_since(start);
  o.require(elapsed < 10.0, "exceeded 10 s");
  report(5, "Catalan numbers from the 1/n count (n <= 8)", o, elapsed);
}

void statistical_uniformity() {
  constexpr double chi_square_29_0995 = 52.34;  // 0.995 quantile, 29 df
  Outcome o;
  const DegreeMultiset fig({{0, 4}, {1, 1}, {2, 1}, {3, 1}});
  const auto support = enumerate_trees(fig);
  int below = 0;
  std::string values;
  const auto start = clock_type::now();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RandomSource r(seed);
    const auto rep = uniformity_report(fig, 30000, r);
    o.require(rep.degrees_of_freedom == 29 && rep.outcome_counts.size() == 30, "outcome space is not 30");
    for (const auto& [code, count] : rep.outcome_counts)
      o.require(support.contains(code), "observed outcome outside the enumerated set");
    if (rep.chi_square < chi_square_29_0995) ++below;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.2f", values.empty() ? "" : " ", rep.chi_square);
    values += buf;
  }
  const double elapsed = seconds_since(start);
  o.require(below >= 4, "fewer than 4 of 5 seeds below 52.34");
  o.require(elapsed < 10.0, "exceeded 10 s");
  std::string title = "chi-square uniformity, seeds 1..5: " + values;
  report(7, title.c_str(), o, elapsed);
}

double median_sample_seconds(const DegreeMultiset& m, int runs, std::uint64_t seed) {
  std::vector<double> times;
  RandomSource r(seed);
  for (int i = 0; i < runs; ++i) {
    const auto start = clock_type::now();
    const auto s = sample_tree(m, r);
    times.push_back(seconds_since(start));
    if (s.size() != m.total_nodes()) return 1e9;
  }
  std::sort(times.begin(), times.end());
  return (times[runs / 2 - 1] + times[runs / 2]) / 2;
}

void linear_time() {
  Outcome o;
  const auto start = clock_type::now();
  // Exactly n nodes: one unary node, n/2 - 1 binary nodes, n/2 leaves.
  auto instance = [](std::size_t n) { return DegreeMultiset({{0, n / 2}, {1, 1}, {2, n / 2 - 1}}); };
  const auto million = instance(1000000);
  const auto four_million = instance(4000000);
  o.require(is_constructible(million) && million.total_nodes() == 1000000, "bad 10^6 instance");
  o.require(is_constructible(four_million) && four_million.total_nodes() == 4000000, "bad 4x10^6 instance");

  RandomSource r(1);
  const auto single = clock_type::now();
  const auto s = sample_tree(million, r);
  const double once = seconds_since(single);
  o.require(is_well_formed(s), "10^6-node sample is not a tree");
  o.require(once < 1.0, "10^6-node sample took >= 1 s");

  const double small = median_sample_seconds(million, 10, 2);
  const double large = median_sample_seconds(four_million, 10, 3);
  const double ratio = large / small;
  o.require(ratio <= 6.0, "4x size took more than 6x time");
  char title[160];
  std::snprintf(title, sizeof title, "linear time: 10^6 nodes %.3f s, median ratio 4x10^6 / 10^6 = %.2f", once, ratio);
  report(8, title, o, seconds_since(start));
}

void round_trips() {
  Outcome o;
  const auto start = clock_type::now();
  std::size_t codes = 0;
  testing::for_each_sequence(9, 4, [&](const DegreeSequence& s) {
    if (!testing::reference_well_formed(s)) return;
    ++codes;
    o.require(encode_prefix(decode_prefix(s)) == s, "encode/decode mismatch for " + to_prefix_text(s));
  });

  auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return std::make_pair(code, out.str());
  };
  for (const auto& g : testing::goldens()) {
    const auto first = run(g.args);
    o.require(first.first == 0, std::string(g.file) + " exited nonzero");
    o.require(first == run(g.args), std::string(g.file) + " is not deterministic");
    o.require(first.second == testing::read_file(testing::golden_dir + g.file),
              std::string(g.file) + " differs from golden file");
  }

  // --format sexpr decodes to the same trees as --format prefix.
  const std::vector<std::string> base{"sample", "--degrees", "0:8,1:2,2:5,3:1", "--seed", "13", "--count", "25"};
  auto with_sexpr = base;
  with_sexpr.insert(with_sexpr.end(), {"--format", "sexpr"});
  std::istringstream prefix_lines(run(base).second), sexpr_lines(run(with_sexpr).second);
  std::string pl, sl;
  int lines = 0;
  while (std::getline(prefix_lines, pl) && std::getline(sexpr_lines, sl)) {
    DegreeSequence code;
    std::istringstream toks(pl);
    for (Degree d; toks >> d;) code.push_back(d);
    o.require(to_sexpr(decode_prefix(code)) == sl, "sexpr and prefix outputs disagree");
    ++lines;
  }
  o.require(lines == 25, "format equivalence compared too few lines");

  // List and multiset spellings of one multiset give identical output.
  o.require(run({"sample", "--degrees", "3,0,2,0,1,0,0", "--seed", "5", "--count", "20"}) ==
                run({"sample", "--degrees", "0:4,1:1,2:1,3:1", "--seed", "5", "--count", "20"}),
            "list and multiset forms differ");

  std::string title = "round trips on " + std::to_string(codes) + " codes and " +
                      std::to_string(testing::goldens().size()) + " CLI golden files";
  report(9, title.c_str(), o, seconds_since(start));
}

}  // namespace

int main() {
  correction_and_uniqueness();
  derandomized_uniformity_and_one_in_n();
  counting_agreement();
  catalan_reproduction();
  statistical_uniformity();
  linear_time();
  round_trips();
  std::printf("%s: %d criterion/criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
