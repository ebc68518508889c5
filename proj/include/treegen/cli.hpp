#pragma once

// Command-line front end. run_cli is the whole program minus process
// plumbing so it can be driven in-process by tests.
//
// Exit codes: 0 success, 1 usage or parse error, 2 infeasible degrees,
// 3 instance too large for exhaustive enumeration.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treegen/degree.hpp"
#include "treegen/errors.hpp"
#include "treegen/oracle.hpp"
#include "treegen/random.hpp"
#include "treegen/sampler.hpp"
#include "treegen/stats.hpp"
#include "treegen/tree_codec.hpp"

namespace treegen::cli {

enum exit_code : int { ok = 0, usage = 1, infeasible = 2, oracle_too_large = 3 };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size())
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace detail

/// Parses "0,0,0,0,1,2,3" (list form) or "0:4,1:1,2:1,3:1" (multiset form).
inline DegreeMultiset parse_degree_spec(std::string_view spec) {
  std::vector<std::string_view> tokens;
  for (std::size_t start = 0;;) {
    const auto comma = spec.find(',', start);
    tokens.push_back(spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const bool multiset_form = spec.find(':') != std::string_view::npos;
  DegreeMultiset::Entries entries;
  for (auto token : tokens) {
    if (detail::trim(token).empty()) throw std::invalid_argument("empty entry in degree spec '" + std::string(spec) + "'");
    if (!multiset_form) {
      ++entries[detail::parse_unsigned(token, "degree")];
      continue;
    }
    const auto colon = token.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("entry '" + std::string(token) + "' lacks ':' in multiset-form degree spec");
    const auto degree = detail::parse_unsigned(token.substr(0, colon), "degree");
    const auto count = detail::parse_unsigned(token.substr(colon + 1), "multiplicity");
    if (count == 0) throw std::invalid_argument("multiplicity of degree " + std::to_string(degree) + " is zero");
    if (entries.contains(degree)) throw std::invalid_argument("degree " + std::to_string(degree) + " listed twice");
    entries[degree] = count;
  }
  return DegreeMultiset(std::move(entries));
}

/// JSON object mapping arity (string key) to a list of symbols.
inline OperatorAlphabet parse_alphabet(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("alphabet is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("alphabet must be a JSON object");
  OperatorAlphabet::Symbols symbols;
  for (const auto& [key, value] : doc.items()) {
    const auto arity = detail::parse_unsigned(key, "arity");
    if (!value.is_array()) throw std::invalid_argument("symbols for arity " + key + " must be an array");
    auto& list = symbols[arity];
    for (const auto& sym : value) {
      if (!sym.is_string()) throw std::invalid_argument("symbols for arity " + key + " must be strings");
      list.push_back(sym.get<std::string>());
    }
  }
  return OperatorAlphabet(std::move(symbols));
}

enum class TreeFormat { prefix, sexpr, dot, json };

inline void write_tree(std::ostream& out, const DegreeSequence& code, TreeFormat format) {
  switch (format) {
    case TreeFormat::prefix:
      out << to_prefix_text(code) << '\n';
      break;
    case TreeFormat::sexpr:
      out << to_sexpr(decode_prefix(code)) << '\n';
      break;
    case TreeFormat::dot:
      out << to_dot(decode_prefix(code));
      break;
    case TreeFormat::json:
      out << to_json(decode_prefix(code)) << '\n';
      break;
  }
}

// DOT records span several lines; a blank line separates them.
inline void write_separator(std::ostream& out, TreeFormat format, std::size_t index) {
  if (format == TreeFormat::dot && index > 0) out << '\n';
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform random ordered trees with a prescribed outdegree multiset"};
  app.name("treegen");
  app.require_subcommand(1);

  const std::map<std::string, TreeFormat> formats{
      {"prefix", TreeFormat::prefix}, {"sexpr", TreeFormat::sexpr}, {"dot", TreeFormat::dot}, {"json", TreeFormat::json}};
  const std::map<std::string, ExpressionStyle> styles{{"prefix", ExpressionStyle::prefix},
                                                      {"infix", ExpressionStyle::infix}};

  std::string degrees;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 1;
  std::uint64_t samples = 0;
  std::size_t max_nodes = default_exhaustive_bound;
  TreeFormat format = TreeFormat::prefix;
  ExpressionStyle style = ExpressionStyle::infix;
  std::string alphabet_path;

  auto add_degrees = [&](CLI::App* cmd) {
    cmd->add_option("--degrees", degrees, "Degree spec: list \"0,0,2\" or multiset \"0:2,2:1\"")->required();
  };
  auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", seed, "Generator seed (default: from system entropy)"); };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_bound = [&](CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "Largest instance enumerated exhaustively")->capture_default_str();
  };

  auto* check_cmd = app.add_subcommand("check", "Print charge and feasibility");
  add_degrees(check_cmd);

  auto* sample_cmd = app.add_subcommand("sample", "Sample uniformly random trees");
  add_degrees(sample_cmd);
  add_seed(sample_cmd);
  sample_cmd->add_option("--count", count, "Number of trees")->check(CLI::PositiveNumber);
  add_format(sample_cmd);

  auto* count_cmd = app.add_subcommand("count", "Print the exact number of trees");
  add_degrees(count_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Print every tree in lexicographic prefix order");
  add_degrees(enumerate_cmd);
  add_format(enumerate_cmd);
  add_bound(enumerate_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "Chi-square uniformity report as JSON");
  add_degrees(stats_cmd);
  stats_cmd->add_option("--samples", samples, "Number of samples")->required()->check(CLI::PositiveNumber);
  add_seed(stats_cmd);
  add_bound(stats_cmd);

  auto* fuzz_cmd = app.add_subcommand("fuzz-expr", "Render random trees as operator expressions");
  add_degrees(fuzz_cmd);
  fuzz_cmd->add_option("--alphabet", alphabet_path, "JSON file mapping arity to symbols")->required();
  add_seed(fuzz_cmd);
  fuzz_cmd->add_option("--count", count, "Number of expressions")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--style", style, "Expression style")->transform(CLI::CheckedTransformer(styles, CLI::ignore_case));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  auto resolve_seed = [&]() {
    if (!seed) {
      std::random_device entropy;
      seed = (std::uint64_t{entropy()} << 32) | entropy();
      err << "seed=" << *seed << '\n';
    }
    return *seed;
  };

  try {
    const DegreeMultiset multiset = parse_degree_spec(degrees);

    if (check_cmd->parsed()) {
      Charge c = 0;
      try {
        c = charge(multiset);
      } catch (const charge_overflow&) {
        out << "charge=overflow constructible=false\n";
        return infeasible;
      }
      out << "charge=" << c << " constructible=" << (c == 1 ? "true" : "false") << '\n';
      return c == 1 ? ok : infeasible;
    }

    if (sample_cmd->parsed()) {
      RandomSource rng(resolve_seed());
      for (std::uint64_t i = 0; i < count; ++i) {
        write_separator(out, format, i);
        write_tree(out, sample_tree(multiset, rng), format);
      }
      return ok;
    }

    if (count_cmd->parsed()) {
      out << count_trees(multiset) << '\n';
      return ok;
    }

    if (enumerate_cmd->parsed()) {
      const Charge c = charge(multiset);
      if (c != 1) throw not_constructible(c);
      std::size_t index = 0;
      for (const auto& code : enumerate_trees(multiset, max_nodes)) {
        write_separator(out, format, index++);
        write_tree(out, code, format);
      }
      return ok;
    }

    if (stats_cmd->parsed()) {
      RandomSource rng(resolve_seed());
      out << to_json(uniformity_report(multiset, samples, rng, max_nodes)) << '\n';
      return ok;
    }

    if (fuzz_cmd->parsed()) {
      const Charge c = charge(multiset);
      if (c != 1) throw not_constructible(c);
      std::ifstream file(alphabet_path);
      if (!file) throw std::invalid_argument("cannot read alphabet file '" + alphabet_path + "'");
      std::stringstream buffer;
      buffer << file.rdbuf();
      const OperatorAlphabet alphabet = parse_alphabet(buffer.str());
      for (const auto& [degree, n] : multiset.entries())
        if (!alphabet.covers(degree)) throw missing_arity(degree);

      // Trees and symbols come from separate streams so labeling never
      // perturbs the shape sequence.
      const std::uint64_t base = resolve_seed();
      RandomSource tree_rng(base);
      RandomSource label_rng(derive_seed(base, 1));
      for (std::uint64_t i = 0; i < count; ++i) {
        const TreeNode tree = decode_prefix(sample_tree(multiset, tree_rng));
        out << render_expression(tree, alphabet, label_rng, style) << '\n';
      }
      return ok;
    }
  } catch (const not_constructible& e) {
    err << "error: " << e.what() << '\n';
    return infeasible;
  } catch (const charge_overflow& e) {
    err << "error: " << e.what() << '\n';
    return infeasible;
  } catch (const too_large& e) {
    err << "error: " << e.what() << '\n';
    return oracle_too_large;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace treegen::cli
