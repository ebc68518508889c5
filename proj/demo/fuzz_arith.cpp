// Prints random fully parenthesized arithmetic expressions with a fixed
// operator mix: 12 binary operators, 3 unary, 13 atoms.

#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "treegen/treegen.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  const int count = argc > 2 ? std::atoi(argv[2]) : 5;

  const treegen::DegreeMultiset shape({{0, 13}, {1, 3}, {2, 12}});
  const treegen::OperatorAlphabet alphabet({{0, {"a", "b", "c", "0", "1"}}, {1, {"-", "sqrt"}}, {2, {"+", "-", "*", "/"}}});

  treegen::RandomSource shapes(seed);
  treegen::RandomSource labels(treegen::derive_seed(seed, 1));
  for (int i = 0; i < count; ++i) {
    const auto tree = treegen::decode_prefix(treegen::sample_tree(shape, shapes));
    std::cout << treegen::render_expression(tree, alphabet, labels, treegen::ExpressionStyle::infix) << '\n';
  }
}
