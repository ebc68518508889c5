#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treegen {

// Root of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class charge_not_one : public error {
 public:
  explicit charge_not_one(std::int64_t charge)
      : error("sequence charge is " + std::to_string(charge) + ", expected 1"),
        charge_(charge) {}
  std::int64_t charge() const noexcept { return charge_; }

 private:
  std::int64_t charge_;
};

class not_constructible : public error {
 public:
  explicit not_constructible(std::int64_t charge)
      : error("degree multiset is not constructible (charge=" + std::to_string(charge) + ")"),
        charge_(charge) {}
  std::int64_t charge() const noexcept { return charge_; }

 private:
  std::int64_t charge_;
};

class charge_overflow : public error {
 public:
  charge_overflow() : error("charge does not fit in a signed 64-bit integer") {}
};

class index_out_of_range : public error {
 public:
  index_out_of_range(std::int64_t index, std::size_t size)
      : error("rotation index " + std::to_string(index) + " outside [0, " + std::to_string(size) + "]") {}
};

// Decoding failures.
class truncated : public error {
 public:
  explicit truncated(std::size_t position)
      : error("expression truncated: operator lacks operands at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class trailing_symbols : public error {
 public:
  trailing_symbols(std::size_t consumed, std::size_t total)
      : error("complete expression ends at position " + std::to_string(consumed) + " but " +
              std::to_string(total - consumed) + " symbol(s) remain"),
        consumed_(consumed) {}
  std::size_t consumed() const noexcept { return consumed_; }

 private:
  std::size_t consumed_;
};

class missing_arity : public error {
 public:
  explicit missing_arity(std::uint64_t arity)
      : error("operator alphabet has no symbol of arity " + std::to_string(arity)), arity_(arity) {}
  std::uint64_t arity() const noexcept { return arity_; }

 private:
  std::uint64_t arity_;
};

class too_large : public error {
 public:
  too_large(std::size_t nodes, std::size_t bound)
      : error("instance has " + std::to_string(nodes) + " nodes, exhaustive bound is " + std::to_string(bound)) {}
};

// A proven property failed to hold; indicates a bug, not bad input.
class invariant_violation : public error {
 public:
  using error::error;
};

}  // namespace treegen
