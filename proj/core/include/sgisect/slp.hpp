#pragma once

// Straight-line programs: acyclic grammars with exactly one production per
// variable, each producing a single non-empty word.

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "sgisect/semigroup.hpp"

namespace sgisect {

struct Symbol {
  enum class Kind : std::uint8_t { kLetter, kVariable };

  Kind kind;
  std::uint32_t index;

  static constexpr Symbol letter(std::uint32_t a) { return {Kind::kLetter, a}; }
  static constexpr Symbol variable(std::uint32_t v) {
    return {Kind::kVariable, v};
  }
  bool is_letter() const noexcept { return kind == Kind::kLetter; }

  bool operator==(const Symbol&) const = default;
};

using Rhs = std::vector<Symbol>;

// Unvalidated productions.
struct RawSlp {
  std::size_t alphabet_size = 0;
  std::vector<Rhs> rules;
  std::uint32_t start = 0;
};

// A variable cycle X_{c0} -> X_{c1} -> ... -> X_{c0}.
struct SlpCycle {
  std::vector<std::uint32_t> variables;
};

class Slp;

// Validates acyclicity. Empty right-hand sides, dangling variable
// references, out-of-range letters and a bad start variable throw
// InputError.
std::variant<Slp, SlpCycle> validate_slp(RawSlp raw);

class Slp {
 public:
  // validate_slp, throwing InputError on a cycle.
  static Slp from_raw(RawSlp raw);

  // The single-variable SLP X0 -> word.
  static Slp canonical(std::span<const Letter> word, std::size_t alphabet_size);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t variable_count() const noexcept { return rules_.size(); }
  std::uint32_t start() const noexcept { return start_; }
  const std::vector<Rhs>& rules() const noexcept { return rules_; }
  const Rhs& rhs(std::uint32_t v) const { return rules_.at(v); }

  // Sum of right-hand side lengths over all variables.
  std::size_t size() const noexcept;

  // Variables ordered so every variable follows the ones it references.
  const std::vector<std::uint32_t>& bottom_up_order() const noexcept {
    return order_;
  }

  bool operator==(const Slp& other) const noexcept {
    return alphabet_size_ == other.alphabet_size_ && rules_ == other.rules_ &&
           start_ == other.start_;
  }

 private:
  friend std::variant<Slp, SlpCycle> validate_slp(RawSlp raw);

  Slp() = default;

  std::size_t alphabet_size_ = 0;
  std::vector<Rhs> rules_;
  std::uint32_t start_ = 0;
  std::vector<std::uint32_t> order_;
};

struct SlpStats {
  std::size_t size = 0;
  BigInt produced_length;
};

SlpStats slp_stats(const Slp& g);

inline constexpr std::size_t kDefaultWordLimit = 1'000'000;

// The produced word. Throws CapExceeded if it is longer than limit.
Word slp_eval_word(const Slp& g, std::size_t limit = kDefaultWordLimit);

// h(val(G)) computed bottom-up with at most |G| multiplications.
Element slp_image(const Slp& g, const Morphism& h);

// Images of every variable, indexed by variable.
std::vector<Element> slp_variable_images(const Slp& g, const Morphism& h);

// An SLP producing val(G)^e whose size is at most |G| + 4 ceil(log2 e).
// Squaring chain over the start variable plus one accumulator listing the
// chain entries at the set bits of e. Returns G itself for e = 1.
Slp power_slp(const Slp& g, const BigInt& e);

}  // namespace sgisect
