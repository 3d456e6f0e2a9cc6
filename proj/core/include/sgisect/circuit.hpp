#pragma once

// Unbounded fan-in AND/OR circuits computing the image of an SLP under a
// morphism whose table and letter images are circuit inputs.
//
// Input layout: the multiplication table in row-major order, then the image
// of every letter; each element occupies `bits_per_element` bits, most
// significant bit first. Negation is a wire attribute and is not counted in
// size or depth.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgisect/semigroup.hpp"
#include "sgisect/slp.hpp"

namespace sgisect {

struct Wire {
  enum class Source : std::uint8_t { kInput, kGate, kConstant };

  Source source;
  std::uint32_t index;  // input bit, gate id, or constant value 0/1
  bool negated = false;

  static Wire input(std::uint32_t i, bool neg = false) {
    return {Source::kInput, i, neg};
  }
  static Wire gate(std::uint32_t g) { return {Source::kGate, g, false}; }
  static Wire constant(bool value) {
    return {Source::kConstant, value ? 1u : 0u, false};
  }

  bool operator==(const Wire&) const = default;
};

struct Gate {
  enum class Kind : std::uint8_t { kAnd, kOr };

  Kind kind;
  std::vector<Wire> inputs;  // only inputs, constants and earlier gates
};

struct CircuitLayout {
  std::size_t table_size = 0;     // N
  std::size_t alphabet_size = 0;  // |A|
  std::size_t bits_per_element = 0;

  std::size_t table_bits() const { return table_size * table_size * bits_per_element; }
  std::size_t image_bits() const { return alphabet_size * bits_per_element; }
  std::uint32_t table_bit(Element x, Element y, std::size_t bit) const {
    return static_cast<std::uint32_t>((x * table_size + y) * bits_per_element + bit);
  }
  std::uint32_t image_bit(Letter a, std::size_t bit) const {
    return static_cast<std::uint32_t>(table_bits() + a * bits_per_element + bit);
  }
};

class BooleanCircuit {
 public:
  CircuitLayout layout;
  std::vector<Gate> gates;     // topologically ordered
  std::vector<Wire> outputs;   // bits_per_element wires, MSB first

  std::size_t size() const noexcept { return gates.size(); }
  // Longest input-to-output path counted in gates.
  std::size_t depth() const;
};

// Bits per element for a semigroup of size n: ceil(log2 n), and one bit
// (always 0) for the trivial semigroup.
std::size_t element_bits(std::size_t n);

BooleanCircuit slp_to_circuit(const Slp& g, const Morphism& h);

// Encodings matching CircuitLayout for a concrete morphism.
struct CircuitInputs {
  std::vector<bool> table_bits;
  std::vector<bool> image_bits;
};

CircuitInputs encode_circuit_inputs(const Morphism& h);

// Evaluates gates in order. Throws InputError if the bit vectors do not
// match the layout.
Element circuit_eval(const BooleanCircuit& c, const std::vector<bool>& table_bits,
                     const std::vector<bool>& image_bits);

// m (N^2 + |A| + 2) ceil(log2 N) and 2m + 2.
BigInt circuit_size_bound(std::size_t slp_size, std::size_t table_size,
                          std::size_t alphabet_size);
std::size_t circuit_depth_bound(std::size_t slp_size);

}  // namespace sgisect
