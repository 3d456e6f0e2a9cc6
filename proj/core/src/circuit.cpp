#include "sgisect/circuit.hpp"

#include <algorithm>
#include <string>

#include "sgisect/error.hpp"

namespace sgisect {
namespace {

using Bits = std::vector<Wire>;  // one element, MSB first

class Builder {
 public:
  Builder(BooleanCircuit& c) : c_(c) {}

  Bits letter(Letter a) const {
    Bits out;
    for (std::size_t b = 0; b < c_.layout.bits_per_element; ++b) {
      out.push_back(Wire::input(c_.layout.image_bit(a, b)));
    }
    return out;
  }

  // One AND layer selecting the table entry at (x, y), one OR layer
  // collecting each output bit.
  Bits multiply(const Bits& x, const Bits& y) {
    const auto& L = c_.layout;
    const std::size_t bits = L.bits_per_element;
    std::vector<std::vector<Wire>> or_inputs(bits);
    for (Element a = 0; a < L.table_size; ++a) {
      for (Element b = 0; b < L.table_size; ++b) {
        std::vector<Wire> selector;
        for (std::size_t i = 0; i < bits; ++i) {
          const bool bit_a = (a >> (bits - 1 - i)) & 1u;
          const bool bit_b = (b >> (bits - 1 - i)) & 1u;
          selector.push_back(negate_if(x[i], !bit_a));
          selector.push_back(negate_if(y[i], !bit_b));
        }
        for (std::size_t t = 0; t < bits; ++t) {
          Gate g{Gate::Kind::kAnd, selector};
          g.inputs.push_back(Wire::input(L.table_bit(a, b, t)));
          or_inputs[t].push_back(add(std::move(g)));
        }
      }
    }
    Bits out;
    for (std::size_t t = 0; t < bits; ++t) {
      out.push_back(add(Gate{Gate::Kind::kOr, std::move(or_inputs[t])}));
    }
    return out;
  }

 private:
  static Wire negate_if(Wire w, bool neg) {
    if (neg) {
      if (w.source == Wire::Source::kConstant) {
        w.index ^= 1u;
      } else {
        w.negated = !w.negated;
      }
    }
    return w;
  }

  Wire add(Gate g) {
    c_.gates.push_back(std::move(g));
    return Wire::gate(static_cast<std::uint32_t>(c_.gates.size() - 1));
  }

  BooleanCircuit& c_;
};

}  // namespace

std::size_t element_bits(std::size_t n) {
  return n <= 1 ? 1 : ceil_log2(static_cast<std::uint64_t>(n));
}

std::size_t BooleanCircuit::depth() const {
  std::vector<std::size_t> d(gates.size(), 0);
  auto wire_depth = [&](const Wire& w) {
    return w.source == Wire::Source::kGate ? d[w.index] : 0;
  };
  for (std::size_t g = 0; g < gates.size(); ++g) {
    std::size_t m = 0;
    for (const Wire& w : gates[g].inputs) m = std::max(m, wire_depth(w));
    d[g] = m + 1;
  }
  std::size_t out = 0;
  for (const Wire& w : outputs) out = std::max(out, wire_depth(w));
  return out;
}

BooleanCircuit slp_to_circuit(const Slp& g, const Morphism& h) {
  if (g.alphabet_size() != h.alphabet_size()) {
    throw PreconditionError("slp_to_circuit: alphabet size mismatch");
  }
  BooleanCircuit c;
  c.layout = {h.target().size(), h.alphabet_size(),
              element_bits(h.target().size())};
  if (c.layout.table_size == 1) {
    c.outputs = {Wire::constant(false)};
    return c;
  }

  // Only variables reachable from the start are lowered.
  std::vector<char> reachable(g.variable_count(), 0);
  reachable[g.start()] = 1;
  const auto& order = g.bottom_up_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!reachable[*it]) continue;
    for (const Symbol& s : g.rhs(*it)) {
      if (!s.is_letter()) reachable[s.index] = 1;
    }
  }

  Builder builder(c);
  std::vector<Bits> value(g.variable_count());
  for (auto v : order) {
    if (!reachable[v]) continue;
    const Rhs& rhs = g.rhs(v);
    auto of = [&](const Symbol& s) {
      return s.is_letter() ? builder.letter(s.index) : value[s.index];
    };
    Bits acc = of(rhs.front());
    for (std::size_t i = 1; i < rhs.size(); ++i) {
      acc = builder.multiply(acc, of(rhs[i]));
    }
    value[v] = std::move(acc);
  }
  c.outputs = value[g.start()];
  return c;
}

CircuitInputs encode_circuit_inputs(const Morphism& h) {
  const Semigroup& s = h.target();
  const std::size_t bits = element_bits(s.size());
  CircuitInputs in;
  auto push = [bits](std::vector<bool>& out, Element v) {
    for (std::size_t i = 0; i < bits; ++i) out.push_back((v >> (bits - 1 - i)) & 1u);
  };
  for (Element v : s.flat_table()) push(in.table_bits, v);
  for (Element v : h.images()) push(in.image_bits, v);
  return in;
}

Element circuit_eval(const BooleanCircuit& c, const std::vector<bool>& table_bits,
                     const std::vector<bool>& image_bits) {
  if (table_bits.size() != c.layout.table_bits() ||
      image_bits.size() != c.layout.image_bits()) {
    throw InputError("circuit_eval: expected " +
                     std::to_string(c.layout.table_bits()) + " table bits and " +
                     std::to_string(c.layout.image_bits()) + " image bits, got " +
                     std::to_string(table_bits.size()) + " and " +
                     std::to_string(image_bits.size()));
  }
  std::vector<bool> gate_value(c.gates.size());
  auto read = [&](const Wire& w) -> bool {
    bool v = false;
    switch (w.source) {
      case Wire::Source::kInput:
        v = w.index < table_bits.size() ? table_bits[w.index]
                                        : image_bits[w.index - table_bits.size()];
        break;
      case Wire::Source::kGate:
        v = gate_value[w.index];
        break;
      case Wire::Source::kConstant:
        v = w.index != 0;
        break;
    }
    return v != w.negated;
  };
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const Gate& gate = c.gates[g];
    bool v = gate.kind == Gate::Kind::kAnd;
    for (const Wire& w : gate.inputs) {
      if (gate.kind == Gate::Kind::kAnd) {
        v = v && read(w);
      } else {
        v = v || read(w);
      }
    }
    gate_value[g] = v;
  }
  Element out = 0;
  for (const Wire& w : c.outputs) out = (out << 1) | (read(w) ? 1u : 0u);
  return out;
}

BigInt circuit_size_bound(std::size_t slp_size, std::size_t table_size,
                          std::size_t alphabet_size) {
  const BigInt n = table_size;
  return BigInt(slp_size) * (n * n + alphabet_size + 2) *
         ceil_log2(static_cast<std::uint64_t>(table_size));
}

std::size_t circuit_depth_bound(std::size_t slp_size) { return 2 * slp_size + 2; }

}  // namespace sgisect
