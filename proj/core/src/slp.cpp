#include "sgisect/slp.hpp"

#include <algorithm>
#include <string>

#include "sgisect/error.hpp"

namespace sgisect {

std::variant<Slp, SlpCycle> validate_slp(RawSlp raw) {
  const std::size_t n = raw.rules.size();
  if (n == 0) throw InputError("SLP has no variables");
  if (raw.alphabet_size == 0) throw InputError("SLP alphabet is empty");
  if (raw.start >= n) {
    throw InputError("SLP start variable X" + std::to_string(raw.start) +
                     " is not defined");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (raw.rules[v].empty()) {
      throw InputError("right-hand side of X" + std::to_string(v) +
                       " is empty");
    }
    for (const Symbol& s : raw.rules[v]) {
      if (s.is_letter() && s.index >= raw.alphabet_size) {
        throw InputError("X" + std::to_string(v) + " uses letter " +
                         std::to_string(s.index) + " outside the alphabet");
      }
      if (!s.is_letter() && s.index >= n) {
        throw InputError("X" + std::to_string(v) +
                         " references undefined variable X" +
                         std::to_string(s.index));
      }
    }
  }

  // Iterative DFS; colour 1 = on stack, 2 = finished.
  std::vector<std::uint8_t> colour(n, 0);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::uint32_t root = 0; root < n; ++root) {
    if (colour[root] != 0) continue;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const Rhs& rhs = raw.rules[v];
      if (next == rhs.size()) {
        colour[v] = 2;
        order.push_back(v);
        stack.pop_back();
        continue;
      }
      const Symbol sym = rhs[next++];
      if (sym.is_letter()) continue;
      if (colour[sym.index] == 1) {
        SlpCycle cycle;
        auto it = std::find_if(stack.begin(), stack.end(), [&](const auto& f) {
          return f.first == sym.index;
        });
        for (; it != stack.end(); ++it) cycle.variables.push_back(it->first);
        return cycle;
      }
      if (colour[sym.index] == 0) {
        colour[sym.index] = 1;
        stack.emplace_back(sym.index, 0);
      }
    }
  }

  Slp g;
  g.alphabet_size_ = raw.alphabet_size;
  g.rules_ = std::move(raw.rules);
  g.start_ = raw.start;
  g.order_ = std::move(order);
  return g;
}

Slp Slp::from_raw(RawSlp raw) {
  auto checked = validate_slp(std::move(raw));
  if (auto* c = std::get_if<SlpCycle>(&checked)) {
    std::string path;
    for (auto v : c->variables) path += "X" + std::to_string(v) + " -> ";
    path += "X" + std::to_string(c->variables.front());
    throw InputError("SLP is cyclic: " + path);
  }
  return std::get<Slp>(std::move(checked));
}

Slp Slp::canonical(std::span<const Letter> word, std::size_t alphabet_size) {
  RawSlp raw;
  raw.alphabet_size = alphabet_size;
  raw.rules.emplace_back();
  for (Letter a : word) raw.rules[0].push_back(Symbol::letter(a));
  return from_raw(std::move(raw));
}

std::size_t Slp::size() const noexcept {
  std::size_t total = 0;
  for (const auto& rhs : rules_) total += rhs.size();
  return total;
}

SlpStats slp_stats(const Slp& g) {
  std::vector<BigInt> length(g.variable_count());
  for (auto v : g.bottom_up_order()) {
    BigInt len = 0;
    for (const Symbol& s : g.rhs(v)) len += s.is_letter() ? BigInt(1) : length[s.index];
    length[v] = std::move(len);
  }
  return SlpStats{g.size(), length[g.start()]};
}

Word slp_eval_word(const Slp& g, std::size_t limit) {
  const auto stats = slp_stats(g);
  if (stats.produced_length > limit) {
    throw CapExceeded("SLP produces a word of length " +
                      stats.produced_length.str() + ", above the limit of " +
                      std::to_string(limit));
  }
  Word out;
  out.reserve(static_cast<std::size_t>(stats.produced_length));
  // Explicit stack of (variable, position) frames.
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{g.start(), 0}};
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    if (pos == g.rhs(v).size()) {
      stack.pop_back();
      continue;
    }
    const Symbol s = g.rhs(v)[pos++];
    if (s.is_letter()) {
      out.push_back(s.index);
    } else {
      stack.emplace_back(s.index, 0);
    }
  }
  return out;
}

std::vector<Element> slp_variable_images(const Slp& g, const Morphism& h) {
  if (g.alphabet_size() != h.alphabet_size()) {
    throw PreconditionError("SLP alphabet has " +
                            std::to_string(g.alphabet_size()) +
                            " letters but the morphism has " +
                            std::to_string(h.alphabet_size()));
  }
  const Semigroup& s = h.target();
  std::vector<Element> image(g.variable_count());
  for (auto v : g.bottom_up_order()) {
    const Rhs& rhs = g.rhs(v);
    auto of = [&](const Symbol& sym) {
      return sym.is_letter() ? h.images()[sym.index] : image[sym.index];
    };
    Element acc = of(rhs.front());
    for (std::size_t i = 1; i < rhs.size(); ++i) acc = s(acc, of(rhs[i]));
    image[v] = acc;
  }
  return image;
}

Element slp_image(const Slp& g, const Morphism& h) {
  return slp_variable_images(g, h)[g.start()];
}

Slp power_slp(const Slp& g, const BigInt& e) {
  if (e < 1) throw PreconditionError("power_slp: exponent must be at least 1");
  if (e == 1) return g;
  RawSlp raw{g.alphabet_size(), g.rules(), g.start()};
  // chain[i] produces val(G)^(2^i).
  const std::size_t top = msb(e);
  std::vector<std::uint32_t> chain{g.start()};
  for (std::size_t i = 1; i <= top; ++i) {
    const auto prev = Symbol::variable(chain.back());
    chain.push_back(static_cast<std::uint32_t>(raw.rules.size()));
    raw.rules.push_back({prev, prev});
  }
  Rhs acc;
  for (std::size_t i = top + 1; i-- > 0;) {
    if (bit_test(e, static_cast<unsigned>(i))) {
      acc.push_back(Symbol::variable(chain[i]));
    }
  }
  if (acc.size() == 1) {
    raw.start = chain.back();
  } else {
    raw.start = static_cast<std::uint32_t>(raw.rules.size());
    raw.rules.push_back(std::move(acc));
  }
  return Slp::from_raw(std::move(raw));
}

}  // namespace sgisect
