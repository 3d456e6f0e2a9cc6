#include "sgisect/solvers.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "sgisect/error.hpp"
#include "sgisect/varieties.hpp"

namespace sgisect {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

bool has_empty_accept(const Instance& inst) {
  return std::any_of(inst.constraints().begin(), inst.constraints().end(),
                     [](const Constraint& c) { return c.accept.empty(); });
}

// Breadth-first search over tuples (t_1, ..., t_k). States are discovered in
// order of (length, lexicographic order of their least word), so the first
// accepting state found carries the canonical witness.
SolveResult tuple_search(const Instance& inst, std::size_t depth_cap,
                         std::size_t state_cap, const char* provenance) {
  const auto started = Clock::now();
  SolveResult result;
  result.complete = depth_cap == kUnbounded;
  auto finish = [&](SolveResult r) {
    r.stats.wall_time = Clock::now() - started;
    return r;
  };
  if (has_empty_accept(inst) || depth_cap == 0) return finish(result);

  const auto& cons = inst.constraints();
  const std::size_t k = cons.size();
  const std::size_t m = inst.alphabet_size();
  if (inst.product_size() > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw CapExceeded("product of semigroup sizes does not fit a 64-bit state code");
  }
  std::vector<std::uint64_t> radix(k);
  std::vector<std::vector<char>> accepting(k);
  for (std::size_t i = 0; i < k; ++i) {
    radix[i] = cons[i].semigroup().size();
    accepting[i].assign(radix[i], 0);
    for (Element x : cons[i].accept) accepting[i][x] = 1;
  }

  std::vector<Element> components;  // k per state
  std::vector<std::int64_t> parent;
  std::vector<Letter> via;
  std::vector<std::uint32_t> depth;
  std::unordered_map<std::uint64_t, std::uint32_t> id_of;

  std::vector<Element> next(k);
  auto discover = [&](std::int64_t from, Letter a) -> std::optional<std::uint32_t> {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Element img = cons[i].morphism.images()[a];
      next[i] = from < 0 ? img : cons[i].semigroup()(components[from * k + i], img);
      code = code * radix[i] + next[i];
    }
    auto [it, fresh] = id_of.try_emplace(code, static_cast<std::uint32_t>(parent.size()));
    if (!fresh) return std::nullopt;
    if (parent.size() >= state_cap) {
      throw CapExceeded("search exceeded the cap of " + std::to_string(state_cap) +
                        " states");
    }
    components.insert(components.end(), next.begin(), next.end());
    parent.push_back(from);
    via.push_back(a);
    depth.push_back(from < 0 ? 1 : depth[from] + 1);
    return it->second;
  };
  auto is_accepting = [&](std::uint32_t id) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!accepting[i][components[id * k + i]]) return false;
    }
    return true;
  };
  auto build = [&](std::uint32_t id) {
    Word w;
    for (std::int64_t s = id; s >= 0; s = parent[s]) w.push_back(via[s]);
    std::reverse(w.begin(), w.end());
    result.status = SolveStatus::kSatisfiable;
    result.witness = Witness{std::move(w), provenance};
  };

  std::optional<std::uint32_t> found;
  for (Letter a = 0; a < m && !found; ++a) {
    if (auto id = discover(-1, a); id && is_accepting(*id)) found = id;
  }
  for (std::size_t head = 0; !found && head < parent.size(); ++head) {
    if (depth[head] >= depth_cap) continue;
    for (Letter a = 0; a < m && !found; ++a) {
      if (auto id = discover(static_cast<std::int64_t>(head), a); id && is_accepting(*id)) {
        found = id;
      }
    }
  }
  if (found) build(*found);
  result.stats.states_explored = parent.size();
  result.stats.max_depth = depth.empty() ? 0 : depth.back();
  return finish(std::move(result));
}

// li_degree per distinct table; instances often share one table.
std::vector<std::optional<std::size_t>> li_degrees(const Instance& inst) {
  std::map<const Semigroup*, std::optional<std::size_t>> cache;
  std::vector<std::optional<std::size_t>> out;
  for (const auto& c : inst.constraints()) {
    auto [it, fresh] = cache.try_emplace(&c.semigroup());
    if (fresh) it->second = li_degree(c.semigroup());
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

SolveResult brute_force_solve(const Instance& inst, const SolveOptions& opts) {
  return tuple_search(inst, kUnbounded, opts.state_cap, "brute");
}

SolveResult bounded_solve(const Instance& inst, std::size_t depth_cap) {
  if (depth_cap < 1) throw PreconditionError("bounded_solve: depth cap must be >= 1");
  auto r = tuple_search(inst, depth_cap, SolveOptions{}.state_cap, "bounded");
  r.complete = false;
  return r;
}

Word li_witness_shorten(const Instance& inst, const Word& u, std::size_t k) {
  if (k == 0) throw PreconditionError("li_witness_shorten: k must be >= 1");
  const auto degrees = li_degrees(inst);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (!degrees[i] || *degrees[i] > k) {
      throw PreconditionError("li_witness_shorten: semigroup of constraint '" +
                              inst.constraints()[i].name + "' is not in LI_" +
                              std::to_string(k));
    }
  }
  if (u.size() <= 2 * k) return u;
  Word v(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
  v.insert(v.end(), u.end() - static_cast<std::ptrdiff_t>(k), u.end());
  for (const auto& c : inst.constraints()) {
    if (apply_morphism(c.morphism, v) != apply_morphism(c.morphism, u)) {
      throw std::logic_error("li_witness_shorten: image changed for '" + c.name + "'");
    }
  }
  return v;
}

SolveResult li_solve(const Instance& inst) {
  const auto degrees = li_degrees(inst);
  std::size_t k = 1;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (!degrees[i]) {
      throw PreconditionError("li_solve: semigroup of constraint '" +
                              inst.constraints()[i].name + "' is not in LI");
    }
    k = std::max(k, *degrees[i]);
  }
  auto r = tuple_search(inst, 2 * k, SolveOptions{}.state_cap, "li");
  r.complete = true;
  return r;
}

std::size_t comli_length_bound(const Instance& inst) {
  std::size_t c = 1;
  for (const auto& con : inst.constraints()) {
    const auto& s = con.semigroup();
    if (!is_commutative(s) || !is_li(s)) {
      throw PreconditionError("comli: semigroup of constraint '" + con.name +
                              "' is not commutative and in LI");
    }
    c = std::max(c, monogenic_orders(s).class_order);
  }
  return c * (ceil_log2(inst.product_size()) + 1);
}

SolveResult comli_solve(const Instance& inst) {
  // Every word of length >= bound maps each S_i to its zero, and the
  // all-zero state is reached by a word of exactly that length, so the
  // capped search sees every reachable state.
  const std::size_t bound = comli_length_bound(inst);
  auto r = tuple_search(inst, bound, SolveOptions{}.state_cap, "comli");
  r.complete = true;
  return r;
}

namespace {

class SlpEnumerator {
 public:
  SlpEnumerator(const Instance& inst) : inst_(inst), k_(inst.constraints().size()) {}

  std::optional<Slp> search(std::size_t size) {
    for (std::size_t vars = 1; vars <= size; ++vars) {
      lengths_.assign(vars, 1);
      if (auto g = compositions(0, size - vars)) return g;
    }
    return std::nullopt;
  }

  std::size_t visited() const noexcept { return visited_; }

 private:
  // Distribute `extra` additional symbols over lengths_[i..].
  std::optional<Slp> compositions(std::size_t i, std::size_t extra) {
    if (i + 1 == lengths_.size()) {
      lengths_[i] = 1 + extra;
      return enumerate_shape();
    }
    for (std::size_t e = 0; e <= extra; ++e) {
      lengths_[i] = 1 + e;
      if (auto g = compositions(i + 1, extra - e)) return g;
    }
    return std::nullopt;
  }

  std::optional<Slp> enumerate_shape() {
    const std::size_t v = lengths_.size();
    rules_.assign(v, {});
    for (std::size_t i = 0; i < v; ++i) rules_[i].resize(lengths_[i], Symbol::letter(0));
    images_.assign(v * k_, 0);
    refs_.assign(v, 0);
    acc_.assign(*std::max_element(lengths_.begin(), lengths_.end()) * k_, 0);
    if (fill(v - 1, 0)) {
      RawSlp raw{inst_.alphabet_size(), rules_, 0};
      return Slp::from_raw(std::move(raw));
    }
    return std::nullopt;
  }

  Element symbol_image(std::size_t c, const Symbol& s) const {
    return s.is_letter() ? inst_.constraints()[c].morphism.images()[s.index]
                         : images_[s.index * k_ + c];
  }

  // Chooses symbol `pos` of variable `var`; variables are filled from the
  // highest index down so every referenced image is already known.
  bool fill(std::size_t var, std::size_t pos) {
    const auto& cons = inst_.constraints();
    if (pos == lengths_[var]) {
      for (std::size_t c = 0; c < k_; ++c) images_[var * k_ + c] = acc_at(pos - 1, c);
      if (var == 0) {
        ++visited_;
        for (std::size_t j = 1; j < lengths_.size(); ++j) {
          if (refs_[j] == 0) return false;
        }
        for (std::size_t c = 0; c < k_; ++c) {
          if (!cons[c].accepts(images_[c])) return false;
        }
        return true;
      }
      return fill(var - 1, 0);
    }
    const std::size_t letters = inst_.alphabet_size();
    const std::size_t choices = letters + (lengths_.size() - var - 1);
    for (std::size_t choice = 0; choice < choices; ++choice) {
      const Symbol s = choice < letters
                           ? Symbol::letter(static_cast<std::uint32_t>(choice))
                           : Symbol::variable(static_cast<std::uint32_t>(var + 1 + choice - letters));
      rules_[var][pos] = s;
      for (std::size_t c = 0; c < k_; ++c) {
        const Element img = symbol_image(c, s);
        acc_at(pos, c) = pos == 0 ? img : cons[c].semigroup()(acc_at(pos - 1, c), img);
      }
      if (!s.is_letter()) ++refs_[s.index];
      const bool ok = fill(var, pos + 1);
      if (!s.is_letter()) --refs_[s.index];
      if (ok) return true;
    }
    return false;
  }

  Element& acc_at(std::size_t pos, std::size_t c) { return acc_[pos * k_ + c]; }

  const Instance& inst_;
  std::size_t k_;
  std::vector<std::size_t> lengths_;
  std::vector<Rhs> rules_;
  std::vector<Element> images_;
  std::vector<std::size_t> refs_;
  std::vector<Element> acc_;
  std::size_t visited_ = 0;
};

}  // namespace

SolveResult enum_slp_solve(const Instance& inst, std::size_t size_bound,
                           const SolveOptions& opts) {
  if (size_bound > opts.slp_size_cap) {
    throw CapExceeded("SLP size bound " + std::to_string(size_bound) +
                      " exceeds the enumeration cap of " +
                      std::to_string(opts.slp_size_cap));
  }
  const auto started = Clock::now();
  SolveResult r;
  r.complete = false;
  if (!has_empty_accept(inst)) {
    SlpEnumerator en(inst);
    for (std::size_t size = 1; size <= size_bound; ++size) {
      if (auto g = en.search(size)) {
        r.status = SolveStatus::kSatisfiable;
        r.witness = Witness{std::move(*g), "slp"};
        r.complete = true;
        r.stats.max_depth = size;
        break;
      }
    }
    r.stats.states_explored = en.visited();
  }
  r.stats.wall_time = Clock::now() - started;
  return r;
}

MinWitnessStats min_witness_stats(const Instance& inst, std::size_t slp_cap,
                                  const SolveOptions& opts) {
  MinWitnessStats out;
  const auto brute = brute_force_solve(inst, opts);
  if (brute.satisfiable()) out.min_word_length = brute.witness->word().size();
  const auto slp = enum_slp_solve(inst, slp_cap, opts);
  if (slp.satisfiable()) out.min_slp_size = slp.witness->slp().size();
  return out;
}

}  // namespace sgisect
