#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "sgisect/families.hpp"

namespace sgisect::testing {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

bool naive_associative(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
  return true;
}

Element naive_eval(const Semigroup& s, const std::vector<Element>& images, const Word& w) {
  const auto rows = s.rows();
  Element acc = images.at(w.at(0));
  for (std::size_t i = 1; i < w.size(); ++i) acc = rows[acc][images.at(w[i])];
  return acc;
}

bool naive_accepts(const Instance& inst, const Word& w) {
  for (const auto& c : inst.constraints()) {
    const Element x = naive_eval(c.semigroup(), c.morphism.images(), w);
    if (std::find(c.accept.begin(), c.accept.end(), x) == c.accept.end()) return false;
  }
  return true;
}

bool li_k_definitional(const Semigroup& s, std::size_t k, std::uint64_t full_limit) {
  const std::size_t n = s.size();
  const auto t = s.rows();
  const std::size_t positions = 2 * k + 1;
  std::uint64_t leaves = 1;
  bool merge = false;
  for (std::size_t i = 0; i < positions && !merge; ++i) {
    leaves *= n;
    merge = leaves > full_limit;
  }
  std::vector<char> seen(merge ? (positions + 1) * n * n : 0, 0);

  // pos < k: x_{pos+1}; pos == k: z; k < pos <= 2k: y.
  std::function<bool(std::size_t, Element, Element)> rec = [&](std::size_t pos, Element lhs,
                                                               Element rhs) {
    if (pos == positions) return lhs == rhs;
    if (merge && pos > 0) {
      char& flag = seen[(pos * n + lhs) * n + rhs];
      if (flag) return true;
      flag = 1;
    }
    for (Element v = 0; v < n; ++v) {
      Element l, r;
      if (pos == 0) {
        l = r = v;
      } else if (pos < k) {
        l = r = t[lhs][v];
      } else if (pos == k) {
        l = t[lhs][v];
        r = rhs;
      } else {
        l = t[lhs][v];
        r = t[rhs][v];
      }
      if (!rec(pos + 1, l, r)) return false;
    }
    return true;
  };
  return rec(0, 0, 0);
}

std::optional<std::size_t> li_degree_definitional(const Semigroup& s) {
  for (std::size_t k = 1; k <= s.size() + 1; ++k) {
    if (li_k_definitional(s, k)) return k;
  }
  return std::nullopt;
}

std::uint64_t products_of_length(const Semigroup& s, std::size_t t) {
  const std::size_t n = s.size();
  const auto rows = s.rows();
  std::uint64_t cur = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t step = 1; step < t; ++step) {
    std::uint64_t next = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(cur >> a & 1)) continue;
      for (std::size_t b = 0; b < n; ++b) next |= std::uint64_t{1} << rows[a][b];
    }
    cur = next;
  }
  return cur;
}

std::optional<Word> exhaustive_shortest_witness(const Instance& inst, std::size_t max_len) {
  const std::size_t m = inst.alphabet_size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    Word w(len, 0);
    while (true) {
      if (naive_accepts(inst, w)) return w;
      std::size_t i = len;
      while (i > 0 && w[i - 1] == m - 1) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  return std::nullopt;
}

namespace {

// Expands variable v of raw rules; nullopt on a cycle.
std::optional<Word> expand_raw(const std::vector<Rhs>& rules, std::uint32_t v,
                               std::vector<int>& state, std::vector<Word>& memo) {
  if (state[v] == 2) return memo[v];
  if (state[v] == 1) return std::nullopt;
  state[v] = 1;
  Word out;
  for (const Symbol& s : rules[v]) {
    if (s.is_letter()) {
      out.push_back(s.index);
    } else {
      auto sub = expand_raw(rules, s.index, state, memo);
      if (!sub) return std::nullopt;
      out.insert(out.end(), sub->begin(), sub->end());
    }
  }
  state[v] = 2;
  memo[v] = out;
  return out;
}

bool acyclic(const std::vector<Rhs>& rules) {
  std::vector<int> state(rules.size(), 0);
  std::vector<Word> memo(rules.size());
  for (std::uint32_t v = 0; v < rules.size(); ++v) {
    if (!expand_raw(rules, v, state, memo)) return false;
  }
  return true;
}

}  // namespace

std::set<Word> slp_producible_words(std::size_t m, std::size_t size_bound) {
  std::set<Word> words;
  for (std::size_t v = 1; v <= size_bound; ++v) {
    const std::size_t alphabet = m + v;
    for (std::size_t total = v; total <= size_bound; ++total) {
      // All compositions of `total` into v positive parts.
      std::vector<std::size_t> lengths(v, 1);
      std::function<void(std::size_t, std::size_t)> split = [&](std::size_t i,
                                                                std::size_t extra) {
        if (i + 1 == v) {
          lengths[i] = 1 + extra;
          std::vector<std::size_t> code(total, 0);
          while (true) {
            std::vector<Rhs> rules(v);
            std::size_t pos = 0;
            for (std::size_t var = 0; var < v; ++var) {
              for (std::size_t j = 0; j < lengths[var]; ++j, ++pos) {
                const auto c = code[pos];
                rules[var].push_back(c < m ? Symbol::letter(static_cast<std::uint32_t>(c))
                                           : Symbol::variable(static_cast<std::uint32_t>(c - m)));
              }
            }
            if (acyclic(rules)) {
              std::vector<int> state(v, 0);
              std::vector<Word> memo(v);
              for (std::uint32_t start = 0; start < v; ++start) {
                words.insert(*expand_raw(rules, start, state, memo));
              }
            }
            std::size_t i2 = total;
            while (i2 > 0 && code[i2 - 1] == alphabet - 1) code[--i2] = 0;
            if (i2 == 0) break;
            ++code[i2 - 1];
          }
          return;
        }
        for (std::size_t e = 0; e <= extra; ++e) {
          lengths[i] = 1 + e;
          split(i + 1, extra - e);
        }
      };
      split(0, total - v);
    }
  }
  return words;
}

Word naive_expand(const Slp& g) {
  std::vector<int> state(g.variable_count(), 0);
  std::vector<Word> memo(g.variable_count());
  return *expand_raw(g.rules(), g.start(), state, memo);
}

std::vector<Semigroup> all_small_semigroups(std::size_t max_n) {
  std::vector<Semigroup> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t cells = n * n;
    std::vector<Element> code(cells, 0);
    while (true) {
      Table t(n, std::vector<Element>(n));
      for (std::size_t i = 0; i < cells; ++i) t[i / n][i % n] = code[i];
      if (naive_associative(t)) out.push_back(Semigroup::from_table(t));
      std::size_t i = cells;
      while (i > 0 && code[i - 1] == n - 1) code[--i] = 0;
      if (i == 0) break;
      ++code[i - 1];
    }
  }
  return out;
}

namespace {

Semigroup random_family(Rng& rng, std::size_t max_size) {
  std::vector<std::function<std::optional<Semigroup>()>> makers = {
      [&]() -> std::optional<Semigroup> {
        return families::min_cap(uniform(rng, 1, std::min<std::size_t>(max_size, 12)));
      },
      [&]() -> std::optional<Semigroup> {
        return families::left_zero(uniform(rng, 1, std::min<std::size_t>(max_size, 5)));
      },
      [&]() -> std::optional<Semigroup> {
        return families::right_zero(uniform(rng, 1, std::min<std::size_t>(max_size, 5)));
      },
      [&]() -> std::optional<Semigroup> {
        return families::cyclic(uniform(rng, 1, std::min<std::size_t>(max_size, 6)));
      },
      [&]() -> std::optional<Semigroup> {
        return families::null_semigroup(uniform(rng, 1, std::min<std::size_t>(max_size, 6)));
      },
      [&]() -> std::optional<Semigroup> {
        const std::size_t k = uniform(rng, 1, 4);
        if (k * (k + 1) / 2 + 1 > max_size) return std::nullopt;
        return families::nil_interval(k);
      },
      [&]() -> std::optional<Semigroup> {
        auto s = families::truncated_monomials(uniform(rng, 1, 3), uniform(rng, 1, 3));
        if (s.size() > max_size) return std::nullopt;
        return s;
      },
  };
  while (true) {
    if (auto s = makers[uniform(rng, 0, makers.size() - 1)]()) return *s;
  }
}

Semigroup random_closure(Rng& rng, const Semigroup& s) {
  std::vector<Element> gens;
  const std::size_t g = uniform(rng, 1, 3);
  for (std::size_t i = 0; i < g; ++i) {
    gens.push_back(static_cast<Element>(uniform(rng, 0, s.size() - 1)));
  }
  return induced_subsemigroup(s, subsemigroup_closure(s, gens));
}

}  // namespace

Semigroup random_semigroup(Rng& rng, std::size_t max_size) {
  const double roll = std::uniform_real_distribution<double>(0, 1)(rng);
  if (roll < 0.2 && max_size >= 2) {
    const std::size_t a = uniform(rng, 1, std::min<std::size_t>(max_size, 6));
    auto f1 = share(random_family(rng, a));
    auto f2 = share(random_family(rng, std::max<std::size_t>(1, max_size / f1->size())));
    std::vector<SemigroupPtr> factors{f1, f2};
    return direct_product(factors).semigroup;
  }
  if (roll < 0.4) return random_closure(rng, random_family(rng, max_size));
  return random_family(rng, max_size);
}

Semigroup random_subsemigroup_of_size(Rng& rng, std::size_t n) {
  while (true) {
    Semigroup base = random_family(rng, 40);
    if (coin(rng, 0.4)) {
      auto f1 = share(random_family(rng, 8));
      auto f2 = share(random_family(rng, 8));
      std::vector<SemigroupPtr> factors{f1, f2};
      base = direct_product(factors).semigroup;
    }
    if (base.size() < n) continue;
    for (int attempt = 0; attempt < 8; ++attempt) {
      auto sub = random_closure(rng, base);
      if (sub.size() == n) return sub;
    }
  }
}

Word random_word(Rng& rng, std::size_t m, std::size_t len) {
  Word w(len);
  for (auto& a : w) a = static_cast<Letter>(uniform(rng, 0, m - 1));
  return w;
}

Morphism random_morphism(Rng& rng, const SemigroupPtr& s, std::size_t m) {
  std::vector<Element> images(m);
  for (auto& x : images) x = static_cast<Element>(uniform(rng, 0, s->size() - 1));
  return Morphism(s, std::move(images));
}

Instance random_instance(Rng& rng, const InstanceShape& shape) {
  const std::size_t m = uniform(rng, 1, shape.max_alphabet);
  const std::size_t count = uniform(rng, 1, shape.max_constraints);
  std::vector<Constraint> cons;
  std::uint64_t product = 1;
  SemigroupPtr previous;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t room = shape.max_product / product;
    if (room < 1) break;
    SemigroupPtr s;
    if (previous && previous->size() <= room && coin(rng, 0.3)) {
      s = previous;
    } else {
      s = share(random_semigroup(rng, static_cast<std::size_t>(
                                          std::min<std::uint64_t>(shape.max_table, room))));
    }
    product *= s->size();
    previous = s;
    std::vector<Element> accept;
    const double p = coin(rng) ? 0.2 : 0.5;
    const double shape_roll = std::uniform_real_distribution<double>(0, 1)(rng);
    for (Element x = 0; x < s->size(); ++x) {
      if (shape_roll < 0.05 || (shape_roll >= 0.1 && coin(rng, p))) accept.push_back(x);
    }
    cons.push_back(Constraint{"c" + std::to_string(i), "t" + std::to_string(i),
                              random_morphism(rng, s, m), std::move(accept)});
  }
  return Instance(default_letter_names(m), std::move(cons));
}

Slp random_slp(Rng& rng, std::size_t m, std::size_t max_size) {
  const std::size_t total = uniform(rng, 1, max_size);
  const std::size_t v = uniform(rng, 1, std::max<std::size_t>(1, (total + 1) / 2));
  std::vector<std::size_t> lengths(v, 1);
  for (std::size_t extra = total - v; extra > 0; --extra) ++lengths[uniform(rng, 0, v - 1)];
  std::vector<std::uint32_t> perm(v);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  RawSlp raw;
  raw.alphabet_size = m;
  raw.rules.resize(v);
  for (std::size_t i = 0; i < v; ++i) {
    Rhs rhs;
    for (std::size_t j = 0; j < lengths[i]; ++j) {
      if (i + 1 < v && coin(rng, 0.5)) {
        rhs.push_back(Symbol::variable(perm[uniform(rng, i + 1, v - 1)]));
      } else {
        rhs.push_back(Symbol::letter(static_cast<std::uint32_t>(uniform(rng, 0, m - 1))));
      }
    }
    raw.rules[perm[i]] = std::move(rhs);
  }
  raw.start = perm[0];
  return Slp::from_raw(std::move(raw));
}

CnfFormula random_cnf(Rng& rng, std::size_t max_vars, std::size_t max_clauses) {
  const std::size_t k = uniform(rng, 1, max_vars);
  const std::size_t n = uniform(rng, 0, max_clauses);
  std::vector<Clause> clauses;
  for (std::size_t j = 0; j < n; ++j) {
    Clause c;
    const std::size_t width = uniform(rng, 1, 3);
    for (std::size_t r = 0; r < width; ++r) {
      c.push_back(Literal{static_cast<std::uint32_t>(uniform(rng, 1, k)), coin(rng)});
    }
    clauses.push_back(std::move(c));
  }
  return CnfFormula::make(k, std::move(clauses));
}

}  // namespace sgisect::testing
