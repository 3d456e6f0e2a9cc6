#pragma once

// Independent oracles and seeded generators shared by the unit tests and the
// acceptance suite. Oracles deliberately avoid the library's algorithms:
// they walk tables directly and enumerate definitions literally.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sgisect/instance.hpp"
#include "sgisect/reductions.hpp"
#include "sgisect/semigroup.hpp"
#include "sgisect/slp.hpp"

namespace sgisect::testing {

using Rng = std::mt19937_64;
using Table = std::vector<std::vector<Element>>;

inline constexpr std::uint64_t kSeed = 0x5eed'2026'0001ULL;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

// ---- oracles ----

bool naive_associative(const Table& t);

// Left-to-right fold over the raw table.
Element naive_eval(const Semigroup& s, const std::vector<Element>& images, const Word& w);
bool naive_accepts(const Instance& inst, const Word& w);

// x1...xk z yk...y1 = x1...xk yk...y1 over every (2k+1)-tuple. Above
// `full_limit` leaves the recursion merges branches with equal partial
// products, which visits the same set of values.
bool li_k_definitional(const Semigroup& s, std::size_t k,
                       std::uint64_t full_limit = 20'000'000);
std::optional<std::size_t> li_degree_definitional(const Semigroup& s);

// Products of exactly t elements, as a bitmask (|S| <= 64).
std::uint64_t products_of_length(const Semigroup& s, std::size_t t);

// First word in (length, lexicographic) order accepted by the instance,
// searching lengths 1..max_len.
std::optional<Word> exhaustive_shortest_witness(const Instance& inst, std::size_t max_len);

// Every word produced by some SLP of size <= size_bound over m letters,
// without any canonical-form restriction: arbitrary references, any start
// variable, cyclic programs discarded.
std::set<Word> slp_producible_words(std::size_t m, std::size_t size_bound);

// Expansion of an SLP by direct recursion.
Word naive_expand(const Slp& g);

// ---- generators ----

// All associative tables with 1 <= n <= max_n elements (max_n <= 3).
std::vector<Semigroup> all_small_semigroups(std::size_t max_n);

// A family semigroup, product of two, or a random subsemigroup of one,
// with at most max_size elements.
Semigroup random_semigroup(Rng& rng, std::size_t max_size);

// Random size-`n` subsemigroup of some generated family, by closing random
// generator sets. Retries until a closure of exactly n elements appears.
Semigroup random_subsemigroup_of_size(Rng& rng, std::size_t n);

Word random_word(Rng& rng, std::size_t m, std::size_t len);
Morphism random_morphism(Rng& rng, const SemigroupPtr& s, std::size_t m);

struct InstanceShape {
  std::size_t max_alphabet = 3;
  std::size_t max_constraints = 3;
  std::size_t max_table = 8;
  std::uint64_t max_product = 1 << 16;
};

Instance random_instance(Rng& rng, const InstanceShape& shape = {});

// Random valid SLP of total size <= max_size; variable numbering is
// shuffled and the start is not always X0.
Slp random_slp(Rng& rng, std::size_t m, std::size_t max_size);

CnfFormula random_cnf(Rng& rng, std::size_t max_vars, std::size_t max_clauses);

}  // namespace sgisect::testing
