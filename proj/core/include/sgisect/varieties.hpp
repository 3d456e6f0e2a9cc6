#pragma once

// Membership predicates for the semigroup classes the solvers and
// reductions rely on. Each predicate tests the defining equations on a
// single table.

#include <cstddef>
#include <optional>

#include "sgisect/semigroup.hpp"

namespace sgisect {

bool is_commutative(const Semigroup& s);
bool is_monoid(const Semigroup& s);
bool is_group(const Semigroup& s);

// Exactly one idempotent, and it is a zero.
bool is_nilpotent(const Semigroup& s);

// Every local monoid is trivial: exe = e for all idempotents e and all x.
bool is_li(const Semigroup& s);

// x1...xk z yk...y1 = x1...xk yk...y1, checked through the set product
// A_k = S^k: pzq = pq for all p, q in A_k and all z.
bool satisfies_li_k(const Semigroup& s, std::size_t k);

// Minimal k with S in LI_k, or nullopt when S is not in LI. The search
// never needs to go past |S| + 1.
std::optional<std::size_t> li_degree(const Semigroup& s);

// x^2 y = x^2 = y x^2.
bool is_a2n(const Semigroup& s);

struct ClassificationReport {
  bool is_commutative = false;
  bool is_group = false;
  bool is_monoid = false;
  bool is_nilpotent = false;
  bool is_li = false;
  std::optional<std::size_t> li_degree;
  bool is_a2n = false;
  std::size_t class_order = 0;

  bool operator==(const ClassificationReport&) const = default;
};

ClassificationReport classify(const Semigroup& s);

}  // namespace sgisect
