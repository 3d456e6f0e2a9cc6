#pragma once

// Deciders for intersection non-emptiness.
//
// brute_force_solve is the reference: breadth-first search over tuples of
// semigroup elements, never materializing the direct product. The other
// solvers run the same search with a depth cap justified by a structural
// bound (LI_k witnesses of length <= 2k, the zero-product length for
// commutative LI semigroups) or enumerate small SLPs.

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

#include "sgisect/instance.hpp"

namespace sgisect {

enum class SolveStatus { kSatisfiable, kEmpty };

struct SolveStats {
  std::size_t states_explored = 0;
  std::size_t max_depth = 0;
  std::chrono::duration<double> wall_time{0};
};

struct SolveResult {
  SolveStatus status = SolveStatus::kEmpty;
  std::optional<Witness> witness;
  // True when kEmpty is a proof of emptiness; false when it only means
  // "nothing found within the search bound".
  bool complete = true;
  SolveStats stats;

  bool satisfiable() const noexcept { return status == SolveStatus::kSatisfiable; }
};

struct SolveOptions {
  // Maximum product cardinality brute_force_solve accepts.
  std::size_t state_cap = std::size_t{1} << 24;
  // Maximum bound accepted by enum_slp_solve.
  std::size_t slp_size_cap = 6;
};

// Shortest witness, lexicographically least among the shortest.
SolveResult brute_force_solve(const Instance& inst, const SolveOptions& opts = {});

// As brute_force_solve, restricted to witnesses of length <= depth_cap.
// The result is marked incomplete.
SolveResult bounded_solve(const Instance& inst, std::size_t depth_cap);

// v = u[0..k) u[|u|-k..|u|). Requires every target in LI_k. Returns u
// unchanged when |u| <= 2k.
Word li_witness_shorten(const Instance& inst, const Word& u, std::size_t k);

// Requires every semigroup in LI; searches up to 2 * max li_degree.
SolveResult li_solve(const Instance& inst);

// c * (ceil(log2 prod |S_i|) + 1) with c the maximal class order. Requires
// every semigroup commutative and in LI.
std::size_t comli_length_bound(const Instance& inst);

SolveResult comli_solve(const Instance& inst);

// Searches SLPs of size 1..size_bound in canonical form (X0 is the start,
// right-hand sides only reference higher-numbered variables, every variable
// other than X0 is referenced). An empty result is always incomplete.
SolveResult enum_slp_solve(const Instance& inst, std::size_t size_bound,
                           const SolveOptions& opts = {});

struct MinWitnessStats {
  std::optional<std::size_t> min_word_length;
  std::optional<std::size_t> min_slp_size;  // within slp_cap
};

MinWitnessStats min_witness_stats(const Instance& inst, std::size_t slp_cap = 4,
                                  const SolveOptions& opts = {});

}  // namespace sgisect
