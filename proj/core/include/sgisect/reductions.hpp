#pragma once

// 3-SAT front end (DIMACS), an exhaustive SAT oracle, and the two gadget
// compilers from CNF formulas to intersection instances.
//
// Both gadgets use the 2k-letter alphabet x1..xk, nx1..nxk: letter i - 1
// is the positive literal x_i and letter k + i - 1 its negation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgisect/instance.hpp"

namespace sgisect {

struct Literal {
  std::uint32_t variable;  // 1-based
  bool positive;

  auto operator<=>(const Literal&) const = default;
};

using Clause = std::vector<Literal>;  // sorted, duplicate-free, 1..3 literals

struct CnfFormula {
  std::size_t variable_count = 0;
  std::vector<Clause> clauses;

  // Normalizes each clause to a sorted set and checks the invariants.
  // Throws InputError.
  static CnfFormula make(std::size_t variable_count, std::vector<Clause> clauses);

  bool operator==(const CnfFormula&) const = default;
};

// Truth values, index 0 = x1.
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& f, const Assignment& a);

struct DimacsResult {
  CnfFormula formula;
  std::vector<std::string> warnings;
};

DimacsResult parse_dimacs(const std::string& text);

inline constexpr std::size_t kMaxExhaustiveVariables = 24;

// Least satisfying assignment in the order where x1 is the most significant
// bit and false precedes true.
std::optional<Assignment> sat_solve_exhaustive(const CnfFormula& f);

std::vector<std::string> literal_letter_names(std::size_t k);
Letter literal_letter(std::size_t k, const Literal& l);

// Min-cap gadget over S_{k+2}: g0 forces length k, g1..gk force exactly one
// literal per variable, h1..hn force each clause to contain a chosen literal.
Instance reduce_unbounded(const CnfFormula& f);

// Interval gadget over {(i, j) : 1 <= i <= j <= k} u {0}: g accepts exactly
// the words l1...lk with l_i in {x_i, nx_i}; h_j sends the literals of C_j
// to 0 and accepts only 0.
Instance reduce_nilpotent(const CnfFormula& f);

Word assignment_to_word(const Assignment& a);

enum class AssignmentMode { kStrict, kLenient };

// A_w(x_i) = 1 iff x_i occurs in w. Throws InputError when both polarities
// of a variable occur or, in strict mode, when a variable does not occur.
Assignment word_to_assignment(const Word& w, std::size_t k,
                              AssignmentMode mode = AssignmentMode::kStrict);

}  // namespace sgisect
