#pragma once

// Constructive families of finite semigroups used by the reductions, the
// CLI `gen` command and the test generators.

#include <cstddef>
#include <string>

#include "sgisect/semigroup.hpp"

namespace sgisect::families {

// The one-element semigroup.
Semigroup trivial();

// Values 1..k with i o j = min(i + j, k); value v is index v - 1.
// Commutative, nilpotent, monogenic of cardinality k.
Semigroup min_cap(std::size_t k);

// xy = x.
Semigroup left_zero(std::size_t n);

// xy = y.
Semigroup right_zero(std::size_t n);

// The cyclic group Z/nZ; index i is the residue i.
Semigroup cyclic(std::size_t n);

// Every product is the zero, index 0.
Semigroup null_semigroup(std::size_t n);

// {(i, j) : 1 <= i <= j <= k} u {0} with (i, j)(j + 1, l) = (i, l) and all
// other products 0. The zero is index 0; pairs follow in lexicographic order.
Semigroup nil_interval(std::size_t k);

// Index of the pair (i, j) inside nil_interval(k).
Element nil_interval_index(std::size_t k, std::size_t i, std::size_t j);

// Monomials x_1^a_1 ... x_v^a_v of total degree 1..d in v commuting
// variables, with every product of degree > d collapsed to a zero element.
// Commutative and nilpotent with class order d + 1; the zero is the
// last index.
Semigroup truncated_monomials(std::size_t variables, std::size_t degree);

// Parses "mincap:4", "leftzero:3", "rightzero:2", "cyclic:5", "null:3",
// "nilinterval:2", "monomials:2:3" or "trivial". Throws InputError.
Semigroup from_spec(const std::string& spec);

}  // namespace sgisect::families
