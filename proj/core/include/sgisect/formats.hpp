#pragma once

// Line-oriented text formats. '#' starts a comment; tokens are separated by
// whitespace; serializers emit canonical text (single spaces, '\n' line
// ends, trailing newline).
//
// Instance (SGI):
//   SGI 1
//   ALPHABET <m>
//   NAMES <m letter names>          optional on input, default a0..a{m-1}
//   TABLE <name> <n>                one or more
//   <n rows of n indices>
//   END
//   CONSTRAINT <table> [<name>]     one or more; name defaults to c<i>
//   IMAGES <m indices>
//   ACCEPT <indices...>
//   END
//
// SLP:
//   SLP 1
//   START <var>
//   <var> = <sym> <sym> ...         variables are tokens starting with 'X'
//
// A table file holds one or more TABLE blocks, optionally preceded by the
// SGI header.

#include <string>
#include <utility>
#include <vector>

#include "sgisect/circuit.hpp"
#include "sgisect/instance.hpp"
#include "sgisect/slp.hpp"

namespace sgisect {

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

struct NamedTable {
  std::string name;
  Semigroup semigroup;
};

std::vector<NamedTable> parse_tables(const std::string& text);
std::string serialize_table(const std::string& name, const Semigroup& s);

struct ParsedSlp {
  Slp slp;
  std::vector<std::string> letters;
};

// Letters resolve against `letters`; unknown names are an error.
Slp parse_slp(const std::string& text, const std::vector<std::string>& letters);
// Letters are collected in order of first appearance.
ParsedSlp parse_slp(const std::string& text);
std::string serialize_slp(const Slp& g, const std::vector<std::string>& letters);

// CIRCUIT 1 / INPUTS / GATE / OUTPUTS text listing.
std::string serialize_circuit(const BooleanCircuit& c);

}  // namespace sgisect
