#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "sgisect/semigroup.hpp"
#include "sgisect/slp.hpp"

namespace sgisect {

// One recognizer h^{-1}(P). `table_name` only matters for serialization.
struct Constraint {
  std::string name;
  std::string table_name;
  Morphism morphism;
  std::vector<Element> accept;  // ascending, unique; may be empty

  const Semigroup& semigroup() const noexcept { return morphism.target(); }
  bool accepts(Element x) const;
};

// An intersection non-emptiness question: is there a word w with
// h_i(w) in P_i for every constraint i?
class Instance {
 public:
  // Validates shared alphabet, accept ranges and unique constraint names;
  // sorts and deduplicates accept sets. Throws InputError.
  Instance(std::vector<std::string> letters, std::vector<Constraint> constraints);

  std::size_t alphabet_size() const noexcept { return letters_.size(); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  const std::vector<Constraint>& constraints() const noexcept {
    return constraints_;
  }
  std::vector<Morphism> morphisms() const;

  // N = sum of |S_i|.
  std::size_t total_size() const;
  // Product of |S_i|, exact.
  BigInt product_size() const;

  // Letter index for a name; throws InputError.
  Letter letter(const std::string& name) const;
  Word parse_word(const std::string& text) const;
  std::string format_word(const Word& w) const;

  // Same letters and constraints (name, table contents, images, accept);
  // table names are ignored.
  bool structurally_equal(const Instance& other) const;

 private:
  std::vector<std::string> letters_;
  std::vector<Constraint> constraints_;
};

// Letter names a0, a1, ...
std::vector<std::string> default_letter_names(std::size_t m);

struct Witness {
  std::variant<Word, Slp> value;
  std::string provenance;

  bool is_word() const noexcept { return std::holds_alternative<Word>(value); }
  const Word& word() const { return std::get<Word>(value); }
  const Slp& slp() const { return std::get<Slp>(value); }
};

struct VerifyReport {
  bool accepted = false;
  std::vector<Element> images;  // per constraint
  std::vector<bool> satisfied;  // per constraint
};

// The image of the witness under every h_i and whether it lands in P_i.
// Words are evaluated directly, SLPs via slp_image without expansion.
VerifyReport verify_witness(const Instance& inst, const Witness& w);

}  // namespace sgisect
