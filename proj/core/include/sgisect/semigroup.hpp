#pragma once

// Finite semigroups given by multiplication tables, morphisms from free
// semigroups into them, and the elementary algebra the rest of the library
// is built on.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgisect {

using Element = std::uint32_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using BigInt = boost::multiprecision::cpp_int;

// Default upper bound on the number of elements a product construction may
// materialize.
inline constexpr std::size_t kDefaultProductCap = std::size_t{1} << 24;

class Semigroup;
struct DirectProduct;
using SemigroupPtr = std::shared_ptr<const Semigroup>;

// The lexicographically first triple (x, y, z) with (xy)z != x(yz).
struct AssociativityViolation {
  Element x;
  Element y;
  Element z;

  bool operator==(const AssociativityViolation&) const = default;
};

// Validates a square table of element indices. Structural problems
// (non-square, out-of-range entries) throw InputError naming the position;
// a well-formed but non-associative table yields the first violation.
std::variant<Semigroup, AssociativityViolation> check_associative(
    const std::vector<std::vector<Element>>& table);

// An immutable finite semigroup. Instances can only be obtained through
// validation, so every Semigroup value is associative.
class Semigroup {
 public:
  // Throws InputError on structural problems and on non-associativity.
  static Semigroup from_table(const std::vector<std::vector<Element>>& table,
                              std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }

  // Unchecked product; callers guarantee x, y < size().
  Element operator()(Element x, Element y) const noexcept {
    return table_[static_cast<std::size_t>(x) * size_ + y];
  }

  // Range-checked product.
  Element multiply(Element x, Element y) const;

  std::vector<std::vector<Element>> rows() const;
  std::span<const Element> flat_table() const noexcept { return table_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Element x) const;

  // Same table; labels are display-only and ignored.
  bool operator==(const Semigroup& other) const noexcept {
    return size_ == other.size_ && table_ == other.table_;
  }

 private:
  friend std::variant<Semigroup, AssociativityViolation> check_associative(
      const std::vector<std::vector<Element>>& table);
  friend DirectProduct direct_product(std::span<const SemigroupPtr> factors,
                                      std::size_t cap);

  Semigroup(std::size_t size, std::vector<Element> table)
      : size_(size), table_(std::move(table)) {}

  std::size_t size_;
  std::vector<Element> table_;  // row-major
  std::vector<std::string> labels_;
};

inline SemigroupPtr share(Semigroup s) {
  return std::make_shared<const Semigroup>(std::move(s));
}

// x^e by square-and-multiply. e must be >= 1.
Element power(const Semigroup& s, Element x, const BigInt& e);
Element power(const Semigroup& s, Element x, std::uint64_t e);

struct DistinguishedElements {
  std::vector<Element> idempotents;  // ascending
  std::optional<Element> zero;
  std::optional<Element> neutral;
};

DistinguishedElements distinguished_elements(const Semigroup& s);

// cardinality[x] = |{x, x^2, x^3, ...}|; class_order is the maximum.
struct MonogenicOrders {
  std::vector<std::size_t> cardinality;
  std::size_t class_order = 0;
};

MonogenicOrders monogenic_orders(const Semigroup& s);

struct LocalMonoid {
  Semigroup monoid;
  // elements[i] is the element of the ambient semigroup that monoid index i
  // stands for; ascending.
  std::vector<Element> elements;
  Element neutral;  // index inside `monoid`
};

// The local monoid eSe at an idempotent e. Throws PreconditionError if e is
// not idempotent.
LocalMonoid local_monoid(const Semigroup& s, Element e);

// Smallest product-closed superset of gens, ascending. gens must be
// non-empty.
std::vector<Element> subsemigroup_closure(const Semigroup& s,
                                          std::span<const Element> gens);

// The table induced on a product-closed subset, relabeled to 0..|subset|-1
// in ascending order of the original indices.
Semigroup induced_subsemigroup(const Semigroup& s,
                               std::span<const Element> closed_subset);

struct DirectProduct {
  Semigroup semigroup;
  std::vector<std::size_t> factor_sizes;
  // projections[i][x] is the i-th component of product element x.
  std::vector<std::vector<Element>> projections;

  // Mixed-radix encoding with the first factor most significant.
  Element encode(std::span<const Element> components) const;
};

DirectProduct direct_product(std::span<const SemigroupPtr> factors,
                             std::size_t cap = kDefaultProductCap);

// A morphism A+ -> S fixed by the images of the letters.
class Morphism {
 public:
  Morphism(SemigroupPtr target, std::vector<Element> images);

  std::size_t alphabet_size() const noexcept { return images_.size(); }
  const Semigroup& target() const noexcept { return *target_; }
  const SemigroupPtr& target_ptr() const noexcept { return target_; }
  const std::vector<Element>& images() const noexcept { return images_; }
  Element image(Letter a) const { return images_.at(a); }

  bool operator==(const Morphism& other) const noexcept {
    return *target_ == *other.target_ && images_ == other.images_;
  }

 private:
  SemigroupPtr target_;
  std::vector<Element> images_;
};

// Left-to-right fold of letter images. Throws InputError on the empty word
// or a letter outside the alphabet.
Element apply_morphism(const Morphism& h, std::span<const Letter> word);

struct ProductMorphism {
  std::shared_ptr<const DirectProduct> product;
  Morphism morphism;
};

// The morphism a -> (h_1(a), ..., h_k(a)) into the direct product of the
// targets.
ProductMorphism product_morphism(std::span<const Morphism> hs,
                                 std::size_t cap = kDefaultProductCap);

// ceil(log2(n)) for n >= 1.
std::size_t ceil_log2(std::uint64_t n);
std::size_t ceil_log2(const BigInt& n);

}  // namespace sgisect
