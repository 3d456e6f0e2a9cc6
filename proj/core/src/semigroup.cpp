#include "sgisect/semigroup.hpp"

#include <algorithm>
#include <bit>

#include "sgisect/error.hpp"

namespace sgisect {

std::variant<Semigroup, AssociativityViolation> check_associative(
    const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  if (n == 0) {
    throw InputError("semigroup table must have at least one row");
  }
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw InputError("table is not square: row " + std::to_string(r) +
                       " has " + std::to_string(table[r].size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n) {
        throw InputError("table entry at (" + std::to_string(r) + "," +
                         std::to_string(c) + ") is " +
                         std::to_string(table[r][c]) + ", outside 0.." +
                         std::to_string(n - 1));
      }
      flat.push_back(table[r][c]);
    }
  }
  auto at = [&](Element x, Element y) { return flat[x * n + y]; };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = at(x, y);
      for (Element z = 0; z < n; ++z) {
        if (at(xy, z) != at(x, at(y, z))) {
          return AssociativityViolation{x, y, z};
        }
      }
    }
  }
  return Semigroup(n, std::move(flat));
}

Semigroup Semigroup::from_table(const std::vector<std::vector<Element>>& table,
                                std::vector<std::string> labels) {
  auto checked = check_associative(table);
  if (auto* v = std::get_if<AssociativityViolation>(&checked)) {
    throw InputError("table is not associative at (" + std::to_string(v->x) +
                     "," + std::to_string(v->y) + "," + std::to_string(v->z) +
                     ")");
  }
  auto s = std::get<Semigroup>(std::move(checked));
  if (!labels.empty() && labels.size() != s.size()) {
    throw InputError("expected " + std::to_string(s.size()) +
                     " element labels, got " + std::to_string(labels.size()));
  }
  s.labels_ = std::move(labels);
  return s;
}

Element Semigroup::multiply(Element x, Element y) const {
  if (x >= size_ || y >= size_) {
    throw InputError("element index out of range in multiply(" +
                     std::to_string(x) + "," + std::to_string(y) +
                     ") for semigroup of size " + std::to_string(size_));
  }
  return (*this)(x, y);
}

std::vector<std::vector<Element>> Semigroup::rows() const {
  std::vector<std::vector<Element>> out(size_);
  for (std::size_t r = 0; r < size_; ++r) {
    out[r].assign(table_.begin() + r * size_, table_.begin() + (r + 1) * size_);
  }
  return out;
}

std::string Semigroup::label(Element x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

Element power(const Semigroup& s, Element x, const BigInt& e) {
  if (e < 1) {
    throw PreconditionError("power: exponent must be at least 1");
  }
  if (x >= s.size()) {
    throw InputError("power: element index out of range");
  }
  // Left-to-right binary method; the leading bit initializes the result.
  const std::size_t bits = msb(e) + 1;
  Element result = x;
  for (std::size_t i = bits - 1; i-- > 0;) {
    result = s(result, result);
    if (bit_test(e, static_cast<unsigned>(i))) result = s(result, x);
  }
  return result;
}

Element power(const Semigroup& s, Element x, std::uint64_t e) {
  return power(s, x, BigInt(e));
}

DistinguishedElements distinguished_elements(const Semigroup& s) {
  DistinguishedElements out;
  const auto n = static_cast<Element>(s.size());
  for (Element x = 0; x < n; ++x) {
    if (s(x, x) == x) out.idempotents.push_back(x);
  }
  for (Element z = 0; z < n && !out.zero; ++z) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = s(z, x) == z && s(x, z) == z;
    }
    if (ok) out.zero = z;
  }
  for (Element e = 0; e < n && !out.neutral; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = s(e, x) == x && s(x, e) == x;
    }
    if (ok) out.neutral = e;
  }
  return out;
}

MonogenicOrders monogenic_orders(const Semigroup& s) {
  MonogenicOrders out;
  out.cardinality.resize(s.size());
  std::vector<char> seen(s.size());
  for (Element x = 0; x < s.size(); ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t count = 0;
    for (Element p = x; !seen[p]; p = s(p, x)) {
      seen[p] = 1;
      ++count;
    }
    out.cardinality[x] = count;
    out.class_order = std::max(out.class_order, count);
  }
  return out;
}

LocalMonoid local_monoid(const Semigroup& s, Element e) {
  if (e >= s.size() || s(e, e) != e) {
    throw PreconditionError("local_monoid: element " + std::to_string(e) +
                            " is not idempotent");
  }
  std::vector<char> member(s.size());
  for (Element x = 0; x < s.size(); ++x) member[s(s(e, x), e)] = 1;
  std::vector<Element> elements;
  for (Element x = 0; x < s.size(); ++x) {
    if (member[x]) elements.push_back(x);
  }
  auto monoid = induced_subsemigroup(s, elements);
  const auto neutral = static_cast<Element>(
      std::lower_bound(elements.begin(), elements.end(), e) - elements.begin());
  return LocalMonoid{std::move(monoid), std::move(elements), neutral};
}

std::vector<Element> subsemigroup_closure(const Semigroup& s,
                                          std::span<const Element> gens) {
  if (gens.empty()) {
    throw PreconditionError("subsemigroup_closure: generator set is empty");
  }
  std::vector<char> member(s.size());
  std::vector<Element> elements;
  for (Element g : gens) {
    if (g >= s.size()) throw InputError("generator index out of range");
    if (!member[g]) {
      member[g] = 1;
      elements.push_back(g);
    }
  }
  // Right-multiplying by generators suffices: every product of generators
  // is reached as a word.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (Element g : gens) {
      const Element p = s(elements[i], g);
      if (!member[p]) {
        member[p] = 1;
        elements.push_back(p);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

Semigroup induced_subsemigroup(const Semigroup& s,
                               std::span<const Element> closed_subset) {
  std::vector<Element> elems(closed_subset.begin(), closed_subset.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<std::int64_t> index(s.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<std::vector<Element>> table(elems.size(),
                                          std::vector<Element>(elems.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const auto p = index[s(elems[i], elems[j])];
      if (p < 0) {
        throw PreconditionError("induced_subsemigroup: subset is not closed");
      }
      table[i][j] = static_cast<Element>(p);
    }
    if (!s.labels().empty()) labels.push_back(s.labels()[elems[i]]);
  }
  return Semigroup::from_table(table, std::move(labels));
}

Element DirectProduct::encode(std::span<const Element> components) const {
  if (components.size() != factor_sizes.size()) {
    throw InputError("direct product encode: wrong number of components");
  }
  std::size_t code = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i] >= factor_sizes[i]) {
      throw InputError("direct product encode: component out of range");
    }
    code = code * factor_sizes[i] + components[i];
  }
  return static_cast<Element>(code);
}

DirectProduct direct_product(std::span<const SemigroupPtr> factors,
                             std::size_t cap) {
  if (factors.empty()) {
    throw PreconditionError("direct_product: need at least one factor");
  }
  std::size_t total = 1;
  std::vector<std::size_t> sizes;
  for (const auto& f : factors) {
    if (f->size() > cap / total) {
      throw CapExceeded("direct_product: product size exceeds cap of " +
                        std::to_string(cap) + " elements");
    }
    total *= f->size();
    sizes.push_back(f->size());
  }
  const std::size_t k = factors.size();
  std::vector<std::vector<Element>> proj(k, std::vector<Element>(total));
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t rest = x;
    for (std::size_t i = k; i-- > 0;) {
      proj[i][x] = static_cast<Element>(rest % sizes[i]);
      rest /= sizes[i];
    }
  }
  // Componentwise products of associative tables are associative, so the
  // table is built directly without the cubic check.
  std::vector<Element> flat(total * total);
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t y = 0; y < total; ++y) {
      std::size_t code = 0;
      for (std::size_t i = 0; i < k; ++i) {
        code = code * sizes[i] + (*factors[i])(proj[i][x], proj[i][y]);
      }
      flat[x * total + y] = static_cast<Element>(code);
    }
  }
  return DirectProduct{Semigroup(total, std::move(flat)), std::move(sizes),
                       std::move(proj)};
}

Morphism::Morphism(SemigroupPtr target, std::vector<Element> images)
    : target_(std::move(target)), images_(std::move(images)) {
  if (!target_) throw InputError("morphism target is null");
  if (images_.empty()) throw InputError("morphism alphabet must be non-empty");
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a] >= target_->size()) {
      throw InputError("image of letter " + std::to_string(a) + " is " +
                       std::to_string(images_[a]) + ", outside 0.." +
                       std::to_string(target_->size() - 1));
    }
  }
}

Element apply_morphism(const Morphism& h, std::span<const Letter> word) {
  if (word.empty()) {
    throw InputError("apply_morphism: the empty word has no image in A+");
  }
  const Semigroup& s = h.target();
  Element acc = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] >= h.alphabet_size()) {
      throw InputError("letter " + std::to_string(word[i]) +
                       " outside alphabet of size " +
                       std::to_string(h.alphabet_size()));
    }
    const Element img = h.images()[word[i]];
    acc = i == 0 ? img : s(acc, img);
  }
  return acc;
}

ProductMorphism product_morphism(std::span<const Morphism> hs,
                                 std::size_t cap) {
  if (hs.empty()) {
    throw PreconditionError("product_morphism: need at least one morphism");
  }
  const std::size_t m = hs.front().alphabet_size();
  std::vector<SemigroupPtr> targets;
  for (const auto& h : hs) {
    if (h.alphabet_size() != m) {
      throw PreconditionError("product_morphism: alphabet sizes differ");
    }
    targets.push_back(h.target_ptr());
  }
  auto product = std::make_shared<DirectProduct>(direct_product(targets, cap));
  std::vector<Element> images(m);
  std::vector<Element> comp(hs.size());
  for (Letter a = 0; a < m; ++a) {
    for (std::size_t i = 0; i < hs.size(); ++i) comp[i] = hs[i].image(a);
    images[a] = product->encode(comp);
  }
  SemigroupPtr target(product, &product->semigroup);
  return ProductMorphism{product, Morphism(std::move(target), std::move(images))};
}

std::size_t ceil_log2(std::uint64_t n) {
  if (n == 0) throw PreconditionError("ceil_log2 of zero");
  return n == 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

std::size_t ceil_log2(const BigInt& n) {
  if (n < 1) throw PreconditionError("ceil_log2 of non-positive value");
  if (n == 1) return 0;
  const BigInt m = n - 1;
  return msb(m) + 1;
}

}  // namespace sgisect
