#include "sgisect/varieties.hpp"

#include <stdexcept>
#include <vector>

namespace sgisect {
namespace {

// Elements representable as a product of exactly k factors.
std::vector<Element> next_set_product(const Semigroup& s,
                                      const std::vector<Element>& current) {
  std::vector<char> member(s.size());
  for (Element p : current)
    for (Element x = 0; x < s.size(); ++x) member[s(p, x)] = 1;
  std::vector<Element> out;
  for (Element x = 0; x < s.size(); ++x)
    if (member[x]) out.push_back(x);
  return out;
}

std::vector<Element> all_elements(const Semigroup& s) {
  std::vector<Element> out(s.size());
  for (Element x = 0; x < s.size(); ++x) out[x] = x;
  return out;
}

bool li_condition(const Semigroup& s, const std::vector<Element>& products) {
  for (Element p : products) {
    for (Element q : products) {
      const Element pq = s(p, q);
      for (Element z = 0; z < s.size(); ++z) {
        if (s(s(p, z), q) != pq) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_commutative(const Semigroup& s) {
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = x + 1; y < s.size(); ++y)
      if (s(x, y) != s(y, x)) return false;
  return true;
}

bool is_monoid(const Semigroup& s) {
  return distinguished_elements(s).neutral.has_value();
}

bool is_group(const Semigroup& s) {
  const auto neutral = distinguished_elements(s).neutral;
  if (!neutral) return false;
  for (Element x = 0; x < s.size(); ++x) {
    bool has_inverse = false;
    for (Element y = 0; y < s.size() && !has_inverse; ++y) {
      has_inverse = s(x, y) == *neutral && s(y, x) == *neutral;
    }
    if (!has_inverse) return false;
  }
  return true;
}

bool is_nilpotent(const Semigroup& s) {
  const auto d = distinguished_elements(s);
  return d.idempotents.size() == 1 && d.zero == d.idempotents.front();
}

bool is_li(const Semigroup& s) {
  for (Element e = 0; e < s.size(); ++e) {
    if (s(e, e) != e) continue;
    for (Element x = 0; x < s.size(); ++x) {
      if (s(s(e, x), e) != e) return false;
    }
  }
  return true;
}

bool satisfies_li_k(const Semigroup& s, std::size_t k) {
  if (k == 0) throw std::invalid_argument("satisfies_li_k: k must be >= 1");
  auto products = all_elements(s);
  for (std::size_t i = 1; i < k; ++i) products = next_set_product(s, products);
  return li_condition(s, products);
}

std::optional<std::size_t> li_degree(const Semigroup& s) {
  if (!is_li(s)) return std::nullopt;
  auto products = all_elements(s);
  for (std::size_t k = 1; k <= s.size() + 1; ++k) {
    if (li_condition(s, products)) return k;
    products = next_set_product(s, products);
  }
  throw std::logic_error("li_degree: LI semigroup not in LI_{n+1}");
}

bool is_a2n(const Semigroup& s) {
  for (Element x = 0; x < s.size(); ++x) {
    const Element sq = s(x, x);
    for (Element y = 0; y < s.size(); ++y) {
      if (s(sq, y) != sq || s(y, sq) != sq) return false;
    }
  }
  return true;
}

ClassificationReport classify(const Semigroup& s) {
  ClassificationReport r;
  r.is_commutative = is_commutative(s);
  r.is_group = is_group(s);
  r.is_monoid = is_monoid(s);
  r.is_nilpotent = is_nilpotent(s);
  r.is_li = is_li(s);
  r.li_degree = li_degree(s);
  r.is_a2n = is_a2n(s);
  r.class_order = monogenic_orders(s).class_order;
  return r;
}

}  // namespace sgisect
