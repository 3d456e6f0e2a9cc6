#include "sgisect/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "sgisect/error.hpp"

namespace sgisect::families {
namespace {

using Table = std::vector<std::vector<Element>>;

Table square(std::size_t n) { return Table(n, std::vector<Element>(n)); }

void require_positive(std::size_t n, const char* family) {
  if (n == 0) {
    throw InputError(std::string(family) + ": size parameter must be >= 1");
  }
}

}  // namespace

Semigroup trivial() { return Semigroup::from_table({{0}}); }

Semigroup min_cap(std::size_t k) {
  require_positive(k, "mincap");
  auto t = square(k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i + 1));
    for (std::size_t j = 0; j < k; ++j) {
      // (i+1) + (j+1) capped at k, back to an index.
      t[i][j] = static_cast<Element>(std::min(i + j + 2, k) - 1);
    }
  }
  return Semigroup::from_table(t, std::move(labels));
}

Semigroup left_zero(std::size_t n) {
  require_positive(n, "leftzero");
  auto t = square(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>(i);
  return Semigroup::from_table(t);
}

Semigroup right_zero(std::size_t n) {
  require_positive(n, "rightzero");
  auto t = square(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>(j);
  return Semigroup::from_table(t);
}

Semigroup cyclic(std::size_t n) {
  require_positive(n, "cyclic");
  auto t = square(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  return Semigroup::from_table(t);
}

Semigroup null_semigroup(std::size_t n) {
  require_positive(n, "null");
  return Semigroup::from_table(square(n));
}

Element nil_interval_index(std::size_t k, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > k) {
    throw InputError("nilinterval: pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ") invalid for k=" + std::to_string(k));
  }
  // Pairs with first component < i come first: sum_{r<i} (k - r + 1).
  std::size_t index = 1;
  for (std::size_t r = 1; r < i; ++r) index += k - r + 1;
  return static_cast<Element>(index + (j - i));
}

Semigroup nil_interval(std::size_t k) {
  require_positive(k, "nilinterval");
  std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 0}};
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i; j <= k; ++j) {
      pairs.emplace_back(i, j);
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  const std::size_t n = pairs.size();
  auto t = square(n);
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = 1; y < n; ++y) {
      const auto [i, j] = pairs[x];
      const auto [p, l] = pairs[y];
      if (p == j + 1) t[x][y] = nil_interval_index(k, i, l);
    }
  }
  return Semigroup::from_table(t, std::move(labels));
}

Semigroup truncated_monomials(std::size_t variables, std::size_t degree) {
  require_positive(variables, "monomials");
  require_positive(degree, "monomials");
  // Enumerate exponent vectors of total degree 1..degree.
  std::vector<std::vector<std::size_t>> monos;
  std::vector<std::size_t> cur(variables, 0);
  auto rec = [&](auto&& self, std::size_t var, std::size_t left) -> void {
    if (var == variables) {
      std::size_t total = 0;
      for (auto e : cur) total += e;
      if (total > 0) monos.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
    std::size_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    return da != db ? da < db : a > b;
  });
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    index[monos[i]] = static_cast<Element>(i);
  }
  const auto zero = static_cast<Element>(monos.size());
  const std::size_t n = monos.size() + 1;
  auto t = square(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == zero || y == zero) {
        t[x][y] = zero;
        continue;
      }
      std::vector<std::size_t> prod(variables);
      for (std::size_t v = 0; v < variables; ++v) prod[v] = monos[x][v] + monos[y][v];
      auto it = index.find(prod);
      t[x][y] = it == index.end() ? zero : it->second;
    }
  }
  return Semigroup::from_table(t);
}

Semigroup from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.empty()) throw InputError("empty family spec");
  auto arg = [&](std::size_t i) -> std::size_t {
    if (i >= parts.size()) {
      throw InputError("family spec '" + spec + "' is missing a parameter");
    }
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(parts[i], &pos);
      if (pos != parts[i].size()) throw std::invalid_argument(parts[i]);
      return v;
    } catch (const std::logic_error&) {
      throw InputError("family spec '" + spec + "': bad parameter '" +
                       parts[i] + "'");
    }
  };
  const auto& name = parts[0];
  std::size_t expected = 2;
  Semigroup out = trivial();
  if (name == "trivial") {
    expected = 1;
  } else if (name == "mincap") {
    out = min_cap(arg(1));
  } else if (name == "leftzero") {
    out = left_zero(arg(1));
  } else if (name == "rightzero") {
    out = right_zero(arg(1));
  } else if (name == "cyclic") {
    out = cyclic(arg(1));
  } else if (name == "null") {
    out = null_semigroup(arg(1));
  } else if (name == "nilinterval") {
    out = nil_interval(arg(1));
  } else if (name == "monomials") {
    out = truncated_monomials(arg(1), arg(2));
    expected = 3;
  } else {
    throw InputError("unknown semigroup family '" + name + "'");
  }
  if (parts.size() != expected) {
    throw InputError("family spec '" + spec + "' has too many parameters");
  }
  return out;
}

}  // namespace sgisect::families
