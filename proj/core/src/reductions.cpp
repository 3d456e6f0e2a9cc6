#include "sgisect/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "sgisect/error.hpp"
#include "sgisect/families.hpp"

namespace sgisect {

CnfFormula CnfFormula::make(std::size_t variable_count, std::vector<Clause> clauses) {
  for (auto& c : clauses) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty()) throw InputError("empty clause");
    if (c.size() > 3) {
      throw InputError("clause has " + std::to_string(c.size()) +
                       " distinct literals; at most 3 are supported");
    }
    for (const auto& l : c) {
      if (l.variable < 1 || l.variable > variable_count) {
        throw InputError("literal variable " + std::to_string(l.variable) +
                         " outside 1.." + std::to_string(variable_count));
      }
    }
  }
  return CnfFormula{variable_count, std::move(clauses)};
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
      return a.at(l.variable - 1) == l.positive;
    });
  });
}

DimacsResult parse_dimacs(const std::string& text) {
  DimacsResult out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> vars;
  std::size_t declared_clauses = 0;
  std::vector<Clause> clauses;
  Clause current;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;  // SATLIB trailer
    if (first == "p") {
      std::string fmt;
      long long v = -1, c = -1;
      if (vars || !(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0) {
        throw InputError("malformed DIMACS header, expected 'p cnf <vars> <clauses>'",
                         line_no);
      }
      std::string extra;
      if (ls >> extra) throw InputError("trailing tokens after DIMACS header", line_no);
      vars = static_cast<std::size_t>(v);
      declared_clauses = static_cast<std::size_t>(c);
      continue;
    }
    if (!vars) throw InputError("clause data before the 'p cnf' header", line_no);
    std::istringstream toks(line);
    for (std::string tok; toks >> tok;) {
      long long lit = 0;
      try {
        std::size_t pos = 0;
        lit = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw InputError("bad literal '" + tok + "'", line_no);
      }
      if (lit == 0) {
        if (current.empty()) throw InputError("empty clause", line_no);
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > *vars) {
        throw InputError("literal " + tok + " outside 1.." + std::to_string(*vars),
                         line_no);
      }
      current.push_back(Literal{static_cast<std::uint32_t>(var), lit > 0});
      Clause set = current;
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      if (set.size() > 3) throw InputError("clause wider than 3 literals", line_no);
    }
  }
  if (!vars) throw InputError("missing 'p cnf' header");
  if (!current.empty()) {
    out.warnings.push_back("last clause is not terminated by 0; accepted");
    clauses.push_back(std::move(current));
  }
  if (clauses.size() != declared_clauses) {
    out.warnings.push_back("header declares " + std::to_string(declared_clauses) +
                           " clauses, found " + std::to_string(clauses.size()));
  }
  out.formula = CnfFormula::make(*vars, std::move(clauses));
  return out;
}

std::optional<Assignment> sat_solve_exhaustive(const CnfFormula& f) {
  const std::size_t k = f.variable_count;
  if (k > kMaxExhaustiveVariables) {
    throw CapExceeded("exhaustive SAT supports at most " +
                      std::to_string(kMaxExhaustiveVariables) + " variables");
  }
  Assignment a(k);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    for (std::size_t i = 0; i < k; ++i) a[i] = (bits >> (k - 1 - i)) & 1u;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

std::vector<std::string> literal_letter_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= k; ++i) names.push_back("nx" + std::to_string(i));
  return names;
}

Letter literal_letter(std::size_t k, const Literal& l) {
  return static_cast<Letter>(l.positive ? l.variable - 1 : k + l.variable - 1);
}

namespace {

void require_variables(const CnfFormula& f) {
  if (f.variable_count == 0) throw PreconditionError("reduction needs at least one variable");
}

bool clause_has(const Clause& c, std::size_t k, Letter letter) {
  return std::any_of(c.begin(), c.end(),
                     [&](const Literal& l) { return literal_letter(k, l) == letter; });
}

}  // namespace

Instance reduce_unbounded(const CnfFormula& f) {
  require_variables(f);
  const std::size_t k = f.variable_count;
  const std::size_t m = 2 * k;
  // Value v of S_{k+2} is index v - 1.
  const auto S = share(families::min_cap(k + 2));
  const std::string table = "mincap" + std::to_string(k + 2);
  constexpr Element one = 0, two = 1;
  const auto value_k = static_cast<Element>(k - 1);
  const auto value_k1 = static_cast<Element>(k);
  const auto value_k2 = static_cast<Element>(k + 1);

  std::vector<Constraint> cons;
  cons.push_back({"g0", table, Morphism(S, std::vector<Element>(m, one)), {value_k}});
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<Element> img(m, one);
    img[i - 1] = two;
    img[k + i - 1] = two;
    cons.push_back({"g" + std::to_string(i), table, Morphism(S, std::move(img)), {value_k1}});
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    std::vector<Element> img(m, one);
    for (Letter a = 0; a < m; ++a) {
      if (clause_has(f.clauses[j], k, a)) img[a] = two;
    }
    cons.push_back({"h" + std::to_string(j + 1), table, Morphism(S, std::move(img)),
                    {value_k1, value_k2}});
  }
  return Instance(literal_letter_names(k), std::move(cons));
}

Instance reduce_nilpotent(const CnfFormula& f) {
  require_variables(f);
  const std::size_t k = f.variable_count;
  const std::size_t m = 2 * k;
  const auto S = share(families::nil_interval(k));
  const std::string table = "nilinterval" + std::to_string(k);
  constexpr Element zero = 0;

  std::vector<Element> diag(m);
  for (std::size_t i = 1; i <= k; ++i) {
    diag[i - 1] = diag[k + i - 1] = families::nil_interval_index(k, i, i);
  }
  std::vector<Constraint> cons;
  cons.push_back({"g", table, Morphism(S, diag), {families::nil_interval_index(k, 1, k)}});
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    std::vector<Element> img = diag;
    for (Letter a = 0; a < m; ++a) {
      if (clause_has(f.clauses[j], k, a)) img[a] = zero;
    }
    cons.push_back({"h" + std::to_string(j + 1), table, Morphism(S, std::move(img)), {zero}});
  }
  return Instance(literal_letter_names(k), std::move(cons));
}

Word assignment_to_word(const Assignment& a) {
  const std::size_t k = a.size();
  Word w;
  for (std::size_t i = 0; i < k; ++i) {
    w.push_back(static_cast<Letter>(a[i] ? i : k + i));
  }
  return w;
}

Assignment word_to_assignment(const Word& w, std::size_t k, AssignmentMode mode) {
  std::vector<bool> pos(k), neg(k);
  for (Letter a : w) {
    if (a >= 2 * k) {
      throw InputError("letter " + std::to_string(a) + " outside the " +
                       std::to_string(2 * k) + "-letter literal alphabet");
    }
    (a < k ? pos[a] : neg[a - k]) = true;
  }
  Assignment out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (pos[i] && neg[i]) {
      throw InputError("both x" + std::to_string(i + 1) + " and nx" +
                       std::to_string(i + 1) + " occur; induced assignment undefined");
    }
    if (mode == AssignmentMode::kStrict && !pos[i] && !neg[i]) {
      throw InputError("variable x" + std::to_string(i + 1) + " does not occur");
    }
    out[i] = pos[i];
  }
  return out;
}

}  // namespace sgisect
