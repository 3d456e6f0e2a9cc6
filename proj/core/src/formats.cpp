#include "sgisect/formats.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "sgisect/error.hpp"

namespace sgisect {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{n, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
    throw InputError(std::string("expected ") + what + ", got '" + tok + "'", line);
  }
  try {
    return std::stoull(tok);
  } catch (const std::out_of_range&) {
    throw InputError(std::string(what) + " '" + tok + "' is too large", line);
  }
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ == lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  const Line& next(const char* expecting) {
    if (done()) {
      throw InputError(std::string("unexpected end of input, expected ") + expecting,
                       last_line());
    }
    return lines_[pos_++];
  }

  const Line& keyword(const std::string& kw, std::size_t min_args, std::size_t max_args) {
    const Line& l = next(kw.c_str());
    if (l.tokens[0] != kw) {
      throw InputError("expected '" + kw + "', got '" + l.tokens[0] + "'", l.number);
    }
    const std::size_t args = l.tokens.size() - 1;
    if (args < min_args || args > max_args) {
      throw InputError("wrong number of arguments to " + kw, l.number);
    }
    return l;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

void expect_header(Cursor& cur, const std::string& magic) {
  const Line& l = cur.next(magic.c_str());
  if (l.tokens.size() != 2 || l.tokens[0] != magic) {
    throw InputError("expected header '" + magic + " 1'", l.number);
  }
  if (l.tokens[1] != "1") {
    throw InputError("unsupported " + magic + " version " + l.tokens[1], l.number);
  }
}

NamedTable read_table_block(Cursor& cur) {
  const Line& head = cur.keyword("TABLE", 2, 2);
  const std::size_t line = head.number;
  const std::string name = head.tokens[1];
  const std::size_t n = parse_index(head.tokens[2], line, "table size");
  if (n == 0) throw InputError("table size must be positive", line);
  std::vector<std::vector<Element>> rows;
  for (std::size_t r = 0; r < n; ++r) {
    const Line& row = cur.next("table row");
    if (row.tokens.size() != n) {
      throw InputError("table row has " + std::to_string(row.tokens.size()) +
                           " entries, expected " + std::to_string(n),
                       row.number);
    }
    std::vector<Element> entries;
    for (const auto& tok : row.tokens) {
      const auto v = parse_index(tok, row.number, "element index");
      if (v >= n) {
        throw InputError("entry " + tok + " outside 0.." + std::to_string(n - 1),
                         row.number);
      }
      entries.push_back(static_cast<Element>(v));
    }
    rows.push_back(std::move(entries));
  }
  cur.keyword("END", 0, 0);
  auto checked = check_associative(rows);
  if (auto* v = std::get_if<AssociativityViolation>(&checked)) {
    throw InputError("table '" + name + "' is not associative at (" +
                         std::to_string(v->x) + "," + std::to_string(v->y) + "," +
                         std::to_string(v->z) + ")",
                     line);
  }
  return NamedTable{name, std::get<Semigroup>(std::move(checked))};
}

void write_rows(std::ostringstream& out, const Semigroup& s) {
  for (Element r = 0; r < s.size(); ++r) {
    for (Element c = 0; c < s.size(); ++c) {
      if (c) out << ' ';
      out << s(r, c);
    }
    out << '\n';
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Cursor cur(tokenize(text));
  expect_header(cur, "SGI");
  const Line& alpha = cur.keyword("ALPHABET", 1, 1);
  const std::size_t m = parse_index(alpha.tokens[1], alpha.number, "alphabet size");
  if (m == 0) throw InputError("alphabet must be non-empty", alpha.number);
  std::vector<std::string> letters = default_letter_names(m);
  if (!cur.done() && cur.peek().tokens[0] == "NAMES") {
    const Line& names = cur.keyword("NAMES", m, m);
    letters.assign(names.tokens.begin() + 1, names.tokens.end());
  }

  std::map<std::string, SemigroupPtr> tables;
  struct PendingConstraint {
    std::size_t line;
    std::string table;
    std::string name;
    std::vector<Element> images;
    std::vector<Element> accept;
  };
  std::vector<PendingConstraint> pending;

  while (!cur.done()) {
    const Line& l = cur.peek();
    if (l.tokens[0] == "TABLE") {
      auto t = read_table_block(cur);
      const auto line = l.number;
      if (!tables.emplace(t.name, share(std::move(t.semigroup))).second) {
        throw InputError("duplicate table name '" + t.name + "'", line);
      }
    } else if (l.tokens[0] == "CONSTRAINT") {
      const Line& head = cur.keyword("CONSTRAINT", 1, 2);
      PendingConstraint pc{head.number, head.tokens[1],
                           head.tokens.size() == 3 ? head.tokens[2]
                                                   : "c" + std::to_string(pending.size()),
                           {}, {}};
      const Line& images = cur.keyword("IMAGES", m, m);
      for (std::size_t i = 1; i < images.tokens.size(); ++i) {
        pc.images.push_back(static_cast<Element>(
            parse_index(images.tokens[i], images.number, "image index")));
      }
      const Line& accept = cur.keyword("ACCEPT", 0, std::string::npos);
      for (std::size_t i = 1; i < accept.tokens.size(); ++i) {
        pc.accept.push_back(static_cast<Element>(
            parse_index(accept.tokens[i], accept.number, "accept index")));
      }
      cur.keyword("END", 0, 0);
      pending.push_back(std::move(pc));
    } else {
      throw InputError("unexpected '" + l.tokens[0] + "', expected TABLE or CONSTRAINT",
                       l.number);
    }
  }
  if (pending.empty()) throw InputError("instance has no CONSTRAINT block", cur.last_line());

  std::vector<Constraint> constraints;
  for (auto& pc : pending) {
    auto it = tables.find(pc.table);
    if (it == tables.end()) {
      throw InputError("constraint references undeclared table '" + pc.table + "'", pc.line);
    }
    for (Element x : pc.images) {
      if (x >= it->second->size()) {
        throw InputError("image " + std::to_string(x) + " outside table '" + pc.table + "'",
                         pc.line);
      }
    }
    for (Element x : pc.accept) {
      if (x >= it->second->size()) {
        throw InputError("accept index " + std::to_string(x) + " outside table '" +
                             pc.table + "'",
                         pc.line);
      }
    }
    constraints.push_back(Constraint{pc.name, pc.table, Morphism(it->second, pc.images),
                                     std::move(pc.accept)});
  }
  return Instance(std::move(letters), std::move(constraints));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "SGI 1\nALPHABET " << inst.alphabet_size() << "\nNAMES";
  for (const auto& l : inst.letters()) out << ' ' << l;
  out << '\n';

  // Tables are deduplicated by content; the first constraint using a
  // table supplies its name.
  std::vector<std::pair<const Semigroup*, std::string>> emitted;
  std::vector<std::string> ref;
  auto name_taken = [&](const std::string& n) {
    return std::any_of(emitted.begin(), emitted.end(),
                       [&](const auto& e) { return e.second == n; });
  };
  for (const auto& c : inst.constraints()) {
    auto it = std::find_if(emitted.begin(), emitted.end(),
                           [&](const auto& e) { return *e.first == c.semigroup(); });
    if (it != emitted.end()) {
      ref.push_back(it->second);
      continue;
    }
    std::string name = c.table_name.empty() ? "T" : c.table_name;
    if (name_taken(name)) {
      const std::string base = name;
      for (std::size_t i = 2; name_taken(name); ++i) name = base + "_" + std::to_string(i);
    }
    emitted.emplace_back(&c.semigroup(), name);
    ref.push_back(name);
  }
  for (const auto& [s, name] : emitted) {
    out << "TABLE " << name << ' ' << s->size() << '\n';
    write_rows(out, *s);
    out << "END\n";
  }
  for (std::size_t i = 0; i < inst.constraints().size(); ++i) {
    const auto& c = inst.constraints()[i];
    out << "CONSTRAINT " << ref[i] << ' ' << c.name << "\nIMAGES";
    for (Element x : c.morphism.images()) out << ' ' << x;
    out << "\nACCEPT";
    for (Element x : c.accept) out << ' ' << x;
    out << "\nEND\n";
  }
  return out.str();
}

std::vector<NamedTable> parse_tables(const std::string& text) {
  Cursor cur(tokenize(text));
  if (!cur.done() && cur.peek().tokens[0] == "SGI") expect_header(cur, "SGI");
  std::vector<NamedTable> out;
  while (!cur.done()) {
    const auto& t = cur.peek().tokens[0];
    if (t == "TABLE") {
      out.push_back(read_table_block(cur));
    } else if (t == "CONSTRAINT") {
      // Skip constraint blocks when reading tables out of an instance.
      while (cur.next("END").tokens[0] != "END") {
      }
    } else if (t == "ALPHABET" || t == "NAMES") {
      cur.next(t.c_str());
    } else {
      throw InputError("unexpected '" + t + "' in table file", cur.peek().number);
    }
  }
  if (out.empty()) throw InputError("no TABLE block found");
  return out;
}

std::string serialize_table(const std::string& name, const Semigroup& s) {
  std::ostringstream out;
  out << "TABLE " << name << ' ' << s.size() << '\n';
  write_rows(out, s);
  out << "END\n";
  return out.str();
}

namespace {

bool is_variable_token(const std::string& tok) { return !tok.empty() && tok[0] == 'X'; }

struct SlpLines {
  std::string start;
  std::vector<std::pair<std::string, std::vector<std::string>>> defs;
  std::vector<std::size_t> def_lines;
};

SlpLines read_slp_lines(const std::string& text) {
  Cursor cur(tokenize(text));
  expect_header(cur, "SLP");
  SlpLines out;
  const Line& start = cur.keyword("START", 1, 1);
  out.start = start.tokens[1];
  if (!is_variable_token(out.start)) {
    throw InputError("START must name a variable (token starting with 'X')", start.number);
  }
  while (!cur.done()) {
    const Line& l = cur.next("definition");
    if (l.tokens.size() < 3 || l.tokens[1] != "=" || !is_variable_token(l.tokens[0])) {
      throw InputError("expected '<var> = <symbols>'", l.number);
    }
    for (std::size_t i = 0; i < out.defs.size(); ++i) {
      if (out.defs[i].first == l.tokens[0]) {
        throw InputError("variable " + l.tokens[0] + " defined twice", l.number);
      }
    }
    out.defs.emplace_back(l.tokens[0],
                          std::vector<std::string>(l.tokens.begin() + 2, l.tokens.end()));
    out.def_lines.push_back(l.number);
  }
  if (out.defs.empty()) throw InputError("SLP has no definitions");
  return out;
}

Slp build_slp(const SlpLines& lines, std::vector<std::string>& letters, bool extend) {
  std::map<std::string, std::uint32_t> var_id;
  for (std::size_t i = 0; i < lines.defs.size(); ++i) {
    var_id[lines.defs[i].first] = static_cast<std::uint32_t>(i);
  }
  auto var_it = var_id.find(lines.start);
  if (var_it == var_id.end()) throw InputError("START variable " + lines.start + " is not defined");
  RawSlp raw;
  raw.start = var_it->second;
  for (std::size_t i = 0; i < lines.defs.size(); ++i) {
    Rhs rhs;
    for (const auto& tok : lines.defs[i].second) {
      if (is_variable_token(tok)) {
        auto it = var_id.find(tok);
        if (it == var_id.end()) {
          throw InputError("reference to undefined variable " + tok, lines.def_lines[i]);
        }
        rhs.push_back(Symbol::variable(it->second));
        continue;
      }
      auto it = std::find(letters.begin(), letters.end(), tok);
      if (it == letters.end()) {
        if (!extend) throw InputError("unknown letter '" + tok + "'", lines.def_lines[i]);
        letters.push_back(tok);
        it = letters.end() - 1;
      }
      rhs.push_back(Symbol::letter(static_cast<std::uint32_t>(it - letters.begin())));
    }
    raw.rules.push_back(std::move(rhs));
  }
  raw.alphabet_size = letters.size();
  return Slp::from_raw(std::move(raw));
}

}  // namespace

Slp parse_slp(const std::string& text, const std::vector<std::string>& letters) {
  auto copy = letters;
  return build_slp(read_slp_lines(text), copy, false);
}

ParsedSlp parse_slp(const std::string& text) {
  std::vector<std::string> letters;
  auto g = build_slp(read_slp_lines(text), letters, true);
  return ParsedSlp{std::move(g), std::move(letters)};
}

std::string serialize_slp(const Slp& g, const std::vector<std::string>& letters) {
  if (letters.size() != g.alphabet_size()) {
    throw InputError("serialize_slp: letter names do not match the SLP alphabet");
  }
  for (const auto& l : letters) {
    if (is_variable_token(l)) {
      throw InputError("letter name '" + l + "' clashes with SLP variable syntax");
    }
  }
  std::ostringstream out;
  out << "SLP 1\nSTART X" << g.start() << '\n';
  for (std::uint32_t v = 0; v < g.variable_count(); ++v) {
    out << 'X' << v << " =";
    for (const Symbol& s : g.rhs(v)) {
      out << ' ';
      if (s.is_letter()) {
        out << letters[s.index];
      } else {
        out << 'X' << s.index;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string serialize_circuit(const BooleanCircuit& c) {
  auto wire = [](const Wire& w) {
    std::string s = w.negated ? "!" : "";
    switch (w.source) {
      case Wire::Source::kInput: return s + "i" + std::to_string(w.index);
      case Wire::Source::kGate: return s + "g" + std::to_string(w.index);
      case Wire::Source::kConstant: return s + "c" + std::to_string(w.index);
    }
    return s;
  };
  std::ostringstream out;
  out << "CIRCUIT 1\n";
  out << "LAYOUT " << c.layout.table_size << ' ' << c.layout.alphabet_size << ' '
      << c.layout.bits_per_element << '\n';
  out << "INPUTS " << c.layout.table_bits() + c.layout.image_bits() << '\n';
  out << "SIZE " << c.size() << "\nDEPTH " << c.depth() << '\n';
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    out << "GATE g" << g << (c.gates[g].kind == Gate::Kind::kAnd ? " AND" : " OR");
    for (const Wire& w : c.gates[g].inputs) out << ' ' << wire(w);
    out << '\n';
  }
  out << "OUTPUTS";
  for (const Wire& w : c.outputs) out << ' ' << wire(w);
  out << '\n';
  return out.str();
}

}  // namespace sgisect
