#include "sgisect/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sgisect/error.hpp"

namespace sgisect {

bool Constraint::accepts(Element x) const {
  return std::binary_search(accept.begin(), accept.end(), x);
}

Instance::Instance(std::vector<std::string> letters,
                   std::vector<Constraint> constraints)
    : letters_(std::move(letters)), constraints_(std::move(constraints)) {
  if (letters_.empty()) throw InputError("instance alphabet is empty");
  if (constraints_.empty()) throw InputError("instance has no constraints");
  std::set<std::string> seen_letters;
  for (const auto& l : letters_) {
    if (l.empty() || l.find_first_of(" \t\r\n#") != std::string::npos) {
      throw InputError("invalid letter name '" + l + "'");
    }
    if (!seen_letters.insert(l).second) {
      throw InputError("duplicate letter name '" + l + "'");
    }
  }
  std::set<std::string> seen_names;
  for (auto& c : constraints_) {
    if (c.morphism.alphabet_size() != letters_.size()) {
      throw InputError("constraint '" + c.name + "' maps " +
                       std::to_string(c.morphism.alphabet_size()) +
                       " letters, alphabet has " +
                       std::to_string(letters_.size()));
    }
    if (c.name.empty() || c.name.find_first_of(" \t\r\n#") != std::string::npos ||
        c.table_name.find_first_of(" \t\r\n#") != std::string::npos) {
      throw InputError("invalid constraint or table name '" + c.name + "'");
    }
    if (!seen_names.insert(c.name).second) {
      throw InputError("duplicate constraint name '" + c.name + "'");
    }
    std::sort(c.accept.begin(), c.accept.end());
    c.accept.erase(std::unique(c.accept.begin(), c.accept.end()), c.accept.end());
    for (Element x : c.accept) {
      if (x >= c.semigroup().size()) {
        throw InputError("constraint '" + c.name + "' accepts element " +
                         std::to_string(x) + " outside its table");
      }
    }
  }
}

std::vector<Morphism> Instance::morphisms() const {
  std::vector<Morphism> out;
  for (const auto& c : constraints_) out.push_back(c.morphism);
  return out;
}

std::size_t Instance::total_size() const {
  std::size_t n = 0;
  for (const auto& c : constraints_) n += c.semigroup().size();
  return n;
}

BigInt Instance::product_size() const {
  BigInt p = 1;
  for (const auto& c : constraints_) p *= c.semigroup().size();
  return p;
}

Letter Instance::letter(const std::string& name) const {
  auto it = std::find(letters_.begin(), letters_.end(), name);
  if (it == letters_.end()) throw InputError("unknown letter '" + name + "'");
  return static_cast<Letter>(it - letters_.begin());
}

Word Instance::parse_word(const std::string& text) const {
  std::istringstream in(text);
  Word w;
  for (std::string tok; in >> tok;) w.push_back(letter(tok));
  if (w.empty()) throw InputError("witness word is empty");
  return w;
}

std::string Instance::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letters_.at(w[i]);
  }
  return out;
}

bool Instance::structurally_equal(const Instance& other) const {
  if (letters_ != other.letters_ || constraints_.size() != other.constraints_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& a = constraints_[i];
    const auto& b = other.constraints_[i];
    if (a.name != b.name || !(a.morphism == b.morphism) || a.accept != b.accept) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> default_letter_names(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

VerifyReport verify_witness(const Instance& inst, const Witness& w) {
  VerifyReport r;
  r.accepted = true;
  if (w.is_word()) {
    for (Letter a : w.word()) {
      if (a >= inst.alphabet_size()) throw InputError("witness letter out of range");
    }
  } else if (w.slp().alphabet_size() != inst.alphabet_size()) {
    throw InputError("witness SLP alphabet does not match the instance");
  }
  for (const auto& c : inst.constraints()) {
    const Element img = w.is_word() ? apply_morphism(c.morphism, w.word())
                                    : slp_image(w.slp(), c.morphism);
    const bool ok = c.accepts(img);
    r.images.push_back(img);
    r.satisfied.push_back(ok);
    r.accepted = r.accepted && ok;
  }
  return r;
}

}  // namespace sgisect
