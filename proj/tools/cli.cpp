#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sgisect/circuit.hpp"
#include "sgisect/error.hpp"
#include "sgisect/families.hpp"
#include "sgisect/formats.hpp"
#include "sgisect/reductions.hpp"
#include "sgisect/solvers.hpp"
#include "sgisect/varieties.hpp"

namespace sgisect::cli {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write '" + path + "'");
  o << text;
  if (!o) throw InputError("error writing '" + path + "'");
}

// Sends `text` to -o when given, otherwise to the output buffer.
void emit(std::ostream& out, const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string opt_to_string(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "none";
}

json opt_to_json(const std::optional<std::size_t>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string seconds(std::chrono::duration<double> d) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << d.count();
  return s.str();
}

BigInt parse_bigint(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    throw InputError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
  return BigInt(text);
}

// ---- classify ----

struct ClassifyArgs {
  std::string file;
  std::string table_file;
  std::string name;
  bool json = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const std::string path = a.table_file.empty() ? a.file : a.table_file;
  if (path.empty()) throw InputError("classify: give a table file (--table FILE or FILE)");
  auto tables = parse_tables(read_file(path));
  if (!a.name.empty()) {
    std::erase_if(tables, [&](const NamedTable& t) { return t.name != a.name; });
    if (tables.empty()) throw InputError("no table named '" + a.name + "'");
  }
  json arr = json::array();
  bool first = true;
  for (const auto& t : tables) {
    const auto r = classify(t.semigroup);
    if (a.json) {
      arr.push_back({{"table", t.name},
                     {"size", t.semigroup.size()},
                     {"commutative", r.is_commutative},
                     {"group", r.is_group},
                     {"monoid", r.is_monoid},
                     {"nilpotent", r.is_nilpotent},
                     {"li", r.is_li},
                     {"li_degree", opt_to_json(r.li_degree)},
                     {"a2n", r.is_a2n},
                     {"class_order", r.class_order}});
      continue;
    }
    if (!first) out << '\n';
    first = false;
    out << "table " << t.name << '\n'
        << "size " << t.semigroup.size() << '\n'
        << "commutative " << yes_no(r.is_commutative) << '\n'
        << "group " << yes_no(r.is_group) << '\n'
        << "monoid " << yes_no(r.is_monoid) << '\n'
        << "nilpotent " << yes_no(r.is_nilpotent) << '\n'
        << "li " << yes_no(r.is_li) << '\n'
        << "li_degree " << opt_to_string(r.li_degree) << '\n'
        << "a2n " << yes_no(r.is_a2n) << '\n'
        << "class_order " << r.class_order << '\n';
  }
  if (a.json) out << arr.dump(2) << '\n';
  return kOk;
}

// ---- solve ----

struct SolveArgs {
  std::string file;
  std::string strategy = "brute";
  std::size_t slp_size = 4;
  std::optional<std::size_t> max_depth;
  std::string out_path;
  bool json = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = parse_instance(read_file(a.file));
  SolveResult r;
  if (a.strategy == "brute") {
    r = a.max_depth ? bounded_solve(inst, *a.max_depth) : brute_force_solve(inst);
  } else if (a.strategy == "li") {
    r = li_solve(inst);
  } else if (a.strategy == "comli") {
    r = comli_solve(inst);
  } else {
    r = enum_slp_solve(inst, a.slp_size);
  }

  json j{{"status", r.satisfiable() ? "SAT" : "EMPTY"},
         {"strategy", a.strategy},
         {"complete", r.complete},
         {"states", r.stats.states_explored},
         {"time_s", r.stats.wall_time.count()}};
  std::string witness_text;
  if (r.witness) {
    if (r.witness->is_word()) {
      const auto w = inst.format_word(r.witness->word());
      j["witness"] = w;
      j["length"] = r.witness->word().size();
      witness_text = w + "\n";
    } else {
      const Slp& g = r.witness->slp();
      const auto stats = slp_stats(g);
      witness_text = serialize_slp(g, inst.letters());
      j["slp"] = witness_text;
      j["slp_size"] = stats.size;
      j["length"] = stats.produced_length.str();
      if (stats.produced_length <= 10000) {
        j["witness"] = inst.format_word(slp_eval_word(g));
      }
    }
    if (!a.out_path.empty()) write_file(a.out_path, witness_text);
  }

  if (a.json) {
    out << j.dump(2) << '\n';
  } else {
    out << j["status"].get<std::string>() << '\n';
    if (j.contains("witness")) out << "witness " << j["witness"].get<std::string>() << '\n';
    if (j.contains("length")) {
      const auto& len = j["length"];
      out << "length " << (len.is_string() ? len.get<std::string>() : len.dump()) << '\n';
    }
    if (j.contains("slp_size")) out << "slp_size " << j["slp_size"].get<std::size_t>() << '\n';
    out << "strategy " << a.strategy << '\n'
        << "complete " << yes_no(r.complete) << '\n'
        << "states " << r.stats.states_explored << '\n'
        << "time_s " << seconds(r.stats.wall_time) << '\n';
    if (j.contains("slp") && a.out_path.empty()) out << j["slp"].get<std::string>();
  }
  return r.satisfiable() ? kOk : kNegative;
}

// ---- reduce ----

struct ReduceArgs {
  std::string file;
  std::string gadget = "unbounded";
  std::string out_path;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  auto parsed = parse_dimacs(read_file(a.file));
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  const Instance inst = a.gadget == "unbounded" ? reduce_unbounded(parsed.formula)
                                                : reduce_nilpotent(parsed.formula);
  emit(out, a.out_path, serialize_instance(inst));
  return kOk;
}

// ---- shorten ----

struct ShortenArgs {
  std::string file;
  std::string word;
  std::optional<std::size_t> k;
  bool json = false;
};

int cmd_shorten(const ShortenArgs& a, std::ostream& out) {
  const Instance inst = parse_instance(read_file(a.file));
  const Word u = inst.parse_word(a.word);
  std::size_t k = 0;
  if (a.k) {
    k = *a.k;
  } else {
    for (const auto& c : inst.constraints()) {
      const auto d = li_degree(c.semigroup());
      if (!d) {
        throw PreconditionError("shorten: semigroup of constraint '" + c.name +
                                "' is not in LI");
      }
      k = std::max(k, *d);
    }
  }
  const Word v = li_witness_shorten(inst, u, k);
  if (a.json) {
    out << json{{"word", inst.format_word(v)}, {"length", v.size()}, {"k", k}}.dump(2)
        << '\n';
  } else {
    out << "word " << inst.format_word(v) << '\n'
        << "length " << v.size() << '\n'
        << "k " << k << '\n';
  }
  return kOk;
}

// ---- power-slp ----

struct PowerArgs {
  std::string file;
  std::string exp;
  std::string out_path;
  bool json = false;
};

int cmd_power(const PowerArgs& a, std::ostream& out) {
  const auto parsed = parse_slp(read_file(a.file));
  const BigInt e = parse_bigint(a.exp, "--exp");
  if (e == 0) throw PreconditionError("power-slp: exponent must be >= 1");
  const Slp h = power_slp(parsed.slp, e);
  const std::string text = serialize_slp(h, parsed.letters);
  if (a.json) {
    const auto stats = slp_stats(h);
    emit(out, a.out_path,
         json{{"size", stats.size}, {"length", stats.produced_length.str()}, {"slp", text}}
                 .dump(2) +
             "\n");
  } else {
    emit(out, a.out_path, text);
  }
  return kOk;
}

// ---- emit-circuit ----

struct CircuitArgs {
  std::string slp_file;
  std::string instance_file;
  std::string constraint;
  std::string out_path;
  bool json = false;
};

int cmd_emit_circuit(const CircuitArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_file(a.instance_file));
  const Slp g = parse_slp(read_file(a.slp_file), inst.letters());
  const Constraint* c = &inst.constraints().front();
  if (!a.constraint.empty()) {
    auto it = std::find_if(inst.constraints().begin(), inst.constraints().end(),
                           [&](const Constraint& x) { return x.name == a.constraint; });
    if (it == inst.constraints().end()) {
      throw InputError("no constraint named '" + a.constraint + "'");
    }
    c = &*it;
  }
  const BooleanCircuit circuit = slp_to_circuit(g, c->morphism);
  const auto size_bound =
      circuit_size_bound(g.size(), c->semigroup().size(), inst.alphabet_size());
  const auto depth_bound = circuit_depth_bound(g.size());
  const std::string text = serialize_circuit(circuit);
  if (a.json) {
    emit(out, a.out_path,
         json{{"constraint", c->name},
              {"size", circuit.size()},
              {"depth", circuit.depth()},
              {"size_bound", size_bound.str()},
              {"depth_bound", depth_bound},
              {"circuit", text}}
                 .dump(2) +
             "\n");
  } else {
    emit(out, a.out_path, text);
    err << "constraint " << c->name << ": size " << circuit.size() << " (bound "
        << size_bound << "), depth " << circuit.depth() << " (bound " << depth_bound
        << ")\n";
  }
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string file;
  std::string word;
  std::string slp_file;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Instance inst = parse_instance(read_file(a.file));
  if (a.word.empty() == a.slp_file.empty()) {
    throw InputError("verify: give exactly one of --word and --slp");
  }
  const Witness w = a.slp_file.empty()
                        ? Witness{inst.parse_word(a.word), "cli"}
                        : Witness{parse_slp(read_file(a.slp_file), inst.letters()), "cli"};
  const VerifyReport rep = verify_witness(inst, w);
  std::vector<std::string> failing;
  json cons = json::array();
  for (std::size_t i = 0; i < inst.constraints().size(); ++i) {
    const auto& c = inst.constraints()[i];
    if (!rep.satisfied[i]) failing.push_back(c.name);
    cons.push_back({{"name", c.name}, {"image", rep.images[i]}, {"accepted", bool(rep.satisfied[i])}});
  }
  if (a.json) {
    out << json{{"valid", rep.accepted}, {"constraints", cons}, {"failing", failing}}.dump(2)
        << '\n';
  } else {
    for (std::size_t i = 0; i < inst.constraints().size(); ++i) {
      out << "constraint " << inst.constraints()[i].name << " image " << rep.images[i]
          << (rep.satisfied[i] ? " accepted" : " rejected") << '\n';
    }
    out << (rep.accepted ? "VALID" : "INVALID") << '\n';
    if (!failing.empty()) {
      out << "failing";
      for (const auto& f : failing) out << ' ' << f;
      out << '\n';
    }
  }
  return rep.accepted ? kOk : kNegative;
}

// ---- gen ----

struct GenArgs {
  std::vector<std::string> spec;
  std::string name;
  std::string out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.spec.empty()) throw InputError("gen: missing family");
  std::string name;
  Semigroup s = families::trivial();
  if (a.spec[0] == "product") {
    if (a.spec.size() < 2) throw InputError("gen product: give at least one factor spec");
    std::vector<SemigroupPtr> factors;
    for (std::size_t i = 1; i < a.spec.size(); ++i) {
      factors.push_back(share(families::from_spec(a.spec[i])));
    }
    s = direct_product(factors).semigroup;
    name = "product";
  } else {
    std::string joined = a.spec[0];
    name = a.spec[0];
    for (std::size_t i = 1; i < a.spec.size(); ++i) {
      joined += ":" + a.spec[i];
      name += (i > 1 ? "_" : "") + a.spec[i];
    }
    std::replace(name.begin(), name.end(), ':', '_');
    s = families::from_spec(joined);
  }
  if (!a.name.empty()) name = a.name;
  emit(out, a.out_path, serialize_table(name, s));
  return kOk;
}

// ---- bench ----

struct BenchArgs {
  std::vector<std::string> files;
  std::size_t slp_size = 3;
  std::string out_path;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  std::ostringstream csv;
  csv << "id,N,min_word_length,min_slp_size,brute_s,li_s,comli_s,slp_s\n";
  auto timed = [](auto&& fn) -> std::string {
    try {
      return seconds(fn().stats.wall_time);
    } catch (const PreconditionError&) {
      return "NA";
    } catch (const CapExceeded&) {
      return "NA";
    }
  };
  for (const auto& f : a.files) {
    const Instance inst = parse_instance(read_file(f));
    const auto stats = min_witness_stats(inst, a.slp_size);
    csv << std::filesystem::path(f).stem().string() << ',' << inst.total_size() << ','
        << opt_to_string(stats.min_word_length) << ','
        << opt_to_string(stats.min_slp_size) << ','
        << timed([&] { return brute_force_solve(inst); }) << ','
        << timed([&] { return li_solve(inst); }) << ','
        << timed([&] { return comli_solve(inst); }) << ','
        << timed([&] { return enum_slp_solve(inst, a.slp_size); }) << '\n';
  }
  emit(out, a.out_path, csv.str());
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Intersection non-emptiness for finite-semigroup recognizers", "sgisect"};
  app.require_subcommand(1);
  app.fallthrough(false);

  ClassifyArgs classify_a;
  auto* classify_cmd = app.add_subcommand("classify", "Variety membership of semigroup tables");
  classify_cmd->add_option("file", classify_a.file, "Table file or SGI instance");
  classify_cmd->add_option("--table", classify_a.table_file, "Table file");
  classify_cmd->add_option("--name", classify_a.name, "Only classify this table");
  classify_cmd->add_flag("--json", classify_a.json, "JSON output");

  SolveArgs solve_a;
  std::size_t max_depth = 0;
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance");
  solve_cmd->add_option("instance", solve_a.file, "SGI instance")->required();
  solve_cmd->add_option("--strategy", solve_a.strategy, "brute|li|comli|slp")
      ->check(CLI::IsMember({"brute", "li", "comli", "slp"}));
  solve_cmd->add_option("--slp-size", solve_a.slp_size, "SLP size bound for --strategy slp");
  auto* depth_opt = solve_cmd->add_option("--max-depth", max_depth,
                                          "Witness length cap for --strategy brute")
                        ->check(CLI::PositiveNumber);
  solve_cmd->add_option("-o", solve_a.out_path, "Write the witness to this file");
  solve_cmd->add_flag("--json", solve_a.json, "JSON output");

  ReduceArgs reduce_a;
  auto* reduce_cmd = app.add_subcommand("reduce", "Compile a DIMACS CNF formula to an instance");
  reduce_cmd->add_option("cnf", reduce_a.file, "DIMACS file")->required();
  reduce_cmd->add_option("--gadget", reduce_a.gadget, "unbounded|nilpotent")
      ->check(CLI::IsMember({"unbounded", "nilpotent"}));
  reduce_cmd->add_option("-o", reduce_a.out_path, "Output file");

  ShortenArgs shorten_a;
  std::size_t shorten_k = 0;
  auto* shorten_cmd = app.add_subcommand("shorten", "Prefix-suffix shortening of an LI_k witness");
  shorten_cmd->add_option("instance", shorten_a.file, "SGI instance")->required();
  shorten_cmd->add_option("--word", shorten_a.word, "Witness word")->required();
  auto* k_opt = shorten_cmd->add_option("--k", shorten_k, "LI_k degree (default: maximal li_degree)")
                    ->check(CLI::PositiveNumber);
  shorten_cmd->add_flag("--json", shorten_a.json, "JSON output");

  PowerArgs power_a;
  auto* power_cmd = app.add_subcommand("power-slp", "SLP for the e-th power of an SLP's word");
  power_cmd->add_option("slp", power_a.file, "SLP file")->required();
  power_cmd->add_option("--exp", power_a.exp, "Exponent e >= 1")->required();
  power_cmd->add_option("-o", power_a.out_path, "Output file");
  power_cmd->add_flag("--json", power_a.json, "JSON output");

  CircuitArgs circuit_a;
  auto* circuit_cmd = app.add_subcommand("emit-circuit", "Lower an SLP image to a Boolean circuit");
  circuit_cmd->add_option("slp", circuit_a.slp_file, "SLP file")->required();
  circuit_cmd->add_option("instance", circuit_a.instance_file, "SGI instance")->required();
  circuit_cmd->add_option("--constraint", circuit_a.constraint, "Constraint name (default: first)");
  circuit_cmd->add_option("-o", circuit_a.out_path, "Output file");
  circuit_cmd->add_flag("--json", circuit_a.json, "JSON output");

  VerifyArgs verify_a;
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness word or SLP");
  verify_cmd->add_option("instance", verify_a.file, "SGI instance")->required();
  auto* word_opt = verify_cmd->add_option("--word", verify_a.word, "Witness word");
  verify_cmd->add_option("--slp", verify_a.slp_file, "Witness SLP file")->excludes(word_opt);
  verify_cmd->add_flag("--json", verify_a.json, "JSON output");

  GenArgs gen_a;
  auto* gen_cmd = app.add_subcommand(
      "gen", "Emit a family table: mincap k | leftzero n | rightzero n | cyclic n | null n | "
             "nilinterval k | monomials v d | trivial | product SPEC...");
  gen_cmd->add_option("family", gen_a.spec, "Family and parameters")->required();
  gen_cmd->add_option("--name", gen_a.name, "Table name");
  gen_cmd->add_option("-o", gen_a.out_path, "Output file");

  BenchArgs bench_a;
  auto* bench_cmd = app.add_subcommand("bench", "CSV of witness sizes and solver times");
  bench_cmd->add_option("instances", bench_a.files, "SGI instances")->required();
  bench_cmd->add_option("--slp-size", bench_a.slp_size, "SLP size cap");
  bench_cmd->add_option("-o", bench_a.out_path, "Output file");

  std::ostringstream buffer;
  int code = kUsage;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*depth_opt) solve_a.max_depth = max_depth;
    if (*k_opt) shorten_a.k = shorten_k;
    if (*classify_cmd) code = cmd_classify(classify_a, buffer);
    else if (*solve_cmd) code = cmd_solve(solve_a, buffer);
    else if (*reduce_cmd) code = cmd_reduce(reduce_a, buffer, err);
    else if (*shorten_cmd) code = cmd_shorten(shorten_a, buffer);
    else if (*power_cmd) code = cmd_power(power_a, buffer);
    else if (*circuit_cmd) code = cmd_emit_circuit(circuit_a, buffer, err);
    else if (*verify_cmd) code = cmd_verify(verify_a, buffer);
    else if (*gen_cmd) code = cmd_gen(gen_a, buffer);
    else if (*bench_cmd) code = cmd_bench(bench_a, buffer);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << buffer.str() << std::flush;
  return code;
}

}  // namespace sgisect::cli
