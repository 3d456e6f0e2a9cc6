#include <gtest/gtest.h>

#include "sgisect/error.hpp"
#include "sgisect/families.hpp"
#include "sgisect/formats.hpp"
#include "sgisect/reductions.hpp"
#include "sgisect/solvers.hpp"
#include "support.hpp"

namespace sgisect {
namespace {

const char* kTrivialDoc =
    "SGI 1\n"
    "ALPHABET 2\n"
    "TABLE t 1\n"
    "0\n"
    "END\n"
    "CONSTRAINT t\n"
    "IMAGES 0 0\n"
    "ACCEPT 0\n"
    "END\n";

TEST(ParseInstance, MinimalTrivialDocument) {
  auto inst = parse_instance(kTrivialDoc);
  EXPECT_EQ(inst.letters(), (std::vector<std::string>{"a0", "a1"}));
  ASSERT_EQ(inst.constraints().size(), 1u);
  EXPECT_EQ(inst.constraints()[0].name, "c0");
  auto r = brute_force_solve(inst);
  ASSERT_TRUE(r.satisfiable());
  EXPECT_EQ(r.witness->word().size(), 1u);
}

TEST(ParseInstance, GadgetRoundTrip) {
  auto inst = reduce_unbounded(CnfFormula::make(1, {{{1, true}}}));
  const auto text = serialize_instance(inst);
  auto back = parse_instance(text);
  EXPECT_TRUE(back.structurally_equal(inst));
  EXPECT_EQ(serialize_instance(back), text);
}

TEST(ParseInstance, AssociativityViolationNamesTriple) {
  const std::string doc =
      "SGI 1\nALPHABET 1\nTABLE bad 2\n1 0\n0 0\nEND\nCONSTRAINT bad\nIMAGES 0\nACCEPT 0\nEND\n";
  try {
    parse_instance(doc);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(0,0,1)"), std::string::npos) << e.what();
    EXPECT_EQ(e.line(), 3u);
  }
}

struct BadDoc {
  const char* text;
  std::size_t line;
};

TEST(ParseInstance, ErrorsCarryLineNumbers) {
  const std::vector<BadDoc> docs = {
      {"SGI 2\n", 1},
      {"SGX 1\n", 1},
      {"SGI 1\nALPHABET 0\n", 2},
      {"SGI 1\nALPHABET 1\nTABLE t 1\n0 0\nEND\n", 4},
      {"SGI 1\nALPHABET 1\nTABLE t 2\n0 0\n0 5\nEND\n", 5},
      {"SGI 1\nALPHABET 1\nTABLE t 1\n0\nEND\nCONSTRAINT u\nIMAGES 0\nACCEPT 0\nEND\n", 6},
      {"SGI 1\nALPHABET 1\nTABLE t 1\n0\nEND\nCONSTRAINT t\nIMAGES 1\nACCEPT 0\nEND\n", 6},
      {"SGI 1\nALPHABET 1\nTABLE t 1\n0\nEND\nCONSTRAINT t\nIMAGES 0\nACCEPT 3\nEND\n", 6},
      {"SGI 1\nALPHABET 2\nTABLE t 1\n0\nEND\nCONSTRAINT t\nIMAGES 0\nACCEPT 0\nEND\n", 7},
      {"SGI 1\nALPHABET 1\nTABLE t 1\n0\nEND\nCONSTRAINT t\nIMAGES 0\nACCEPT 0\n", 8},
      {"SGI 1\nALPHABET 1\nFOO\n", 3},
      {"SGI 1\nALPHABET 1\nTABLE t 1\n0\nEND\nTABLE t 1\n0\nEND\n", 6},
  };
  for (const auto& d : docs) {
    try {
      parse_instance(d.text);
      ADD_FAILURE() << "accepted: " << d.text;
    } catch (const InputError& e) {
      EXPECT_EQ(e.line(), d.line) << d.text << " -> " << e.what();
    }
  }
  EXPECT_THROW(parse_instance("SGI 1\nALPHABET 1\nTABLE t 1\n0\nEND\n"), InputError);
  EXPECT_THROW(parse_instance("SGI 1\nALPHABET 2\nNAMES a a\nTABLE t 1\n0\nEND\n"
                              "CONSTRAINT t\nIMAGES 0 0\nACCEPT 0\nEND\n"),
               InputError);
}

TEST(SerializeInstance, SharedTableEmittedOnce) {
  auto s = share(families::min_cap(3));
  Instance inst(default_letter_names(1), {Constraint{"p", "S", Morphism(s, {0}), {1}},
                                          Constraint{"q", "S", Morphism(s, {1}), {2}}});
  const auto text = serialize_instance(inst);
  std::size_t tables = 0, cons = 0;
  for (std::size_t p = 0; (p = text.find("TABLE", p)) != std::string::npos; ++p) ++tables;
  for (std::size_t p = 0; (p = text.find("CONSTRAINT", p)) != std::string::npos; ++p) ++cons;
  EXPECT_EQ(tables, 1u);
  EXPECT_EQ(cons, 2u);
}

TEST(SerializeInstance, EmptyAcceptAndNameClash) {
  Instance inst(default_letter_names(1),
                {Constraint{"p", "S", Morphism(share(families::min_cap(3)), {0}), {}},
                 Constraint{"q", "S", Morphism(share(families::left_zero(2)), {1}), {0}}});
  const auto text = serialize_instance(inst);
  EXPECT_NE(text.find("\nACCEPT\n"), std::string::npos);
  EXPECT_NE(text.find("TABLE S_2 2"), std::string::npos);
  auto back = parse_instance(text);
  EXPECT_TRUE(back.structurally_equal(inst));
  EXPECT_EQ(serialize_instance(back), text);
}

TEST(SerializeInstance, CanonicalText) {
  auto inst = parse_instance("SGI 1   # header\nALPHABET 1\n\nTABLE  t 1\n0\nEND\n"
                             "CONSTRAINT t x\nIMAGES 0\nACCEPT 0 0\nEND");
  EXPECT_EQ(serialize_instance(inst),
            "SGI 1\nALPHABET 1\nNAMES a0\nTABLE t 1\n0\nEND\n"
            "CONSTRAINT t x\nIMAGES 0\nACCEPT 0\nEND\n");
}

TEST(Properties, RandomRoundTrips) {
  testing::Rng rng(testing::kSeed + 50);
  for (int i = 0; i < 500; ++i) {
    auto inst = testing::random_instance(rng, {4, 4, 10, 1u << 20});
    const auto text = serialize_instance(inst);
    auto back = parse_instance(text);
    EXPECT_TRUE(back.structurally_equal(inst));
    EXPECT_EQ(serialize_instance(back), text);
  }
}

TEST(Tables, ParseAndSerialize) {
  const auto text = serialize_table("mincap4", families::min_cap(4));
  EXPECT_EQ(text, "TABLE mincap4 4\n1 2 3 3\n2 3 3 3\n3 3 3 3\n3 3 3 3\nEND\n");
  auto tables = parse_tables(text);
  ASSERT_EQ(tables.size(), 1u);
  EXPECT_EQ(tables[0].name, "mincap4");
  EXPECT_EQ(tables[0].semigroup, families::min_cap(4));

  auto from_instance = parse_tables(kTrivialDoc);
  ASSERT_EQ(from_instance.size(), 1u);
  EXPECT_THROW(parse_tables("# nothing\n"), InputError);
}

TEST(SlpFormat, ParseWithFreeDefinitionOrder) {
  auto p = parse_slp("SLP 1\nSTART X0\n# square\nX1 = a b\nX0 = X1 X1\n");
  EXPECT_EQ(p.letters, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(slp_eval_word(p.slp), (Word{0, 1, 0, 1}));
  EXPECT_EQ(p.slp.size(), 4u);
  EXPECT_EQ(serialize_slp(p.slp, p.letters), "SLP 1\nSTART X1\nX0 = a b\nX1 = X0 X0\n");
}

TEST(SlpFormat, RoundTrip) {
  testing::Rng rng(testing::kSeed + 51);
  const std::vector<std::string> letters{"p", "q", "r"};
  for (int i = 0; i < 200; ++i) {
    auto g = testing::random_slp(rng, 3, 10);
    const auto text = serialize_slp(g, letters);
    auto back = parse_slp(text, letters);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialize_slp(back, letters), text);
  }
}

TEST(SlpFormat, Errors) {
  const std::vector<std::string> ab{"a", "b"};
  EXPECT_THROW(parse_slp("SLP 1\nSTART X0\nX0 = c\n", ab), InputError);
  EXPECT_THROW(parse_slp("SLP 1\nSTART X0\nX0 = X1\n", ab), InputError);
  EXPECT_THROW(parse_slp("SLP 1\nSTART X0\nX0 = X0 a\n", ab), InputError);
  EXPECT_THROW(parse_slp("SLP 1\nSTART X9\nX0 = a\n", ab), InputError);
  EXPECT_THROW(parse_slp("SLP 1\nSTART X0\nX0 = a\nX0 = b\n", ab), InputError);
  EXPECT_THROW(parse_slp("SLP 1\nSTART X0\nX0 a\n", ab), InputError);
  EXPECT_THROW(parse_slp("SLP 1\nSTART X0\n", ab), InputError);
  EXPECT_THROW(parse_slp("SLP 2\nSTART X0\nX0 = a\n", ab), InputError);
  EXPECT_THROW(serialize_slp(Slp::canonical(Word{0}, 1), {"Xa"}), InputError);
}

TEST(CircuitFormat, Listing) {
  auto s3 = share(families::min_cap(3));
  auto c = slp_to_circuit(Slp::canonical(Word{0, 0}, 1), Morphism(s3, {0}));
  const auto text = serialize_circuit(c);
  EXPECT_EQ(text.rfind("CIRCUIT 1\nLAYOUT 3 1 2\nINPUTS 20\n", 0), 0u) << text;
  EXPECT_NE(text.find("SIZE " + std::to_string(c.size()) + "\n"), std::string::npos);
  EXPECT_NE(text.find("\nOUTPUTS g"), std::string::npos);
}

}  // namespace
}  // namespace sgisect
