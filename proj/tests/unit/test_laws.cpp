#include "oracles.hpp"

#include "bicumulant/json_io.hpp"
#include "bicumulant/laws.hpp"

#include <doctest.h>

using namespace bicumulant;
using oracle::slot;

TEST_CASE("law names") {
  for (const std::string& name : law_names()) CHECK_FALSE(parse_laws(name).empty());
  CHECK(parse_laws("ls-classical").size() == 2);
  CHECK(parse_laws("dual").size() == 2);
  CHECK(law_name(Law::prop_mixing_seq) == "prop-mixing-seq");
  CHECK_THROWS_AS(parse_laws("ls"), std::invalid_argument);
  CHECK(is_expression_law(Law::main));
  CHECK_FALSE(is_expression_law(Law::seq_bijection));
}

TEST_CASE("verify reports") {
  LawReport main = verify(Law::main, Shape({2, 1}));
  CHECK(main.equal);
  CHECK_FALSE(main.mismatch);
  CHECK(main.lhs == main.rhs);
  CHECK(verify(Law::prop_colouring, Shape({2, 1})).equal);
  LawReport mc = verify(Law::moment_cumulant, Shape({3}));
  CHECK(mc.equal);
  CHECK(mc.lhs.size() == 1);
  for (Law law : {Law::moment_cumulant_dual, Law::ls_analogue, Law::ls_classical_star, Law::ls_classical_dot,
                  Law::grouped, Law::dual_main, Law::dual_analogue, Law::prop_mixing_seq,
                  Law::prop_colouring_sign, Law::seq_bijection, Law::halving, Law::degree_bound})
    CHECK_MESSAGE(verify(law, Shape({2, 2})).equal, law_name(law));
  CHECK_THROWS_AS(verify(Law::path_fg, Shape({1})), std::invalid_argument);
}

TEST_CASE("the mixing-sequence identity at small shapes") {
  CumulantEngine e;
  ExpansionPair p = law_sides(e, Law::prop_mixing_seq, Shape({1, 1}));
  // Only {ab} mixes; its one sequence has length 1.
  CHECK(p.lhs == p.rhs);
  CHECK(p.lhs == oracle::kappa({oracle::gen(1, 1), oracle::gen(2, 1)}));
}

TEST_CASE("mismatches are located") {
  CumulantEngine e;
  ExpansionPair sides = law_sides(e, Law::main, Shape({2, 1}));
  CHECK_FALSE(find_mismatch(sides.lhs, sides.rhs));
  // Main expansion against the dual left side.
  Expr dual_lhs = lhs_product(Shape({2, 1}), CumulantKind::kappa_star);
  auto m = find_mismatch(dual_lhs, sides.rhs);
  REQUIRE(m);
  CHECK(render_text(m->term) == "(* a2_1 (. a1_1 a1_2))");
  CHECK(m->lhs == 1);
  CHECK(m->rhs == 0);
  auto n = find_mismatch(oracle::expr("2 a1_1 + a1_2"), oracle::expr("a1_2 + 3 a1_1"));
  REQUIRE(n);
  CHECK(n->lhs == 2);
  CHECK(n->rhs == 3);
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(verify(Law::main, Shape({4, 4})), CapExceeded);
  try {
    verify(Law::main, Shape({8}));
  } catch (const CapExceeded& e) {
    CHECK(e.total() == 8);
    CHECK(e.cap() == 7);
    CHECK(std::string(e.what()).find("reduced forests") != std::string::npos);
  }
  CHECK_THROWS_AS(verify_sweep(Law::main, 8), CapExceeded);
  CHECK(verify(Law::halving, Shape({4, 4}), 8).equal);
  CHECK(reduced_forest_count(3) == 8);
  CHECK(reduced_forest_count(6) == 5504);
}

TEST_CASE("sweeps are ordered and schedule independent") {
  auto serial = verify_sweep(Law::main, 4, default_cap, 1);
  auto parallel = verify_sweep(Law::main, 4, default_cap, 3);
  REQUIRE(serial.size() == 15);
  REQUIRE(parallel.size() == 15);
  auto shapes = shapes_up_to(4);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].shape == shapes[i].to_string());
    CHECK(parallel[i].shape == serial[i].shape);
    CHECK(parallel[i].lhs == serial[i].lhs);
    CHECK(parallel[i].rhs == serial[i].rhs);
    CHECK(serial[i].equal);
  }
}

TEST_CASE("lattice path law") {
  LawReport r = verify_paths(3, 4);
  CHECK(r.equal);
  CHECK(r.detail == "216 points");
  CHECK(verify_paths(4, 4).equal);
  CHECK_THROWS_AS(verify_paths(0, 4), std::invalid_argument);
}

TEST_CASE("model checks") {
  ModelReport ok = model_check(Law::main, Shape({2, 2}), 42);
  CHECK(ok.equal);
  CHECK(ok.trials == 20);
  CHECK(model_check(Law::ls_analogue, Shape({2, 1}), 7).equal);
  ModelReport bad = model_check(Law::ls_analogue, Shape({2, 1}), 7, 20, 3, true);
  CHECK_FALSE(bad.equal);
  CHECK(bad.assignment.size() == 3);
  CHECK(bad.lhs != bad.rhs);
  CHECK_THROWS_AS(model_check(Law::halving, Shape({2}), 1), std::invalid_argument);
}

TEST_CASE("report json") {
  Json j = to_json(verify(Law::main, Shape({2, 1})));
  CHECK(j["law"] == "main");
  CHECK(j["shape"] == "2,1");
  CHECK(j["equal"] == true);
  CHECK(j["lhs_terms"] == 1);
  CHECK(j["mismatch"].is_null());
  CHECK(j.contains("millis"));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"law", "shape", "equal", "lhs_terms", "rhs_terms", "mismatch", "millis"});

  LawReport unequal;
  unequal.law = "main";
  unequal.shape = "1";
  unequal.lhs = oracle::expr("a1_1");
  unequal.mismatch = Mismatch{parse_term("a1_1"), 1, 0};
  Json u = to_json(unequal);
  CHECK(u["mismatch"]["term"] == "a1_1");
  CHECK(u["mismatch"]["lhs"] == "1");
  CHECK(u["mismatch"]["rhs"] == "0");
}

TEST_CASE("structure json") {
  SetPartition nu({{slot(1, 1), slot(2, 1)}, {slot(1, 2)}});
  CHECK(to_json(nu).dump() == R"([["a1_1","a2_1"],["a1_2"]])");
  ReducedForest f({Tree::node({Tree::leaf(slot(1, 1)), Tree::leaf(slot(2, 1))}), Tree::leaf(slot(1, 2))});
  CHECK(to_json(f).dump() == R"([["a1_1","a2_1"],"a1_2"])");
  Json fc = to_json(f, Colouring{{1, 0, 0, 0}});
  CHECK(fc["length"] == 1);
  CHECK(fc["colours"][0].dump() == R"({"vertex":[0],"colour":1})");
  UpwardSequence w({nu, SetPartition({{slot(1, 1), slot(1, 2), slot(2, 1)}})});
  CHECK(to_json(w).dump() == R"([[["a1_1","a2_1"],["a1_2"]],[[0,1]]])");
}
