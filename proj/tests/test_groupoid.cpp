#include <doctest.h>

#include "wh/groupoid.hpp"

using namespace wh;

TEST_CASE("groupoid: I2 composable pairs") {
  Groupoid G = builtin_i2();
  CHECK(G.size() == 4);
  CHECK(G.object_count() == 2);
  CHECK(validate_groupoid(G).holds());
  // tgt(a) = src(b): x·x, x·g, y·y, y·gi, g·y, g·gi, gi·x, gi·g.
  CHECK(G.composable_pairs().size() == 8);
  CHECK(compose(G, "g", "gi") == "x");
  CHECK(compose(G, "gi", "g") == "y");
  CHECK(compose(G, "g", "g") == std::nullopt);
  CHECK(compose(G, "x", "g") == "g");
  CHECK(G.connected(G.index_of("x"), G.index_of("y")));
  CHECK_THROWS_AS(compose(G, "g", "h"), InputError);
}

TEST_CASE("groupoid: s(g) and t(g) from the table") {
  Groupoid G = builtin_i2();
  const auto g = G.index_of("g"), gi = G.index_of("gi");
  CHECK(G.compose(g, G.inv(g)) == G.src(g));
  CHECK(G.compose(G.inv(g), g) == G.tgt(g));
  CHECK(G.inv(gi) == g);
  CHECK_FALSE(G.is_loop(g));
  CHECK(G.is_loop(G.index_of("x")));
}

TEST_CASE("groupoid: constructors") {
  CHECK(validate_groupoid(cyclic_group(1)).holds());
  CHECK(validate_groupoid(cyclic_group(4)).holds());
  Groupoid P = pair_groupoid(3);
  CHECK(P.size() == 9);
  CHECK(validate_groupoid(P).holds());
  CHECK(compose(P, "m0_1", "m1_2") == "m0_2");
  CHECK(compose(P, "m0_1", "m1_0") == "o0");
  Groupoid U = disjoint_union(builtin_i2(), cyclic_group(2));
  CHECK(U.size() == 6);
  CHECK(U.object_count() == 3);
  CHECK(validate_groupoid(U).holds());
  CHECK_THROWS_AS(disjoint_union(cyclic_group(2), cyclic_group(3)), std::invalid_argument);
  // Not a group: a·a = a with a ≠ e.
  CHECK_THROWS_AS(from_group({"e", "a"}, {{0, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("groupoid: dangling and conflicting input") {
  CHECK_THROWS_AS(Groupoid({"x"}, {{"g", "x", "z", "g"}}, {}), InputError);
  CHECK_THROWS_AS(Groupoid({"x"}, {{"g", "x", "x", "h"}}, {}), InputError);
  CHECK_THROWS_AS(Groupoid({"x", "x"}, {}, {}), InputError);
  CHECK_THROWS_AS(Groupoid({"x"}, {{"x", "x", "x", "x"}}, {}), InputError);
  CHECK_THROWS_AS(Groupoid({"x"}, {}, {{"x", "x", "x"}, {"x", "x", "y"}}), InputError);
}

TEST_CASE("groupoid: validator names the broken axiom") {
  // g: x→y with a loop-shaped inverse and a missing table entry.
  Groupoid bad({"x", "y"}, {{"g", "x", "y", "g"}}, {{"x", "x", "x"}, {"y", "y", "y"}, {"x", "g", "g"}});
  Report r = validate_groupoid(bad);
  CHECK_FALSE(r.holds());
  CHECK(r.find("inverse-endpoints") != nullptr);
  CHECK(r.find("G2-closure") != nullptr);

  // Table entry on a non-composable pair.
  Groupoid wrong({"x", "y"}, {{"g", "x", "y", "gi"}, {"gi", "y", "x", "g"}},
                 {{"x", "x", "x"}, {"y", "y", "y"}, {"x", "g", "g"}, {"g", "y", "g"}, {"y", "gi", "gi"},
                  {"gi", "x", "gi"}, {"g", "gi", "x"}, {"gi", "g", "y"}, {"g", "g", "g"}});
  Report w = validate_groupoid(wrong);
  CHECK(w.find("composition-domain") != nullptr);

  // g·gi = y instead of x.
  Groupoid inv({"x", "y"}, {{"g", "x", "y", "gi"}, {"gi", "y", "x", "g"}},
               {{"x", "x", "x"}, {"y", "y", "y"}, {"x", "g", "g"}, {"g", "y", "g"}, {"y", "gi", "gi"},
                {"gi", "x", "gi"}, {"g", "gi", "y"}, {"gi", "g", "y"}});
  Report ir = validate_groupoid(inv);
  CHECK_FALSE(ir.holds());
  CHECK(ir.find("G4-inverse") != nullptr);
}

TEST_CASE("groupoid: equality and specs round trip") {
  Groupoid G = builtin_i2();
  Groupoid H(G.object_ids(), G.morphism_specs(), G.composition_specs());
  CHECK(G == H);
  CHECK_FALSE(G == cyclic_group(4));
}
