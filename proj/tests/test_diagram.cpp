#include "doctest.h"

#include "abelcat/diagram.hpp"
#include "abelcat/generators.hpp"

using namespace abelcat;

namespace {

struct Square {
  FpCategory c;
  ObjHandle z;
  Diagram d;

  explicit Square(long long last = 2) {
    z = c.intern(FpModule::free_module(RingSpec::z(), 1));
    for (const char* n : {"A", "B", "C", "D"}) d.objects.emplace(n, z);
    auto mul = [&](long long k) {
      return c.make_morphism(z, z, IntMatrix::from_rows({{k}}));
    };
    d.arrows["ab"] = {"A", "B", mul(2)};
    d.arrows["bd"] = {"B", "D", mul(3)};
    d.arrows["ac"] = {"A", "C", mul(3)};
    d.arrows["cd"] = {"C", "D", mul(last)};
  }
};

}  // namespace

TEST_CASE("path composition applies left to right") {
  Square s;
  Mor m = compose_path(s.c, s.d, {"ab", "bd"});
  CHECK(m.map == IntMatrix::from_rows({{6}}));
  Mor one = compose_path(s.c, s.d, {"ab"});
  CHECK(one.map == IntMatrix::from_rows({{2}}));
}

TEST_CASE("all-paths commutation on a square") {
  Square good(2);
  auto rep = check_commutes(good.c, good.d);
  CHECK(rep.ok);
  CHECK(rep.failures.empty());

  Square bad(5);
  auto rep2 = check_commutes(bad.c, bad.d);
  CHECK(!rep2.ok);
  REQUIRE(rep2.failures.size() == 1);  // the single parallel pair A -> D
}

TEST_CASE("asserted-pairs commutation") {
  Square s(5);
  s.d.mode = Diagram::CommuteMode::asserted_pairs;
  // No pairs asserted: vacuously fine even though paths disagree.
  CHECK(check_commutes(s.c, s.d).ok);

  s.d.path_pairs.push_back({{"ab", "bd"}, {"ac", "cd"}});
  auto rep = check_commutes(s.c, s.d);
  CHECK(!rep.ok);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].lhs == std::vector<std::string>{"ab", "bd"});

  // Non-parallel assertions are rejected, not silently compared.
  s.d.path_pairs = {{{"ab"}, {"ac"}}};
  CHECK_THROWS_AS(check_commutes(s.c, s.d), AbelError);
}

TEST_CASE("cycles are rejected in all-paths mode only") {
  FpCategory c;
  auto z = c.intern(FpModule::free_module(RingSpec::z(), 1));
  Diagram d;
  d.objects["A"] = z;
  d.objects["B"] = z;
  d.arrows["f"] = {"A", "B", c.identity(z)};
  d.arrows["g"] = {"B", "A", c.identity(z)};
  try {
    check_commutes(c, d);
    FAIL("cycle accepted");
  } catch (const AbelError& e) {
    CHECK(e.kind == ErrKind::invalid_input);
  }
  d.mode = Diagram::CommuteMode::asserted_pairs;
  CHECK(check_commutes(c, d).ok);
}

TEST_CASE("path explosion hits the cap") {
  FpCategory c;
  auto z = c.intern(FpModule::free_module(RingSpec::z(), 1));
  Diagram d;
  for (int layer = 0; layer <= 9; ++layer) d.objects["L" + std::to_string(layer)] = z;
  for (int layer = 0; layer < 9; ++layer)
    for (int a = 0; a < 3; ++a)
      d.arrows["e" + std::to_string(layer) + "_" + std::to_string(a)] =
          {"L" + std::to_string(layer), "L" + std::to_string(layer + 1), c.identity(z)};
  try {
    check_commutes(c, d);
    FAIL("path cap not enforced");
  } catch (const AbelError& e) {
    CHECK(e.kind == ErrKind::cap_exceeded);
  }
}

TEST_CASE("exactness claims inside a diagram") {
  FpCategory c;
  auto z = c.intern(FpModule::free_module(RingSpec::z(), 1));
  auto z2 = c.intern(FpModule::cyclic(RingSpec::z(), 2));
  Diagram d;
  d.objects["Z1"] = z;
  d.objects["Z2"] = z;
  d.objects["Q"] = z2;
  d.arrows["dbl"] = {"Z1", "Z2", c.make_morphism(z, z, IntMatrix::from_rows({{2}}))};
  d.arrows["proj"] = {"Z2", "Q", c.make_morphism(z, z2, IntMatrix::from_rows({{1}}))};
  d.exact_claims.push_back({{"dbl", "proj"}, true, true});
  auto rep = check_exact_claims(c, d);
  CHECK(rep.ok);

  d.exact_claims.push_back({{"dbl", "proj"}, false, true});  // still fine: dbl monic not required
  d.exact_claims.push_back({{"proj"}, false, true});         // proj epic: fine
  d.exact_claims.push_back({{"dbl"}, true, true});           // dbl is not epic
  auto rep2 = check_exact_claims(c, d);
  CHECK(!rep2.ok);
  REQUIRE(rep2.failed.size() == 1);
  CHECK(rep2.failed[0] == 3);
}

TEST_CASE("the three exactness conditions agree on every pair") {
  FpCategory c;
  Rng rng(301);
  GenBounds b{3, 3, 6};
  int exact_seen = 0, inexact_seen = 0;
  for (int t = 0; t < 60; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    Mor f = gen_morphism(c, rng, ring, b);
    Mor g = gen_hom(c, rng, f.cod, gen_object(c, rng, ring, b));
    PairConditions pc = exactness_conditions(c, f, g);
    CHECK(pc.agree());
    (pc.image_eq_kernel ? exact_seen : inexact_seen)++;

    SesData s = gen_ses(c, rng, ring, b);
    PairConditions pe = exactness_conditions(c, s.inc, s.proj);
    CHECK(pe.agree());
    CHECK(pe.image_eq_kernel);
    CHECK(pe.cokernel_eq_coimage);
    CHECK(pe.composites_zero);
  }
  CHECK(inexact_seen > 0);  // the random pairs do exercise the failing side
}

namespace {

/* The lattice 4Z/8 < 2Z/8 < Z/8 written out as a grid of cyclic modules. */
Grid3x3 z8_grid(FpCategory& c) {
  auto z = RingSpec::z();
  auto z2 = c.intern(FpModule::cyclic(z, 2));
  auto z4 = c.intern(FpModule::cyclic(z, 4));
  auto z8 = c.intern(FpModule::cyclic(z, 8));
  auto nil = c.intern(FpModule::zero(z));
  auto m = [&](ObjHandle a, ObjHandle b, long long k) {
    return c.make_morphism(a, b, IntMatrix::from_rows({{k}}));
  };
  Grid3x3 g;
  g.obj[0][0] = z2; g.obj[0][1] = z4; g.obj[0][2] = z2;
  g.obj[1][0] = z2; g.obj[1][1] = z8; g.obj[1][2] = z4;
  g.obj[2][0] = nil; g.obj[2][1] = z2; g.obj[2][2] = z2;
  g.row[0][0] = m(z2, z4, 2);  g.row[0][1] = m(z4, z2, 1);
  g.row[1][0] = m(z2, z8, 4);  g.row[1][1] = m(z8, z4, 1);
  g.row[2][0] = c.zero_mor(nil, z2);  g.row[2][1] = c.identity(z2);
  g.col[0][0] = c.identity(z2);  g.col[0][1] = m(z4, z8, 2);  g.col[0][2] = m(z2, z4, 2);
  g.col[1][0] = c.zero_mor(z2, nil);  g.col[1][1] = m(z8, z2, 1);  g.col[1][2] = m(z4, z2, 1);
  return g;
}

}  // namespace

TEST_CASE("nine lemma on the 4Z/8 < 2Z/8 < Z/8 grid") {
  FpCategory c;
  Grid3x3 g = z8_grid(c);
  for (auto dir : {NineDirection::top_from_bottom, NineDirection::bottom_from_top}) {
    NineReport r = nine_lemma(c, g, dir);
    CHECK(r.squares_commute);
    CHECK(r.columns_exact);
    CHECK(r.middle_row_exact);
    CHECK(r.assumed_row_exact);
    CHECK(r.concluded_row_exact);
    CHECK(r.ok());
  }
}

TEST_CASE("nine lemma reports broken hypotheses") {
  FpCategory c;
  // Break one square: the induced map on the right column replaced by zero.
  Grid3x3 g = z8_grid(c);
  g.col[0][2] = c.zero_mor(g.obj[0][2], g.obj[1][2]);
  NineReport r = nine_lemma(c, g, NineDirection::top_from_bottom);
  CHECK(!r.squares_commute);
  CHECK(!r.hypothesis_ok());

  // Identity maps everywhere commute but nothing is exact.
  auto z2 = c.intern(FpModule::cyclic(RingSpec::z(), 2));
  Grid3x3 idg;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) idg.obj[i][j] = z2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) idg.row[i][j] = c.identity(z2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) idg.col[i][j] = c.identity(z2);
  NineReport r2 = nine_lemma(c, idg, NineDirection::top_from_bottom);
  CHECK(r2.squares_commute);
  CHECK(!r2.columns_exact);
  CHECK(!r2.middle_row_exact);
  CHECK(!r2.assumed_row_exact);
  CHECK(!r2.hypothesis_ok());
}

TEST_CASE("nine lemma on generated grids") {
  FpCategory c;
  Rng rng(311);
  GenBounds b{3, 3, 6};
  for (int t = 0; t < 30; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    Grid3x3 g = gen_grid(c, rng, ring, b);
    for (auto dir : {NineDirection::top_from_bottom, NineDirection::bottom_from_top}) {
      NineReport r = nine_lemma(c, g, dir);
      CHECK(r.hypothesis_ok());
      CHECK(r.ok());
    }
  }
}

TEST_CASE("generation is deterministic per seed") {
  FpCategory c1, c2;
  Rng r1(99), r2(99);
  GenBounds b{3, 3, 6};
  for (int t = 0; t < 10; ++t) {
    RingSpec ring = ring_from_index(t);
    Grid3x3 g1 = gen_grid(c1, r1, ring, b);
    Grid3x3 g2 = gen_grid(c2, r2, ring, b);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(c1.module(g1.obj[i][j]).key() == c2.module(g2.obj[i][j]).key());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(c1.canon_map(g1.row[i][j]) == c2.canon_map(g2.row[i][j]));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(c1.canon_map(g1.col[i][j]) == c2.canon_map(g2.col[i][j]));
  }
}
