#include "doctest.h"

#include <set>
#include <string>

#include "abelcat/embedding.hpp"
#include "abelcat/generators.hpp"
#include "abelcat/ops.hpp"

using namespace abelcat;

/* ---- oracle: scalar arithmetic mod n ------------------------------------
   For P = Z/n (one copy of the free rank-1 module) every endomorphism is a
   1x1 matrix [k], and composition and addition must agree with plain
   multiplication and addition of the scalars mod n.  Computed here with
   integer arithmetic only, before any ring table is consulted. */
static long long scalar_of(const Mor& f) {
  return (long long)(f.map.at(0, 0));
}

TEST_CASE("the endomorphism ring of Z/4 is scalar arithmetic mod 4") {
  FpCategory c;
  RingSpec zn4 = RingSpec::zn(4);
  ObjHandle a = c.intern(FpModule::free_module(zn4, 1));
  Mitchell d = make_embedding(c, {a});

  REQUIRE(d.copies == 1);
  REQUIRE(d.ring.elems.size() == 4);
  CHECK(ring_tables_ok(d.ring));

  // Scalars of the listed elements are exactly {0, 1, 2, 3} after reduction.
  std::set<long long> seen;
  for (const Mor& e : d.ring.elems) {
    long long k = ((scalar_of(e) % 4) + 4) % 4;
    seen.insert(k);
  }
  CHECK(seen == std::set<long long>{0, 1, 2, 3});

  // Identity and zero land on the right scalars.
  CHECK(((scalar_of(d.ring.elems[d.ring.one]) % 4) + 4) % 4 == 1);
  CHECK(((scalar_of(d.ring.elems[d.ring.zero]) % 4) + 4) % 4 == 0);

  // Tables against the oracle: mul is scalar product, add is scalar sum.
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) {
      long long ki = scalar_of(d.ring.elems[i]);
      long long kj = scalar_of(d.ring.elems[j]);
      long long prod = (((ki * kj) % 4) + 4) % 4;
      long long sum = (((ki + kj) % 4) + 4) % 4;
      CHECK(((scalar_of(d.ring.elems[d.ring.mul[i][j]]) % 4) + 4) % 4 == prod);
      CHECK(((scalar_of(d.ring.elems[d.ring.add[i][j]]) % 4) + 4) % 4 == sum);
      // Scalars commute.
      CHECK(d.ring.mul[i][j] == d.ring.mul[j][i]);
    }
}

TEST_CASE("the endomorphism ring of a free square is a full matrix ring") {
  FpCategory c;

  SUBCASE("two by two over Z/2: sixteen elements, not commutative") {
    ObjHandle a = c.intern(FpModule::free_module(RingSpec::zn(2), 2));
    Mitchell d = make_embedding(c, {a});
    REQUIRE(d.copies == 2);
    CHECK(d.ring.elems.size() == 16);  // 2^(2*2)
    CHECK(ring_tables_ok(d.ring));
    CHECK(c.mor_equal(d.ring.elems[d.ring.one], c.identity(d.p)));
    CHECK(is_zero_mor(c, d.ring.elems[d.ring.zero]));

    bool noncommutative = false;
    for (std::uint32_t i = 0; i < 16 && !noncommutative; ++i)
      for (std::uint32_t j = 0; j < 16 && !noncommutative; ++j)
        if (d.ring.mul[i][j] != d.ring.mul[j][i]) noncommutative = true;
    CHECK(noncommutative);
  }

  SUBCASE("two by two over Z/3: eighty-one elements") {
    ObjHandle a = c.intern(FpModule::free_module(RingSpec::zn(3), 2));
    Mitchell d = make_embedding(c, {a});
    CHECK(d.ring.elems.size() == 81);  // 3^(2*2)
    CHECK(ring_tables_ok(d.ring));
  }
}

TEST_CASE("construction rejects rings it cannot tabulate") {
  FpCategory c;
  ObjHandle zfree = c.intern(FpModule::free_module(RingSpec::z(), 1));
  CHECK_THROWS_AS(make_embedding(c, {zfree}), AbelError);
  try {
    make_embedding(c, {zfree});
  } catch (const AbelError& e) {
    CHECK(e.kind == ErrKind::unsupported_generator);
  }
  CHECK_THROWS_AS(make_embedding(c, {}), AbelError);

  ObjHandle a4 = c.intern(FpModule::free_module(RingSpec::zn(4), 1));
  ObjHandle a6 = c.intern(FpModule::free_module(RingSpec::zn(6), 1));
  try {
    make_embedding(c, {a4, a6});
    CHECK(false);
  } catch (const AbelError& e) {
    CHECK(e.kind == ErrKind::mismatch);
  }
}

TEST_CASE("hom functor preserves identities, composites, and zero") {
  FpCategory c;
  RingSpec zn4 = RingSpec::zn(4);
  ObjHandle a = c.intern(FpModule::free_module(zn4, 1));
  ObjHandle b = c.intern(FpModule::cyclic(zn4, 2));
  ObjHandle s = c.intern(FpModule(zn4, 2, IntMatrix::from_rows({{2}, {0}})));
  Mitchell d = make_embedding(c, {a, b, s});
  Rng rng(77);

  for (ObjHandle x : d.universe) {
    ObjHandle g = f_object(d, x).hom.group;
    CHECK(c.mor_equal(Mor{g, g, f_map(d, c.identity(x))}, c.identity(g)));
  }
  for (int t = 0; t < 40; ++t) {
    ObjHandle x = d.universe[rng.below(3)];
    ObjHandle y = d.universe[rng.below(3)];
    ObjHandle z = d.universe[rng.below(3)];
    Mor f = gen_hom(c, rng, x, y);
    Mor g = gen_hom(c, rng, y, z);
    ObjHandle gx = f_object(d, x).hom.group;
    ObjHandle gz = f_object(d, z).hom.group;
    CHECK(c.mor_equal(Mor{gx, gz, f_map(d, c.compose(g, f))},
                      Mor{gx, gz, f_map(d, g) * f_map(d, f)}));
    CHECK(is_zero_mor(c, Mor{gx, gz, f_map(d, c.zero_mor(x, z))}));
  }
}

TEST_CASE("lifts through epics exist from the generator and fail otherwise") {
  FpCategory c;
  RingSpec zn4 = RingSpec::zn(4);
  ObjHandle b = c.intern(FpModule(zn4, 2, IntMatrix::from_rows({{2}, {0}})));
  Mitchell d = make_embedding(c, {b});
  Mor e = d.onto.at(b.id);
  CHECK(is_epic(c, e));

  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    Mor g = gen_hom(c, rng, d.p, b);
    Mor r = lift_through_epic(c, e, g);
    CHECK(c.mor_equal(c.compose(e, r), g));
  }

  // Multiplication by two on Z/4 is not epic; the identity has no lift.
  ObjHandle z4 = c.intern(FpModule::free_module(zn4, 1));
  Mor dbl = c.make_morphism(z4, z4, IntMatrix::from_rows({{2}}));
  try {
    lift_through_epic(c, dbl, c.identity(z4));
    CHECK(false);
  } catch (const AbelError& err) {
    CHECK(err.kind == ErrKind::lift_failed);
  }
  // Mismatched target is reported as such, not as a failed solve.
  try {
    lift_through_epic(c, e, c.identity(d.p));
    CHECK(false);
  } catch (const AbelError& err) {
    CHECK(err.kind == ErrKind::mismatch);
  }
}

TEST_CASE("exhaustive fullness for the free square over Z/2") {
  FpCategory c;
  ObjHandle a = c.intern(FpModule::free_module(RingSpec::zn(2), 2));
  Mitchell d = make_embedding(c, {a});
  const HomModule& h = f_object(d, a);
  ObjHandle g = h.hom.group;

  // Hom(P, A) here is (Z/2)^4, so there are 2^16 additive self-maps.
  std::uint64_t total = 0;
  std::uint64_t linear = 0;
  std::vector<IntMatrix> survivors;
  IntMatrix rejected;
  bool have_rejected = false;
  for_each_additive_map(c, g, g, std::uint64_t(1) << 17, [&](const IntMatrix& phi) {
    ++total;
    bool ok = true;
    for (const IntMatrix& act : h.action)
      if (!c.mor_equal(Mor{g, g, act * phi}, Mor{g, g, phi * act})) {
        ok = false;
        break;
      }
    if (ok) {
      ++linear;
      survivors.push_back(phi);
    } else if (!have_rejected) {
      rejected = phi;
      have_rejected = true;
    }
  });
  CHECK(total == 65536);
  // Exactly |Hom(A, A)| = |End(P)| = 16 of them respect the ring action.
  CHECK(linear == 16);
  REQUIRE(have_rejected);

  std::set<std::string> images;
  for (const IntMatrix& phi : survivors) {
    CHECK(action_linear(d, a, a, phi));
    Mor y = full_witness(d, a, a, phi);  // verifies F(y) == phi internally
    images.insert(c.canon_map(y).to_string());
  }
  // Distinct linear maps pull back to distinct morphisms (faithfulness).
  CHECK(images.size() == survivors.size());

  CHECK(!action_linear(d, a, a, rejected));
  try {
    full_witness(d, a, a, rejected);
    CHECK(false);
  } catch (const AbelError& err) {
    CHECK(err.kind == ErrKind::invalid_input);
  }
}

TEST_CASE("full report over a small Z/4 subcategory") {
  FpCategory c;
  RingSpec zn4 = RingSpec::zn(4);
  ObjHandle a = c.intern(FpModule::free_module(zn4, 1));  // Z/4
  ObjHandle b = c.intern(FpModule::cyclic(zn4, 2));       // Z/2
  EmbedReport rep = check_embedding(c, {a, b}, 5, 10);

  CHECK(rep.ring_ok);
  CHECK(rep.action_ok);
  CHECK(rep.functor_ok);
  CHECK(rep.exact_ok);
  CHECK(rep.faithful_ok);
  CHECK(rep.count_ok);
  CHECK(rep.full_ok);
  CHECK(rep.reflect_ok);
  CHECK(rep.ok());
  CHECK(rep.ses_checked == 10);
  CHECK(rep.pairs_checked == 4);
  // |Hom(Z/4,Z/4)| + |Hom(Z/4,Z/2)| + |Hom(Z/2,Z/4)| + |Hom(Z/2,Z/2)|
  //   = 4 + 2 + 2 + 2.
  CHECK(rep.witnesses == 10);
}

TEST_CASE("additive map enumeration refuses infinite groups and honors caps") {
  FpCategory c;
  ObjHandle zfree = c.intern(FpModule::free_module(RingSpec::z(), 1));
  ObjHandle z2 = c.intern(FpModule::cyclic(RingSpec::z(), 2));
  auto nop = [](const IntMatrix&) {};
  try {
    for_each_additive_map(c, zfree, zfree, 1000, nop);  // Hom(Z, Z) is infinite
    CHECK(false);
  } catch (const AbelError& err) {
    CHECK(err.kind == ErrKind::enumeration_refused);
  }
  std::uint64_t trivial = 0;
  for_each_additive_map(c, z2, zfree, 10, [&](const IntMatrix&) { ++trivial; });
  CHECK(trivial == 1);  // Hom(Z/2, Z) holds only the zero map
  std::uint64_t n = 0;
  for_each_additive_map(c, zfree, z2, 10, [&](const IntMatrix&) { ++n; });
  CHECK(n == 2);
  try {
    for_each_additive_map(c, zfree, z2, 1, nop);
    CHECK(false);
  } catch (const AbelError& err) {
    CHECK(err.kind == ErrKind::cap_exceeded);
  }
}
