#include "abelcat/generators.hpp"

namespace abelcat {

RingSpec ring_from_index(std::size_t i) {
  static const long long mods[kRingCount] = {0, 2, 3, 4, 6, 8, 9, 12};
  long long m = mods[i % kRingCount];
  return m == 0 ? RingSpec::z() : RingSpec::zn(m);
}

FpModule gen_module(Rng& r, const RingSpec& ring, const GenBounds& b) {
  std::size_t gens = r.below(b.max_gens + 1);
  std::size_t rels = r.below(b.max_rels + 1);
  IntMatrix rel(gens, rels);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = 0; j < rels; ++j) rel.at(i, j) = r.int_in(-b.max_entry, b.max_entry);
  return FpModule(ring, gens, std::move(rel));
}

ObjHandle gen_object(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b) {
  return c.intern(gen_module(r, ring, b));
}

Mor gen_hom(FpCategory& c, Rng& r, ObjHandle a, ObjHandle b) {
  HomGroup h = c.hom_group(a, b);
  IntVec coords(h.basis.size());
  for (Int& x : coords) x = r.int_in(-4, 4);
  return c.hom_element(h, coords);
}

Mor gen_morphism(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b) {
  ObjHandle a = gen_object(c, r, ring, b);
  ObjHandle d = gen_object(c, r, ring, b);
  return gen_hom(c, r, a, d);
}

Mor gen_mono(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b) {
  return image(c, gen_morphism(c, r, ring, b)).sub.rep;
}

Mor gen_epic(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b) {
  return coimage(c, gen_morphism(c, r, ring, b)).quot.rep;
}

SesData gen_ses(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b) {
  Mor f = gen_morphism(c, r, ring, b);
  KernelPair k = c.kernel(f);
  KernelPair q = c.cokernel(k.map);
  return {k.map, q.map};
}

Grid3x3 gen_grid(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b) {
  ObjHandle big = gen_object(c, r, ring, b);
  Mor into_big = gen_hom(c, r, gen_object(c, r, ring, b), big);
  Mor m2 = image(c, into_big).sub.rep;  // A2 -> B
  Mor into_a2 = gen_hom(c, r, gen_object(c, r, ring, b), m2.dom);
  Mor m1 = image(c, into_a2).sub.rep;  // A1 -> A2
  Mor m21 = c.compose(m2, m1);         // A1 -> B

  KernelPair q21 = c.cokernel(m1);    // A2 / A1
  KernelPair qb1 = c.cokernel(m21);   // B / A1
  KernelPair qb2 = c.cokernel(m2);    // B / A2
  ObjHandle z = c.zero_like(big);

  auto c13 = c.factor_right(q21.map, c.compose(qb1.map, m2));
  auto c23 = c.factor_right(qb1.map, qb2.map);
  if (!c13 || !c23)
    throw AbelError(ErrKind::internal_check, "grid quotient maps failed to factor");

  Grid3x3 g;
  g.obj[0][0] = m1.dom;   g.obj[0][1] = m2.dom;   g.obj[0][2] = q21.obj;
  g.obj[1][0] = m1.dom;   g.obj[1][1] = big;      g.obj[1][2] = qb1.obj;
  g.obj[2][0] = z;        g.obj[2][1] = qb2.obj;  g.obj[2][2] = qb2.obj;

  g.row[0][0] = m1;                       g.row[0][1] = q21.map;
  g.row[1][0] = m21;                      g.row[1][1] = qb1.map;
  g.row[2][0] = c.zero_mor(z, qb2.obj);   g.row[2][1] = c.identity(qb2.obj);

  g.col[0][0] = c.identity(m1.dom);  g.col[0][1] = m2;       g.col[0][2] = *c13;
  g.col[1][0] = c.zero_mor(m1.dom, z); g.col[1][1] = qb2.map; g.col[1][2] = *c23;
  return g;
}

}  // namespace abelcat
