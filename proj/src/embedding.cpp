#include "abelcat/embedding.hpp"

#include <set>

#include "abelcat/generators.hpp"
#include "abelcat/ops.hpp"

namespace abelcat {

namespace {

std::uint32_t ring_lookup(const EndRing& r, FpCategory& c, const Mor& f) {
  auto it = r.index.find(c.canon_map(f).to_string());
  if (it == r.index.end())
    throw AbelError(ErrKind::internal_check, "endomorphism ring is not closed");
  return it->second;
}

EndRing build_end_ring(FpCategory& c, ObjHandle p) {
  EndRing r;
  r.p = p;
  HomGroup hg = c.hom_group(p, p);
  const auto& els = c.elements(hg.group);
  for (const auto& coords : els) r.elems.push_back(c.hom_element(hg, coords));
  for (std::uint32_t i = 0; i < r.elems.size(); ++i)
    r.index.emplace(c.canon_map(r.elems[i]).to_string(), i);
  if (r.index.size() != r.elems.size())
    throw AbelError(ErrKind::internal_check, "duplicate endomorphisms in enumeration");
  std::size_t n = r.elems.size();
  r.mul.assign(n, std::vector<std::uint32_t>(n));
  r.add.assign(n, std::vector<std::uint32_t>(n));
  r.neg.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    r.neg[i] = ring_lookup(r, c, Mor{p, p, -r.elems[i].map});
    for (std::uint32_t j = 0; j < n; ++j) {
      r.mul[i][j] = ring_lookup(r, c, c.compose(r.elems[j], r.elems[i]));
      r.add[i][j] = ring_lookup(r, c, Mor{p, p, r.elems[i].map + r.elems[j].map});
    }
  }
  r.zero = ring_lookup(r, c, c.zero_mor(p, p));
  r.one = ring_lookup(r, c, c.identity(p));
  if (!ring_tables_ok(r))
    throw AbelError(ErrKind::internal_check, "endomorphism ring law failure");
  return r;
}

/* Deterministic pair sampler for the quadratic law checks on larger rings. */
std::vector<std::pair<std::uint32_t, std::uint32_t>> law_pairs(std::size_t n,
                                                               std::size_t want) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  if (n * n <= want) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) out.push_back({i, j});
    return out;
  }
  std::uint64_t s = 0x9E3779B97F4A7C15ull;
  for (std::size_t t = 0; t < want; ++t) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    out.push_back({std::uint32_t(z % n), std::uint32_t((z >> 32) % n)});
  }
  return out;
}

bool module_laws_hold(FpCategory& c, const Mitchell& d, const HomModule& m) {
  const EndRing& r = d.ring;
  ObjHandle g = m.hom.group;
  std::size_t dim = c.module(g).gens;
  auto eq = [&](const IntMatrix& x, const IntMatrix& y) {
    return c.mor_equal(Mor{g, g, x}, Mor{g, g, y});
  };
  if (!eq(m.action[r.one], IntMatrix::identity(dim))) return false;
  if (!eq(m.action[r.zero], IntMatrix(dim, dim))) return false;
  for (const auto& [i, j] : law_pairs(r.elems.size(), 2000)) {
    if (!eq(m.action[r.mul[i][j]], m.action[i] * m.action[j])) return false;
    if (!eq(m.action[r.add[i][j]], m.action[i] + m.action[j])) return false;
  }
  return true;
}

}  // namespace

bool ring_tables_ok(const EndRing& r) {
  std::size_t n = r.elems.size();
  if (n == 0) return false;
  const auto& add = r.add;
  const auto& mul = r.mul;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (add[i][r.zero] != i) return false;
    if (add[i][r.neg[i]] != r.zero) return false;
    if (mul[i][r.one] != i || mul[r.one][i] != i) return false;
    if (mul[i][r.zero] != r.zero || mul[r.zero][i] != r.zero) return false;
    for (std::uint32_t j = 0; j < n; ++j)
      if (add[i][j] != add[j][i]) return false;
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < n; ++k) {
        if (add[add[i][j]][k] != add[i][add[j][k]]) return false;
        if (mul[mul[i][j]][k] != mul[i][mul[j][k]]) return false;
        if (mul[add[i][j]][k] != add[mul[i][k]][mul[j][k]]) return false;
        if (mul[k][add[i][j]] != add[mul[k][i]][mul[k][j]]) return false;
      }
  return true;
}

Mitchell make_embedding(FpCategory& c, const std::vector<ObjHandle>& universe) {
  if (universe.empty()) throw AbelError(ErrKind::invalid_input, "empty subcategory");
  RingSpec ring = c.ring_of(universe.front());
  for (auto a : universe)
    if (!(c.ring_of(a) == ring))
      throw AbelError(ErrKind::mismatch, "subcategory objects live over different rings");
  if (!ring.is_zmod())
    throw AbelError(ErrKind::unsupported_generator,
                    "the generator has an infinite endomorphism ring over Z");
  std::size_t copies = 1;
  for (auto a : universe) copies = std::max(copies, c.module(a).gens);

  Mitchell d;
  d.cat = &c;
  d.universe = universe;
  d.copies = copies;
  d.p = c.intern(FpModule::free_module(ring, copies));
  d.ring = build_end_ring(c, d.p);
  for (auto a : universe) {
    std::size_t g = c.module(a).gens;
    IntMatrix m(g, copies);
    for (std::size_t i = 0; i < g; ++i) m.at(i, i) = 1;
    Mor e = c.make_morphism(d.p, a, std::move(m));
    if (!is_epic(c, e))
      throw AbelError(ErrKind::internal_check, "generator-wise surjection is not epic");
    d.onto.emplace(a.id, e);
  }
  return d;
}

const HomModule& f_object(Mitchell& d, ObjHandle a) {
  auto it = d.cache.find(a.id);
  if (it != d.cache.end()) return it->second;
  FpCategory& c = *d.cat;
  HomModule m;
  m.src = a;
  m.hom = c.hom_group(d.p, a);
  std::size_t dim = c.module(m.hom.group).gens;
  m.action.reserve(d.ring.elems.size());
  for (const Mor& r : d.ring.elems) {
    IntMatrix act(dim, dim);
    for (std::size_t b = 0; b < dim; ++b)
      act.set_col(b, c.hom_coords(m.hom, c.compose(m.hom.basis[b], r)));
    m.action.push_back(std::move(act));
  }
  if (!module_laws_hold(c, d, m))
    throw AbelError(ErrKind::internal_check, "hom module violates the action laws");
  return d.cache.emplace(a.id, std::move(m)).first->second;
}

IntMatrix f_map(Mitchell& d, const Mor& f) {
  FpCategory& c = *d.cat;
  const HomModule& ha = f_object(d, f.dom);
  const HomModule& hb = f_object(d, f.cod);
  IntMatrix out(c.module(hb.hom.group).gens, c.module(ha.hom.group).gens);
  for (std::size_t b = 0; b < out.cols(); ++b)
    out.set_col(b, c.hom_coords(hb.hom, c.compose(f, ha.hom.basis[b])));
  return out;
}

Mor lift_through_epic(FpCategory& c, const Mor& e, const Mor& g) {
  if (!(g.cod == e.cod)) throw AbelError(ErrKind::mismatch, "lift target mismatch");
  auto r = c.factor_left(e, g);
  if (!r) throw AbelError(ErrKind::lift_failed, "no lift through the epic");
  return *r;
}

bool action_linear(Mitchell& d, ObjHandle a, ObjHandle b, const IntMatrix& phi) {
  FpCategory& c = *d.cat;
  const HomModule& ha = f_object(d, a);
  const HomModule& hb = f_object(d, b);
  ObjHandle ga = ha.hom.group, gb = hb.hom.group;
  if (phi.rows() != c.module(gb).gens || phi.cols() != c.module(ga).gens) return false;
  if (!c.matrix_well_defined(ga, gb, phi)) return false;
  for (std::size_t i = 0; i < d.ring.elems.size(); ++i)
    if (!c.mor_equal(Mor{ga, gb, hb.action[i] * phi}, Mor{ga, gb, phi * ha.action[i]}))
      return false;
  return true;
}

Mor full_witness(Mitchell& d, ObjHandle a, ObjHandle b, const IntMatrix& phi) {
  FpCategory& c = *d.cat;
  auto ea = d.onto.find(a.id);
  auto eb = d.onto.find(b.id);
  if (ea == d.onto.end() || eb == d.onto.end())
    throw AbelError(ErrKind::invalid_input, "witness endpoints must be declared objects");
  if (!action_linear(d, a, b, phi))
    throw AbelError(ErrKind::invalid_input, "map does not commute with the ring action");
  const HomModule& ha = f_object(d, a);
  const HomModule& hb = f_object(d, b);

  /* phi(e_A) : P -> B kills ker e_A because phi commutes with precomposition
     and P generates the kernel; the image then descends along e_A. */
  IntVec ecoords = c.hom_coords(ha.hom, ea->second);
  Mor psi = c.hom_element(hb.hom, phi.mul_vec(ecoords));
  KernelPair k = c.kernel(ea->second);
  if (!is_zero_mor(c, c.compose(psi, k.map)))
    throw AbelError(ErrKind::internal_check, "linear map does not kill ker e_A");
  auto y = factor_through_epi(c, psi, QuotientObject{ea->second});
  if (!y) throw AbelError(ErrKind::internal_check, "witness descent failed");

  IntMatrix fy = f_map(d, *y);
  if (!c.mor_equal(Mor{ha.hom.group, hb.hom.group, fy},
                   Mor{ha.hom.group, hb.hom.group, phi}))
    throw AbelError(ErrKind::internal_check, "witness image differs from the input");
  return *y;
}

void for_each_additive_map(FpCategory& c, ObjHandle ga, ObjHandle gb, std::uint64_t cap,
                           const std::function<void(const IntMatrix&)>& fn) {
  HomGroup hz = c.hom_group(ga, gb);
  auto card = c.cardinality(hz.group);
  if (!card) throw AbelError(ErrKind::enumeration_refused, "infinitely many additive maps");
  if (*card > cap)
    throw AbelError(ErrKind::cap_exceeded, "additive map count " + card->str() + " beyond cap");

  const SnfResult& s = c.relations_snf(hz.group);
  std::size_t m = c.module(hz.group).gens;
  std::size_t rows = c.module(gb).gens, cols = c.module(ga).gens;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i)
    if (s.diag(i) > 1) pos.push_back(i);
  std::vector<Int> ctr(pos.size(), 0);
  IntVec w(m, 0);
  for (;;) {
    for (std::size_t i = 0; i < pos.size(); ++i) w[pos[i]] = ctr[i];
    IntVec rep = s.u_inv.mul_vec(w);
    fn(unvec(hz.basis_mat.mul_vec(rep), rows, cols));
    std::size_t i = 0;
    while (i < pos.size() && ++ctr[i] == s.diag(pos[i])) ctr[i++] = 0;
    if (i == pos.size()) break;
  }
}

EmbedReport check_embedding(FpCategory& c, const std::vector<ObjHandle>& universe,
                            std::uint64_t seed, std::size_t ses_count,
                            std::uint64_t linear_cap) {
  EmbedReport rep;
  Mitchell d = make_embedding(c, universe);
  RingSpec ring = c.ring_of(d.p);
  Rng rng(seed);

  Int expect = 1;
  for (std::size_t i = 0; i < d.copies * d.copies; ++i) expect *= ring.modulus;
  rep.ring_ok = ring_tables_ok(d.ring) && Int(d.ring.elems.size()) == expect;

  rep.action_ok = true;
  for (auto a : universe)
    rep.action_ok = rep.action_ok && module_laws_hold(c, d, f_object(d, a));

  rep.functor_ok = true;
  for (auto a : universe) {
    ObjHandle g = f_object(d, a).hom.group;
    rep.functor_ok =
        rep.functor_ok &&
        c.mor_equal(Mor{g, g, f_map(d, c.identity(a))}, c.identity(g));
  }
  for (int t = 0; t < 20; ++t) {
    ObjHandle a = d.universe[rng.below(d.universe.size())];
    ObjHandle b = d.universe[rng.below(d.universe.size())];
    ObjHandle e = d.universe[rng.below(d.universe.size())];
    Mor f = gen_hom(c, rng, a, b);
    Mor g = gen_hom(c, rng, b, e);
    ObjHandle ga = f_object(d, a).hom.group, ge = f_object(d, e).hom.group;
    rep.functor_ok = rep.functor_ok &&
                     c.mor_equal(Mor{ga, ge, f_map(d, c.compose(g, f))},
                                 Mor{ga, ge, f_map(d, g) * f_map(d, f)});
  }

  rep.exact_ok = true;
  GenBounds bounds{3, 3, 6};
  for (std::size_t t = 0; t < ses_count; ++t) {
    SesData s = gen_ses(c, rng, ring, bounds);
    ObjHandle gk = f_object(d, s.inc.dom).hom.group;
    ObjHandle gx = f_object(d, s.inc.cod).hom.group;
    ObjHandle gq = f_object(d, s.proj.cod).hom.group;
    Mor fi = c.make_morphism(gk, gx, f_map(d, s.inc));
    Mor fp = c.make_morphism(gx, gq, f_map(d, s.proj));
    SequenceSpec spec{{fi, fp}, true, true};
    rep.exact_ok = rep.exact_ok && is_exact_seq(c, spec);
    ++rep.ses_checked;
  }

  rep.faithful_ok = rep.count_ok = rep.full_ok = true;
  std::vector<std::size_t> basis_idx;
  for (const auto& bm : c.hom_group(d.p, d.p).basis)
    basis_idx.push_back(d.ring.index.at(c.canon_map(bm).to_string()));
  for (auto a : universe)
    for (auto b : universe) {
      const HomModule& ha = f_object(d, a);
      const HomModule& hb = f_object(d, b);
      ObjHandle ga = ha.hom.group, gb = hb.hom.group;
      HomGroup hom_ab = c.hom_group(a, b);
      const auto& els = c.elements(hom_ab.group);

      std::set<std::string> images;
      for (const auto& coords : els) {
        Mor f = c.hom_element(hom_ab, coords);
        Mor ff{ga, gb, f_map(d, f)};
        images.insert(c.canon_map(ff).to_string());
        if (is_zero_mor(c, ff) != is_zero_mor(c, f)) rep.faithful_ok = false;
      }
      rep.faithful_ok = rep.faithful_ok && images.size() == els.size();

      std::uint64_t linear = 0;
      std::vector<IntMatrix> survivors;
      for_each_additive_map(c, ga, gb, linear_cap, [&](const IntMatrix& phi) {
        for (std::size_t i : basis_idx)
          if (!c.mor_equal(Mor{ga, gb, hb.action[i] * phi},
                           Mor{ga, gb, phi * ha.action[i]}))
            return;
        ++linear;
        survivors.push_back(phi);
      });
      for (const auto& phi : survivors)
        if (!action_linear(d, a, b, phi)) rep.count_ok = false;
      rep.count_ok = rep.count_ok && Int(linear) == *c.cardinality(hom_ab.group);

      std::uint64_t found = 0;
      for (const auto& phi : survivors) {
        try {
          full_witness(d, a, b, phi);
          ++found;
          ++rep.witnesses;
        } catch (const AbelError&) {
          rep.full_ok = false;
        }
      }
      rep.full_ok = rep.full_ok && found == linear;
      ++rep.pairs_checked;
    }

  // Zero first map with a nonzero kernel downstream: not exact, and the
  // image complex must come out not exact as well.
  ObjHandle x = c.intern(FpModule::free_module(ring, 1));
  ObjHandle src = c.intern(FpModule::cyclic(ring, ring.modulus));
  ObjHandle z0 = c.zero_like(x);
  Mor zf = c.zero_mor(src, x);
  Mor pr = c.zero_mor(x, z0);
  bool raw = is_exact_at(c, zf, pr);
  ObjHandle gs = f_object(d, src).hom.group;
  ObjHandle gx2 = f_object(d, x).hom.group;
  ObjHandle gz = f_object(d, z0).hom.group;
  Mor fzf = c.make_morphism(gs, gx2, f_map(d, zf));
  Mor fpr = c.make_morphism(gx2, gz, f_map(d, pr));
  bool emb = is_exact_at(c, fzf, fpr);
  rep.reflect_ok = !raw && !emb;

  return rep;
}

}  // namespace abelcat
