#include "abelcat/fp_category.hpp"

#include <mutex>

namespace abelcat {

std::optional<IntVec> lattice_contains(const IntMatrix& m, const IntVec& v,
                                       const RingSpec& ring) {
  if (v.size() != m.rows()) throw AbelError(ErrKind::mismatch, "vector length vs matrix rows");
  IntMatrix sys = m;
  if (ring.is_zmod())
    sys = hstack(sys, IntMatrix::identity(m.rows()).scaled(ring.modulus));
  auto sol = solve_in_colspan(sys, v);
  if (!sol) return std::nullopt;
  IntVec x(sol->begin(), sol->begin() + m.cols());
  if (ring.is_zmod())
    for (Int& c : x) c = pos_mod(c, ring.modulus);
  return x;
}

ObjHandle FpCategory::intern(const FpModule& m) {
  const std::string key = m.key();
  {
    std::shared_lock lk(obj_mu_);
    auto it = by_key_.find(key);
    if (it != by_key_.end()) return {it->second};
  }
  Rec r;
  r.mod = m;
  r.snf_full = snf(m.relations_full());
  r.invf.free_rank = m.gens - r.snf_full.rank;
  for (std::size_t i = 0; i < r.snf_full.rank; ++i)
    if (r.snf_full.d.at(i, i) > 1) r.invf.factors.push_back(r.snf_full.d.at(i, i));
  if (r.invf.free_rank == 0) {
    Int c = 1;
    for (const Int& f : r.invf.factors) c *= f;
    r.card = c;
  }
  std::unique_lock lk(obj_mu_);
  auto it = by_key_.find(key);
  if (it != by_key_.end()) return {it->second};
  std::uint32_t id = static_cast<std::uint32_t>(recs_.size());
  recs_.push_back(std::move(r));
  by_key_.emplace(key, id);
  return {id};
}

const FpCategory::Rec& FpCategory::rec(ObjHandle a) const {
  std::shared_lock lk(obj_mu_);
  if (a.id >= recs_.size()) throw AbelError(ErrKind::mismatch, "unknown object handle");
  return recs_[a.id];
}

const FpModule& FpCategory::module(ObjHandle a) const { return rec(a).mod; }
RingSpec FpCategory::ring_of(ObjHandle a) const { return rec(a).mod.ring; }
const SnfResult& FpCategory::relations_snf(ObjHandle a) const { return rec(a).snf_full; }

ObjHandle FpCategory::zero_like(ObjHandle a) { return intern(FpModule::zero(ring_of(a))); }

Mor FpCategory::identity(ObjHandle a) const {
  return {a, a, IntMatrix::identity(rec(a).mod.gens)};
}

Mor FpCategory::zero_mor(ObjHandle a, ObjHandle b) const {
  if (!(ring_of(a) == ring_of(b)))
    throw AbelError(ErrKind::mismatch, "zero morphism across different rings");
  return {a, b, IntMatrix(rec(b).mod.gens, rec(a).mod.gens)};
}

Mor FpCategory::compose(const Mor& g, const Mor& f) const {
  if (!(f.cod == g.dom))
    throw AbelError(ErrKind::mismatch, "compose: codomain/domain mismatch");
  return {f.dom, g.cod, g.map * f.map};
}

bool FpCategory::mor_equal(const Mor& f, const Mor& g) const {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw AbelError(ErrKind::mismatch, "mor_equal: parallel morphisms required");
  const SnfResult& s = rec(f.cod).snf_full;
  IntMatrix diff = f.map - g.map;
  for (std::size_t j = 0; j < diff.cols(); ++j)
    if (!in_colspan(s, diff.col_vec(j))) return false;
  return true;
}

BiproductData FpCategory::biproduct(ObjHandle a, ObjHandle b) {
  const FpModule& ma = module(a);
  const FpModule& mb = module(b);
  if (!(ma.ring == mb.ring))
    throw AbelError(ErrKind::mismatch, "biproduct across different rings");
  FpModule sum(ma.ring, ma.gens + mb.gens, block_diag(ma.relations, mb.relations));
  ObjHandle s = intern(sum);
  const std::size_t ga = ma.gens, gb = mb.gens;
  IntMatrix i1(ga + gb, ga), i2(ga + gb, gb), p1(ga, ga + gb), p2(gb, ga + gb);
  for (std::size_t k = 0; k < ga; ++k) {
    i1.at(k, k) = 1;
    p1.at(k, k) = 1;
  }
  for (std::size_t k = 0; k < gb; ++k) {
    i2.at(ga + k, k) = 1;
    p2.at(k, ga + k) = 1;
  }
  return {s, {a, s, i1}, {b, s, i2}, {s, a, p1}, {s, b, p2}};
}

Mor FpCategory::tuple(const BiproductData& bp, const Mor& f, const Mor& g) const {
  if (!(f.dom == g.dom) || !(f.cod == bp.p1.cod) || !(g.cod == bp.p2.cod))
    throw AbelError(ErrKind::mismatch, "tuple: cone does not match biproduct");
  return {f.dom, bp.obj, vstack(f.map, g.map)};
}

Mor FpCategory::cotuple(const BiproductData& bp, const Mor& f, const Mor& g) const {
  if (!(f.cod == g.cod) || !(f.dom == bp.i1.dom) || !(g.dom == bp.i2.dom))
    throw AbelError(ErrKind::mismatch, "cotuple: cocone does not match biproduct");
  return {bp.obj, f.cod, hstack(f.map, g.map)};
}

KernelPair FpCategory::kernel(const Mor& f) {
  const FpModule& ma = module(f.dom);
  const FpModule& mb = module(f.cod);
  /* Preimage lattice {x : f(x) = 0 in cod}: project the integer kernel of
     [T | rel(cod)] onto the x block, then present it over rel(dom). */
  IntMatrix span = kernel_basis(hstack(f.map, mb.relations_full()));
  IntMatrix xspan(ma.gens, span.cols());
  for (std::size_t i = 0; i < ma.gens; ++i)
    for (std::size_t j = 0; j < span.cols(); ++j) xspan.at(i, j) = span.at(i, j);
  IntMatrix basis = colspan_basis(xspan);

  IntMatrix relspan = kernel_basis(hstack(basis, ma.relations_full()));
  IntMatrix krel(basis.cols(), relspan.cols());
  for (std::size_t i = 0; i < basis.cols(); ++i)
    for (std::size_t j = 0; j < relspan.cols(); ++j) krel.at(i, j) = relspan.at(i, j);
  krel = colspan_basis(krel);

  ObjHandle k = intern(FpModule(ma.ring, basis.cols(), krel));
  Mor inc{k, f.dom, basis};
#ifndef NDEBUG
  assert(matrix_well_defined(k, f.dom, basis));
#endif
  return {k, inc};
}

KernelPair FpCategory::cokernel(const Mor& f) {
  const FpModule& mb = module(f.cod);
  FpModule q(mb.ring, mb.gens, hstack(mb.relations, f.map));
  ObjHandle c = intern(q);
  return {c, Mor{f.cod, c, IntMatrix::identity(mb.gens)}};
}

std::optional<Mor> FpCategory::factor_left(const Mor& m, const Mor& g) {
  if (!(m.cod == g.cod))
    throw AbelError(ErrKind::mismatch, "factor_left: codomains differ");
  const FpModule& target = module(m.cod);
  const std::size_t gm = module(m.dom).gens;
  SnfResult sys = snf(hstack(m.map, target.relations_full()));
  IntMatrix h(gm, g.map.cols());
  for (std::size_t j = 0; j < g.map.cols(); ++j) {
    auto z = solve_in_colspan(sys, g.map.col_vec(j));
    if (!z) return std::nullopt;
    for (std::size_t i = 0; i < gm; ++i) h.at(i, j) = (*z)[i];
  }
  if (!matrix_well_defined(g.dom, m.dom, h)) return std::nullopt;
  return Mor{g.dom, m.dom, std::move(h)};
}

std::optional<Mor> FpCategory::factor_right(const Mor& e, const Mor& g) {
  if (!(e.dom == g.dom))
    throw AbelError(ErrKind::mismatch, "factor_right: domains differ");
  const FpModule& mb = module(e.cod);
  const FpModule& mc = module(g.cod);
  const std::size_t gb = mb.gens, gc = mc.gens;
  /* Solve H * e = g together with well-definedness of H on cod(e):
     for each source column s, H s must hit the required coset of cod(g)'s
     relation lattice.  Everything is linear in vec(H) plus slack. */
  IntMatrix sources = hstack(e.map, mb.relations);
  IntMatrix rc = mc.relations_full();
  const std::size_t ns = sources.cols();
  IntMatrix k1(0, gc * gb), k2(0, ns * rc.cols());
  IntVec rhs;
  IntMatrix ic = IntMatrix::identity(gc);
  for (std::size_t s = 0; s < ns; ++s) {
    IntMatrix st(1, gb);
    for (std::size_t i = 0; i < gb; ++i) st.at(0, i) = sources.at(i, s);
    k1 = vstack(k1, kron(st, ic));
    IntMatrix pad(gc, ns * rc.cols());
    for (std::size_t i = 0; i < gc; ++i)
      for (std::size_t j = 0; j < rc.cols(); ++j) pad.at(i, s * rc.cols() + j) = -rc.at(i, j);
    k2 = vstack(k2, pad);
    for (std::size_t i = 0; i < gc; ++i)
      rhs.push_back(s < e.map.cols() ? g.map.at(i, s) : Int(0));
  }
  auto w = solve_in_colspan(hstack(k1, k2), rhs);
  if (!w) return std::nullopt;
  IntVec hv(w->begin(), w->begin() + gc * gb);
  Mor h{e.cod, g.cod, unvec(hv, gc, gb)};
#ifndef NDEBUG
  assert(matrix_well_defined(h.dom, h.cod, h.map));
#endif
  return h;
}

Mor FpCategory::make_morphism(ObjHandle a, ObjHandle b, IntMatrix t) const {
  const FpModule& ma = module(a);
  const FpModule& mb = module(b);
  if (!(ma.ring == mb.ring))
    throw AbelError(ErrKind::mismatch, "morphism across different rings");
  if (t.rows() != mb.gens || t.cols() != ma.gens)
    throw AbelError(ErrKind::mismatch, "morphism matrix shape mismatch");
  std::size_t bad = 0;
  if (!matrix_well_defined(a, b, t, &bad))
    throw AbelError(ErrKind::well_definedness,
                    "matrix does not preserve relation column " + std::to_string(bad),
                    static_cast<long>(bad));
  return {a, b, std::move(t)};
}

bool FpCategory::matrix_well_defined(ObjHandle a, ObjHandle b, const IntMatrix& t,
                                     std::size_t* bad_col) const {
  const FpModule& ma = module(a);
  const SnfResult& sb = rec(b).snf_full;
  /* Only explicit relation columns need checking: over Z/n the implicit
     columns n*e_i map to n*(column of t), which the target lattice always
     contains. */
  for (std::size_t j = 0; j < ma.relations.cols(); ++j) {
    if (!in_colspan(sb, t.mul_vec(ma.relations.col_vec(j)))) {
      if (bad_col) *bad_col = j;
      return false;
    }
  }
  return true;
}

InvariantFactors FpCategory::invariant_factors(ObjHandle a) const { return rec(a).invf; }

std::optional<Int> FpCategory::cardinality(ObjHandle a) const { return rec(a).card; }

const std::vector<IntVec>& FpCategory::elements(ObjHandle a, std::uint64_t cap) {
  const Rec& r = rec(a);
  if (!r.card)
    throw AbelError(ErrKind::enumeration_refused, "module is infinite");
  if (*r.card > cap)
    throw AbelError(ErrKind::cap_exceeded,
                    "element count " + r.card->str() + " exceeds cap " + std::to_string(cap));
  {
    std::shared_lock lk(cache_mu_);
    auto it = elem_cache_.find(a.id);
    if (it != elem_cache_.end()) return it->second;
  }
  const SnfResult& s = r.snf_full;
  const std::size_t g = r.mod.gens;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < g; ++i)
    if (s.diag(i) > 1) pos.push_back(i);
  std::vector<IntVec> out;
  IntVec w(g);
  std::vector<Int> ctr(pos.size());
  for (;;) {
    for (std::size_t k = 0; k < pos.size(); ++k) w[pos[k]] = ctr[k];
    out.push_back(s.u_inv.mul_vec(w));
    std::size_t k = pos.size();
    bool done = false;
    for (;;) {
      if (k == 0) {
        done = true;
        break;
      }
      --k;
      if (++ctr[k] < s.diag(pos[k])) break;
      ctr[k] = 0;
    }
    if (done) break;
  }
  std::unique_lock lk(cache_mu_);
  return elem_cache_.emplace(a.id, std::move(out)).first->second;
}

IntVec FpCategory::canon_vec(ObjHandle a, const IntVec& v) const {
  const SnfResult& s = rec(a).snf_full;
  if (v.size() != rec(a).mod.gens)
    throw AbelError(ErrKind::mismatch, "element length vs generator count");
  IntVec w = s.u.mul_vec(v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    Int di = s.diag(i);
    if (di != 0) w[i] = pos_mod(w[i], di);
  }
  return s.u_inv.mul_vec(w);
}

bool FpCategory::is_zero_vec(ObjHandle a, const IntVec& v) const {
  return in_colspan(rec(a).snf_full, v);
}

IntMatrix FpCategory::canon_map(const Mor& f) const {
  IntMatrix c(f.map.rows(), f.map.cols());
  for (std::size_t j = 0; j < f.map.cols(); ++j)
    c.set_col(j, canon_vec(f.cod, f.map.col_vec(j)));
  return c;
}

HomGroup FpCategory::hom_group(ObjHandle a, ObjHandle b) {
  {
    std::shared_lock lk(cache_mu_);
    auto it = hom_cache_.find({a.id, b.id});
    if (it != hom_cache_.end()) return it->second;
  }
  const FpModule& ma = module(a);
  const FpModule& mb = module(b);
  if (!(ma.ring == mb.ring))
    throw AbelError(ErrKind::mismatch, "hom across different rings");
  IntMatrix ra = ma.relations_full();
  IntMatrix rb = mb.relations_full();
  const std::size_t dim = ma.gens * mb.gens;

  /* Matrices preserving all relations of A form a sublattice of Z^dim: the
     projection of ker[ (r^T (x) 1) | -rel(B) blocks ] onto the vec(T) part. */
  IntMatrix basis_mat = IntMatrix::identity(dim);
  if (ra.cols() > 0 && dim > 0) {
    IntMatrix ib = IntMatrix::identity(mb.gens);
    IntMatrix k1(0, dim), k2(0, ra.cols() * rb.cols());
    for (std::size_t s = 0; s < ra.cols(); ++s) {
      IntMatrix st(1, ma.gens);
      for (std::size_t i = 0; i < ma.gens; ++i) st.at(0, i) = ra.at(i, s);
      k1 = vstack(k1, kron(st, ib));
      IntMatrix pad(mb.gens, ra.cols() * rb.cols());
      for (std::size_t i = 0; i < mb.gens; ++i)
        for (std::size_t j = 0; j < rb.cols(); ++j)
          pad.at(i, s * rb.cols() + j) = -rb.at(i, j);
      k2 = vstack(k2, pad);
    }
    IntMatrix span = kernel_basis(hstack(k1, k2));
    IntMatrix xspan(dim, span.cols());
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < span.cols(); ++j) xspan.at(i, j) = span.at(i, j);
    basis_mat = colspan_basis(xspan);
  }

  /* Null-homotopies: matrices whose every column lies in B's relation
     lattice; the quotient by them is Hom(A, B). */
  auto basis_snf = std::make_shared<SnfResult>(snf(basis_mat));
  IntMatrix hrel(basis_mat.cols(), ma.gens * rb.cols());
  for (std::size_t j = 0; j < ma.gens; ++j)
    for (std::size_t s = 0; s < rb.cols(); ++s) {
      IntVec n(dim);
      for (std::size_t i = 0; i < mb.gens; ++i) n[j * mb.gens + i] = rb.at(i, s);
      auto c = solve_in_colspan(*basis_snf, n);
      assert(c);  // null-homotopies are always well defined
      for (std::size_t i = 0; i < basis_mat.cols(); ++i)
        hrel.at(i, j * rb.cols() + s) = (*c)[i];
    }
  hrel = colspan_basis(hrel);

  HomGroup h;
  h.dom = a;
  h.cod = b;
  h.group = intern(FpModule(RingSpec::z(), basis_mat.cols(), hrel));
  h.basis_mat = basis_mat;
  h.basis_snf = std::move(basis_snf);
  for (std::size_t i = 0; i < basis_mat.cols(); ++i) {
    Mor m{a, b, unvec(basis_mat.col_vec(i), mb.gens, ma.gens)};
#ifndef NDEBUG
    assert(matrix_well_defined(a, b, m.map));
#endif
    h.basis.push_back(std::move(m));
  }
  std::unique_lock lk(cache_mu_);
  return hom_cache_.emplace(std::make_pair(a.id, b.id), std::move(h)).first->second;
}

Mor FpCategory::hom_element(const HomGroup& h, const IntVec& coords) const {
  if (coords.size() != h.basis.size())
    throw AbelError(ErrKind::mismatch, "hom coordinates length mismatch");
  IntMatrix t(module(h.cod).gens, module(h.dom).gens);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) t = t + h.basis[i].map.scaled(coords[i]);
  return {h.dom, h.cod, std::move(t)};
}

IntVec FpCategory::hom_coords(const HomGroup& h, const Mor& f) const {
  if (!(f.dom == h.dom) || !(f.cod == h.cod))
    throw AbelError(ErrKind::mismatch, "morphism does not belong to this hom group");
  auto c = solve_in_colspan(*h.basis_snf, vec_of(f.map));
  if (!c)
    throw AbelError(ErrKind::internal_check, "well-defined morphism outside hom lattice");
  c->resize(h.basis.size());
  return canon_vec(h.group, *c);
}

}  // namespace abelcat
