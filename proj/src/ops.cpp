#include "abelcat/ops.hpp"

namespace abelcat {

bool is_zero_obj(Category& c, ObjHandle a) {
  return c.mor_equal(c.identity(a), c.zero_mor(a, a));
}

bool is_zero_mor(Category& c, const Mor& f) {
  return c.mor_equal(f, c.zero_mor(f.dom, f.cod));
}

bool is_monic(Category& c, const Mor& f) { return is_zero_obj(c, c.kernel(f).obj); }

bool is_epic(Category& c, const Mor& f) { return is_zero_obj(c, c.cokernel(f).obj); }

Mor add_mor(Category& c, const Mor& f, const Mor& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw AbelError(ErrKind::mismatch, "add_mor: parallel morphisms required");
  BiproductData bp = c.biproduct(f.dom, f.dom);
  Mor diag = c.tuple(bp, c.identity(f.dom), c.identity(f.dom));
  return c.compose(c.cotuple(bp, f, g), diag);
}

Mor add_mor_via_codiagonal(Category& c, const Mor& f, const Mor& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw AbelError(ErrKind::mismatch, "add_mor: parallel morphisms required");
  BiproductData bp = c.biproduct(f.cod, f.cod);
  Mor codiag = c.cotuple(bp, c.identity(f.cod), c.identity(f.cod));
  return c.compose(codiag, c.tuple(bp, f, g));
}

Mor neg_mor(Category& c, const Mor& f) {
  /* [[1,0],[f,1]] on dom(+)cod is invertible; its inverse carries -f in the
     same corner.  This is the additive-inverse construction and stays inside
     the contract. */
  BiproductData bp = c.biproduct(f.dom, f.cod);
  Mor col1 = c.tuple(bp, c.identity(f.dom), f);
  Mor col2 = c.tuple(bp, c.zero_mor(f.cod, f.dom), c.identity(f.cod));
  BiproductData same = bp;
  Mor block = c.cotuple(same, col1, col2);  // bp.obj -> bp.obj
  auto inv = c.factor_left(block, c.identity(bp.obj));
  if (!inv)
    throw AbelError(ErrKind::internal_check, "unipotent block map failed to invert");
  return c.compose(bp.p2, c.compose(*inv, bp.i1));
}

Mor sub_mor(Category& c, const Mor& f, const Mor& g) {
  return add_mor(c, f, neg_mor(c, g));
}

NarySum nary_biproduct(Category& c, const std::vector<ObjHandle>& xs) {
  if (xs.empty()) throw AbelError(ErrKind::mismatch, "empty biproduct");
  NarySum s;
  s.obj = xs[0];
  s.in = {c.identity(xs[0])};
  s.out = {c.identity(xs[0])};
  for (std::size_t k = 1; k < xs.size(); ++k) {
    BiproductData bp = c.biproduct(s.obj, xs[k]);
    for (std::size_t i = 0; i < s.in.size(); ++i) {
      s.in[i] = c.compose(bp.i1, s.in[i]);
      s.out[i] = c.compose(s.out[i], bp.p1);
    }
    s.in.push_back(bp.i2);
    s.out.push_back(bp.p2);
    s.obj = bp.obj;
  }
  return s;
}

Mor mor_from_blocks(Category& c, const std::vector<std::vector<Mor>>& blocks) {
  if (blocks.empty() || blocks[0].empty())
    throw AbelError(ErrKind::mismatch, "empty block matrix");
  const std::size_t r = blocks.size(), cc = blocks[0].size();
  std::vector<ObjHandle> doms, cods;
  for (std::size_t j = 0; j < cc; ++j) doms.push_back(blocks[0][j].dom);
  for (std::size_t i = 0; i < r; ++i) {
    if (blocks[i].size() != cc)
      throw AbelError(ErrKind::mismatch, "ragged block matrix");
    cods.push_back(blocks[i][0].cod);
    for (std::size_t j = 0; j < cc; ++j)
      if (!(blocks[i][j].dom == doms[j]) || !(blocks[i][j].cod == cods[i]))
        throw AbelError(ErrKind::mismatch, "block row/column endpoints disagree");
  }
  NarySum ds = nary_biproduct(c, doms);
  NarySum cs = nary_biproduct(c, cods);
  Mor acc = c.zero_mor(ds.obj, cs.obj);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cc; ++j)
      acc = add_mor(c, acc, c.compose(cs.in[i], c.compose(blocks[i][j], ds.out[j])));
  return acc;
}

Mor invert(Category& c, const Mor& f) {
  if (!is_monic(c, f) || !is_epic(c, f))
    throw AbelError(ErrKind::not_invertible, "invert: map is not monic and epic");
  auto y = c.factor_left(f, c.identity(f.cod));
  if (!y)
    throw AbelError(ErrKind::internal_check, "monic epic map admits no right inverse");
  if (!c.mor_equal(c.compose(*y, f), c.identity(f.dom)))
    throw AbelError(ErrKind::internal_check, "inverse is one-sided");
  return *y;
}

ImageData image(Category& c, const Mor& f) {
  KernelPair ck = c.cokernel(f);
  KernelPair k = c.kernel(ck.map);
  auto e = c.factor_left(k.map, f);
  if (!e)
    throw AbelError(ErrKind::internal_check, "map does not factor through its image");
  return {SubObject{k.map}, *e};
}

CoimageData coimage(Category& c, const Mor& f) {
  KernelPair k = c.kernel(f);
  KernelPair ck = c.cokernel(k.map);
  auto m = c.factor_right(ck.map, f);
  if (!m)
    throw AbelError(ErrKind::internal_check, "map does not factor through its coimage");
  return {QuotientObject{ck.map}, *m};
}

Mor factor_through_kernel(Category& c, const Mor& f, const KernelPair& k, const Mor& g) {
  if (!is_zero_mor(c, c.compose(f, g)))
    throw AbelError(ErrKind::invalid_input, "factor_through_kernel: f o g is nonzero");
  auto h = c.factor_left(k.map, g);
  if (!h)
    throw AbelError(ErrKind::internal_check, "kernel universal property failed");
  return *h;
}

Mor factor_through_cokernel(Category& c, const Mor& f, const KernelPair& ck, const Mor& g) {
  if (!is_zero_mor(c, c.compose(g, f)))
    throw AbelError(ErrKind::invalid_input, "factor_through_cokernel: g o f is nonzero");
  auto h = c.factor_right(ck.map, g);
  if (!h)
    throw AbelError(ErrKind::internal_check, "cokernel universal property failed");
  return *h;
}

std::optional<Mor> factor_through_mono(Category& c, const Mor& f, const SubObject& m) {
  if (!(f.cod == m.rep.cod))
    throw AbelError(ErrKind::mismatch, "factor_through_mono: ambient objects differ");
  if (!is_zero_mor(c, c.compose(c.cokernel(m.rep).map, f))) return std::nullopt;
  auto h = c.factor_left(m.rep, f);
  if (!h)
    throw AbelError(ErrKind::internal_check, "containment criterion disagrees with solve");
  return h;
}

std::optional<Mor> factor_through_epi(Category& c, const Mor& f, const QuotientObject& q) {
  if (!(f.dom == q.rep.dom))
    throw AbelError(ErrKind::mismatch, "factor_through_epi: ambient objects differ");
  if (!is_zero_mor(c, c.compose(f, c.kernel(q.rep).map))) return std::nullopt;
  auto h = c.factor_right(q.rep, f);
  if (!h)
    throw AbelError(ErrKind::internal_check, "containment criterion disagrees with solve");
  return h;
}

bool sub_contains(Category& c, const SubObject& outer, const SubObject& inner) {
  return factor_through_mono(c, inner.rep, outer).has_value();
}

bool sub_equal(Category& c, const SubObject& a, const SubObject& b) {
  return sub_contains(c, a, b) && sub_contains(c, b, a);
}

bool quot_equal(Category& c, const QuotientObject& a, const QuotientObject& b) {
  return factor_through_epi(c, a.rep, b).has_value() &&
         factor_through_epi(c, b.rep, a).has_value();
}

SubObject sub_intersect(Category& c, const SubObject& a, const SubObject& b) {
  if (!(a.rep.cod == b.rep.cod))
    throw AbelError(ErrKind::mismatch, "sub_intersect: ambient objects differ");
  KernelPair ck = c.cokernel(a.rep);
  KernelPair k = c.kernel(c.compose(ck.map, b.rep));
  return SubObject{c.compose(b.rep, k.map)};
}

SubObject sub_union(Category& c, const SubObject& a, const SubObject& b) {
  if (!(a.rep.cod == b.rep.cod))
    throw AbelError(ErrKind::mismatch, "sub_union: ambient objects differ");
  BiproductData bp = c.biproduct(a.rep.dom, b.rep.dom);
  return image(c, c.cotuple(bp, a.rep, b.rep)).sub;
}

SubObject zero_sub(Category& c, ObjHandle ambient) {
  return SubObject{c.zero_mor(c.zero_like(ambient), ambient)};
}

SubObject full_sub(Category& c, ObjHandle ambient) {
  return SubObject{c.identity(ambient)};
}

PullbackData pullback(Category& c, const Mor& f, const Mor& g) {
  if (!(f.cod == g.cod))
    throw AbelError(ErrKind::mismatch, "pullback: codomains differ");
  BiproductData bp = c.biproduct(f.dom, g.dom);
  Mor w = c.cotuple(bp, f, neg_mor(c, g));
  KernelPair k = c.kernel(w);
  return {k.obj, c.compose(bp.p1, k.map), c.compose(bp.p2, k.map)};
}

PushoutData pushout(Category& c, const Mor& f, const Mor& g) {
  if (!(f.dom == g.dom))
    throw AbelError(ErrKind::mismatch, "pushout: domains differ");
  BiproductData bp = c.biproduct(f.cod, g.cod);
  Mor w = c.tuple(bp, f, neg_mor(c, g));
  KernelPair ck = c.cokernel(w);
  return {ck.obj, c.compose(ck.map, bp.i1), c.compose(ck.map, bp.i2)};
}

bool is_exact_at(Category& c, const Mor& f, const Mor& g) {
  if (!(f.cod == g.dom))
    throw AbelError(ErrKind::mismatch, "is_exact_at: maps are not composable");
  return sub_equal(c, image(c, f).sub, SubObject{c.kernel(g).map});
}

bool is_exact_seq(Category& c, const SequenceSpec& s) {
  for (std::size_t i = 0; i + 1 < s.arrows.size(); ++i)
    if (!is_exact_at(c, s.arrows[i], s.arrows[i + 1])) return false;
  if (s.left_zero && !s.arrows.empty() && !is_monic(c, s.arrows.front())) return false;
  if (s.right_zero && !s.arrows.empty() && !is_epic(c, s.arrows.back())) return false;
  return true;
}

}  // namespace abelcat
