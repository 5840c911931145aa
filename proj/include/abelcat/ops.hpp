#pragma once

#include "abelcat/category.hpp"

namespace abelcat {

/* Constructions derived from the Category contract alone.  Nothing in this
   header inspects matrix payloads; everything goes through composition,
   biproducts, kernels, cokernels and the two factorization primitives. */

bool is_zero_obj(Category& c, ObjHandle a);
bool is_zero_mor(Category& c, const Mor& f);
bool is_monic(Category& c, const Mor& f);
bool is_epic(Category& c, const Mor& f);

/* f + g via the diagonal followed by the codiagonal of a biproduct; the two
   classical routes agree and tests hold both against each other. */
Mor add_mor(Category& c, const Mor& f, const Mor& g);
Mor add_mor_via_codiagonal(Category& c, const Mor& f, const Mor& g);
/* -f read off from the inverse of the block map [[1,0],[f,1]]. */
Mor neg_mor(Category& c, const Mor& f);
Mor sub_mor(Category& c, const Mor& f, const Mor& g);

/* Iterated biproduct with all injections and projections. */
struct NarySum {
  ObjHandle obj;
  std::vector<Mor> in;   // in[i]  : X_i -> obj
  std::vector<Mor> out;  // out[i] : obj -> X_i
};
NarySum nary_biproduct(Category& c, const std::vector<ObjHandle>& xs);

/* Morphism between biproducts with the given blocks; blocks[i][j] maps the
   j-th summand of the domain to the i-th summand of the codomain. */
Mor mor_from_blocks(Category& c, const std::vector<std::vector<Mor>>& blocks);

/* Two-sided inverse of a monic epic map. */
Mor invert(Category& c, const Mor& f);

/* Image as a subobject of cod(f) together with the epic part, and dually. */
struct ImageData {
  SubObject sub;  // monic: im -> cod(f)
  Mor epi_part;   // dom(f) -> im, with rep o epi_part = f
};
struct CoimageData {
  QuotientObject quot;  // epic: dom(f) -> coim
  Mor mono_part;        // coim -> cod(f), with mono_part o rep = f
};
ImageData image(Category& c, const Mor& f);
CoimageData coimage(Category& c, const Mor& f);

/* Universal-property factorizations, with their hypotheses checked. */
Mor factor_through_kernel(Category& c, const Mor& f, const KernelPair& k, const Mor& g);
Mor factor_through_cokernel(Category& c, const Mor& f, const KernelPair& ck, const Mor& g);

/* h with m.rep o h = f, present exactly when cokernel(m.rep) o f = 0. */
std::optional<Mor> factor_through_mono(Category& c, const Mor& f, const SubObject& m);
std::optional<Mor> factor_through_epi(Category& c, const Mor& f, const QuotientObject& q);

bool sub_contains(Category& c, const SubObject& outer, const SubObject& inner);
bool sub_equal(Category& c, const SubObject& a, const SubObject& b);
bool quot_equal(Category& c, const QuotientObject& a, const QuotientObject& b);

SubObject sub_intersect(Category& c, const SubObject& a, const SubObject& b);
SubObject sub_union(Category& c, const SubObject& a, const SubObject& b);
SubObject zero_sub(Category& c, ObjHandle ambient);
SubObject full_sub(Category& c, ObjHandle ambient);

struct PullbackData {
  ObjHandle obj;
  Mor q1, q2;  // obj -> dom(f), obj -> dom(g), with f o q1 = g o q2
};
struct PushoutData {
  ObjHandle obj;
  Mor j1, j2;  // cod(f) -> obj, cod(g) -> obj, with j1 o f = j2 o g
};
PullbackData pullback(Category& c, const Mor& f, const Mor& g);
PushoutData pushout(Category& c, const Mor& f, const Mor& g);

/* Exactness at the joint of a composable pair: image(f) = kernel(g). */
bool is_exact_at(Category& c, const Mor& f, const Mor& g);
bool is_exact_seq(Category& c, const SequenceSpec& s);

}  // namespace abelcat
