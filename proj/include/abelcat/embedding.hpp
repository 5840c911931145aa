#pragma once

#include <functional>
#include <map>

#include "abelcat/fp_category.hpp"

namespace abelcat {

/* End(P) as a finite lookup structure.  The product is composition written
   in application order: elems[mul[i][j]] acts like "first elems[i], then
   elems[j]", which is what makes right composition below a left action. */
struct EndRing {
  ObjHandle p;
  std::vector<Mor> elems;                      // every endomorphism, fixed order
  std::map<std::string, std::uint32_t> index;  // canonical matrix key -> position
  std::vector<std::vector<std::uint32_t>> mul;
  std::vector<std::vector<std::uint32_t>> add;
  std::vector<std::uint32_t> neg;
  std::uint32_t zero = 0, one = 0;
};

bool ring_tables_ok(const EndRing& r);

/* Hom(P, A) as a Z-module together with the action of End(P) by right
   composition; action[i] is the matrix of x -> x o elems[i] on hom
   coordinates. */
struct HomModule {
  ObjHandle src;
  HomGroup hom;
  std::vector<IntMatrix> action;
};

/* Hom(P, -) out of a finite full subcategory into End(P)-modules.  P is a
   power of the free rank-1 module, large enough that every declared object
   receives a generator-wise epic from it. */
struct Mitchell {
  FpCategory* cat = nullptr;
  std::vector<ObjHandle> universe;
  ObjHandle p;
  std::size_t copies = 0;
  EndRing ring;
  std::map<std::uint32_t, Mor> onto;         // e_A : P -> A per declared object
  std::map<std::uint32_t, HomModule> cache;  // built on demand, any object
};

/* Requires a Z/n coefficient ring (the endomorphism ring must be finite to
   be tabulated); throws unsupported_generator otherwise.  The ring tables
   and all module action laws are verified during construction. */
Mitchell make_embedding(FpCategory& c, const std::vector<ObjHandle>& universe);

const HomModule& f_object(Mitchell& d, ObjHandle a);
/* Matrix of Hom(P, f) on hom coordinates. */
IntMatrix f_map(Mitchell& d, const Mor& f);

/* r with e o r = g for epic e; exists whenever dom(g) is projective, and
   throws lift_failed if the solve comes back empty. */
Mor lift_through_epic(FpCategory& c, const Mor& e, const Mor& g);

/* Does phi : F(a) -> F(b) commute with every ring action? */
bool action_linear(Mitchell& d, ObjHandle a, ObjHandle b, const IntMatrix& phi);

/* The preimage y : a -> b with F(y) = phi, for an action-linear phi between
   declared objects.  Non-linear or ill-formed input is invalid_input; a
   linear map that fails to produce a verified witness would disprove
   fullness and raises internal_check. */
Mor full_witness(Mitchell& d, ObjHandle a, ObjHandle b, const IntMatrix& phi);

/* Visit the matrix of every additive map group(ga) -> group(gb) exactly
   once.  Throws enumeration_refused for infinite hom groups, cap_exceeded
   when there are more than cap maps. */
void for_each_additive_map(FpCategory& c, ObjHandle ga, ObjHandle gb, std::uint64_t cap,
                           const std::function<void(const IntMatrix&)>& fn);

struct EmbedReport {
  bool ring_ok = false;      // table laws and the matrix-ring count
  bool action_ok = false;    // module laws for the declared objects
  bool functor_ok = false;   // identities and composites are preserved
  bool exact_ok = false;     // image of a short exact sequence stays exact
  bool faithful_ok = false;  // distinct morphisms have distinct images
  bool count_ok = false;     // action-linear map count matches |Hom(a, b)|
  bool full_ok = false;      // every action-linear map has a verified preimage
  bool reflect_ok = false;   // a non-exact complex stays non-exact
  std::size_t ses_checked = 0;
  std::size_t pairs_checked = 0;
  std::size_t witnesses = 0;
  bool ok() const {
    return ring_ok && action_ok && functor_ok && exact_ok && faithful_ok &&
           count_ok && full_ok && reflect_ok;
  }
};

EmbedReport check_embedding(FpCategory& c, const std::vector<ObjHandle>& universe,
                            std::uint64_t seed, std::size_t ses_count,
                            std::uint64_t linear_cap = std::uint64_t(1) << 21);

}  // namespace abelcat
