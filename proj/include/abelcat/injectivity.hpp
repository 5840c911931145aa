#pragma once

#include <optional>

#include "abelcat/fp_category.hpp"

namespace abelcat {

/* The ideal (d) of Z/n, presented abstractly as Z/(n/d) and included into
   the free rank-1 module by multiplication by d. */
struct ZnIdeal {
  Int d;
  ObjHandle obj;  // Z/(n/d) over Z/n
  Mor inc;        // monic obj -> Z/n, generator |-> d
};

/* One ideal per divisor of n, ascending; n < 2 is invalid_input. */
std::vector<ZnIdeal> zn_ideals(FpCategory& c, const Int& n);

struct BaerWitness {
  Int ideal;      // divisor d whose ideal hom fails to extend
  IntVec element;  // a in A with (n/d) a = 0 but a outside d*A
};

struct ExtensionWitness {
  Mor mono;  // m : X -> Y from the universe
  Mor hom;   // h : X -> A admitting no g : Y -> A with g o m = h
};

struct InjectivityVerdict {
  ObjHandle object;
  bool baer = false;
  std::optional<bool> brute;  // only set when the brute oracle was run
  std::optional<BaerWitness> baer_witness;
  std::optional<ExtensionWitness> extension_witness;
};

/* Baer's criterion over Z/n reduced to arithmetic: injective iff for every
   divisor d of n, each element annihilated by n/d lies in d*A.  Requires a
   Z/n coefficient ring. */
InjectivityVerdict baer_injective(FpCategory& c, ObjHandle a);

/* Exhaustive extension property against the given monos: for every m and
   every hom out of dom(m) into a, some hom out of cod(m) restricts to it.
   Vacuously true on an empty universe.  Oracle: enumerates hom groups and
   compares canonical restriction images, no lattice solving involved. */
bool brute_injective(FpCategory& c, ObjHandle a, const std::vector<Mor>& monos,
                     ExtensionWitness* witness = nullptr);

/* Runs both checks and records them on one verdict; a disagreement between
   the criterion and the oracle raises internal_check. */
InjectivityVerdict injectivity_verdict(FpCategory& c, ObjHandle a,
                                       const std::vector<Mor>& monos);

/* Every mono X -> Y where X and Y range over the interned modules with at
   most max_factors invariant factors and cardinality at most max_card over
   Z/n (one module per invariant-factor chain, plus the zero module). */
std::vector<Mor> mono_universe(FpCategory& c, const RingSpec& ring,
                               std::size_t max_factors, const Int& max_card);

/* Essential extension test for a monic between finite modules: every
   nonzero element of cod(m) has a scalar multiple that is nonzero and lies
   in the image.  (Every nonzero submodule contains a nonzero cyclic one, so
   cyclic submodules decide the question.) */
bool is_essential(FpCategory& c, const Mor& m);

/* A retraction y with y o m = identity when one exists among the finitely
   many homs cod(m) -> dom(m), absent otherwise. */
std::optional<Mor> split_check(FpCategory& c, const Mor& m);

struct Envelope {
  ObjHandle obj;
  Mor inc;  // monic a -> obj
};

/* Candidate-plus-verification: each invariant factor Z/d of a is widened to
   the product over primes p dividing d of Z/p^(v_p(n)); the result is then
   checked to be Baer-injective and an essential extension, and a failure of
   either check raises internal_check rather than being masked. */
Envelope injective_envelope(FpCategory& c, ObjHandle a);

/* True when no proper submodule of cod(inc) that contains the image of inc
   is Baer-injective; exhaustive over all submodules. */
bool envelope_minimal(FpCategory& c, const Mor& inc);

}  // namespace abelcat
