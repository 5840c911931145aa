#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "abelcat/category.hpp"
#include "abelcat/snf.hpp"

namespace abelcat {

struct HomGroup {
  ObjHandle dom, cod;
  ObjHandle group;        // Hom(dom, cod) as an fp abelian group (ring Z)
  std::vector<Mor> basis; // generator i of `group` corresponds to basis[i]
  IntMatrix basis_mat;    // columns vec(basis[i].map)
  std::shared_ptr<const SnfResult> basis_snf;
};

struct InvariantFactors {
  std::size_t free_rank = 0;
  std::vector<Int> factors;  // each > 1, divisibility chain
};

/* Solution x with m x = v over the ring (for Z/n the congruence is mod n). */
std::optional<IntVec> lattice_contains(const IntMatrix& m, const IntVec& v,
                                       const RingSpec& ring);

/* Backend over finitely presented modules.  Objects are interned by
   presentation, so handle equality means "the same interned presentation";
   the SNF of the full relation matrix is cached per object and drives
   membership tests, canonical forms and enumeration.  Construction methods
   may intern new objects; everything is guarded for shared use. */
class FpCategory final : public Category {
 public:
  static constexpr std::uint64_t kElementCap = 4096;

  ObjHandle intern(const FpModule& m);
  const FpModule& module(ObjHandle a) const;
  RingSpec ring_of(ObjHandle a) const;

  ObjHandle zero_like(ObjHandle a) override;
  Mor identity(ObjHandle a) const override;
  Mor zero_mor(ObjHandle a, ObjHandle b) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  bool mor_equal(const Mor& f, const Mor& g) const override;

  BiproductData biproduct(ObjHandle a, ObjHandle b) override;
  Mor tuple(const BiproductData& bp, const Mor& f, const Mor& g) const override;
  Mor cotuple(const BiproductData& bp, const Mor& f, const Mor& g) const override;

  KernelPair kernel(const Mor& f) override;
  KernelPair cokernel(const Mor& f) override;

  std::optional<Mor> factor_left(const Mor& m, const Mor& g) override;
  std::optional<Mor> factor_right(const Mor& e, const Mor& g) override;

  /* Validates shape and well-definedness; throws AbelError with the index of
     the violating relation column. */
  Mor make_morphism(ObjHandle a, ObjHandle b, IntMatrix t) const;
  bool matrix_well_defined(ObjHandle a, ObjHandle b, const IntMatrix& t,
                           std::size_t* bad_col = nullptr) const;

  InvariantFactors invariant_factors(ObjHandle a) const;
  /* Element count; absent when infinite. */
  std::optional<Int> cardinality(ObjHandle a) const;

  /* Canonical coset representatives of all elements, in a fixed order.
     Throws enumeration_refused for infinite modules, cap_exceeded past cap. */
  const std::vector<IntVec>& elements(ObjHandle a, std::uint64_t cap = kElementCap);

  /* Canonical representative of v's coset modulo the relation lattice;
     equal elements map to equal vectors. */
  IntVec canon_vec(ObjHandle a, const IntVec& v) const;
  bool is_zero_vec(ObjHandle a, const IntVec& v) const;
  /* Columnwise canonical form of the matrix of f in cod(f); mor_equal maps
     are byte-identical after this. */
  IntMatrix canon_map(const Mor& f) const;

  HomGroup hom_group(ObjHandle a, ObjHandle b);
  /* Morphism <-> coordinate dictionary for a hom group. */
  Mor hom_element(const HomGroup& h, const IntVec& coords) const;
  IntVec hom_coords(const HomGroup& h, const Mor& f) const;

  const SnfResult& relations_snf(ObjHandle a) const;

 private:
  struct Rec {
    FpModule mod;
    SnfResult snf_full;  // SNF of relations_full()
    InvariantFactors invf;
    std::optional<Int> card;
  };

  const Rec& rec(ObjHandle a) const;

  mutable std::shared_mutex obj_mu_;
  std::deque<Rec> recs_;
  std::unordered_map<std::string, std::uint32_t> by_key_;

  mutable std::shared_mutex cache_mu_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, HomGroup> hom_cache_;
  std::map<std::uint32_t, std::vector<IntVec>> elem_cache_;
};

}  // namespace abelcat
