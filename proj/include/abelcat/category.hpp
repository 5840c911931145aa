#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "abelcat/module.hpp"

namespace abelcat {

enum class ErrKind {
  mismatch,            // objects or shapes do not line up
  well_definedness,    // a matrix fails to preserve relations
  not_invertible,      // invert() on a map that is not monic + epic
  enumeration_refused, // element listing of an infinite module
  cap_exceeded,        // an enumeration bound was hit
  unsupported_generator,
  lift_failed,
  invalid_input,
  internal_check,      // a verified construction failed its own check
  parse,
};

class AbelError : public std::runtime_error {
 public:
  AbelError(ErrKind k, const std::string& what, long detail = -1)
      : std::runtime_error(what), kind(k), detail_index(detail) {}
  ErrKind kind;
  long detail_index;  // e.g. the violating relation column; -1 when unused
};

struct ObjHandle {
  std::uint32_t id = 0;
  bool operator==(const ObjHandle&) const = default;
  auto operator<=>(const ObjHandle&) const = default;
};

/* Morphism A -> B: `map` has gens(B) rows and gens(A) columns; column j is
   the image of A's j-th generator in B's generator coordinates. */
struct Mor {
  ObjHandle dom, cod;
  IntMatrix map;
};

struct BiproductData {
  ObjHandle obj;
  Mor i1, i2;  // injections
  Mor p1, p2;  // projections
};

struct KernelPair {
  ObjHandle obj;
  Mor map;  // kernel: obj -> dom(f) monic; cokernel: cod(f) -> obj epic
};

struct SubObject {
  Mor rep;  // a monic into the ambient object
};

struct QuotientObject {
  Mor rep;  // an epic out of the ambient object
};

struct SequenceSpec {
  std::vector<Mor> arrows;  // composable left to right
  bool left_zero = false;   // a zero object precedes the first arrow
  bool right_zero = false;  // a zero object follows the last arrow
};

/* Operational form of the abelian-category axioms.  A backend supplies zero
   structure, biproducts with their universal (co)pairings, kernels and
   cokernels, and factorization through a monic or an epic; every other
   construction in ops.hpp is derived from these alone. */
class Category {
 public:
  virtual ~Category() = default;

  virtual ObjHandle zero_like(ObjHandle a) = 0;
  virtual Mor identity(ObjHandle a) const = 0;
  virtual Mor zero_mor(ObjHandle a, ObjHandle b) const = 0;
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;  // g after f
  virtual bool mor_equal(const Mor& f, const Mor& g) const = 0;

  virtual BiproductData biproduct(ObjHandle a, ObjHandle b) = 0;
  virtual Mor tuple(const BiproductData& bp, const Mor& f, const Mor& g) const = 0;
  virtual Mor cotuple(const BiproductData& bp, const Mor& f, const Mor& g) const = 0;

  virtual KernelPair kernel(const Mor& f) = 0;
  virtual KernelPair cokernel(const Mor& f) = 0;

  /* h with m o h = g (resp. h o e = g) when one exists; for monic m (resp.
     epic e) the factorization is unique up to mor_equal. */
  virtual std::optional<Mor> factor_left(const Mor& m, const Mor& g) = 0;
  virtual std::optional<Mor> factor_right(const Mor& e, const Mor& g) = 0;
};

}  // namespace abelcat
