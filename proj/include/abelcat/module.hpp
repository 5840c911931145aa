#pragma once

#include <stdexcept>
#include <string>

#include "abelcat/matrix.hpp"

namespace abelcat {

struct RingSpec {
  enum class Kind { integers, zmod };
  Kind kind = Kind::integers;
  Int modulus = 0;  // >= 2 when kind == zmod

  static RingSpec z() { return {Kind::integers, 0}; }
  static RingSpec zn(Int n) {
    if (n < 2) throw std::invalid_argument("zmod modulus must be >= 2");
    return {Kind::zmod, std::move(n)};
  }
  bool is_zmod() const { return kind == Kind::zmod; }
  bool operator==(const RingSpec&) const = default;
  std::string to_string() const {
    return is_zmod() ? "Z/" + modulus.str() : "Z";
  }
};

/* Finitely presented module: gens generators, one relation per column of
   `relations`.  Over Z/n the columns n*e_i are implicit; relations_full()
   adjoins them so that all lattice work happens over Z with one engine. */
struct FpModule {
  RingSpec ring;
  std::size_t gens = 0;
  IntMatrix relations;  // gens rows

  FpModule() = default;
  FpModule(RingSpec r, std::size_t g, IntMatrix rel);

  IntMatrix relations_full() const;

  static FpModule zero(RingSpec r) { return FpModule(std::move(r), 0, IntMatrix(0, 0)); }
  static FpModule free_module(RingSpec r, std::size_t k) {
    return FpModule(std::move(r), k, IntMatrix(k, 0));
  }
  /* Z/d as a module over the given ring (d must divide the modulus for zmod
     rings to present what the name says, but any d >= 0 is accepted as a
     presentation; d == 0 over Z is just Z). */
  static FpModule cyclic(RingSpec r, const Int& d);

  bool operator==(const FpModule&) const = default;
  std::string key() const;  // presentation fingerprint used for interning
};

}  // namespace abelcat
