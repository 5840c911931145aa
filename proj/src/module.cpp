#include "abelcat/module.hpp"

#include <sstream>

namespace abelcat {

FpModule::FpModule(RingSpec r, std::size_t g, IntMatrix rel)
    : ring(std::move(r)), gens(g), relations(std::move(rel)) {
  if (relations.rows() != gens)
    throw std::invalid_argument("relation rows must equal generator count");
}

IntMatrix FpModule::relations_full() const {
  if (!ring.is_zmod()) return relations;
  return hstack(relations, IntMatrix::identity(gens).scaled(ring.modulus));
}

FpModule FpModule::cyclic(RingSpec r, const Int& d) {
  if (d == 0) return free_module(std::move(r), 1);
  IntMatrix rel(1, 1);
  rel.at(0, 0) = d;
  return FpModule(std::move(r), 1, std::move(rel));
}

std::string FpModule::key() const {
  std::ostringstream os;
  os << (ring.is_zmod() ? "m" : "z") << ring.modulus << "|" << gens << "|"
     << relations.cols() << "|" << relations.to_string();
  return os.str();
}

}  // namespace abelcat
