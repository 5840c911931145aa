#pragma once

#include <cstdint>

#include "abelcat/diagram.hpp"
#include "abelcat/fp_category.hpp"

namespace abelcat {

/* SplitMix64.  Self-contained so that seeded runs are reproducible across
   compilers and platforms, which golden-file tests rely on. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    s_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t s_;
};

struct GenBounds {
  std::size_t max_gens = 4;
  std::size_t max_rels = 4;
  long long max_entry = 9;
};

/* The sampled ring wheel used by the randomized suites. */
RingSpec ring_from_index(std::size_t i);
constexpr std::size_t kRingCount = 8;  // Z, Z/2, Z/3, Z/4, Z/6, Z/8, Z/9, Z/12

FpModule gen_module(Rng& r, const RingSpec& ring, const GenBounds& b);
ObjHandle gen_object(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b);

/* Uniform-ish well-defined morphism: a small integer combination of a hom
   group basis.  Always valid, covers every hom class. */
Mor gen_hom(FpCategory& c, Rng& r, ObjHandle a, ObjHandle b);
Mor gen_morphism(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b);
Mor gen_mono(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b);
Mor gen_epic(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b);

struct SesData {
  Mor inc;   // kernel monic
  Mor proj;  // cokernel-of-kernel epic
};
SesData gen_ses(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b);

/* Grid built from a random chain of nested images A1 <= A2 <= B. */
Grid3x3 gen_grid(FpCategory& c, Rng& r, const RingSpec& ring, const GenBounds& b);

}  // namespace abelcat
