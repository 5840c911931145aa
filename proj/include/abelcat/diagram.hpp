#pragma once

#include <map>
#include <string>
#include <vector>

#include "abelcat/ops.hpp"

namespace abelcat {

/* Named finite diagram.  A path is a list of arrow names in application
   order: {"f", "g"} means g after f. */
struct Diagram {
  enum class CommuteMode { all_paths, asserted_pairs };

  struct Arrow {
    std::string dom, cod;  // object names
    Mor mor;
  };
  struct PathPair {
    std::vector<std::string> lhs, rhs;
  };
  struct ExactClaim {
    std::vector<std::string> arrows;
    bool left_zero = false, right_zero = false;
  };

  std::map<std::string, ObjHandle> objects;
  std::map<std::string, Arrow> arrows;
  CommuteMode mode = CommuteMode::all_paths;
  std::vector<PathPair> path_pairs;
  std::vector<ExactClaim> exact_claims;
};

Mor compose_path(Category& c, const Diagram& d, const std::vector<std::string>& path);

struct CommuteReport {
  bool ok = true;
  struct Failure {
    std::vector<std::string> lhs, rhs;
  };
  std::vector<Failure> failures;
};

/* all_paths: every pair of parallel directed paths must agree (the arrow
   graph must be acyclic); asserted_pairs: only the listed pairs are checked. */
CommuteReport check_commutes(Category& c, const Diagram& d);

struct ExactClaimReport {
  bool ok = true;
  std::vector<std::size_t> failed;  // indices into exact_claims
};
ExactClaimReport check_exact_claims(Category& c, const Diagram& d);

/* The three equivalent descriptions of exactness at the joint of a
   composable pair f: A -> B, g: B -> C:
     (1) image f = kernel g as subobjects of B,
     (2) cokernel f = coimage g as quotient objects of B,
     (3) g o f = 0 and cokernel(f) o kernel(g) = 0.
   Each is computed independently; the equivalence itself is what the
   randomized suites exercise. */
struct PairConditions {
  bool image_eq_kernel = false;
  bool cokernel_eq_coimage = false;
  bool composites_zero = false;
  bool agree() const {
    return image_eq_kernel == cokernel_eq_coimage &&
           cokernel_eq_coimage == composites_zero;
  }
};
PairConditions exactness_conditions(Category& c, const Mor& f, const Mor& g);

/* 3x3 grid with rows and columns read left-to-right / top-to-bottom. */
struct Grid3x3 {
  ObjHandle obj[3][3];
  Mor row[3][2];  // row[i][j] : obj[i][j] -> obj[i][j+1]
  Mor col[2][3];  // col[i][j] : obj[i][j] -> obj[i+1][j]
};

enum class NineDirection { top_from_bottom, bottom_from_top };

struct NineReport {
  bool squares_commute = false;
  bool columns_exact = false;     // all three columns short exact
  bool middle_row_exact = false;  // with outer zeros
  bool assumed_row_exact = false; // bottom or top row per direction
  bool concluded_row_exact = false;
  bool hypothesis_ok() const {
    return squares_commute && columns_exact && middle_row_exact && assumed_row_exact;
  }
  bool ok() const { return hypothesis_ok() && concluded_row_exact; }
};

NineReport nine_lemma(Category& c, const Grid3x3& g, NineDirection dir);

}  // namespace abelcat
