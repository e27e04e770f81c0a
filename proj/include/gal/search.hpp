#ifndef GAL_SEARCH_HPP
#define GAL_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gal/intersect.hpp"

namespace gal {

// Grid search for splitting-field equality hits. Stage 1 rejects pairs by
// residue arithmetic straight from the parameter residues (square-class
// characters of the quadratic invariant, then root scans of the resolvent
// mod each filter prime); stage 2 confirms the square class exactly; stage 3
// runs the full classification on the survivors.
struct SearchSpec {
  FamilyId family = FamilyId::D5;
  std::optional<ParamPoint> target;

  struct Axis {
    long lo = 0, hi = 0;
    std::optional<Rat> fixed;
  };
  std::vector<Axis> axes;  // one per family parameter

  std::vector<uint32_t> primes = {101, 103, 107};  // empty disables stage 1
  enum class Certify { Exact, Numeric, Both };
  Certify certify = Certify::Both;
  int threads = 1;
  bool pairwise = false;
  int digits = 128;
  const RhoCache* rho = nullptr;
};

struct SearchHit {
  ParamPoint a, b;
  int kind = 1;  // resolvent whose decomposition type contains 1
  IntersectionReport report;
};

struct SearchStats {
  uint64_t pairs = 0;
  uint64_t char_rejected = 0;    // stage 1: square-class character
  uint64_t square_rejected = 0;  // stage 2: exact square test
  uint64_t root_rejected = 0;    // stage 1: no resolvent root mod p
  uint64_t classified = 0;
};

struct SearchResult {
  std::vector<SearchHit> hits;        // sorted by (a, b, kind)
  std::vector<std::string> errors;    // per-pair sidecar, never fatal
  SearchStats stats;
};

SearchResult search_grid(const SearchSpec& spec);

}  // namespace gal

#endif
