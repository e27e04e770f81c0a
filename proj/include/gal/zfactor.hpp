#ifndef GAL_ZFACTOR_HPP
#define GAL_ZFACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gal/qpoly.hpp"

namespace gal {

// Complete factorization over Q: unit * prod factors[i].first^{.second}
// reassembles the input; factors monic irreducible, ordered by degree then
// coefficient sequence.
struct Factorization {
  Rat unit;
  std::vector<std::pair<QPoly, int>> factors;

  QPoly reassemble() const;
  bool is_squarefree() const;
  bool irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
  // Degrees of irreducible factors with multiplicity, descending.
  std::vector<int> degree_pattern() const;
};

struct FactorOptions {
  int degree_cap = 16;
  bool use_cache = true;
  uint64_t seed = 0;  // mixed into the equal-degree-splitting PRNG seed
};

// Zassenhaus factorization: reduction mod suitable primes, quadratic Hensel
// lifting above the coefficient bound, subset recombination with degree
// filtering from auxiliary primes. Deterministic for a fixed seed.
Factorization factor_over_Q(const QPoly& p, const FactorOptions& opts = {});

// The partition of deg(source) induced by irreducible-factor blocks.
// For a squarefree source this is just the factor degrees. Otherwise the
// partition is inferred from the power structure (each block a power of a
// single irreducible), constrained by admissible rows when given.
struct DecompType {
  std::vector<int> partition;                        // descending
  bool squarefree = true;
  std::vector<std::pair<int, int>> power_profile;    // (degree, multiplicity) observed
};

// All block partitions consistent with the observed power structure,
// each sorted descending; the list itself is sorted and deduplicated.
// Throws AmbiguousDT if more than max_cands assignments would be explored.
std::vector<std::vector<int>> dt_candidates(const Factorization& f, size_t max_cands = 10000);

// context = admissible partitions (any order); errors per contract:
// AmbiguousDT when several candidates remain, NoConsistentDT when none.
DecompType decomposition_type(const QPoly& p,
                              const std::vector<std::vector<int>>* context = nullptr,
                              const FactorOptions& opts = {});

}  // namespace gal

#endif
