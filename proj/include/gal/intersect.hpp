#ifndef GAL_INTERSECT_HPP
#define GAL_INTERSECT_HPP

#include <optional>
#include <string>
#include <utility>

#include "gal/families.hpp"
#include "gal/zfactor.hpp"

namespace gal {

enum class GroupLabel { S3, C3, D5, C5, D4, C4, V4, C2, C1, Other };

const char* group_name(GroupLabel g);
int group_order(GroupLabel g);

enum class Relation {
  Equal,
  AContainsB,
  BContainsA,
  QuadraticMeet,
  TrivialMeet,
  NotComparableTrivialMeet,
  Degenerate,
};

const char* relation_name(Relation r);
// wording used by the text reports, e.g. "L_a = L_b", "[L_a ∩ L_b : M] = 2"
const char* relation_phrase(Relation r);

struct IntersectionReport {
  FamilyId family;
  ParamPoint a, b;
  GroupLabel group_a = GroupLabel::Other;
  GroupLabel group_b = GroupLabel::Other;
  Relation relation = Relation::Degenerate;
  DecompType dt1;
  std::optional<DecompType> dt2;
  Certification certification = Certification::Exact;
  std::optional<Witness> witness;
  std::string group_ab;  // joint-group column of the matched row
  std::string note;
};

struct ClassifyOptions {
  const RhoCache* rho = nullptr;
  int digits = 128;
};

// Exact Galois-group determination per family (separable specializations).
// Throws UnexpectedPattern when the factorization shape matches no subgroup
// orbit structure of the family's group.
GroupLabel galois_group(FamilyId fam, const ParamPoint& a);

// Decomposition types of the family's resolvent(s), with the admissible rows
// for the detected group pair as inference context. Swaps arguments
// internally so the larger group comes first.
std::pair<DecompType, std::optional<DecompType>> resolvent_dt(FamilyId fam, const ParamPoint& a,
                                                              const ParamPoint& b,
                                                              const ClassifyOptions& opts = {});

// Full table classification. Throws NoTableRow (with evidence in the message)
// when nothing matches and AmbiguousDT when repeated-factor inference cannot
// be pinned down.
IntersectionReport classify_intersection(FamilyId fam, const ParamPoint& a, const ParamPoint& b,
                                         const ClassifyOptions& opts = {});

struct IsomResult {
  bool isomorphic = false;
  std::optional<Witness> witness;
  std::optional<IntersectionReport> report;
};

// Splitting-field equality (quartic family: field equality per its witness
// criterion), with the witness or the report as evidence.
IsomResult isomorphic(FamilyId fam, const ParamPoint& a, const ParamPoint& b,
                      const ClassifyOptions& opts = {});

// signed squarefree kernel: r = kernel * (rational square)
Int squarefree_kernel(const Rat& r);

}  // namespace gal

#endif
