#include "gal/intersect.hpp"

#include <algorithm>

#include "gal/error.hpp"

namespace gal {

const char* group_name(GroupLabel g) {
  switch (g) {
    case GroupLabel::S3: return "S3";
    case GroupLabel::C3: return "C3";
    case GroupLabel::D5: return "D5";
    case GroupLabel::C5: return "C5";
    case GroupLabel::D4: return "D4";
    case GroupLabel::C4: return "C4";
    case GroupLabel::V4: return "V4";
    case GroupLabel::C2: return "C2";
    case GroupLabel::C1: return "1";
    case GroupLabel::Other: return "?";
  }
  return "?";
}

int group_order(GroupLabel g) {
  switch (g) {
    case GroupLabel::S3: return 6;
    case GroupLabel::C3: return 3;
    case GroupLabel::D5: return 10;
    case GroupLabel::C5: return 5;
    case GroupLabel::D4: return 8;
    case GroupLabel::C4: return 4;
    case GroupLabel::V4: return 4;
    case GroupLabel::C2: return 2;
    case GroupLabel::C1: return 1;
    case GroupLabel::Other: return 0;
  }
  return 0;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "Equal";
    case Relation::AContainsB: return "AContainsB";
    case Relation::BContainsA: return "BContainsA";
    case Relation::QuadraticMeet: return "QuadraticMeet";
    case Relation::TrivialMeet: return "TrivialMeet";
    case Relation::NotComparableTrivialMeet: return "NotComparable-TrivialMeet";
    case Relation::Degenerate: return "Degenerate";
  }
  return "?";
}

const char* relation_phrase(Relation r) {
  switch (r) {
    case Relation::Equal: return "L_a = L_b";
    case Relation::AContainsB: return "L_a ⊃ L_b";
    case Relation::BContainsA: return "L_b ⊃ L_a";
    case Relation::QuadraticMeet: return "[L_a ∩ L_b : M] = 2";
    case Relation::TrivialMeet: return "L_a ∩ L_b = M";
    case Relation::NotComparableTrivialMeet: return "L_a ⊅ L_b, L_a ∩ L_b = M";
    case Relation::Degenerate: return "(not classified)";
  }
  return "?";
}

Int squarefree_kernel(const Rat& r) {
  if (sgn(r) == 0) return Int(0);
  Int n = r.get_num() * r.get_den();
  Int kernel(sgn(n));
  for (const auto& [p, e] : factor_integer(n))
    if (e & 1u) kernel *= p;
  return kernel;
}

// ---------------------------------------------------------------------------
// group determination

namespace {

GroupLabel s3_family_group(const ParamPoint& a) {
  QPoly f = family_poly(FamilyId::S3, a);
  Factorization fact = factor_over_Q(f);
  if (fact.irreducible()) {
    Rat disc = -a[0] * a[0] * (4 * a[0] + 27);
    return is_square(disc) ? GroupLabel::C3 : GroupLabel::S3;
  }
  std::vector<int> pat = fact.degree_pattern();
  if (pat == std::vector<int>{2, 1}) return GroupLabel::C2;
  if (pat == std::vector<int>{1, 1, 1}) return GroupLabel::C1;
  fail(Errc::UnexpectedPattern, "cubic family pattern");
}

GroupLabel c3_family_group(const ParamPoint& a) {
  QPoly f = family_poly(FamilyId::C3, a);
  Factorization fact = factor_over_Q(f);
  if (fact.irreducible()) return GroupLabel::C3;
  if (fact.degree_pattern() == std::vector<int>{1, 1, 1}) return GroupLabel::C1;
  fail(Errc::UnexpectedPattern, "cyclic cubic family pattern");
}

GroupLabel d4_family_group(const ParamPoint& ab) {
  const Rat& a = ab[0];
  const Rat& b = ab[1];
  QPoly f = family_poly(FamilyId::D4, ab);
  Factorization fact = factor_over_Q(f);
  if (fact.irreducible()) {
    if (is_square(b)) return GroupLabel::V4;
    if (is_square(b * (a * a - 4 * b))) return GroupLabel::C4;
    return GroupLabel::D4;
  }
  // reducible biquadratic: compositum of at most two quadratic fields
  std::vector<Int> classes;
  for (const auto& [g, mult] : fact.factors) {
    (void)mult;
    if (g.degree() == 2) {
      Int k = squarefree_kernel(discriminant(g));
      if (k != 1) classes.push_back(k);
    }
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (classes.empty()) return GroupLabel::C1;
  if (classes.size() == 1) return GroupLabel::C2;
  if (classes.size() == 2) return GroupLabel::V4;
  fail(Errc::UnexpectedPattern, "biquadratic family pattern");
}

GroupLabel d5_family_group(const ParamPoint& st) {
  QPoly f = family_poly(FamilyId::D5, st);
  Factorization fact = factor_over_Q(f);
  if (fact.irreducible()) {
    Rat d2 = d5_d_squared(st);
    if (sgn(d2) == 0) fail(Errc::UnexpectedPattern, "vanishing quadratic invariant");
    return is_square(d2) ? GroupLabel::C5 : GroupLabel::D5;
  }
  std::vector<int> pat = fact.degree_pattern();
  if (pat == std::vector<int>{2, 2, 1}) return GroupLabel::C2;
  if (pat == std::vector<int>{1, 1, 1, 1, 1}) return GroupLabel::C1;
  fail(Errc::UnexpectedPattern, "quintic family pattern");
}

GroupLabel c5_shape_group(const QPoly& f) {
  Factorization fact = factor_over_Q(f);
  if (fact.irreducible()) return GroupLabel::C5;
  if (fact.degree_pattern() == std::vector<int>{1, 1, 1, 1, 1}) return GroupLabel::C1;
  fail(Errc::UnexpectedPattern, "cyclic quintic family pattern");
}

}  // namespace

GroupLabel galois_group(FamilyId fam, const ParamPoint& a) {
  switch (fam) {
    case FamilyId::S3: return s3_family_group(a);
    case FamilyId::C3: return c3_family_group(a);
    case FamilyId::D4: return d4_family_group(a);
    case FamilyId::D5: return d5_family_group(a);
    case FamilyId::Lehmer: return d5_family_group({to_brumer(FamilyId::Lehmer, a).st});
    case FamilyId::HTC5: return c5_shape_group(family_poly(FamilyId::HTC5, a));
  }
  fail(Errc::BadInput, "unknown family");
}

// ---------------------------------------------------------------------------
// classification tables

namespace {

struct TableRow {
  GroupLabel ga, gb;
  const char* gab;
  Relation rel;
  std::vector<int> dt1;
  std::vector<int> dt2;  // empty in the cubic table
  const char* phrase;
};

const std::vector<TableRow>& cubic_table() {
  static const std::vector<TableRow> rows = {
      {GroupLabel::S3, GroupLabel::S3, "S3 x S3", Relation::TrivialMeet, {6}, {}, "L_a ∩ L_b = M"},
      {GroupLabel::S3, GroupLabel::S3, "(C3 x C3) : C2", Relation::QuadraticMeet, {3, 3}, {},
       "[L_a ∩ L_b : M] = 2"},
      {GroupLabel::S3, GroupLabel::S3, "S3", Relation::Equal, {3, 2, 1}, {}, "L_a = L_b"},
      {GroupLabel::S3, GroupLabel::C3, "S3 x C3", Relation::TrivialMeet, {6}, {}, "L_a ∩ L_b = M"},
      {GroupLabel::S3, GroupLabel::C2, "D6", Relation::NotComparableTrivialMeet, {6}, {},
       "L_a ⊅ L_b"},
      {GroupLabel::S3, GroupLabel::C2, "S3", Relation::AContainsB, {3, 3}, {}, "L_a ⊃ L_b"},
      {GroupLabel::C3, GroupLabel::C3, "C3 x C3", Relation::TrivialMeet, {3, 3}, {}, "L_a ≠ L_b"},
      {GroupLabel::C3, GroupLabel::C3, "C3", Relation::Equal, {3, 1, 1, 1}, {}, "L_a = L_b"},
      {GroupLabel::C3, GroupLabel::C2, "C6", Relation::TrivialMeet, {6}, {}, "L_a ∩ L_b = M"},
      {GroupLabel::C2, GroupLabel::C2, "C2 x C2", Relation::TrivialMeet, {4, 2}, {}, "L_a ≠ L_b"},
      {GroupLabel::C2, GroupLabel::C2, "C2", Relation::Equal, {2, 2, 1, 1}, {}, "L_a = L_b"},
  };
  return rows;
}

const std::vector<TableRow>& quintic_table() {
  static const std::vector<TableRow> rows = {
      {GroupLabel::D5, GroupLabel::D5, "D5 x D5", Relation::TrivialMeet, {10}, {10},
       "L_a ∩ L_b = M"},
      {GroupLabel::D5, GroupLabel::D5, "(C5 x C5) : C2", Relation::QuadraticMeet, {5, 5}, {5, 5},
       "[L_a ∩ L_b : M] = 2"},
      {GroupLabel::D5, GroupLabel::D5, "D5", Relation::Equal, {5, 2, 2, 1}, {5, 5}, "L_a = L_b"},
      {GroupLabel::D5, GroupLabel::D5, "D5", Relation::Equal, {5, 5}, {5, 2, 2, 1}, "L_a = L_b"},
      {GroupLabel::D5, GroupLabel::C5, "D5 x C5", Relation::TrivialMeet, {10}, {10},
       "L_a ∩ L_b = M"},
      {GroupLabel::D5, GroupLabel::C2, "D10", Relation::NotComparableTrivialMeet, {10}, {10},
       "L_a ⊅ L_b"},
      {GroupLabel::D5, GroupLabel::C2, "D5", Relation::AContainsB, {5, 5}, {5, 5}, "L_a ⊃ L_b"},
      {GroupLabel::C5, GroupLabel::C5, "C5 x C5", Relation::TrivialMeet, {5, 5}, {5, 5},
       "L_a ≠ L_b"},
      {GroupLabel::C5, GroupLabel::C5, "C5", Relation::Equal, {5, 1, 1, 1, 1, 1}, {5, 5},
       "L_a = L_b"},
      {GroupLabel::C5, GroupLabel::C5, "C5", Relation::Equal, {5, 5}, {5, 1, 1, 1, 1, 1},
       "L_a = L_b"},
      {GroupLabel::C5, GroupLabel::C2, "C10", Relation::TrivialMeet, {10}, {10},
       "L_a ∩ L_b = M"},
      {GroupLabel::C2, GroupLabel::C2, "C2 x C2", Relation::TrivialMeet, {4, 4, 2}, {4, 4, 2},
       "L_a ≠ L_b"},
      {GroupLabel::C2, GroupLabel::C2, "C2", Relation::Equal, {2, 2, 2, 2, 1, 1},
       {2, 2, 2, 2, 1, 1}, "L_a = L_b"},
  };
  return rows;
}

Relation mirror(Relation r) {
  if (r == Relation::AContainsB) return Relation::BContainsA;
  if (r == Relation::BContainsA) return Relation::AContainsB;
  return r;
}

std::vector<std::vector<int>> candidates_of(const Factorization& fact) {
  if (fact.is_squarefree()) return {fact.degree_pattern()};
  return dt_candidates(fact);
}

DecompType dt_from(const Factorization& fact, const std::vector<int>& partition) {
  DecompType dt;
  dt.partition = partition;
  dt.squarefree = fact.is_squarefree();
  for (const auto& [f, m] : fact.factors) dt.power_profile.emplace_back(f.degree(), m);
  std::sort(dt.power_profile.begin(), dt.power_profile.end());
  return dt;
}

std::string evidence_string(GroupLabel ga, GroupLabel gb,
                            const std::vector<std::vector<int>>& c1,
                            const std::vector<std::vector<int>>& c2) {
  std::string ev = std::string("(G_a, G_b) = (") + group_name(ga) + ", " + group_name(gb) + ")";
  auto app = [&ev](const char* tag, const std::vector<std::vector<int>>& cs) {
    ev += std::string("; ") + tag + " candidates:";
    for (const auto& c : cs) {
      ev += " [";
      for (size_t i = 0; i < c.size(); ++i) ev += (i ? "," : "") + std::to_string(c[i]);
      ev += "]";
    }
  };
  app("dt1", c1);
  if (!c2.empty()) app("dt2", c2);
  return ev;
}

IntersectionReport classify_quintic(const ParamPoint& a0, const ParamPoint& b0,
                                    const ClassifyOptions& opts) {
  IntersectionReport rep;
  rep.family = FamilyId::D5;
  rep.a = a0;
  rep.b = b0;
  GroupLabel ga = d5_family_group(a0);
  GroupLabel gb = d5_family_group(b0);
  rep.group_a = ga;
  rep.group_b = gb;

  if (group_order(ga) == 1 || group_order(gb) == 1) {
    if (group_order(ga) == 1 && group_order(gb) == 1) {
      rep.relation = Relation::Equal;
      rep.note = "both specializations split completely; outside the table";
    } else if (group_order(gb) == 1) {
      rep.relation = Relation::AContainsB;
      rep.note = "split-complete right side; outside the table";
    } else {
      rep.relation = Relation::BContainsA;
      rep.note = "split-complete left side; outside the table";
    }
    return rep;
  }

  bool swapped = group_order(ga) < group_order(gb);
  ParamPoint a = swapped ? b0 : a0;
  ParamPoint b = swapped ? a0 : b0;
  if (swapped) std::swap(ga, gb);

  Factorization fact1 = factor_over_Q(d5_resolvent_kind1(a, b));
  ResolventResult r2 = d5_resolvent(a, b, 2, opts.rho, opts.digits);
  Factorization fact2 = factor_over_Q(r2.poly);
  rep.certification = r2.cert;

  auto cands1 = candidates_of(fact1);
  auto cands2 = candidates_of(fact2);

  auto match_rows = [&](const std::vector<std::vector<int>>& c1,
                        const std::vector<std::vector<int>>& c2) {
    std::vector<const TableRow*> hits;
    for (const TableRow& row : quintic_table()) {
      if (row.ga != ga || row.gb != gb) continue;
      bool ok1 = std::find(c1.begin(), c1.end(), row.dt1) != c1.end();
      bool ok2 = std::find(c2.begin(), c2.end(), row.dt2) != c2.end();
      if (ok1 && ok2) hits.push_back(&row);
    }
    return hits;
  };

  auto hits = match_rows(cands1, cands2);
  if (hits.empty())
    fail(Errc::NoTableRow, evidence_string(ga, gb, cands1, cands2));
  if (hits.size() > 1 && r2.cert == Certification::Numeric) {
    // re-derive the second resolvent at doubled precision before giving up
    ResolventResult retry = d5_resolvent(a, b, 2, opts.rho, 2 * opts.digits);
    fact2 = factor_over_Q(retry.poly);
    cands2 = candidates_of(fact2);
    hits = match_rows(cands1, cands2);
  }
  if (hits.size() != 1) {
    // distinct rows sharing identical decomposition data denote the same
    // relation; accept when unambiguous at the relation level
    bool same = true;
    for (const auto* h : hits)
      if (h->rel != hits[0]->rel) same = false;
    if (hits.empty() || !same)
      fail(Errc::AmbiguousDT, evidence_string(ga, gb, cands1, cands2));
  }
  const TableRow& row = *hits[0];

  rep.relation = swapped ? mirror(row.rel) : row.rel;
  rep.group_ab = row.gab;
  rep.dt1 = dt_from(fact1, row.dt1);
  rep.dt2 = dt_from(fact2, row.dt2);
  if (swapped) rep.note = "arguments swapped for the table lookup";
  return rep;
}

IntersectionReport classify_cubic(const ParamPoint& a0, const ParamPoint& b0,
                                  const ClassifyOptions&) {
  IntersectionReport rep;
  rep.family = FamilyId::S3;
  rep.a = a0;
  rep.b = b0;
  GroupLabel ga = s3_family_group(a0);
  GroupLabel gb = s3_family_group(b0);
  rep.group_a = ga;
  rep.group_b = gb;

  if (a0[0] == b0[0]) {
    rep.relation = Relation::Equal;
    rep.note = "identical parameters";
    return rep;
  }
  if (group_order(ga) == 1 || group_order(gb) == 1) {
    if (group_order(ga) == 1 && group_order(gb) == 1) {
      rep.relation = Relation::Equal;
      rep.note = "both specializations split completely; outside the table";
    } else if (group_order(gb) == 1) {
      rep.relation = Relation::AContainsB;
      rep.note = "split-complete right side; outside the table";
    } else {
      rep.relation = Relation::BContainsA;
      rep.note = "split-complete left side; outside the table";
    }
    return rep;
  }

  bool swapped = group_order(ga) < group_order(gb);
  ParamPoint a = swapped ? b0 : a0;
  ParamPoint b = swapped ? a0 : b0;
  if (swapped) std::swap(ga, gb);

  Factorization fact = factor_over_Q(s3_resolvent(a[0], b[0]));
  if (!fact.is_squarefree())
    fail(Errc::UnexpectedPattern, "cubic resolvent with repeated factors inside the excluded set");
  std::vector<int> dt = fact.degree_pattern();

  const TableRow* hit = nullptr;
  for (const TableRow& row : cubic_table()) {
    if (row.ga == ga && row.gb == gb && row.dt1 == dt) {
      hit = &row;
      break;
    }
  }
  if (!hit)
    fail(Errc::NoTableRow, evidence_string(ga, gb, {dt}, {}));
  rep.relation = swapped ? mirror(hit->rel) : hit->rel;
  rep.group_ab = hit->gab;
  rep.dt1 = dt_from(fact, hit->dt1);
  if (swapped) rep.note = "arguments swapped for the table lookup";
  if (rep.relation == Relation::Equal) {
    if (auto w = s3_isom_witness(a0[0], b0[0])) rep.witness = w;
  }
  return rep;
}

}  // namespace

std::pair<DecompType, std::optional<DecompType>> resolvent_dt(FamilyId fam, const ParamPoint& a,
                                                              const ParamPoint& b,
                                                              const ClassifyOptions& opts) {
  if (fam == FamilyId::S3) {
    if (a.at(0) == b.at(0)) fail(Errc::EqualParams, "resolvent needs distinct parameters");
    IntersectionReport rep = classify_cubic(a, b, opts);
    return {rep.dt1, std::nullopt};
  }
  if (fam == FamilyId::Lehmer || fam == FamilyId::HTC5) {
    return resolvent_dt(FamilyId::D5, to_brumer(fam, a, opts.digits).st,
                        to_brumer(fam, b, opts.digits).st, opts);
  }
  if (fam != FamilyId::D5) fail(Errc::BadInput, "no resolvent table for this family");
  IntersectionReport rep = classify_quintic(a, b, opts);
  return {rep.dt1, rep.dt2};
}

IntersectionReport classify_intersection(FamilyId fam, const ParamPoint& a, const ParamPoint& b,
                                         const ClassifyOptions& opts) {
  switch (fam) {
    case FamilyId::S3: return classify_cubic(a, b, opts);
    case FamilyId::D5: return classify_quintic(a, b, opts);
    case FamilyId::Lehmer:
    case FamilyId::HTC5: {
      BrumerConversion ca = to_brumer(fam, a, opts.digits);
      BrumerConversion cb = to_brumer(fam, b, opts.digits);
      IntersectionReport rep = classify_quintic(ca.st, cb.st, opts);
      if (ca.cert == Certification::Numeric || cb.cert == Certification::Numeric)
        rep.certification = Certification::Numeric;
      rep.family = fam;
      std::string mapped = "mapped to (" + param_to_string(ca.st) + ") and (" +
                           param_to_string(cb.st) + ")";
      rep.note = rep.note.empty() ? mapped : rep.note + "; " + mapped;
      rep.a = a;
      rep.b = b;
      return rep;
    }
    case FamilyId::C3: {
      IntersectionReport rep;
      rep.family = fam;
      rep.a = a;
      rep.b = b;
      rep.group_a = c3_family_group(a);
      rep.group_b = c3_family_group(b);
      auto w = c3_isom_witness(a[0], b[0]);
      if (w) {
        rep.relation = Relation::Equal;
        rep.witness = w;
      } else if (rep.group_a == GroupLabel::C3 && rep.group_b == GroupLabel::C3) {
        rep.relation = Relation::TrivialMeet;  // distinct prime-degree normal fields
      } else if (group_order(rep.group_b) == 1 && group_order(rep.group_a) > 1) {
        rep.relation = Relation::AContainsB;
        rep.note = "split-complete right side";
      } else if (group_order(rep.group_a) == 1 && group_order(rep.group_b) > 1) {
        rep.relation = Relation::BContainsA;
        rep.note = "split-complete left side";
      } else {
        rep.relation = Relation::Degenerate;
      }
      return rep;
    }
    case FamilyId::D4: {
      IntersectionReport rep;
      rep.family = fam;
      rep.a = a;
      rep.b = b;
      rep.group_a = d4_family_group(a);
      rep.group_b = d4_family_group(b);
      auto w = d4_isom_witness(a[0], a[1], b[0], b[1]);
      if (w) {
        rep.relation = Relation::Equal;
        rep.witness = w;
      } else {
        rep.relation = Relation::Degenerate;
        rep.note = "isomorphism criterion only; relation beyond equality not determined";
      }
      return rep;
    }
  }
  fail(Errc::BadInput, "unknown family");
}

IsomResult isomorphic(FamilyId fam, const ParamPoint& a, const ParamPoint& b,
                      const ClassifyOptions& opts) {
  IsomResult out;
  switch (fam) {
    case FamilyId::C3: {
      out.witness = c3_isom_witness(a[0], b[0]);
      out.isomorphic = out.witness.has_value();
      return out;
    }
    case FamilyId::D4: {
      out.witness = d4_isom_witness(a[0], a[1], b[0], b[1]);
      out.isomorphic = out.witness.has_value();
      return out;
    }
    case FamilyId::S3: {
      if (a[0] == b[0]) {
        out.isomorphic = true;
        return out;
      }
      out.witness = s3_isom_witness(a[0], b[0]);
      out.isomorphic = out.witness.has_value();
      return out;
    }
    case FamilyId::D5:
    case FamilyId::Lehmer:
    case FamilyId::HTC5: {
      IntersectionReport rep = classify_intersection(fam, a, b, opts);
      out.report = rep;
      out.witness = rep.witness;
      out.isomorphic = rep.relation == Relation::Equal;
      return out;
    }
  }
  fail(Errc::BadInput, "unknown family");
}

}  // namespace gal
