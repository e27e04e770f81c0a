#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gal/error.hpp"
#include "gal/intersect.hpp"
#include "gal/report.hpp"

using namespace gal;

namespace {

Rat R(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

ParamPoint P2(long s, long t) { return {R(s), R(t)}; }

std::mt19937_64 g_rng(0xC0FFEEu);

Rat rand_rat(long lo, long hi, long maxden = 1) {
  std::uniform_int_distribution<long> dn(lo, hi), dd(1, maxden);
  Rat r(dn(g_rng), dd(g_rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("group determination") {
  CHECK(galois_group(FamilyId::D5, P2(0, 3)) == GroupLabel::D5);
  CHECK(galois_group(FamilyId::S3, {R(-1, 2)}) == GroupLabel::C2);
  CHECK(galois_group(FamilyId::C3, {R(1)}) == GroupLabel::C3);
  CHECK(galois_group(FamilyId::S3, {R(1)}) == GroupLabel::S3);
  CHECK(galois_group(FamilyId::S3, {R(2)}) == GroupLabel::S3);

  // biquadratic criteria
  CHECK(galois_group(FamilyId::D4, P2(4, 2)) == GroupLabel::C4);   // X^4+4X^2+2, b(a^2-4b)=16
  CHECK(galois_group(FamilyId::D4, P2(0, 1)) == GroupLabel::V4);   // X^4+1
  CHECK(galois_group(FamilyId::D4, P2(1, -1)) == GroupLabel::D4);  // X^4+X^2-1
  CHECK(galois_group(FamilyId::D4, P2(1, 1)) == GroupLabel::C2);   // (X^2+X+1)(X^2-X+1)
  CHECK(galois_group(FamilyId::D4, P2(0, -1)) == GroupLabel::C2);  // (X-1)(X+1)(X^2+1)

  // cyclic quintics through the parameter map
  CHECK(galois_group(FamilyId::Lehmer, {R(-2)}) == GroupLabel::C5);
  CHECK(galois_group(FamilyId::Lehmer, {R(-1)}) == GroupLabel::C5);
  CHECK(galois_group(FamilyId::Lehmer, {R(0)}) == GroupLabel::C5);
}

TEST_CASE("biquadratic group against splitting-degree brute force") {
  // brute force: splitting field degree of X^4+aX^2+b from its factorization
  // (degree 8 <-> D4, 4 <-> C4 or V4, 2 <-> C2, 1 <-> C1); the V4/C4 split is
  // then decided by the number of quadratic subfields, i.e. square classes
  auto brute = [](const Rat& a, const Rat& b) -> GroupLabel {
    QPoly f = family_poly(FamilyId::D4, {a, b});
    Factorization fact = factor_over_Q(f);
    if (fact.irreducible()) {
      // adjoin one root: factor over Q(sqrt(...)) is beyond this brute force;
      // use the classical resolvent facts instead: irreducible biquadratic has
      // group of order 4 iff b or b(a^2-4b) is a square, else order 8
      if (is_square(b)) return GroupLabel::V4;
      if (is_square(b * (a * a - 4 * b))) return GroupLabel::C4;
      return GroupLabel::D4;
    }
    std::vector<Int> classes;
    bool quartic_linear_mix = false;
    for (const auto& [g, m] : fact.factors) {
      (void)m;
      if (g.degree() == 2) {
        Int k = squarefree_kernel(discriminant(g));
        if (k != 1) classes.push_back(k);
      } else if (g.degree() > 2) {
        quartic_linear_mix = true;
      }
    }
    REQUIRE(!quartic_linear_mix);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    if (classes.empty()) return GroupLabel::C1;
    return classes.size() == 1 ? GroupLabel::C2 : GroupLabel::V4;
  };
  int done = 0;
  while (done < 60) {
    Rat a = rand_rat(-15, 15), b = rand_rat(-15, 15);
    if (sgn(b) == 0 || sgn(a * a - 4 * b) == 0) continue;
    CHECK(galois_group(FamilyId::D4, {a, b}) == brute(a, b));
    ++done;
  }
}

TEST_CASE("the known quintic pair classifies as equal") {
  IntersectionReport rep = classify_intersection(FamilyId::D5, P2(0, 3), P2(10, 3));
  CHECK(rep.group_a == GroupLabel::D5);
  CHECK(rep.group_b == GroupLabel::D5);
  CHECK(rep.relation == Relation::Equal);
  CHECK(rep.dt1.partition == std::vector<int>{5, 2, 2, 1});
  REQUIRE(rep.dt2.has_value());
  CHECK(rep.dt2->partition == std::vector<int>{5, 5});
  CHECK(!rep.dt1.squarefree);
  CHECK(rep.dt2->squarefree);

  auto [dt1, dt2] = resolvent_dt(FamilyId::D5, P2(0, 3), P2(10, 3));
  CHECK(dt1.partition == std::vector<int>{5, 2, 2, 1});
  REQUIRE(dt2.has_value());
  CHECK(dt2->partition == std::vector<int>{5, 5});
}

TEST_CASE("diagonal pair is equal with full structure") {
  IntersectionReport rep = classify_intersection(FamilyId::D5, P2(0, 1), P2(0, 1));
  CHECK(rep.relation == Relation::Equal);
  bool k1 = !rep.dt1.partition.empty() &&
            std::find(rep.dt1.partition.begin(), rep.dt1.partition.end(), 1) !=
                rep.dt1.partition.end();
  CHECK(k1);
}

TEST_CASE("cubic table rows") {
  // equal pair generated through the parameter map
  Rat a = R(1), b = s3_image(a, R(1));
  IntersectionReport rep = classify_intersection(FamilyId::S3, {a}, {b});
  CHECK(rep.relation == Relation::Equal);
  CHECK(rep.dt1.partition == std::vector<int>{3, 2, 1});
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->values[0] == 1);

  // distinct discriminant classes: trivial meet, [6]
  IntersectionReport r2 = classify_intersection(FamilyId::S3, {R(1)}, {R(2)});
  CHECK(r2.group_a == GroupLabel::S3);
  CHECK(r2.group_b == GroupLabel::S3);
  CHECK((r2.relation == Relation::TrivialMeet || r2.relation == Relation::QuadraticMeet));
  if (r2.relation == Relation::TrivialMeet) CHECK(r2.dt1.partition == std::vector<int>{6});

  // same discriminant class but different fields: [3,3]
  // disc class of X^3+aX+a is -(4a+27); choose a, b with equal kernels
  // kernel(-(4a+27)): a=1 -> -31; search small b with kernel -31 square class:
  // 4b+27 = 31*k^2 -> b = (31*4-27)/4 = 97/4 gives k=2
  IntersectionReport r3 = classify_intersection(FamilyId::S3, {R(1)}, {R(97, 4)});
  CHECK(r3.group_a == GroupLabel::S3);
  CHECK(r3.group_b == GroupLabel::S3);
  CHECK((r3.relation == Relation::QuadraticMeet || r3.relation == Relation::Equal));

  // C2 right side: a = -1/2 factors as (X-1)(X^2+X+1/2)... wait, check group
  CHECK(galois_group(FamilyId::S3, {R(-1, 2)}) == GroupLabel::C2);
  IntersectionReport r4 = classify_intersection(FamilyId::S3, {R(1)}, {R(-1, 2)});
  CHECK((r4.relation == Relation::NotComparableTrivialMeet ||
         r4.relation == Relation::AContainsB));
}

TEST_CASE("cubic row coverage over random admissible pairs") {
  int done = 0, equal_seen = 0;
  while (done < 120) {
    Rat a = rand_rat(-40, 40, 3), b = rand_rat(-40, 40, 3);
    if (a == b || sgn(a * b) == 0 || sgn(4 * a + 27) == 0 || sgn(4 * b + 27) == 0) continue;
    IntersectionReport rep;
    try {
      rep = classify_intersection(FamilyId::S3, {a}, {b});
    } catch (const GalError& e) {
      FAIL((std::string("classification failed: ") + e.what()).c_str());
      continue;
    }
    CHECK(rep.relation != Relation::Degenerate);
    if (!rep.dt1.partition.empty()) {
      int sum = 0;
      for (int d : rep.dt1.partition) sum += d;
      CHECK(sum == 6);
    }
    // witness consistency both directions
    IntersectionReport mirror = classify_intersection(FamilyId::S3, {b}, {a});
    Relation expect = rep.relation;
    if (expect == Relation::AContainsB) expect = Relation::BContainsA;
    else if (expect == Relation::BContainsA) expect = Relation::AContainsB;
    CHECK(mirror.relation == expect);
    if (rep.relation == Relation::Equal) ++equal_seen;
    ++done;
  }
  (void)equal_seen;
}

TEST_CASE("equality through the parameter map is transitive") {
  int done = 0;
  while (done < 25) {
    Rat a = rand_rat(-25, 25);
    if (sgn(a) == 0 || sgn(4 * a + 27) == 0) continue;
    Rat u = rand_rat(-10, 10, 2), u2 = rand_rat(-10, 10, 2);
    Rat b, c;
    try {
      b = s3_image(a, u);
      c = s3_image(b, u2);
    } catch (const GalError&) {
      continue;
    }
    if (sgn(b) == 0 || sgn(4 * b + 27) == 0 || sgn(c) == 0 || sgn(4 * c + 27) == 0) continue;
    if (a == c) continue;
    CHECK(isomorphic(FamilyId::S3, {a}, {c}).isomorphic);
    ++done;
  }
}

TEST_CASE("quintic row coverage over random admissible pairs") {
  int done = 0;
  while (done < 25) {
    ParamPoint a = {rand_rat(-20, 20), rand_rat(-20, 20)};
    ParamPoint b = {rand_rat(-20, 20), rand_rat(-20, 20)};
    if (!family_separable(FamilyId::D5, a) || !family_separable(FamilyId::D5, b)) continue;
    IntersectionReport rep;
    try {
      rep = classify_intersection(FamilyId::D5, a, b);
    } catch (const GalError& e) {
      FAIL((std::string("classification failed: ") + e.what()).c_str());
      continue;
    }
    if (!rep.dt1.partition.empty()) {
      int sum = 0;
      for (int d : rep.dt1.partition) sum += d;
      CHECK(sum == 10);
    }
    if (rep.dt2) {
      int sum = 0;
      for (int d : rep.dt2->partition) sum += d;
      CHECK(sum == 10);
    }
    ++done;
  }
}

TEST_CASE("equal lehmer points") {
  IsomResult r = isomorphic(FamilyId::Lehmer, {R(-2)}, {R(-1)});
  CHECK(r.isomorphic);
  REQUIRE(r.report.has_value());
  CHECK(r.report->relation == Relation::Equal);
  CHECK(group_order(r.report->group_a) == 5);

  CHECK(!isomorphic(FamilyId::Lehmer, {R(-2)}, {R(3)}).isomorphic);
  CHECK(!isomorphic(FamilyId::Lehmer, {R(0)}, {R(1)}).isomorphic);
}

TEST_CASE("conversion sanity for the quintic family itself") {
  auto conv = to_brumer_quintic(family_poly(FamilyId::D5, P2(0, 3)), 128);
  CHECK(conv.cert == Certification::Numeric);
  IntersectionReport rep = classify_intersection(FamilyId::D5, conv.st, P2(0, 3));
  CHECK(rep.relation == Relation::Equal);
}

TEST_CASE("cross-family consistency between the two cubic parameterizations") {
  int done = 0;
  while (done < 15) {
    Rat m = rand_rat(-20, 20);
    Rat z = rand_rat(-8, 8, 3);
    Rat n;
    try {
      n = c3_image(m, z, 1 + (done & 1));
    } catch (const GalError&) {
      continue;
    }
    auto am = c3_as_s3_param(m);
    auto an = c3_as_s3_param(n);
    if (!am || !an) continue;
    if (*am == *an) continue;
    if (sgn(*am) == 0 || sgn(*an) == 0) continue;
    if (sgn(4 * *am + 27) == 0 || sgn(4 * *an + 27) == 0) continue;
    if (galois_group(FamilyId::S3, {*am}) == GroupLabel::C1) continue;
    IntersectionReport rep = classify_intersection(FamilyId::S3, {*am}, {*an});
    CHECK(rep.relation == Relation::Equal);
    ++done;
  }
}

TEST_CASE("report serialization round trip") {
  IntersectionReport rep = classify_intersection(FamilyId::D5, P2(0, 3), P2(10, 3));
  std::string js = report_to_json_string(rep);
  IntersectionReport back = report_from_json_string(js);
  CHECK(back.family == rep.family);
  CHECK(back.a == rep.a);
  CHECK(back.b == rep.b);
  CHECK(back.group_a == rep.group_a);
  CHECK(back.group_b == rep.group_b);
  CHECK(back.relation == rep.relation);
  CHECK(back.dt1.partition == rep.dt1.partition);
  CHECK(back.dt2->partition == rep.dt2->partition);
  CHECK(back.certification == rep.certification);

  std::string text = emit_report(rep, OutputFormat::Text);
  CHECK(text.find("relation: L_a = L_b") != std::string::npos);
  CHECK(text.find("G_a = D5") != std::string::npos);

  std::string csv = emit_hits({}, OutputFormat::Csv);
  CHECK(csv == "family,a,b,kind,relation,group_a,group_b,dt1,dt2,certification\n");
}
