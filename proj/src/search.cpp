#include "gal/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "gal/error.hpp"
#include "gal/formulas.hpp"
#include "gal/fp.hpp"

namespace gal {

namespace {

struct ZpCtx {
  using Elem = ZpE;
  const Fp* F;
  ZpE of(long v) const { return ZpE::of(v, *F); }
};

struct PointData {
  ParamPoint p;                 // parameters in the search family
  ParamPoint st;                // quintic-family image (or s3 parameter)
  bool usable = false;          // separable (and convertible)
  Rat filter_val;               // square-class invariant
  std::vector<int8_t> chars;    // Legendre character per filter prime
};

// square-class invariant whose product must be a rational square on every
// equality pair: d^2 for the quintic families, (4a+27) for the cubic one
Rat class_invariant(FamilyId fam, const ParamPoint& st) {
  if (fam == FamilyId::S3) return 4 * st[0] + 27;
  return d5_d_squared(st);
}

PointData make_point(const SearchSpec& spec, ParamPoint p) {
  PointData d;
  d.p = std::move(p);
  try {
    switch (spec.family) {
      case FamilyId::S3:
        family_poly(FamilyId::S3, d.p);
        d.st = d.p;
        break;
      case FamilyId::D5:
        family_poly(FamilyId::D5, d.p);
        d.st = d.p;
        break;
      case FamilyId::Lehmer:
      case FamilyId::HTC5:
        d.st = to_brumer(spec.family, d.p, spec.digits).st;
        break;
      default:
        fail(Errc::BadInput, "search supports the cubic and quintic families");
    }
  } catch (const GalError&) {
    return d;  // unusable point (non-separable or unconvertible)
  }
  d.usable = true;
  d.filter_val = class_invariant(spec.family, d.st);
  d.chars.reserve(spec.primes.size());
  for (uint32_t pr : spec.primes) {
    Fp F(pr);
    auto v = F.from_rat(d.filter_val);
    d.chars.push_back(v ? static_cast<int8_t>(F.legendre(*v)) : int8_t{0});
  }
  return d;
}

// no rational root can reduce to a rootless polynomial mod a good odd prime
bool resolvent_has_root_mod_p(const Fp& F, FamilyId fam, const ParamPoint& sta,
                              const ParamPoint& stb) {
  ZpCtx ctx{&F};
  std::vector<uint64_t> coeffs;
  if (fam == FamilyId::S3) {
    auto a = F.from_rat(sta[0]);
    auto b = F.from_rat(stb[0]);
    if (!a || !b) return true;
    auto cs = formulas::s3_resolvent_coeffs(ctx, ZpE(*a, F), ZpE(*b, F));
    coeffs.clear();
    for (const ZpE& e : cs) coeffs.push_back(e.v);
    fpx::normalize(coeffs);
    if (fpx::deg(coeffs) != 6) return true;  // prime divides the leading coefficient
  } else {
    auto s = F.from_rat(sta[0]), t = F.from_rat(sta[1]);
    auto s2 = F.from_rat(stb[0]), t2 = F.from_rat(stb[1]);
    if (!s || !t || !s2 || !t2) return true;
    auto cs = formulas::resolvent1_coeffs(ctx, ZpE(*s, F), ZpE(*t, F), ZpE(*s2, F), ZpE(*t2, F));
    coeffs.clear();
    for (const ZpE& e : cs) coeffs.push_back(e.v);
    fpx::normalize(coeffs);
  }
  if (coeffs.empty()) return true;  // degenerate reduction: cannot reject
  return fpx::has_root(F, coeffs);
}

struct WorkerOut {
  std::vector<SearchHit> hits;
  std::vector<std::string> errors;
  SearchStats stats;
};

void process_pair(const SearchSpec& spec, const PointData& A, const PointData& B,
                  WorkerOut& out) {
  ++out.stats.pairs;
  if (!A.usable || !B.usable) return;

  // stage 1a: square-class characters
  for (size_t k = 0; k < spec.primes.size(); ++k) {
    int prod = static_cast<int>(A.chars[k]) * static_cast<int>(B.chars[k]);
    if (prod < 0) {
      ++out.stats.char_rejected;
      return;
    }
  }
  // stage 2: exact square-class confirmation
  if (!is_square(A.filter_val * B.filter_val)) {
    ++out.stats.square_rejected;
    return;
  }
  // stage 1b: resolvent root scans mod the filter primes
  bool kind1_possible = true;
  bool kind2_possible = true;
  for (uint32_t pr : spec.primes) {
    Fp F(pr);
    if (kind1_possible && !resolvent_has_root_mod_p(F, spec.family, A.st, B.st))
      kind1_possible = false;
    if (spec.family != FamilyId::S3 && spec.rho && kind2_possible) {
      auto rho = spec.rho->apply(A.st[0], A.st[1]);
      if (rho && !resolvent_has_root_mod_p(F, FamilyId::D5, {rho->first, rho->second}, B.st))
        kind2_possible = false;
    }
    if (!kind1_possible && !kind2_possible) break;
  }
  bool no_kind2 = spec.family == FamilyId::S3 ||
                  (spec.certify == SearchSpec::Certify::Exact && !spec.rho);
  if (!kind1_possible && (no_kind2 || !kind2_possible)) {
    ++out.stats.root_rejected;
    return;
  }

  // stage 3: full classification
  try {
    ++out.stats.classified;
    ClassifyOptions copts;
    copts.rho = spec.rho;
    copts.digits = spec.digits;
    IntersectionReport rep = classify_intersection(spec.family, A.p, B.p, copts);
    if (rep.relation != Relation::Equal) return;
    auto includes_one = [](const DecompType& dt) {
      return std::find(dt.partition.begin(), dt.partition.end(), 1) != dt.partition.end();
    };
    bool unresolved_dt = rep.dt1.partition.empty();  // outside-table equalities
    if (unresolved_dt) {
      SearchHit h{A.p, B.p, 1, rep};
      out.hits.push_back(std::move(h));
      return;
    }
    if (includes_one(rep.dt1)) out.hits.push_back(SearchHit{A.p, B.p, 1, rep});
    if (rep.dt2 && includes_one(*rep.dt2)) {
      bool exact_only = spec.certify == SearchSpec::Certify::Exact;
      if (!(exact_only && rep.certification == Certification::Numeric))
        out.hits.push_back(SearchHit{A.p, B.p, 2, rep});
    }
  } catch (const GalError& e) {
    out.errors.push_back("pair (" + param_to_string(A.p) + ") (" + param_to_string(B.p) +
                         "): " + e.what());
  }
}

bool param_less(const ParamPoint& a, const ParamPoint& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace

SearchResult search_grid(const SearchSpec& spec) {
  int arity = family_arity(spec.family);
  if (static_cast<int>(spec.axes.size()) != arity)
    fail(Errc::BadInput, "axis count must match the family arity");
  for (uint32_t p : spec.primes)
    if (p < 3 || p >= (1u << 16) || p % 2 == 0)
      fail(Errc::BadInput, "filter primes must be odd primes below 2^16");

  // enumerate grid points in lexicographic order
  std::vector<ParamPoint> points;
  std::vector<int> free_axes;
  for (int i = 0; i < arity; ++i)
    if (!spec.axes[static_cast<size_t>(i)].fixed) free_axes.push_back(i);
  ParamPoint cur(static_cast<size_t>(arity));
  for (int i = 0; i < arity; ++i)
    if (spec.axes[static_cast<size_t>(i)].fixed)
      cur[static_cast<size_t>(i)] = *spec.axes[static_cast<size_t>(i)].fixed;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == free_axes.size()) {
      points.push_back(cur);
      return;
    }
    const auto& ax = spec.axes[static_cast<size_t>(free_axes[k])];
    for (long v = ax.lo; v <= ax.hi; ++v) {
      cur[static_cast<size_t>(free_axes[k])] = Rat(v);
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  if (points.empty()) fail(Errc::BadInput, "empty grid");
  if (!spec.target && !spec.pairwise)
    fail(Errc::BadInput, "search needs a target point or pairwise mode");

  std::vector<PointData> data(points.size());
  std::optional<PointData> target_data;

  int nthreads = std::max(1, spec.threads);
  {
    std::vector<std::thread> ts;
    std::atomic<size_t> next{0};
    for (int w = 0; w < nthreads; ++w)
      ts.emplace_back([&] {
        while (true) {
          size_t i = next.fetch_add(64);
          if (i >= points.size()) break;
          size_t end = std::min(points.size(), i + 64);
          for (size_t k = i; k < end; ++k) data[k] = make_point(spec, points[k]);
        }
      });
    for (auto& t : ts) t.join();
  }
  if (spec.target) {
    if (static_cast<int>(spec.target->size()) != arity)
      fail(Errc::BadInput, "target arity mismatch");
    target_data = make_point(spec, *spec.target);
    if (!target_data->usable) fail(Errc::NonSeparable, "target specialization unusable");
  }

  // pair workers over contiguous chunks of the outer index
  std::vector<WorkerOut> outs(static_cast<size_t>(nthreads));
  {
    std::vector<std::thread> ts;
    std::atomic<size_t> next{0};
    for (int w = 0; w < nthreads; ++w)
      ts.emplace_back([&, w] {
        WorkerOut& out = outs[static_cast<size_t>(w)];
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= data.size()) break;
          if (spec.target) {
            process_pair(spec, *target_data, data[i], out);
          } else {
            for (size_t j = i + 1; j < data.size(); ++j)
              process_pair(spec, data[i], data[j], out);
          }
        }
      });
    for (auto& t : ts) t.join();
  }

  SearchResult res;
  for (WorkerOut& o : outs) {
    res.stats.pairs += o.stats.pairs;
    res.stats.char_rejected += o.stats.char_rejected;
    res.stats.square_rejected += o.stats.square_rejected;
    res.stats.root_rejected += o.stats.root_rejected;
    res.stats.classified += o.stats.classified;
    for (auto& h : o.hits) res.hits.push_back(std::move(h));
    for (auto& e : o.errors) res.errors.push_back(std::move(e));
  }
  std::sort(res.hits.begin(), res.hits.end(), [](const SearchHit& x, const SearchHit& y) {
    if (x.a != y.a) return param_less(x.a, y.a);
    if (x.b != y.b) return param_less(x.b, y.b);
    return x.kind < y.kind;
  });
  std::sort(res.errors.begin(), res.errors.end());
  return res;
}

}  // namespace gal
