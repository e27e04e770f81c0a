#include "gal/report.hpp"

#include <json.hpp>

#include <sstream>

#include "gal/error.hpp"

namespace gal {

namespace {

using nlohmann::json;

std::vector<std::string> params_to_strings(const ParamPoint& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const Rat& r : p) out.push_back(rat_to_string(r));
  return out;
}

ParamPoint params_from_json(const json& j) {
  ParamPoint p;
  for (const auto& s : j) p.push_back(rat_from_string(s.get<std::string>()));
  return p;
}

json dt_to_json(const DecompType& dt) {
  json j;
  j["partition"] = dt.partition;
  j["squarefree"] = dt.squarefree;
  json prof = json::array();
  for (auto& [d, m] : dt.power_profile) prof.push_back({d, m});
  j["power_profile"] = prof;
  return j;
}

DecompType dt_from_json(const json& j) {
  DecompType dt;
  dt.partition = j.at("partition").get<std::vector<int>>();
  dt.squarefree = j.at("squarefree").get<bool>();
  for (const auto& pm : j.at("power_profile"))
    dt.power_profile.emplace_back(pm.at(0).get<int>(), pm.at(1).get<int>());
  return dt;
}

GroupLabel group_from_string(const std::string& s) {
  for (GroupLabel g : {GroupLabel::S3, GroupLabel::C3, GroupLabel::D5, GroupLabel::C5,
                       GroupLabel::D4, GroupLabel::C4, GroupLabel::V4, GroupLabel::C2,
                       GroupLabel::C1, GroupLabel::Other})
    if (s == group_name(g)) return g;
  fail(Errc::BadInput, "unknown group label " + s);
}

Relation relation_from_string(const std::string& s) {
  for (Relation r : {Relation::Equal, Relation::AContainsB, Relation::BContainsA,
                     Relation::QuadraticMeet, Relation::TrivialMeet,
                     Relation::NotComparableTrivialMeet, Relation::Degenerate})
    if (s == relation_name(r)) return r;
  fail(Errc::BadInput, "unknown relation " + s);
}

Witness::Kind witness_kind_from_string(const std::string& s) {
  for (Witness::Kind k : {Witness::Kind::C3Branch1, Witness::Kind::C3Branch2, Witness::Kind::S3U,
                          Witness::Kind::D4BranchI, Witness::Kind::D4BranchII})
    if (s == witness_kind_name(k)) return k;
  fail(Errc::BadInput, "unknown witness kind " + s);
}

json report_to_json(const IntersectionReport& r) {
  json j;
  j["family"] = family_name(r.family);
  j["a"] = params_to_strings(r.a);
  j["b"] = params_to_strings(r.b);
  j["group_a"] = group_name(r.group_a);
  j["group_b"] = group_name(r.group_b);
  j["relation"] = relation_name(r.relation);
  j["dt1"] = dt_to_json(r.dt1);
  j["dt2"] = r.dt2 ? dt_to_json(*r.dt2) : json(nullptr);
  j["certification"] = r.certification == Certification::Exact ? "exact" : "numeric";
  if (r.witness) {
    json w;
    w["kind"] = witness_kind_name(r.witness->kind);
    w["values"] = params_to_strings(r.witness->values);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["group_ab"] = r.group_ab;
  j["note"] = r.note;
  return j;
}

IntersectionReport report_from_json(const json& j) {
  IntersectionReport r;
  auto fam = family_from_string(j.at("family").get<std::string>());
  if (!fam) fail(Errc::BadInput, "unknown family in report");
  r.family = *fam;
  r.a = params_from_json(j.at("a"));
  r.b = params_from_json(j.at("b"));
  r.group_a = group_from_string(j.at("group_a").get<std::string>());
  r.group_b = group_from_string(j.at("group_b").get<std::string>());
  r.relation = relation_from_string(j.at("relation").get<std::string>());
  r.dt1 = dt_from_json(j.at("dt1"));
  if (!j.at("dt2").is_null()) r.dt2 = dt_from_json(j.at("dt2"));
  r.certification =
      j.at("certification").get<std::string>() == "exact" ? Certification::Exact
                                                          : Certification::Numeric;
  if (!j.at("witness").is_null()) {
    Witness w;
    w.kind = witness_kind_from_string(j.at("witness").at("kind").get<std::string>());
    for (const auto& v : j.at("witness").at("values"))
      w.values.push_back(rat_from_string(v.get<std::string>()));
    r.witness = w;
  }
  r.group_ab = j.value("group_ab", "");
  r.note = j.value("note", "");
  return r;
}

std::string partition_text(const std::vector<int>& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + std::to_string(p[i]);
  return s + "]";
}

std::string dt_csv(const DecompType& dt) {
  std::string s;
  for (size_t i = 0; i < dt.partition.size(); ++i)
    s += (i ? " " : "") + std::to_string(dt.partition[i]);
  return s;
}

std::string report_text(const IntersectionReport& r) {
  std::ostringstream os;
  os << "family: " << family_name(r.family) << "\n";
  os << "a: (" << param_to_string(r.a) << ")\n";
  os << "b: (" << param_to_string(r.b) << ")\n";
  os << "G_a = " << group_name(r.group_a) << "\n";
  os << "G_b = " << group_name(r.group_b) << "\n";
  if (!r.group_ab.empty()) os << "G_ab = " << r.group_ab << "\n";
  if (!r.dt1.partition.empty()) os << "dt1: " << partition_text(r.dt1.partition) << "\n";
  if (r.dt2) os << "dt2: " << partition_text(r.dt2->partition) << "\n";
  os << "relation: " << relation_phrase(r.relation) << "\n";
  os << "certification: " << (r.certification == Certification::Exact ? "exact" : "numeric")
     << "\n";
  if (r.witness) {
    os << "witness: " << witness_kind_name(r.witness->kind) << " (";
    for (size_t i = 0; i < r.witness->values.size(); ++i)
      os << (i ? ", " : "") << rat_to_string(r.witness->values[i]);
    os << ")\n";
  }
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  return os.str();
}

constexpr const char* kHitHeader =
    "family,a,b,kind,relation,group_a,group_b,dt1,dt2,certification";

std::string hit_csv(const SearchHit& h) {
  const IntersectionReport& r = h.report;
  std::ostringstream os;
  os << family_name(r.family) << ",\"" << param_to_string(h.a) << "\",\""
     << param_to_string(h.b) << "\"," << h.kind << "," << relation_name(r.relation) << ","
     << group_name(r.group_a) << "," << group_name(r.group_b) << "," << dt_csv(r.dt1) << ",";
  if (r.dt2) os << dt_csv(*r.dt2);
  os << "," << (r.certification == Certification::Exact ? "exact" : "numeric");
  return os.str();
}

}  // namespace

std::optional<OutputFormat> format_from_string(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string emit_report(const IntersectionReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return report_text(r);
    case OutputFormat::Json: return report_to_json(r).dump(1) + "\n";
    case OutputFormat::Csv: {
      std::string out = std::string(kHitHeader) + "\n";
      out += hit_csv(SearchHit{r.a, r.b, 1, r}) + "\n";
      return out;
    }
  }
  return {};
}

std::string emit_hits(const std::vector<SearchHit>& hits, OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: {
      std::ostringstream os;
      for (const SearchHit& h : hits) {
        os << "HIT kind=" << h.kind << " a=(" << param_to_string(h.a) << ") b=("
           << param_to_string(h.b) << ") " << relation_phrase(h.report.relation) << "  [G_a="
           << group_name(h.report.group_a) << ", G_b=" << group_name(h.report.group_b) << ", "
           << (h.report.certification == Certification::Exact ? "exact" : "numeric") << "]\n";
      }
      return os.str();
    }
    case OutputFormat::Json: {
      json arr = json::array();
      for (const SearchHit& h : hits) {
        json e;
        e["a"] = params_to_strings(h.a);
        e["b"] = params_to_strings(h.b);
        e["kind"] = h.kind;
        e["report"] = report_to_json(h.report);
        arr.push_back(std::move(e));
      }
      return arr.dump(1) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = std::string(kHitHeader) + "\n";
      for (const SearchHit& h : hits) out += hit_csv(h) + "\n";
      return out;
    }
  }
  return {};
}

std::string emit_search(const SearchResult& r, OutputFormat f) {
  std::string out = emit_hits(r.hits, f);
  if (f == OutputFormat::Text) {
    std::ostringstream os;
    os << out;
    os << "pairs: " << r.stats.pairs << ", char-rejected: " << r.stats.char_rejected
       << ", square-rejected: " << r.stats.square_rejected
       << ", root-rejected: " << r.stats.root_rejected << ", classified: " << r.stats.classified
       << ", hits: " << r.hits.size() << "\n";
    for (const std::string& e : r.errors) os << "error: " << e << "\n";
    return os.str();
  }
  return out;
}

std::string report_to_json_string(const IntersectionReport& r) {
  return report_to_json(r).dump(1);
}

IntersectionReport report_from_json_string(const std::string& text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::exception& e) {
    fail(Errc::BadInput, std::string("bad report JSON: ") + e.what());
  }
}

}  // namespace gal
