#include "lambda_gs/report.hpp"

#include <algorithm>
#include <sstream>

#include "lambda_gs/errors.hpp"

namespace lambda_gs {

namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> class_names(const std::set<ClassIndex>& classes) {
  std::vector<std::string> out;
  for (ClassIndex m : classes) out.push_back(to_string(m));
  return out;
}

Json params_json(const ExactParams& p) {
  return Json{{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"c", to_string(p.c)}};
}

Json region_json(Region region) {
  return Json{{"canonical", to_string(region)}, {"names", region_names(region)}};
}

Json failure_json(const OracleFailure& f) {
  return Json{{"center", to_string(f.center)},
              {"ball", to_string(f.ball)},
              {"class", to_string(f.ball_class)},
              {"energy", to_string(f.energy)},
              {"minimum", to_string(f.minimum)}};
}

Json point_checks_json(const std::vector<PointCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json row{{"point", params_json(c.point)},
             {"root_rule", to_string(c.root_rule)},
             {"expected", c.expected},
             {"oracle", c.oracle.ground_state}};
    if (c.oracle.failure) row["failure"] = failure_json(*c.oracle.failure);
    out.push_back(std::move(row));
  }
  return out;
}

Json classes_json(const ClassSetResult& result,
                  const std::vector<ConfirmedWitness>& replays) {
  Json out = Json::array();
  for (const auto& [m, witness] : result.witnesses) {
    Json row{{"class", to_string(m)},
             {"symbols", symbols_string(m)},
             {"pattern", to_string(witness.pattern)},
             {"vertex", to_string(witness.vertex)},
             {"ball", to_string(witness.ball)}};
    for (const auto& r : replays) {
      if (r.claimed_class != m) continue;
      row["tree_ball"] = r.observed_ball ? Json(to_string(*r.observed_ball)) : Json();
      row["confirmed"] = r.confirmed();
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json record_json(const SpecRecord& r) {
  Json out{{"spec", r.label},
           {"kind", to_string(r.kind)},
           {"listed_index", r.listed_index ? Json(*r.listed_index) : Json()},
           {"classes", classes_json(r.classes, r.witnesses)},
           {"region", region_json(r.computed)}};
  out["claimed_region"] = r.claimed ? region_json(*r.claimed) : Json();
  out["claim"] = r.claim;
  const auto agrees = r.agrees();
  out["agrees"] = agrees ? Json(*agrees) : Json();
  if (!r.point_checks.empty()) out["point_checks"] = point_checks_json(r.point_checks);
  return out;
}

Json finding_json(const Finding& f) {
  Json out{{"spec", to_string(f.spec)},
           {"classes", classes_json(f.classes, f.witnesses)},
           {"region", region_json(f.region)},
           {"consistent", f.consistent()},
           {"point_checks", point_checks_json(f.point_checks)}};
  if (f.stated) {
    out["stated_case_analysis"] =
        Json{{"classes", class_names(f.stated->stated_classes)},
             {"region", region_json(f.stated->stated_region)},
             {"recomputed_classes", class_names(f.classes.classes)},
             {"matches", f.stated->stated_classes == f.classes.classes}};
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::vector<std::string> escaped;
  for (const auto& f : fields) escaped.push_back(csv_field(f));
  return join(escaped, ",") + "\n";
}

std::string opt_bool(std::optional<bool> v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

constexpr std::string_view kCsvHeader =
    "section,spec,kind,listed_index,classes,region,region_names,claimed_region,"
    "agrees,finding\n";

void append_csv(std::string& out, const VerdictReport& report) {
  const auto finding_for = [&](const WeaklyPeriodicSpec& spec) -> const Finding* {
    for (const auto& f : report.findings) {
      if (f.spec == spec) return &f;
    }
    return nullptr;
  };
  const auto status = [](const Finding* f) -> std::string {
    if (f == nullptr) return "";
    return f->consistent() ? "consistent" : "inconsistent";
  };
  for (const auto& r : report.records) {
    out += csv_row({report.name, r.label, to_string(r.kind),
                    r.listed_index ? std::to_string(*r.listed_index) : "",
                    join(class_names(r.classes.classes), ";"),
                    to_string(r.computed), region_names(r.computed),
                    r.claimed ? to_string(*r.claimed) : "", opt_bool(r.agrees()),
                    status(finding_for(r.spec))});
  }
  // Findings whose spec has no record row of its own.
  for (const auto& f : report.findings) {
    const bool has_row =
        std::any_of(report.records.begin(), report.records.end(),
                    [&](const SpecRecord& r) { return r.spec == f.spec; });
    if (has_row) continue;
    out += csv_row({report.name, to_string(f.spec),
                    to_string(classify_spec(f.spec)), "",
                    join(class_names(f.classes.classes), ";"),
                    to_string(f.region), region_names(f.region),
                    to_string(Region::everything_equal()), "false",
                    status(&f)});
  }
}

std::string md_classes(const ClassSetResult& result) {
  std::vector<std::string> parts;
  for (ClassIndex m : result.classes) parts.push_back(describe(m));
  return join(parts, " ");
}

void append_markdown(std::ostringstream& os, const VerdictReport& report) {
  os << "## " << report.name << " (depth " << report.depth << ")\n\n";
  os << "| spec | kind | listed | classes | region | claimed | agrees |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : report.records) {
    os << "| " << r.label << " | " << to_string(r.kind) << " | "
       << (r.listed_index ? "φ" + std::to_string(*r.listed_index) : "") << " | "
       << md_classes(r.classes) << " | " << to_string(r.computed) << " "
       << region_names(r.computed) << " | "
       << (r.claimed ? region_names(*r.claimed) : "") << " | "
       << opt_bool(r.agrees()) << " |\n";
  }
  os << "\nAgreements: " << report.agreements()
     << ", disagreements: " << report.disagreements() << "\n";

  if (!report.findings.empty()) {
    os << "\n### Findings (" << report.findings.size()
       << " unlisted non-periodic specs with a region larger than a=b=c)\n\n";
    os << "| spec | classes | region | witnesses replayed | oracle consistent |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& f : report.findings) {
      std::size_t replayed = 0;
      for (const auto& w : f.witnesses) replayed += w.confirmed() ? 1 : 0;
      os << "| " << to_string(f.spec) << " | " << md_classes(f.classes) << " | "
         << to_string(f.region) << " " << region_names(f.region) << " | "
         << replayed << "/" << f.witnesses.size() << " | "
         << (f.consistent() ? "yes" : "no") << " |\n";
    }
    for (const auto& f : report.findings) {
      if (!f.stated) continue;
      os << "\nStated case analysis for " << to_string(f.spec) << ": classes "
         << join(class_names(f.stated->stated_classes), ", ") << ", region "
         << region_names(f.stated->stated_region) << ". Recomputed: "
         << join(class_names(f.classes.classes), ", ") << ", region "
         << region_names(f.region) << ".\n";
      for (const auto& w : f.witnesses) {
        os << "- " << to_string(w.claimed_class) << " via pattern "
           << to_string(w.pattern) << " at vertex " << to_string(w.vertex)
           << " (tree ball "
           << (w.observed_ball ? to_string(*w.observed_ball) : "n/a") << ")\n";
      }
    }
  }

  os << "\nSymbolic/oracle cross-check: " << report.cross_check.checks
     << " checks, " << report.cross_check.mismatches.size() << " mismatches\n";
  for (const auto& m : report.cross_check.mismatches) {
    os << "- MISMATCH " << m.label << " at " << to_string(m.point) << " root "
       << to_string(m.root_rule) << ": symbolic " << m.symbolic << ", oracle "
       << m.oracle << "\n";
  }
  os << "\n";
}

}  // namespace

ReportFormat parse_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "markdown" || text == "md") return ReportFormat::Markdown;
  throw ParseError("format must be json, csv or markdown, got '" +
                   std::string(text) + "'");
}

ParamClassification classify_params(const ExactParams& p) {
  ParamClassification out{p, {}, min_class_energy(p), {}, Region::everything_equal()};
  for (ClassIndex m : all_classes()) {
    out.energies.push_back(class_energy(m, p));
    if (region_membership(m, p)) out.members.push_back(m);
  }
  const Rational least = std::min({p.a, p.b, p.c});
  std::uint8_t mask = 0;
  for (Coupling c : kCouplings) {
    if (p[c] == least) mask |= 1U << static_cast<int>(c);
  }
  out.forced = Region(mask);
  return out;
}

SpecAnalysis analyze_spec(const AnySpec& spec, const SubgroupDescriptor& subgroup,
                          int depth, RootConvention root_rule) {
  ClassSetResult classes = std::visit(
      [&](const auto& s) -> ClassSetResult {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, PeriodicSpec>) {
          return periodic_class_set(s, subgroup);
        } else {
          return class_set(s, subgroup);
        }
      },
      spec);
  const std::string label =
      std::visit([](const auto& s) { return to_string(s); }, spec);
  auto witnesses = confirm_witnesses(classes, depth, root_rule);
  const Region region = region_of_classes(classes.classes);
  const SpecKind kind = classify_spec(classes.spec);
  return {label, kind, std::move(classes), std::move(witnesses), region};
}

bool VerifyRun::internally_consistent() const {
  for (const auto& s : sections) {
    if (!s.internally_consistent()) return false;
  }
  for (const auto& l : lemmas) {
    if (!l.ok()) return false;
  }
  return true;
}

Json to_json(const ParamClassification& c) {
  Json energies = Json::array();
  for (std::size_t i = 0; i < c.energies.size(); ++i) {
    const ClassIndex m(static_cast<int>(i) + 1);
    energies.push_back({{"class", to_string(m)},
                        {"symbols", symbols_string(m)},
                        {"energy", to_string(c.energies[i])},
                        {"minimal", region_membership(m, c.params)}});
  }
  std::vector<std::string> members;
  for (ClassIndex m : c.members) members.push_back("A" + std::to_string(m.value()));
  return Json{{"schema_version", kSchemaVersion},
              {"command", "classify-params"},
              {"params", params_json(c.params)},
              {"energies", energies},
              {"minimum", to_string(c.minimum)},
              {"member_of", members},
              {"region", region_json(c.forced)}};
}

Json to_json(const SpecAnalysis& a) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", "analyze-spec"},
              {"spec", a.label},
              {"kind", to_string(a.kind)},
              {"subgroup", a.classes.subgroup.generators()},
              {"classes", classes_json(a.classes, a.witnesses)},
              {"region", region_json(a.region)}};
}

Json to_json(const VerdictReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  Json findings = Json::array();
  for (const auto& f : report.findings) findings.push_back(finding_json(f));
  Json mismatches = Json::array();
  for (const auto& m : report.cross_check.mismatches) {
    mismatches.push_back({{"spec", m.label},
                          {"point", params_json(m.point)},
                          {"root_rule", to_string(m.root_rule)},
                          {"symbolic", m.symbolic},
                          {"oracle", m.oracle}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"report", report.name},
              {"depth", report.depth},
              {"summary",
               {{"records", report.records.size()},
                {"agreements", report.agreements()},
                {"disagreements", report.disagreements()},
                {"findings", report.findings.size()},
                {"cross_checks", report.cross_check.checks},
                {"mismatches", report.cross_check.mismatches.size()},
                {"internally_consistent", report.internally_consistent()}}},
              {"records", records},
              {"findings", findings},
              {"mismatches", mismatches}};
}

Json to_json(const VerifyRun& run) {
  Json sections = Json::array();
  for (const auto& s : run.sections) sections.push_back(to_json(s));
  Json lemmas = Json::array();
  for (const auto& l : run.lemmas) {
    lemmas.push_back({{"name", l.name},
                      {"cases", l.cases},
                      {"failures", l.failures},
                      {"first_failure", l.first_failure}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"command", "verify"},
              {"which", run.which},
              {"depth", run.depth},
              {"seed", run.seed},
              {"internally_consistent", run.internally_consistent()},
              {"sections", sections},
              {"lemmas", lemmas}};
}

std::string render(const ParamClassification& c, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return to_json(c).dump(2) + "\n";
    case ReportFormat::Csv: {
      std::string out = "class,symbols,energy,minimal\n";
      for (std::size_t i = 0; i < c.energies.size(); ++i) {
        const ClassIndex m(static_cast<int>(i) + 1);
        out += csv_row({to_string(m), symbols_string(m), to_string(c.energies[i]),
                        region_membership(m, c.params) ? "true" : "false"});
      }
      return out;
    }
    default: {
      std::ostringstream os;
      os << "# Parameter classification " << to_string(c.params) << "\n\n";
      os << "| class | symbols | U |\n|---|---|---|\n";
      for (std::size_t i = 0; i < c.energies.size(); ++i) {
        const ClassIndex m(static_cast<int>(i) + 1);
        os << "| " << to_string(m) << " | " << symbols_string(m) << " | "
           << to_decimal_string(c.energies[i]) << " |\n";
      }
      std::vector<std::string> members;
      for (ClassIndex m : c.members) members.push_back("A" + std::to_string(m.value()));
      os << "\nmin = " << to_decimal_string(c.minimum) << "\n";
      os << "member of: " << join(members, ", ") << "\n";
      os << "region: " << to_string(c.forced) << " " << region_names(c.forced) << "\n";
      return os.str();
    }
  }
}

std::string render(const SpecAnalysis& a, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return to_json(a).dump(2) + "\n";
    case ReportFormat::Csv: {
      std::string out = "spec,kind,class,symbols,pattern,vertex,ball,confirmed,region\n";
      for (const auto& [m, w] : a.classes.witnesses) {
        bool confirmed = false;
        for (const auto& r : a.witnesses) {
          if (r.claimed_class == m) confirmed = r.confirmed();
        }
        out += csv_row({a.label, to_string(a.kind), to_string(m), symbols_string(m),
                        to_string(w.pattern), to_string(w.vertex),
                        to_string(w.ball), confirmed ? "true" : "false",
                        to_string(a.region)});
      }
      return out;
    }
    default: {
      std::ostringstream os;
      os << "# " << a.label << "\n\nkind: " << to_string(a.kind) << "\n";
      os << "classes: " << md_classes(a.classes) << "\n";
      os << "region: " << to_string(a.region) << " (" << region_names(a.region)
         << ")\n\n| class | pattern | vertex | ball |\n|---|---|---|---|\n";
      for (const auto& [m, w] : a.classes.witnesses) {
        os << "| " << to_string(m) << " | " << to_string(w.pattern) << " | "
           << to_string(w.vertex) << " | " << to_string(w.ball) << " |\n";
      }
      return os.str();
    }
  }
}

std::string render(const VerdictReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return to_json(report).dump(2) + "\n";
    case ReportFormat::Csv: {
      std::string out(kCsvHeader);
      append_csv(out, report);
      return out;
    }
    default: {
      std::ostringstream os;
      append_markdown(os, report);
      return os.str();
    }
  }
}

std::string render(const VerifyRun& run, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return to_json(run).dump(2) + "\n";
    case ReportFormat::Csv: {
      std::string out(kCsvHeader);
      for (const auto& s : run.sections) append_csv(out, s);
      return out;
    }
    default: {
      std::ostringstream os;
      os << "# Verification: " << run.which << " (depth " << run.depth
         << ", seed " << run.seed << ")\n\n";
      for (const auto& s : run.sections) append_markdown(os, s);
      if (!run.lemmas.empty()) {
        os << "## Lemma checks\n\n| check | cases | failures |\n|---|---|---|\n";
        for (const auto& l : run.lemmas) {
          os << "| " << l.name << " | " << l.cases << " | " << l.failures << " |\n";
        }
        os << "\n";
      }
      os << "Internally consistent: "
         << (run.internally_consistent() ? "yes" : "no") << "\n";
      return os.str();
    }
  }
}

}  // namespace lambda_gs
