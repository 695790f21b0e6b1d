#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lambda_gs/analysis.hpp"

namespace lambda_gs {

inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { Json, Csv, Markdown };

ReportFormat parse_format(std::string_view text);

// Point classification: all ten U_m, the minimum, and every A_m holding it.
struct ParamClassification {
  ExactParams params;
  std::vector<Rational> energies;  // U_1..U_10
  Rational minimum;
  std::vector<ClassIndex> members;
  Region forced;  // couplings equal to min(a, b, c)
};

ParamClassification classify_params(const ExactParams& p);

// Class set, region and replayed witnesses for one spec string.
struct SpecAnalysis {
  std::string label;
  SpecKind kind;
  ClassSetResult classes;
  std::vector<ConfirmedWitness> witnesses;
  Region region;
};

SpecAnalysis analyze_spec(const AnySpec& spec, const SubgroupDescriptor& subgroup,
                          int depth, RootConvention root_rule);

struct VerifyRun {
  std::string which;
  int depth = kOracleDepth;
  std::uint64_t seed = 0;
  std::vector<VerdictReport> sections;
  std::vector<LemmaCheck> lemmas;

  bool internally_consistent() const;
};

nlohmann::ordered_json to_json(const ParamClassification& c);
nlohmann::ordered_json to_json(const SpecAnalysis& a);
nlohmann::ordered_json to_json(const VerdictReport& report);
nlohmann::ordered_json to_json(const VerifyRun& run);

std::string render(const ParamClassification& c, ReportFormat format);
std::string render(const SpecAnalysis& a, ReportFormat format);
std::string render(const VerdictReport& report, ReportFormat format);
std::string render(const VerifyRun& run, ReportFormat format);

}  // namespace lambda_gs
