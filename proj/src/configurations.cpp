#include "lambda_gs/configurations.hpp"

#include <stdexcept>

#include "lambda_gs/errors.hpp"
#include "lambda_gs/tree.hpp"

namespace lambda_gs {

namespace {

const Region kBC = Region::of({Coupling::B, Coupling::C});
const Region kAC = Region::of({Coupling::A, Coupling::C});

constexpr std::string_view kClaimI = "family I: ground state exactly on A9 {b=c<=a}";
constexpr std::string_view kClaimII = "family II: ground state exactly on A5 {a=c<=b}";

const std::array<ListedConfiguration, 20> kListed{{
    {1, WeaklyPeriodicSpec(1, 1, 2, 2), kBC, kClaimI},
    {2, WeaklyPeriodicSpec(1, 2, 2, 1), kBC, kClaimI},
    {3, WeaklyPeriodicSpec(1, 2, 2, 3), kBC, kClaimI},
    {4, WeaklyPeriodicSpec(2, 1, 1, 1), kBC, kClaimI},
    {5, WeaklyPeriodicSpec(2, 1, 2, 2), kBC, kClaimI},
    {6, WeaklyPeriodicSpec(2, 1, 3, 2), kBC, kClaimI},
    {7, WeaklyPeriodicSpec(2, 2, 1, 2), kBC, kClaimI},
    {8, WeaklyPeriodicSpec(2, 2, 2, 1), kBC, kClaimI},
    {9, WeaklyPeriodicSpec(2, 2, 2, 3), kBC, kClaimI},
    {10, WeaklyPeriodicSpec(2, 2, 3, 2), kBC, kClaimI},
    {11, WeaklyPeriodicSpec(2, 2, 1, 1), kBC, kClaimI},
    {12, WeaklyPeriodicSpec(3, 3, 3, 2), kBC, kClaimI},
    {13, WeaklyPeriodicSpec(1, 1, 1, 2), kBC, kClaimI},
    {14, WeaklyPeriodicSpec(1, 2, 2, 2), kBC, kClaimI},
    {15, WeaklyPeriodicSpec(1, 3, 3, 3), kAC, kClaimII},
    {16, WeaklyPeriodicSpec(3, 1, 1, 3), kAC, kClaimII},
    {17, WeaklyPeriodicSpec(3, 3, 1, 1), kAC, kClaimII},
    {18, WeaklyPeriodicSpec(3, 3, 1, 3), kAC, kClaimII},
    {19, WeaklyPeriodicSpec(3, 3, 3, 1), kAC, kClaimII},
    {20, WeaklyPeriodicSpec(1, 3, 3, 1), kAC, kClaimII},
}};

int spin_digit(char ch, std::string_view text) {
  if (ch < '1' || ch > '3') {
    throw ParseError("spin digit must be 1, 2 or 3 in '" + std::string(text) +
                     "'");
  }
  return ch - '0';
}

}  // namespace

std::string to_string(RootConvention rule) {
  return rule == RootConvention::VirtualParentH0 ? "h0" : "h1";
}

RootConvention parse_root_convention(std::string_view text) {
  if (text == "h0") return RootConvention::VirtualParentH0;
  if (text == "h1") return RootConvention::VirtualParentH1;
  throw ParseError("root rule must be 'h0' or 'h1', got '" + std::string(text) +
                   "'");
}

std::string to_string(SpecKind kind) {
  switch (kind) {
    case SpecKind::TranslationInvariant:
      return "translation-invariant";
    case SpecKind::PeriodicNonTI:
      return "periodic-non-TI";
    default:
      return "weakly-periodic-strict";
  }
}

Spin periodic_value(const PeriodicSpec& spec, const GroupWord& x,
                    const SubgroupDescriptor& subgroup) {
  return coset(x, subgroup) == 0 ? spec.sigma0 : spec.sigma1;
}

Spin weakly_periodic_value(const WeaklyPeriodicSpec& spec, const GroupWord& x,
                           const SubgroupDescriptor& subgroup,
                           RootConvention root_rule) {
  const int own = coset(x, subgroup);
  if (x.is_identity()) {
    return spec.at(root_rule == RootConvention::VirtualParentH0 ? 0 : 1, own);
  }
  return spec.at(coset(parent(x), subgroup), own);
}

SpecKind classify_spec(const WeaklyPeriodicSpec& spec) {
  const auto& v = spec.values();
  if (v[0] == v[1] && v[1] == v[2] && v[2] == v[3]) {
    return SpecKind::TranslationInvariant;
  }
  if (spec.at(0, 0) == spec.at(1, 0) && spec.at(0, 1) == spec.at(1, 1)) {
    return SpecKind::PeriodicNonTI;
  }
  return SpecKind::WeaklyPeriodicStrict;
}

Configuration realize(const WeaklyPeriodicSpec& spec, int n,
                      const SubgroupDescriptor& subgroup,
                      RootConvention root_rule) {
  if (n < 1) throw CapacityError("realize needs depth n >= 1");
  Configuration out;
  for (auto& x : vertices_up_to(n, subgroup.order())) {
    const Spin s = weakly_periodic_value(spec, x, subgroup, root_rule);
    out.emplace(std::move(x), s);
  }
  return out;
}

std::vector<WeaklyPeriodicSpec> all_weakly_periodic_specs() {
  std::vector<WeaklyPeriodicSpec> out;
  out.reserve(81);
  for (int s00 = 1; s00 <= 3; ++s00)
    for (int s01 = 1; s01 <= 3; ++s01)
      for (int s10 = 1; s10 <= 3; ++s10)
        for (int s11 = 1; s11 <= 3; ++s11)
          out.emplace_back(s00, s01, s10, s11);
  return out;
}

std::vector<PeriodicSpec> all_periodic_specs() {
  std::vector<PeriodicSpec> out;
  for (Spin s0 : all_spins())
    for (Spin s1 : all_spins()) out.push_back({s0, s1});
  return out;
}

WeaklyPeriodicSpec swap_cosets(const WeaklyPeriodicSpec& spec) {
  return WeaklyPeriodicSpec(
      {spec.at(1, 1), spec.at(1, 0), spec.at(0, 1), spec.at(0, 0)});
}

WeaklyPeriodicSpec reflect_spins(const WeaklyPeriodicSpec& spec) {
  std::array<Spin, 4> values = spec.values();
  for (auto& v : values) v = Spin(4 - v.value());
  return WeaklyPeriodicSpec(values);
}

std::string to_string(const WeaklyPeriodicSpec& spec) {
  std::string out = "wp:";
  for (Spin s : spec.values()) out += static_cast<char>('0' + s.value());
  return out;
}

std::string to_string(const PeriodicSpec& spec) {
  return std::string("p:") + static_cast<char>('0' + spec.sigma0.value()) +
         static_cast<char>('0' + spec.sigma1.value());
}

AnySpec parse_spec(std::string_view text) {
  if (text.starts_with("wp:") && text.size() == 7) {
    return WeaklyPeriodicSpec(
        spin_digit(text[3], text), spin_digit(text[4], text),
        spin_digit(text[5], text), spin_digit(text[6], text));
  }
  if (text.starts_with("p:") && text.size() == 4) {
    return PeriodicSpec{Spin(spin_digit(text[2], text)),
                        Spin(spin_digit(text[3], text))};
  }
  throw ParseError("spec must look like 'wp:1122' or 'p:12', got '" +
                   std::string(text) + "'");
}

std::span<const ListedConfiguration> listed_configurations() {
  return kListed;
}

std::optional<int> listed_index(const WeaklyPeriodicSpec& spec) {
  for (const auto& entry : kListed) {
    if (entry.spec == spec) return entry.index;
  }
  return std::nullopt;
}

}  // namespace lambda_gs
