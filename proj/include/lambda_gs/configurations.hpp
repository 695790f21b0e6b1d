#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lambda_gs/group_words.hpp"
#include "lambda_gs/model.hpp"

namespace lambda_gs {

// H_A-periodic configuration: sigma0 on H_0, sigma1 on H_1.
struct PeriodicSpec {
  Spin sigma0;
  Spin sigma1;

  friend auto operator<=>(const PeriodicSpec&, const PeriodicSpec&) = default;
};

// H_A-weakly periodic configuration: σ(x) = σ_ij when x↓ ∈ H_i, x ∈ H_j.
class WeaklyPeriodicSpec {
 public:
  // Values in the order σ00, σ01, σ10, σ11.
  explicit WeaklyPeriodicSpec(std::array<Spin, 4> values) : values_(values) {}
  WeaklyPeriodicSpec(int s00, int s01, int s10, int s11)
      : values_{Spin(s00), Spin(s01), Spin(s10), Spin(s11)} {}

  // Same value on both parent cosets.
  static WeaklyPeriodicSpec from_periodic(const PeriodicSpec& spec) {
    return WeaklyPeriodicSpec(
        {spec.sigma0, spec.sigma1, spec.sigma0, spec.sigma1});
  }

  Spin at(int parent_coset, int own_coset) const {
    return values_[2 * parent_coset + own_coset];
  }
  const std::array<Spin, 4>& values() const { return values_; }

  friend auto operator<=>(const WeaklyPeriodicSpec&,
                          const WeaklyPeriodicSpec&) = default;

 private:
  std::array<Spin, 4> values_;
};

// The root has no x↓; its spin is read as if a virtual parent sat in the
// chosen coset.
enum class RootConvention { VirtualParentH0, VirtualParentH1 };

inline constexpr std::array<RootConvention, 2> kRootConventions{
    RootConvention::VirtualParentH0, RootConvention::VirtualParentH1};

std::string to_string(RootConvention rule);
RootConvention parse_root_convention(std::string_view text);

enum class SpecKind { TranslationInvariant, PeriodicNonTI, WeaklyPeriodicStrict };

std::string to_string(SpecKind kind);

Spin periodic_value(const PeriodicSpec& spec, const GroupWord& x,
                    const SubgroupDescriptor& subgroup);

Spin weakly_periodic_value(
    const WeaklyPeriodicSpec& spec, const GroupWord& x,
    const SubgroupDescriptor& subgroup,
    RootConvention root_rule = RootConvention::VirtualParentH0);

SpecKind classify_spec(const WeaklyPeriodicSpec& spec);

using Configuration = std::map<GroupWord, Spin>;

// Materializes the configuration on V_n.
Configuration realize(const WeaklyPeriodicSpec& spec, int n,
                      const SubgroupDescriptor& subgroup,
                      RootConvention root_rule = RootConvention::VirtualParentH0);

// All 81 specs, lexicographic in (σ00, σ01, σ10, σ11).
std::vector<WeaklyPeriodicSpec> all_weakly_periodic_specs();
// All 9 periodic specs, lexicographic in (σ0, σ1).
std::vector<PeriodicSpec> all_periodic_specs();

// σ'_ij = σ_(1-i)(1-j): relabels H_0 <-> H_1.
WeaklyPeriodicSpec swap_cosets(const WeaklyPeriodicSpec& spec);
// v -> 4 - v on every entry.
WeaklyPeriodicSpec reflect_spins(const WeaklyPeriodicSpec& spec);

// "wp:1122" / "p:12"
std::string to_string(const WeaklyPeriodicSpec& spec);
std::string to_string(const PeriodicSpec& spec);

using AnySpec = std::variant<PeriodicSpec, WeaklyPeriodicSpec>;
AnySpec parse_spec(std::string_view text);

// One of the twenty configurations φ_1..φ_20 listed with the weakly
// periodic ground-state theorem, with the region the theorem assigns it.
struct ListedConfiguration {
  int index;
  WeaklyPeriodicSpec spec;
  Region claimed_region;
  std::string_view claim;
};

std::span<const ListedConfiguration> listed_configurations();

// Index of the configuration in the φ list, if present.
std::optional<int> listed_index(const WeaklyPeriodicSpec& spec);

}  // namespace lambda_gs
