#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lambda_gs/configurations.hpp"
#include "lambda_gs/model.hpp"
#include "lambda_gs/tree.hpp"

namespace lambda_gs {

inline constexpr int kOracleDepth = 6;

// ---------------------------------------------------------------------------
// Symbolic class sets
// ---------------------------------------------------------------------------

// A realizable pattern, the tree vertex it was first seen at, and the ball the
// spec induces on it.
struct ClassWitness {
  LocalPattern pattern;
  GroupWord vertex;
  BallConfig ball;
};

struct ClassSetResult {
  WeaklyPeriodicSpec spec;
  SubgroupDescriptor subgroup;
  std::set<ClassIndex> classes;
  std::map<ClassIndex, ClassWitness> witnesses;
};

// Ball around a vertex with the given pattern: center σ_(p,x), parent
// σ_(g,p), children σ_(x,child).
BallConfig induced_ball(const LocalPattern& pattern,
                        const WeaklyPeriodicSpec& spec);
// Same for a periodic spec, where every spin depends only on its own coset.
BallConfig induced_ball(const LocalPattern& pattern, const PeriodicSpec& spec);

// Classes of every ball the configuration realizes, one per realizable
// pattern. Root-convention independent since patterns start at depth 2.
ClassSetResult class_set(const WeaklyPeriodicSpec& spec,
                         const SubgroupDescriptor& subgroup);
ClassSetResult periodic_class_set(const PeriodicSpec& spec,
                                  const SubgroupDescriptor& subgroup);

// The exact parameter set on which the configuration is a ground state.
Region ground_state_region(const WeaklyPeriodicSpec& spec,
                           const SubgroupDescriptor& subgroup);

// ---------------------------------------------------------------------------
// Finite-tree oracle
// ---------------------------------------------------------------------------

// Edge sum over L_n of λ(σ) - λ(φ). Both maps must cover V_n and may differ
// only at depth <= n-2; otherwise BoundaryDifferenceError.
Rational relative_hamiltonian(const Configuration& sigma,
                              const Configuration& phi, int n, int k,
                              const ExactParams& p);

// Same difference written as a sum of ball energies U(σ_b) - U(φ_b) over
// every ball contained in V_n.
Rational relative_hamiltonian_by_balls(const Configuration& sigma,
                                       const Configuration& phi, int n, int k,
                                       const ExactParams& p);

struct OracleFailure {
  GroupWord center;
  BallConfig ball;
  ClassIndex ball_class;
  Rational energy;
  Rational minimum;
};

struct OracleResult {
  bool ground_state = true;
  std::optional<OracleFailure> failure;
};

// Checks U(σ_b) = (3/2) min(a,b,c) on every interior ball of V_n. k = 2.
OracleResult oracle_check(const Configuration& config, const ExactParams& p,
                          int n);

OracleResult oracle_ground_state_check(
    const WeaklyPeriodicSpec& spec, const ExactParams& p, int n,
    const SubgroupDescriptor& subgroup,
    RootConvention root_rule = RootConvention::VirtualParentH0);

// ---------------------------------------------------------------------------
// Sample points
// ---------------------------------------------------------------------------

// One exact point for each of the 13 weak orderings of (a, b, c).
std::vector<ExactParams> order_type_representatives();

// Forced couplings at 1, the rest at 2 (or (2,2,2) for the full region).
ExactParams inside_point(Region region);
// A point where the first forced coupling is not the minimum.
ExactParams outside_point(Region region);

// Seeded sampler over a small pool of rationals so ties are common.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : engine_(seed) {}
  ExactParams next();
  // Uniform-ish index in [0, bound).
  std::size_t next_index(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct PointCheck {
  ExactParams point;
  RootConvention root_rule = RootConvention::VirtualParentH0;
  bool expected = false;  // region membership (symbolic or claimed)
  OracleResult oracle;

  bool agrees() const { return expected == oracle.ground_state; }
};

// A class witness replayed on an explicit realized tree.
struct ConfirmedWitness {
  ClassIndex claimed_class;
  LocalPattern pattern;
  GroupWord vertex;
  std::optional<BallConfig> observed_ball;
  std::optional<ClassIndex> observed_class;

  bool confirmed() const { return observed_class == claimed_class; }
};

std::vector<ConfirmedWitness> confirm_witnesses(
    const ClassSetResult& result, int depth,
    RootConvention root_rule = RootConvention::VirtualParentH0);

struct SpecRecord {
  std::string label;
  WeaklyPeriodicSpec spec;
  SpecKind kind = SpecKind::WeaklyPeriodicStrict;
  std::optional<int> listed_index;
  ClassSetResult classes;
  Region computed;
  std::optional<Region> claimed;
  std::string claim;
  std::vector<ConfirmedWitness> witnesses;
  std::vector<PointCheck> point_checks;

  // nullopt when there is nothing to compare against.
  std::optional<bool> agrees() const;
};

// A case analysis for one spec as it was stated alongside the theorem, kept
// so the engine can recompute it.
struct StatedCaseAnalysis {
  WeaklyPeriodicSpec spec;
  std::set<ClassIndex> stated_classes;
  Region stated_region;
};

std::span<const StatedCaseAnalysis> stated_case_analyses();

// A strict weakly periodic spec outside φ_1..φ_20 that is nonetheless a
// ground state somewhere off the diagonal a = b = c.
struct Finding {
  WeaklyPeriodicSpec spec;
  ClassSetResult classes;
  Region region;
  std::vector<ConfirmedWitness> witnesses;
  std::vector<PointCheck> point_checks;
  std::optional<StatedCaseAnalysis> stated;

  bool consistent() const;
};

struct CrossCheckMismatch {
  std::string label;
  ExactParams point;
  RootConvention root_rule;
  bool symbolic;
  bool oracle;
};

struct CrossCheckSummary {
  std::size_t checks = 0;
  std::vector<CrossCheckMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Compares region membership with the oracle for every spec, point and root
// rule; mismatches come back in input order.
CrossCheckSummary cross_check(std::span<const WeaklyPeriodicSpec> specs,
                              std::span<const ExactParams> points,
                              std::span<const RootConvention> root_rules,
                              int depth, const SubgroupDescriptor& subgroup);

struct VerdictReport {
  std::string name;
  int depth = kOracleDepth;
  std::vector<SpecRecord> records;
  std::vector<Finding> findings;
  CrossCheckSummary cross_check;

  std::size_t agreements() const;
  std::size_t disagreements() const;
  // Symbolic and oracle paths agree everywhere and every witness replays.
  // Disagreement with a stated claim is data, not an inconsistency.
  bool internally_consistent() const;
};

// All 81 weakly periodic specs with kinds, class sets and regions, plus the
// findings list. No oracle sweep.
VerdictReport enumerate_all(const SubgroupDescriptor& subgroup,
                            int depth = kOracleDepth);

VerdictReport verify_theorem_periodic(int depth = kOracleDepth);
VerdictReport verify_theorem_weakly_periodic(int depth = kOracleDepth);

// ---------------------------------------------------------------------------
// Lemma checks
// ---------------------------------------------------------------------------

struct LemmaCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

// Edge sum vs ball sum on random perturbations confined to depth <= n-2.
LemmaCheck check_ball_decomposition(std::uint64_t seed, std::size_t pairs,
                                    int depth = kOracleDepth);
// Every ball energy is one of U_1..U_10 and the class map is consistent.
LemmaCheck check_energy_inclusion(std::uint64_t seed, std::size_t samples);
// A4 = A6, A5 = A8, A7 = A9, covering, min U = (3/2) min, and canonical
// region membership against the ten A_m.
LemmaCheck check_region_identities(std::uint64_t seed, std::size_t samples);

std::vector<LemmaCheck> run_lemma_checks(std::uint64_t seed,
                                         int depth = kOracleDepth);

}  // namespace lambda_gs
