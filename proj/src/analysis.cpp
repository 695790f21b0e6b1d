#include "lambda_gs/analysis.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "lambda_gs/errors.hpp"

namespace lambda_gs {

namespace {

constexpr int kTheoremOrder = 2;

SubgroupDescriptor theorem_subgroup() {
  return SubgroupDescriptor::single(kTheoremOrder, 1);
}

BallConfig ball_from(const Configuration& config, const GroupWord& center) {
  const Ball ball = unit_ball(center, kTheoremOrder);
  return BallConfig(config.at(center),
                    {config.at(ball.neighbors[0]), config.at(ball.neighbors[1]),
                     config.at(ball.neighbors[2])});
}

void check_comparable(const Configuration& sigma, const Configuration& phi,
                      const std::vector<GroupWord>& vertices, int n) {
  if (sigma.size() != vertices.size() || phi.size() != vertices.size()) {
    throw std::invalid_argument("configurations must be total on V_n");
  }
  for (const auto& x : vertices) {
    if (sigma.at(x) != phi.at(x) && static_cast<int>(x.length()) > n - 2) {
      throw BoundaryDifferenceError("configurations differ at " + to_string(x) +
                                    ", within two steps of the boundary of V_" +
                                    std::to_string(n));
    }
  }
}

template <typename Spec>
ClassSetResult collect_classes(const Spec& spec, WeaklyPeriodicSpec as_weak,
                               const SubgroupDescriptor& subgroup) {
  ClassSetResult result{as_weak, subgroup, {}, {}};
  for (const auto& [pattern, vertex] : realizable_patterns(subgroup)) {
    BallConfig ball = induced_ball(pattern, spec);
    const ClassIndex m = ball_class(ball);
    result.classes.insert(m);
    result.witnesses.try_emplace(m, ClassWitness{pattern, vertex, ball});
  }
  return result;
}

std::vector<PointCheck> check_points(const WeaklyPeriodicSpec& spec,
                                     Region expected_region,
                                     std::span<const ExactParams> points,
                                     int depth,
                                     const SubgroupDescriptor& subgroup) {
  std::vector<PointCheck> out;
  for (RootConvention rule : kRootConventions) {
    const Configuration config = realize(spec, depth, subgroup, rule);
    for (const auto& p : points) {
      out.push_back({p, rule, region_contains(expected_region, p),
                     oracle_check(config, p, depth)});
    }
  }
  return out;
}

Region periodic_claim(const PeriodicSpec& spec) {
  switch (std::abs(spec.sigma0.value() - spec.sigma1.value())) {
    case 0:
      return Region::of({Coupling::C});
    case 1:
      return Region::of({Coupling::B, Coupling::C});
    default:
      return Region::of({Coupling::A, Coupling::C});
  }
}

std::string periodic_claim_text(const PeriodicSpec& spec) {
  const int gap = std::abs(spec.sigma0.value() - spec.sigma1.value());
  return "periodic |s0-s1|=" + std::to_string(gap) +
         ": ground state exactly on " + region_names(periodic_claim(spec));
}

constexpr std::string_view kOnlyDiagonalClaim =
    "unlisted non-periodic: ground state only on a=b=c";

const std::array<StatedCaseAnalysis, 1> kStated{{
    {WeaklyPeriodicSpec(3, 1, 3, 3), {ClassIndex(1), ClassIndex(3), ClassIndex(8)},
     Region::everything_equal()},
}};

}  // namespace

BallConfig induced_ball(const LocalPattern& pattern,
                        const WeaklyPeriodicSpec& spec) {
  return BallConfig(spec.at(pattern.parent, pattern.center),
                    {spec.at(pattern.grandparent, pattern.parent),
                     spec.at(pattern.center, pattern.children[0]),
                     spec.at(pattern.center, pattern.children[1])});
}

BallConfig induced_ball(const LocalPattern& pattern, const PeriodicSpec& spec) {
  const auto value = [&](int c) { return c == 0 ? spec.sigma0 : spec.sigma1; };
  return BallConfig(value(pattern.center),
                    {value(pattern.parent), value(pattern.children[0]),
                     value(pattern.children[1])});
}

ClassSetResult class_set(const WeaklyPeriodicSpec& spec,
                         const SubgroupDescriptor& subgroup) {
  return collect_classes(spec, spec, subgroup);
}

ClassSetResult periodic_class_set(const PeriodicSpec& spec,
                                  const SubgroupDescriptor& subgroup) {
  return collect_classes(spec, WeaklyPeriodicSpec::from_periodic(spec),
                         subgroup);
}

Region ground_state_region(const WeaklyPeriodicSpec& spec,
                           const SubgroupDescriptor& subgroup) {
  return region_of_classes(class_set(spec, subgroup).classes);
}

Rational relative_hamiltonian(const Configuration& sigma,
                              const Configuration& phi, int n, int k,
                              const ExactParams& p) {
  const auto vertices = vertices_up_to(n, k);
  check_comparable(sigma, phi, vertices, n);
  Rational total = 0;
  for (const auto& x : vertices) {
    if (x.is_identity()) continue;
    const GroupWord y = parent(x);
    total += lambda_value(sigma.at(x), sigma.at(y), p);
    total -= lambda_value(phi.at(x), phi.at(y), p);
  }
  return total;
}

Rational relative_hamiltonian_by_balls(const Configuration& sigma,
                                       const Configuration& phi, int n, int k,
                                       const ExactParams& p) {
  if (k != kTheoremOrder) {
    throw UnsupportedRegimeError("ball energies are defined for k = 2");
  }
  const auto vertices = vertices_up_to(n, k);
  check_comparable(sigma, phi, vertices, n);
  Rational total = 0;
  for (const auto& x : vertices) {
    if (static_cast<int>(x.length()) > n - 1) continue;
    total += ball_energy(ball_from(sigma, x), p);
    total -= ball_energy(ball_from(phi, x), p);
  }
  return total;
}

OracleResult oracle_check(const Configuration& config, const ExactParams& p,
                          int n) {
  const Rational minimum = 3 * std::min({p.a, p.b, p.c}) / 2;
  for (const auto& x : interior_centers(n, kTheoremOrder)) {
    const BallConfig ball = ball_from(config, x);
    Rational energy = ball_energy(ball, p);
    if (energy != minimum) {
      return {false,
              OracleFailure{x, ball, ball_class(ball), std::move(energy), minimum}};
    }
  }
  return {};
}

OracleResult oracle_ground_state_check(const WeaklyPeriodicSpec& spec,
                                       const ExactParams& p, int n,
                                       const SubgroupDescriptor& subgroup,
                                       RootConvention root_rule) {
  if (n < 4) throw EmptyInteriorError("oracle depth must be at least 4");
  return oracle_check(realize(spec, n, subgroup, root_rule), p, n);
}

std::vector<ExactParams> order_type_representatives() {
  const std::array<Rational, 3> by_rank{Rational(-1, 2), Rational(2, 3),
                                        Rational(7, 4)};
  std::vector<ExactParams> out;
  for (int ra = 0; ra < 3; ++ra) {
    for (int rb = 0; rb < 3; ++rb) {
      for (int rc = 0; rc < 3; ++rc) {
        // Keep rank vectors that use exactly the ranks 0..max.
        const int top = std::max({ra, rb, rc});
        bool dense = true;
        for (int r = 0; r <= top; ++r) {
          dense = dense && (ra == r || rb == r || rc == r);
        }
        if (dense) out.push_back({by_rank[ra], by_rank[rb], by_rank[rc]});
      }
    }
  }
  return out;
}

ExactParams inside_point(Region region) {
  if (region == Region::everything_equal()) return {2, 2, 2};
  const auto value = [&](Coupling c) {
    return Rational(region.forces(c) ? 1 : 2);
  };
  return {value(Coupling::A), value(Coupling::B), value(Coupling::C)};
}

ExactParams outside_point(Region region) {
  Coupling first = Coupling::A;
  for (Coupling c : kCouplings) {
    if (region.forces(c)) {
      first = c;
      break;
    }
  }
  const auto value = [&](Coupling c) { return Rational(c == first ? 2 : 1); };
  return {value(Coupling::A), value(Coupling::B), value(Coupling::C)};
}

std::size_t ParamSampler::next_index(std::size_t bound) {
  return static_cast<std::size_t>(engine_() % bound);
}

ExactParams ParamSampler::next() {
  static const std::array<Rational, 8> pool{
      Rational(-2), Rational(-1),   Rational(-1, 2), Rational(0),
      Rational(1, 3), Rational(1), Rational(3, 2),  Rational(2)};
  ExactParams p;
  p.a = pool[next_index(pool.size())];
  p.b = pool[next_index(pool.size())];
  p.c = pool[next_index(pool.size())];
  return p;
}

std::vector<ConfirmedWitness> confirm_witnesses(const ClassSetResult& result,
                                                int depth,
                                                RootConvention root_rule) {
  const Configuration config =
      realize(result.spec, depth, result.subgroup, root_rule);
  std::vector<ConfirmedWitness> out;
  for (const auto& [m, witness] : result.witnesses) {
    ConfirmedWitness replay{m, witness.pattern, witness.vertex, {}, {}};
    const auto len = static_cast<int>(witness.vertex.length());
    if (len >= 2 && len <= depth - 1 &&
        pattern_at(witness.vertex, result.subgroup) == witness.pattern) {
      replay.observed_ball = ball_from(config, witness.vertex);
      replay.observed_class = ball_class(*replay.observed_ball);
    }
    out.push_back(std::move(replay));
  }
  return out;
}

std::optional<bool> SpecRecord::agrees() const {
  if (!claimed) return std::nullopt;
  return computed == *claimed &&
         std::all_of(point_checks.begin(), point_checks.end(),
                     [](const PointCheck& c) { return c.agrees(); });
}

std::span<const StatedCaseAnalysis> stated_case_analyses() { return kStated; }

bool Finding::consistent() const {
  const auto replayed = [](const ConfirmedWitness& w) { return w.confirmed(); };
  const auto agrees = [](const PointCheck& c) { return c.agrees(); };
  return !witnesses.empty() && witnesses.size() == classes.classes.size() &&
         std::all_of(witnesses.begin(), witnesses.end(), replayed) &&
         !point_checks.empty() &&
         std::all_of(point_checks.begin(), point_checks.end(), agrees);
}

CrossCheckSummary cross_check(std::span<const WeaklyPeriodicSpec> specs,
                              std::span<const ExactParams> points,
                              std::span<const RootConvention> root_rules,
                              int depth, const SubgroupDescriptor& subgroup) {
  CrossCheckSummary summary;
  for (const auto& spec : specs) {
    const Region region = ground_state_region(spec, subgroup);
    for (RootConvention rule : root_rules) {
      const Configuration config = realize(spec, depth, subgroup, rule);
      for (const auto& p : points) {
        const bool symbolic = region_contains(region, p);
        const bool oracle = oracle_check(config, p, depth).ground_state;
        ++summary.checks;
        if (symbolic != oracle) {
          summary.mismatches.push_back({to_string(spec), p, rule, symbolic, oracle});
        }
      }
    }
  }
  return summary;
}

std::size_t VerdictReport::agreements() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(),
                    [](const SpecRecord& r) { return r.agrees() == true; }));
}

std::size_t VerdictReport::disagreements() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(),
                    [](const SpecRecord& r) { return r.agrees() == false; }));
}

bool VerdictReport::internally_consistent() const {
  for (const auto& record : records) {
    for (const auto& w : record.witnesses) {
      if (!w.confirmed()) return false;
    }
    // Point checks compare against the claimed region; a miss there only
    // matters when the computed region is the claimed one.
    if (record.claimed && record.computed == *record.claimed) {
      for (const auto& c : record.point_checks) {
        if (!c.agrees()) return false;
      }
    }
  }
  for (const auto& finding : findings) {
    if (!finding.consistent()) return false;
  }
  return cross_check.ok();
}

VerdictReport enumerate_all(const SubgroupDescriptor& subgroup, int depth) {
  VerdictReport report;
  report.name = "enumerate";
  report.depth = depth;
  const Region diagonal = Region::everything_equal();

  for (const auto& spec : all_weakly_periodic_specs()) {
    ClassSetResult classes = class_set(spec, subgroup);
    const Region region = region_of_classes(classes.classes);
    SpecRecord record{to_string(spec), spec, classify_spec(spec),
                      listed_index(spec), classes, region, std::nullopt,
                      "", confirm_witnesses(classes, depth), {}};

    if (record.kind != SpecKind::WeaklyPeriodicStrict) {
      const PeriodicSpec periodic{spec.at(0, 0), spec.at(0, 1)};
      record.claimed = periodic_claim(periodic);
      record.claim = periodic_claim_text(periodic);
    } else if (record.listed_index) {
      const auto& listed = listed_configurations()[*record.listed_index - 1];
      record.claimed = listed.claimed_region;
      record.claim = std::string(listed.claim);
    } else {
      record.claimed = diagonal;
      record.claim = std::string(kOnlyDiagonalClaim);
    }

    if (record.kind == SpecKind::WeaklyPeriodicStrict && !record.listed_index &&
        region != diagonal) {
      Finding finding{spec, classes, region, confirm_witnesses(classes, depth),
                      {}, std::nullopt};
      const std::array<ExactParams, 3> probes{
          inside_point(region), outside_point(region), inside_point(diagonal)};
      finding.point_checks = check_points(spec, region, probes, depth, subgroup);
      for (const auto& stated : stated_case_analyses()) {
        if (stated.spec == spec) finding.stated = stated;
      }
      report.findings.push_back(std::move(finding));
    }
    report.records.push_back(std::move(record));
  }
  return report;
}

VerdictReport verify_theorem_periodic(int depth) {
  const SubgroupDescriptor subgroup = theorem_subgroup();
  VerdictReport report;
  report.name = "periodic";
  report.depth = depth;

  std::vector<WeaklyPeriodicSpec> as_weak;
  for (const auto& spec : all_periodic_specs()) {
    ClassSetResult classes = periodic_class_set(spec, subgroup);
    const Region computed = region_of_classes(classes.classes);
    const Region claimed = periodic_claim(spec);
    const auto weak = WeaklyPeriodicSpec::from_periodic(spec);
    const std::array<ExactParams, 2> probes{inside_point(claimed),
                                            outside_point(claimed)};
    SpecRecord record{to_string(spec), weak, classify_spec(weak),
                      std::nullopt, classes, computed, claimed,
                      periodic_claim_text(spec),
                      confirm_witnesses(classes, depth),
                      check_points(weak, claimed, probes, depth, subgroup)};
    report.records.push_back(std::move(record));
    as_weak.push_back(weak);
  }

  const auto points = order_type_representatives();
  report.cross_check =
      cross_check(as_weak, points, kRootConventions, depth, subgroup);
  return report;
}

VerdictReport verify_theorem_weakly_periodic(int depth) {
  const SubgroupDescriptor subgroup = theorem_subgroup();
  VerdictReport report = enumerate_all(subgroup, depth);
  report.name = "weakly-periodic";

  // Keep the listed family as the records; the rest of the enumeration only
  // feeds the findings.
  std::vector<SpecRecord> listed;
  for (const auto& entry : listed_configurations()) {
    auto it = std::find_if(report.records.begin(), report.records.end(),
                           [&](const SpecRecord& r) { return r.spec == entry.spec; });
    SpecRecord record = std::move(*it);
    const std::array<ExactParams, 2> probes{inside_point(entry.claimed_region),
                                            outside_point(entry.claimed_region)};
    record.point_checks =
        check_points(entry.spec, entry.claimed_region, probes, depth, subgroup);
    listed.push_back(std::move(record));
  }
  report.records = std::move(listed);

  const auto specs = all_weakly_periodic_specs();
  const auto points = order_type_representatives();
  report.cross_check =
      cross_check(specs, points, kRootConventions, depth, subgroup);
  return report;
}

LemmaCheck check_ball_decomposition(std::uint64_t seed, std::size_t pairs,
                                    int depth) {
  LemmaCheck check{"ball decomposition of the relative Hamiltonian", 0, 0, ""};
  ParamSampler sampler(seed);
  const SubgroupDescriptor subgroup = theorem_subgroup();
  const auto specs = all_weakly_periodic_specs();
  std::vector<GroupWord> movable;
  for (auto& x : vertices_up_to(depth - 2, kTheoremOrder)) {
    movable.push_back(std::move(x));
  }

  for (std::size_t i = 0; i < pairs; ++i) {
    const auto& base = specs[sampler.next_index(specs.size())];
    const Configuration phi = realize(base, depth, subgroup);
    Configuration sigma = phi;
    const std::size_t changes = 1 + sampler.next_index(5);
    for (std::size_t j = 0; j < changes; ++j) {
      const auto& x = movable[sampler.next_index(movable.size())];
      sigma.at(x) = Spin(1 + static_cast<int>(sampler.next_index(3)));
    }
    const ExactParams p = sampler.next();
    const Rational by_edges =
        relative_hamiltonian(sigma, phi, depth, kTheoremOrder, p);
    const Rational by_balls =
        relative_hamiltonian_by_balls(sigma, phi, depth, kTheoremOrder, p);
    ++check.cases;
    if (by_edges != by_balls) {
      if (check.failures++ == 0) {
        check.first_failure = "base " + to_string(base) + " at " + to_string(p) +
                              ": edges " + to_string(by_edges) + " vs balls " +
                              to_string(by_balls);
      }
    }
  }
  return check;
}

LemmaCheck check_energy_inclusion(std::uint64_t seed, std::size_t samples) {
  LemmaCheck check{"ball energies lie in {U_1..U_10}", 0, 0, ""};
  ParamSampler sampler(seed);
  const auto balls = all_ball_configs();
  for (std::size_t i = 0; i < samples; ++i) {
    const ExactParams p = sampler.next();
    std::vector<Rational> values;
    for (ClassIndex m : all_classes()) values.push_back(class_energy(m, p));
    for (const auto& ball : balls) {
      const Rational energy = ball_energy(ball, p);
      ++check.cases;
      const bool in_set =
          std::find(values.begin(), values.end(), energy) != values.end();
      if (!in_set || energy != class_energy(ball_class(ball), p)) {
        if (check.failures++ == 0) {
          check.first_failure = "ball " + to_string(ball) + " at " + to_string(p);
        }
      }
    }
  }
  return check;
}

LemmaCheck check_region_identities(std::uint64_t seed, std::size_t samples) {
  LemmaCheck check{"region identities and covering", 0, 0, ""};
  ParamSampler sampler(seed);
  const auto in = [](int m, const ExactParams& p) {
    return region_membership(ClassIndex(m), p);
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const ExactParams p = sampler.next();
    bool ok = in(4, p) == in(6, p) && in(5, p) == in(8, p) && in(7, p) == in(9, p);

    bool covered = false;
    for (ClassIndex m : all_classes()) covered = covered || region_membership(m, p);
    ok = ok && covered;
    ok = ok && min_class_energy(p) == 3 * std::min({p.a, p.b, p.c}) / 2;

    // A random nonempty class subset: canonical region vs the conjunction.
    std::set<ClassIndex> subset;
    const std::size_t bits = 1 + sampler.next_index((1U << kClassCount) - 1);
    for (int m = 1; m <= kClassCount; ++m) {
      if ((bits >> (m - 1)) & 1U) subset.insert(ClassIndex(m));
    }
    bool all_members = true;
    for (ClassIndex m : subset) all_members = all_members && region_membership(m, p);
    ok = ok && region_contains(region_of_classes(subset), p) == all_members;

    ++check.cases;
    if (!ok && check.failures++ == 0) check.first_failure = "at " + to_string(p);
  }
  return check;
}

std::vector<LemmaCheck> run_lemma_checks(std::uint64_t seed, int depth) {
  return {check_ball_decomposition(seed, 100, depth),
          check_energy_inclusion(seed, 334),
          check_region_identities(seed, 10000)};
}

}  // namespace lambda_gs
