#include <random>
#include <set>

#include <gtest/gtest.h>

#include "lambda_gs/model.hpp"

using namespace lambda_gs;

namespace {

ExactParams P(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

BallConfig ball(int center, int n1, int n2, int n3) {
  return BallConfig(Spin(center), {Spin(n1), Spin(n2), Spin(n3)});
}

ExactParams random_params(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
          Rational(num(rng), den(rng))};
}

// The ten class energies written out by hand.
std::vector<Rational> energy_table(const ExactParams& p) {
  const auto& [a, b, c] = p;
  return {3 * a / 2, 3 * b / 2, 3 * c / 2, a / 2 + b, a / 2 + c,
          a + b / 2, b / 2 + c, a + c / 2, b + c / 2, (a + b + c) / 2};
}

// Weak orderings of (a,b,c) by rank values.
std::vector<ExactParams> order_types() {
  std::vector<ExactParams> out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        std::set<int> used{a, b, c};
        // ranks must be 0..r-1 with no gaps
        if (*used.rbegin() + 1 != static_cast<int>(used.size())) continue;
        out.push_back({Rational(5 * a - 2, 3), Rational(5 * b - 2, 3),
                       Rational(5 * c - 2, 3)});
      }
    }
  }
  return out;
}

}  // namespace

TEST(Spin, RejectsOutOfRange) {
  EXPECT_THROW(Spin(0), std::invalid_argument);
  EXPECT_THROW(Spin(4), std::invalid_argument);
  EXPECT_EQ(Spin(3).value(), 3);
}

TEST(Lambda, Examples) {
  const auto p = P(10, 20, 30);
  EXPECT_EQ(lambda_value(Spin(1), Spin(3), p), 10);
  EXPECT_EQ(lambda_value(Spin(2), Spin(2), p), 30);
  EXPECT_EQ(lambda_value(Spin(3), Spin(2), p), 20);
  for (Spin i : all_spins()) {
    for (Spin j : all_spins()) EXPECT_EQ(lambda_value(i, j, p), lambda_value(j, i, p));
  }
}

TEST(BallEnergy, Examples) {
  const auto p = P(1, 10, 100);
  EXPECT_EQ(ball_energy(ball(2, 2, 2, 2), p), 150);
  EXPECT_EQ(ball_energy(ball(2, 1, 2, 3), P(1, 2, 3)), Rational(7, 2));
  EXPECT_EQ(ball_energy(ball(1, 3, 3, 3), p), Rational(3, 2));
}

TEST(BallClass, Examples) {
  EXPECT_EQ(ball_class(ball(2, 1, 2, 3)), ClassIndex(9));
  EXPECT_EQ(ball_class(ball(1, 1, 1, 1)), ClassIndex(3));
  EXPECT_EQ(ball_class(ball(1, 3, 3, 1)), ClassIndex(8));
  EXPECT_EQ(describe(ClassIndex(7)), "C7{b,c,c}");
  EXPECT_EQ(to_string(ball(2, 3, 1, 2)), "2|1,2,3");
}

TEST(ClassEnergy, MatchesTable) {
  // (1,10,100) separates every class energy.
  const auto p = P(1, 10, 100);
  const auto table = energy_table(p);
  std::set<Rational> distinct(table.begin(), table.end());
  EXPECT_EQ(distinct.size(), 10u);
  for (ClassIndex m : all_classes()) {
    EXPECT_EQ(class_energy(m, p), table[m.value() - 1]) << to_string(m);
  }
  EXPECT_EQ(class_energy(ClassIndex(10), P(1, 2, 3)), 3);
  EXPECT_THROW(ClassIndex(0), std::invalid_argument);
  EXPECT_THROW(ClassIndex(11), std::invalid_argument);
}

TEST(BallClass, ExhaustiveAndConsistentWithEnergy) {
  const auto balls = all_ball_configs();
  EXPECT_EQ(balls.size(), 30u);
  EXPECT_EQ(std::set<BallConfig>(balls.begin(), balls.end()).size(), 30u);
  std::mt19937 rng(21);
  for (int i = 0; i < 10000; ++i) {
    const auto& b = balls[i % balls.size()];
    const auto p = random_params(rng);
    const auto e = ball_energy(b, p);
    EXPECT_EQ(e, class_energy(ball_class(b), p));
    const auto table = energy_table(p);
    EXPECT_NE(std::find(table.begin(), table.end(), e), table.end());
  }
}

TEST(Membership, Examples) {
  EXPECT_TRUE(region_membership(ClassIndex(3), P(3, 2, 1)));
  EXPECT_TRUE(region_membership(ClassIndex(1), P(1, 2, 3)));
  EXPECT_TRUE(region_membership(ClassIndex(5), P(1, 2, 1)));
  EXPECT_FALSE(region_membership(ClassIndex(2), P(1, 2, 3)));
}

TEST(Membership, CoveringAndMinimum) {
  std::mt19937 rng(22);
  for (int i = 0; i < 10000; ++i) {
    const auto p = random_params(rng);
    const auto table = energy_table(p);
    const Rational least = *std::min_element(table.begin(), table.end());
    EXPECT_EQ(min_class_energy(p), least);
    EXPECT_EQ(least, 3 * std::min({p.a, p.b, p.c}) / 2);
    bool any = false;
    for (ClassIndex m : all_classes()) any = any || region_membership(m, p);
    EXPECT_TRUE(any);
  }
}

TEST(Membership, PairIdentities) {
  std::mt19937 rng(23);
  for (int i = 0; i < 10000; ++i) {
    const auto p = random_params(rng);
    auto in = [&](int m) { return region_membership(ClassIndex(m), p); };
    EXPECT_EQ(in(4), in(6));
    EXPECT_EQ(in(5), in(8));
    EXPECT_EQ(in(7), in(9));
  }
}

TEST(Region, OfClassesExamples) {
  EXPECT_EQ(region_of_classes({ClassIndex(3)}), Region::of({Coupling::C}));
  EXPECT_EQ(region_of_classes({ClassIndex(3), ClassIndex(7), ClassIndex(9)}),
            Region::of({Coupling::B, Coupling::C}));
  EXPECT_EQ(region_of_classes({ClassIndex(1), ClassIndex(3), ClassIndex(5)}),
            Region::of({Coupling::A, Coupling::C}));
  EXPECT_THROW(region_of_classes({}), std::invalid_argument);
  EXPECT_EQ(to_string(Region::of({Coupling::C, Coupling::B})), "T={b,c}");
}

TEST(Region, ContainsExamples) {
  const auto bc = Region::of({Coupling::B, Coupling::C});
  EXPECT_TRUE(region_contains(bc, P(3, 1, 1)));
  EXPECT_FALSE(region_contains(bc, P(1, 1, 3)));
  EXPECT_TRUE(region_contains(Region::everything_equal(), P(2, 2, 2)));
}

TEST(Region, EqualExamples) {
  EXPECT_TRUE(region_equal(region_of_classes({ClassIndex(7)}),
                           region_of_classes({ClassIndex(9)})));
  const auto a1 = region_of_classes({ClassIndex(1)});
  const auto a3 = region_of_classes({ClassIndex(3)});
  EXPECT_FALSE(region_equal(a1, a3));
  EXPECT_NE(region_contains(a1, P(1, 2, 3)), region_contains(a3, P(1, 2, 3)));
}

TEST(Region, SevenCanonicalRegions) {
  std::set<Region> seen;
  for (ClassIndex m : all_classes()) seen.insert(region_of(m));
  EXPECT_EQ(seen.size(), 7u);
  const auto all = all_regions();
  EXPECT_EQ(std::set<Region>(all.begin(), all.end()), seen);
  EXPECT_EQ(classes_of_region(Region::of({Coupling::B, Coupling::C})),
            (std::vector<ClassIndex>{ClassIndex(7), ClassIndex(9)}));
  EXPECT_EQ(region_names(Region::of({Coupling::A, Coupling::C})), "A5=A8 {a=c<=b}");
}

TEST(Region, EqualityMatchesPointwiseMembership) {
  const auto points = order_types();
  ASSERT_EQ(points.size(), 13u);
  for (Region r : all_regions()) {
    for (Region s : all_regions()) {
      bool same = true;
      for (const auto& p : points) {
        same = same && region_contains(r, p) == region_contains(s, p);
      }
      EXPECT_EQ(region_equal(r, s), same);
    }
  }
}

TEST(Region, OfClassesIsConjunctionOfMembership) {
  const auto points = order_types();
  for (unsigned subset = 1; subset < (1u << 10); ++subset) {
    std::set<ClassIndex> classes;
    for (int m = 1; m <= 10; ++m) {
      if (subset & (1u << (m - 1))) classes.insert(ClassIndex(m));
    }
    const Region r = region_of_classes(classes);
    for (const auto& p : points) {
      bool all = true;
      for (ClassIndex m : classes) all = all && region_membership(m, p);
      EXPECT_EQ(region_contains(r, p), all);
    }
  }
}

TEST(Region, WorksWithDoubles) {
  const LambdaParams<double> p{3.0, 1.0, 1.0};
  EXPECT_TRUE(region_contains(Region::of({Coupling::B, Coupling::C}), p));
  EXPECT_DOUBLE_EQ(class_energy(ClassIndex(10), p), 2.5);
}
