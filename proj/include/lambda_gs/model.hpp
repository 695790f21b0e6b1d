#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "lambda_gs/errors.hpp"
#include "lambda_gs/rational.hpp"

namespace lambda_gs {

// Spin value in {1, 2, 3}.
class Spin {
 public:
  explicit Spin(int value);

  int value() const { return value_; }

  friend auto operator<=>(const Spin&, const Spin&) = default;

 private:
  int value_;
};

inline constexpr int kSpinCount = 3;
std::array<Spin, kSpinCount> all_spins();

// The three couplings of the λ-function: a for |i-j| = 2, b for |i-j| = 1,
// c for i = j.
enum class Coupling : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Coupling, 3> kCouplings{Coupling::A, Coupling::B,
                                                    Coupling::C};

char symbol(Coupling coupling);

inline Coupling coupling_kind(Spin i, Spin j) {
  switch (std::abs(i.value() - j.value())) {
    case 2:
      return Coupling::A;
    case 1:
      return Coupling::B;
    default:
      return Coupling::C;
  }
}

template <typename Scalar>
struct LambdaParams {
  Scalar a{};
  Scalar b{};
  Scalar c{};

  const Scalar& operator[](Coupling coupling) const {
    switch (coupling) {
      case Coupling::A:
        return a;
      case Coupling::B:
        return b;
      default:
        return c;
    }
  }

  friend bool operator==(const LambdaParams&, const LambdaParams&) = default;
};

using ExactParams = LambdaParams<Rational>;

std::string to_string(const ExactParams& p);

template <typename Scalar>
Scalar lambda_value(Spin i, Spin j, const LambdaParams<Scalar>& p) {
  return p[coupling_kind(i, j)];
}

// Spins on a unit ball: the center and the multiset of its three neighbor
// spins (kept sorted).
class BallConfig {
 public:
  BallConfig(Spin center, std::array<Spin, 3> neighbors);

  Spin center() const { return center_; }
  const std::array<Spin, 3>& neighbors() const { return neighbors_; }

  // B^{(i)}: how many neighbors carry spin i.
  int count(Spin spin) const;

  friend auto operator<=>(const BallConfig&, const BallConfig&) = default;

 private:
  Spin center_;
  std::array<Spin, 3> neighbors_;
};

std::string to_string(const BallConfig& ball);

// Every distinct BallConfig: 3 centers x 10 neighbor multisets.
std::vector<BallConfig> all_ball_configs();

// One of the ten energy classes C_1..C_10, identified with the multiset of
// couplings on the three center-neighbor edges:
//   C1 aaa  C2 bbb  C3 ccc  C4 abb  C5 acc
//   C6 aab  C7 bcc  C8 aac  C9 bbc  C10 abc
class ClassIndex {
 public:
  explicit ClassIndex(int m);

  static ClassIndex from_couplings(std::array<Coupling, 3> edges);

  int value() const { return m_; }
  // Sorted a <= b <= c.
  std::array<Coupling, 3> couplings() const;
  // The set of distinct couplings as a bitmask (bit 0 = a).
  std::uint8_t symbol_mask() const;

  friend auto operator<=>(const ClassIndex&, const ClassIndex&) = default;

 private:
  int m_;
};

inline constexpr int kClassCount = 10;
std::array<ClassIndex, kClassCount> all_classes();

// "C7"
std::string to_string(ClassIndex m);
// "bcc"
std::string symbols_string(ClassIndex m);
// "C7{b,c,c}"
std::string describe(ClassIndex m);

ClassIndex ball_class(const BallConfig& ball);

template <typename Scalar>
Scalar class_energy(ClassIndex m, const LambdaParams<Scalar>& p) {
  const auto edges = m.couplings();
  return (p[edges[0]] + p[edges[1]] + p[edges[2]]) / 2;
}

// U(σ_b): half the sum of λ over the three center-neighbor edges.
template <typename Scalar>
Scalar ball_energy(const BallConfig& ball, const LambdaParams<Scalar>& p) {
  Scalar sum{};
  for (Spin s : ball.neighbors()) sum += lambda_value(ball.center(), s, p);
  return sum / 2;
}

// min over the ten class energies.
template <typename Scalar>
Scalar min_class_energy(const LambdaParams<Scalar>& p) {
  Scalar best = class_energy(ClassIndex(1), p);
  for (ClassIndex m : all_classes()) best = std::min(best, class_energy(m, p));
  return best;
}

// (a, b, c) in A_m: U_m attains the minimum of all ten class energies.
template <typename Scalar>
bool region_membership(ClassIndex m, const LambdaParams<Scalar>& p) {
  return class_energy(m, p) == min_class_energy(p);
}

// Canonical ground-state region: the nonempty set T of couplings forced to
// equal min(a, b, c). The ten A_m collapse onto the seven possible T.
class Region {
 public:
  explicit Region(std::uint8_t mask);
  static Region of(std::initializer_list<Coupling> couplings);
  static Region everything_equal() { return Region(0b111); }

  std::uint8_t mask() const { return mask_; }
  bool forces(Coupling c) const {
    return (mask_ >> static_cast<int>(c)) & 1U;
  }

  friend auto operator<=>(const Region&, const Region&) = default;

 private:
  std::uint8_t mask_;
};

inline constexpr int kRegionCount = 7;
std::array<Region, kRegionCount> all_regions();

// A_m as a canonical region.
Region region_of(ClassIndex m);

// Intersection of A_m over the given classes. Throws std::invalid_argument
// on an empty set.
Region region_of_classes(const std::set<ClassIndex>& classes);

template <typename Scalar>
bool region_contains(Region region, const LambdaParams<Scalar>& p) {
  const Scalar least = std::min({p.a, p.b, p.c});
  for (Coupling c : kCouplings) {
    if (region.forces(c) && p[c] != least) return false;
  }
  return true;
}

inline bool region_equal(Region lhs, Region rhs) { return lhs == rhs; }

// Ascending class numbers m with region_of(m) == region.
std::vector<ClassIndex> classes_of_region(Region region);

// "T={b,c}"
std::string to_string(Region region);
// "A7=A9 {b=c<=a}"
std::string region_names(Region region);

}  // namespace lambda_gs
