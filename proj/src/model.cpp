#include "lambda_gs/model.hpp"

#include <sstream>
#include <stdexcept>

namespace lambda_gs {

namespace {

// Class m -> sorted edge couplings, in the order U_1..U_10 are tabulated.
constexpr std::array<std::array<Coupling, 3>, kClassCount> kClassCouplings{{
    {Coupling::A, Coupling::A, Coupling::A},  // U1 = 3a/2
    {Coupling::B, Coupling::B, Coupling::B},  // U2 = 3b/2
    {Coupling::C, Coupling::C, Coupling::C},  // U3 = 3c/2
    {Coupling::A, Coupling::B, Coupling::B},  // U4 = a/2 + b
    {Coupling::A, Coupling::C, Coupling::C},  // U5 = a/2 + c
    {Coupling::A, Coupling::A, Coupling::B},  // U6 = b/2 + a
    {Coupling::B, Coupling::C, Coupling::C},  // U7 = b/2 + c
    {Coupling::A, Coupling::A, Coupling::C},  // U8 = c/2 + a
    {Coupling::B, Coupling::B, Coupling::C},  // U9 = c/2 + b
    {Coupling::A, Coupling::B, Coupling::C},  // U10 = (a+b+c)/2
}};

}  // namespace

Spin::Spin(int value) : value_(value) {
  if (value < 1 || value > kSpinCount) {
    throw std::invalid_argument("spin " + std::to_string(value) +
                                " outside {1,2,3}");
  }
}

std::array<Spin, kSpinCount> all_spins() {
  return {Spin(1), Spin(2), Spin(3)};
}

char symbol(Coupling coupling) {
  return "abc"[static_cast<int>(coupling)];
}

std::string to_string(const ExactParams& p) {
  return "(" + to_decimal_string(p.a) + "," + to_decimal_string(p.b) + "," +
         to_decimal_string(p.c) + ")";
}

BallConfig::BallConfig(Spin center, std::array<Spin, 3> neighbors)
    : center_(center), neighbors_(neighbors) {
  std::sort(neighbors_.begin(), neighbors_.end());
}

int BallConfig::count(Spin spin) const {
  return static_cast<int>(
      std::count(neighbors_.begin(), neighbors_.end(), spin));
}

std::string to_string(const BallConfig& ball) {
  std::ostringstream os;
  os << ball.center().value() << "|";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) os << ',';
    os << ball.neighbors()[i].value();
  }
  return os.str();
}

std::vector<BallConfig> all_ball_configs() {
  std::vector<BallConfig> out;
  for (Spin center : all_spins()) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = i; j <= 3; ++j) {
        for (int l = j; l <= 3; ++l) {
          out.emplace_back(center,
                           std::array<Spin, 3>{Spin(i), Spin(j), Spin(l)});
        }
      }
    }
  }
  return out;
}

ClassIndex::ClassIndex(int m) : m_(m) {
  if (m < 1 || m > kClassCount) {
    throw std::invalid_argument("class index " + std::to_string(m) +
                                " outside 1..10");
  }
}

ClassIndex ClassIndex::from_couplings(std::array<Coupling, 3> edges) {
  std::sort(edges.begin(), edges.end());
  for (int m = 0; m < kClassCount; ++m) {
    if (kClassCouplings[m] == edges) return ClassIndex(m + 1);
  }
  throw std::logic_error("unreachable: every coupling multiset has a class");
}

std::array<Coupling, 3> ClassIndex::couplings() const {
  return kClassCouplings[m_ - 1];
}

std::uint8_t ClassIndex::symbol_mask() const {
  std::uint8_t mask = 0;
  for (Coupling c : couplings()) mask |= 1U << static_cast<int>(c);
  return mask;
}

std::array<ClassIndex, kClassCount> all_classes() {
  return {ClassIndex(1), ClassIndex(2), ClassIndex(3), ClassIndex(4),
          ClassIndex(5), ClassIndex(6), ClassIndex(7), ClassIndex(8),
          ClassIndex(9), ClassIndex(10)};
}

std::string to_string(ClassIndex m) { return "C" + std::to_string(m.value()); }

std::string symbols_string(ClassIndex m) {
  std::string out;
  for (Coupling c : m.couplings()) out += symbol(c);
  return out;
}

std::string describe(ClassIndex m) {
  const auto s = symbols_string(m);
  return to_string(m) + "{" + s[0] + "," + s[1] + "," + s[2] + "}";
}

ClassIndex ball_class(const BallConfig& ball) {
  std::array<Coupling, 3> edges{};
  for (std::size_t i = 0; i < 3; ++i) {
    edges[i] = coupling_kind(ball.center(), ball.neighbors()[i]);
  }
  return ClassIndex::from_couplings(edges);
}

Region::Region(std::uint8_t mask) : mask_(mask) {
  if (mask == 0 || mask > 0b111) {
    throw std::invalid_argument("region mask must be a nonempty subset of {a,b,c}");
  }
}

Region Region::of(std::initializer_list<Coupling> couplings) {
  std::uint8_t mask = 0;
  for (Coupling c : couplings) mask |= 1U << static_cast<int>(c);
  return Region(mask);
}

std::array<Region, kRegionCount> all_regions() {
  return {Region(1), Region(2), Region(3), Region(4),
          Region(5), Region(6), Region(7)};
}

Region region_of(ClassIndex m) { return Region(m.symbol_mask()); }

Region region_of_classes(const std::set<ClassIndex>& classes) {
  if (classes.empty()) {
    throw std::invalid_argument("region_of_classes needs at least one class");
  }
  // min_k U_k = (3/2) min(a,b,c), and U_m reaches it exactly when each of
  // its couplings equals the minimum; intersecting A_m unions the masks.
  std::uint8_t mask = 0;
  for (ClassIndex m : classes) mask |= m.symbol_mask();
  return Region(mask);
}

std::vector<ClassIndex> classes_of_region(Region region) {
  std::vector<ClassIndex> out;
  for (ClassIndex m : all_classes()) {
    if (region_of(m) == region) out.push_back(m);
  }
  return out;
}

std::string to_string(Region region) {
  std::string out = "T={";
  bool first = true;
  for (Coupling c : kCouplings) {
    if (!region.forces(c)) continue;
    if (!first) out += ',';
    out += symbol(c);
    first = false;
  }
  return out + "}";
}

std::string region_names(Region region) {
  std::string names;
  for (ClassIndex m : classes_of_region(region)) {
    if (!names.empty()) names += '=';
    names += "A" + std::to_string(m.value());
  }
  std::string forced;
  std::string rest;
  for (Coupling c : kCouplings) {
    auto& target = region.forces(c) ? forced : rest;
    if (!target.empty()) target += region.forces(c) ? '=' : ',';
    target += symbol(c);
  }
  if (rest.empty()) return names + " {" + forced + "}";
  return names + " {" + forced + "<=" + rest + "}";
}

}  // namespace lambda_gs
