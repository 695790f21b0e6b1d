#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lambda_gs/group_words.hpp"

namespace lambda_gs {

// Cap on materialized tree depth. Reads LAMBDA_GS_MAX_DEPTH, default 16.
int max_depth();

// V_n: all reduced words of length <= n, shortlex order. Throws
// CapacityError when n exceeds max_depth().
std::vector<GroupWord> vertices_up_to(int n, int k);

// A vertex with its k+1 neighbors; neighbors are listed in generator order.
struct Ball {
  GroupWord center;
  std::vector<GroupWord> neighbors;
};

Ball unit_ball(const GroupWord& x, int k);

// Vertices of V_n whose grandparent exists and whose ball lies in V_n, i.e.
// 2 <= |x| <= n-1. Throws EmptyInteriorError for n < 3.
std::vector<GroupWord> interior_centers(int n, int k);

// Coset data seen from a vertex x with |x| >= 2 for k = 2: cosets of x↓↓,
// x↓, x and the (sorted) cosets of its two children.
struct LocalPattern {
  int grandparent = 0;
  int parent = 0;
  int center = 0;
  std::array<int, 2> children{};

  friend auto operator<=>(const LocalPattern&, const LocalPattern&) = default;
};

// "(0,0,1|1,1)"
std::string to_string(const LocalPattern& pattern);

// Reads the pattern off the tree at x. Requires |x| >= 2 and k = 2.
LocalPattern pattern_at(const GroupWord& x, const SubgroupDescriptor& subgroup);

// Pattern -> first witness vertex (shortlex).
using PatternSet = std::map<LocalPattern, GroupWord>;

// Raw scan of every center x with 2 <= |x| <= depth. A pattern only needs
// the letters of x, so the balls may reach depth + 1. Requires k = 2.
PatternSet scan_patterns(const SubgroupDescriptor& subgroup, int depth);

inline constexpr int kPatternScanDepth = 5;

// The local patterns realized somewhere in the infinite tree, derived by an
// exhaustive scan and cached per subgroup. Only k = 2, |A| = 1 is
// supported; anything else throws UnsupportedRegimeError.
const PatternSet& realizable_patterns(const SubgroupDescriptor& subgroup);

}  // namespace lambda_gs
