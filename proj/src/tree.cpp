#include "lambda_gs/tree.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>
#include <utility>

#include "lambda_gs/errors.hpp"

namespace lambda_gs {

int max_depth() {
  constexpr int kDefault = 16;
  const char* env = std::getenv("LAMBDA_GS_MAX_DEPTH");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 0 || value > 64) return kDefault;
  return static_cast<int>(value);
}

std::vector<GroupWord> vertices_up_to(int n, int k) {
  if (n < 0) throw CapacityError("negative depth");
  if (n > max_depth()) {
    throw CapacityError("depth " + std::to_string(n) + " exceeds cap " +
                        std::to_string(max_depth()));
  }
  std::vector<GroupWord> out{GroupWord::identity()};
  std::size_t level_begin = 0;
  for (int depth = 1; depth <= n; ++depth) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (auto& child : children(out[i], k)) out.push_back(std::move(child));
    }
    level_begin = level_end;
  }
  return out;
}

Ball unit_ball(const GroupWord& x, int k) { return {x, neighbors(x, k)}; }

std::vector<GroupWord> interior_centers(int n, int k) {
  if (n < 3) {
    throw EmptyInteriorError("depth " + std::to_string(n) +
                             " has no interior centers (need n >= 3)");
  }
  std::vector<GroupWord> out;
  for (auto& x : vertices_up_to(n - 1, k)) {
    if (x.length() >= 2) out.push_back(std::move(x));
  }
  return out;
}

std::string to_string(const LocalPattern& pattern) {
  std::ostringstream os;
  os << '(' << pattern.grandparent << ',' << pattern.parent << ','
     << pattern.center << '|' << pattern.children[0] << ','
     << pattern.children[1] << ')';
  return os.str();
}

LocalPattern pattern_at(const GroupWord& x,
                        const SubgroupDescriptor& subgroup) {
  if (subgroup.order() != 2) {
    throw UnsupportedRegimeError("local patterns are defined for k = 2 only");
  }
  if (x.length() < 2) {
    throw NoParentError("pattern needs a grandparent; |x| = " +
                        std::to_string(x.length()));
  }
  const GroupWord up = parent(x);
  LocalPattern pattern;
  pattern.grandparent = coset(parent(up), subgroup);
  pattern.parent = coset(up, subgroup);
  pattern.center = coset(x, subgroup);
  const auto kids = children(x, 2);
  pattern.children = {coset(kids[0], subgroup), coset(kids[1], subgroup)};
  if (pattern.children[0] > pattern.children[1]) {
    std::swap(pattern.children[0], pattern.children[1]);
  }
  return pattern;
}

PatternSet scan_patterns(const SubgroupDescriptor& subgroup, int depth) {
  if (depth < 2) throw EmptyInteriorError("pattern scan needs depth >= 2");
  PatternSet out;
  for (const auto& x : vertices_up_to(depth, subgroup.order())) {
    if (x.length() >= 2) out.try_emplace(pattern_at(x, subgroup), x);
  }
  return out;
}

const PatternSet& realizable_patterns(const SubgroupDescriptor& subgroup) {
  if (subgroup.order() != 2 || subgroup.size() != 1) {
    throw UnsupportedRegimeError(
        "pattern theory is verified for k = 2 and |A| = 1 only");
  }
  static std::mutex mutex;
  static std::map<std::uint32_t, PatternSet> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(subgroup.mask());
  if (it == cache.end()) {
    it = cache.emplace(subgroup.mask(),
                       scan_patterns(subgroup, kPatternScanDepth))
             .first;
  }
  return it->second;
}

}  // namespace lambda_gs
