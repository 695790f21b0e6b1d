#pragma once

#include <random>
#include <vector>

#include "lambda_gs/group_words.hpp"

namespace lambda_gs::testing {

// Arbitrary (possibly unreduced) letter sequence over {1..k+1}.
inline std::vector<int> random_letters(std::mt19937& rng, int k, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, k + 1);
  std::vector<int> out(len(rng));
  for (int& j : out) j = gen(rng);
  return out;
}

inline GroupWord random_word(std::mt19937& rng, int k, int max_len) {
  return reduce(random_letters(rng, k, max_len), k);
}

// Brute-force V_n: every sequence over {1..k+1} of length <= n with no two
// equal neighbours, built without the library's tree code.
inline std::vector<std::vector<int>> brute_force_words(int n, int k) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> level{{}};
  for (int d = 1; d <= n; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level) {
      for (int j = 1; j <= k + 1; ++j) {
        if (!w.empty() && w.back() == j) continue;
        auto v = w;
        v.push_back(j);
        next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

// Parity of the number of letters from A, by direct counting.
inline int letter_parity(const std::vector<int>& w, const std::vector<int>& A) {
  int n = 0;
  for (int l : w) {
    for (int j : A) n += (l == j) ? 1 : 0;
  }
  return n % 2;
}

}  // namespace lambda_gs::testing
