#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lambda_gs {

// Reduced word in G_k, the free product of k+1 copies of Z/2 generated by
// a_1, ..., a_{k+1}. Letters are stored first-to-last, so {1, 2} is a_1 a_2.
// No two adjacent letters are equal; the empty word is the identity e.
class GroupWord {
 public:
  using Letter = std::uint8_t;

  GroupWord() = default;

  static GroupWord identity() { return {}; }
  static GroupWord generator(int j);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  Letter last() const { return letters_.back(); }

  // Number of occurrences of a_j.
  int letter_count(int j) const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  // Shortlex: shorter words first, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const GroupWord& lhs,
                                          const GroupWord& rhs);

 private:
  explicit GroupWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  friend GroupWord reduce(std::span<const int> letters, int k);
  friend GroupWord multiply(const GroupWord& u, const GroupWord& v);
  friend GroupWord inverse(const GroupWord& u);
  friend GroupWord parent(const GroupWord& x);

  std::vector<Letter> letters_;
};

// Cancels adjacent equal letters until none remain. Throws
// InvalidGeneratorError for indices outside {1, ..., k+1}.
GroupWord reduce(std::span<const int> letters, int k);
GroupWord reduce(std::initializer_list<int> letters, int k);

GroupWord multiply(const GroupWord& u, const GroupWord& v);
inline GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  return multiply(u, v);
}

// Generators are involutions, so the inverse is the reversed word.
GroupWord inverse(const GroupWord& u);

// x↓ in the right representation: x with its last letter removed.
// Throws NoParentError for e.
GroupWord parent(const GroupWord& x);

// x a_j for j = 1..k+1, in generator order.
std::vector<GroupWord> neighbors(const GroupWord& x, int k);

// Immediate successors S(x): the neighbors that are one letter longer.
std::vector<GroupWord> children(const GroupWord& x, int k);

bool adjacent(const GroupWord& x, const GroupWord& y);

// Left shift T_g(x) = g x, an automorphism of the right Cayley graph.
inline GroupWord translate_left(const GroupWord& g, const GroupWord& x) {
  return multiply(g, x);
}

// The index-two normal subgroup H_A = {x : sum_{j in A} w_j(x) even}.
class SubgroupDescriptor {
 public:
  SubgroupDescriptor(int k, std::initializer_list<int> generators);
  SubgroupDescriptor(int k, std::span<const int> generators);

  static SubgroupDescriptor single(int k, int generator) {
    return SubgroupDescriptor(k, {generator});
  }

  int order() const { return k_; }
  bool contains(int j) const { return (mask_ >> j) & 1U; }
  int size() const;
  std::vector<int> generators() const;
  std::uint32_t mask() const { return mask_; }

  friend bool operator==(const SubgroupDescriptor&,
                         const SubgroupDescriptor&) = default;

 private:
  int k_ = 2;
  std::uint32_t mask_ = 0;  // bit j set iff a_j in A
};

// 0 when x is in H_0 = H_A, 1 when x is in the complementary coset H_1.
int coset(const GroupWord& x, const SubgroupDescriptor& subgroup);

// "e" or dot-separated indices such as "1.2.1".
std::string to_string(const GroupWord& x);
// Inverse of to_string. Rejects unreduced or out-of-range input.
GroupWord parse_word(std::string_view text, int k);

std::ostream& operator<<(std::ostream& os, const GroupWord& x);

}  // namespace lambda_gs
