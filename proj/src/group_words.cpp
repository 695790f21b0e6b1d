#include "lambda_gs/group_words.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <ostream>

#include "lambda_gs/errors.hpp"

namespace lambda_gs {

namespace {

void check_generator(int j, int k) {
  if (j < 1 || j > k + 1) {
    throw InvalidGeneratorError("generator index " + std::to_string(j) +
                                " outside {1.." + std::to_string(k + 1) +
                                "}");
  }
}

void check_order(int k) {
  if (k < 1 || k > 30) {
    throw InvalidGeneratorError("tree order k=" + std::to_string(k) +
                                " not supported");
  }
}

}  // namespace

GroupWord GroupWord::generator(int j) {
  if (j < 1 || j > 255) {
    throw InvalidGeneratorError("generator index " + std::to_string(j));
  }
  return GroupWord(std::vector<Letter>{static_cast<Letter>(j)});
}

int GroupWord::letter_count(int j) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), j));
}

std::strong_ordering operator<=>(const GroupWord& lhs, const GroupWord& rhs) {
  if (auto c = lhs.length() <=> rhs.length(); c != 0) return c;
  return lhs.letters_ <=> rhs.letters_;
}

GroupWord reduce(std::span<const int> letters, int k) {
  check_order(k);
  std::vector<GroupWord::Letter> out;
  out.reserve(letters.size());
  for (int j : letters) {
    check_generator(j, k);
    if (!out.empty() && out.back() == j) {
      out.pop_back();
    } else {
      out.push_back(static_cast<GroupWord::Letter>(j));
    }
  }
  return GroupWord(std::move(out));
}

GroupWord reduce(std::initializer_list<int> letters, int k) {
  return reduce(std::span<const int>(letters.begin(), letters.size()), k);
}

GroupWord multiply(const GroupWord& u, const GroupWord& v) {
  // Both inputs are reduced, so cancellation only happens at the seam.
  std::size_t cancel = 0;
  const auto& lu = u.letters_;
  const auto& lv = v.letters_;
  while (cancel < lu.size() && cancel < lv.size() &&
         lu[lu.size() - 1 - cancel] == lv[cancel]) {
    ++cancel;
  }
  std::vector<GroupWord::Letter> out(lu.begin(), lu.end() - cancel);
  out.insert(out.end(), lv.begin() + cancel, lv.end());
  return GroupWord(std::move(out));
}

GroupWord inverse(const GroupWord& u) {
  return GroupWord(std::vector<GroupWord::Letter>(u.letters_.rbegin(),
                                                  u.letters_.rend()));
}

GroupWord parent(const GroupWord& x) {
  if (x.is_identity()) {
    throw NoParentError("the root e has no parent");
  }
  return GroupWord(
      std::vector<GroupWord::Letter>(x.letters_.begin(), x.letters_.end() - 1));
}

std::vector<GroupWord> neighbors(const GroupWord& x, int k) {
  check_order(k);
  std::vector<GroupWord> out;
  out.reserve(k + 1);
  for (int j = 1; j <= k + 1; ++j) {
    out.push_back(multiply(x, GroupWord::generator(j)));
  }
  return out;
}

std::vector<GroupWord> children(const GroupWord& x, int k) {
  check_order(k);
  std::vector<GroupWord> out;
  out.reserve(k + 1);
  for (int j = 1; j <= k + 1; ++j) {
    if (x.is_identity() || x.last() != j) {
      out.push_back(multiply(x, GroupWord::generator(j)));
    }
  }
  return out;
}

bool adjacent(const GroupWord& x, const GroupWord& y) {
  // In a tree labelled by reduced words, x ~ y iff x^{-1} y is a generator.
  return multiply(inverse(x), y).length() == 1;
}

SubgroupDescriptor::SubgroupDescriptor(int k,
                                       std::initializer_list<int> generators)
    : SubgroupDescriptor(
          k, std::span<const int>(generators.begin(), generators.size())) {}

SubgroupDescriptor::SubgroupDescriptor(int k, std::span<const int> generators)
    : k_(k) {
  check_order(k);
  for (int j : generators) {
    check_generator(j, k);
    mask_ |= 1U << j;
  }
  if (mask_ == 0) {
    throw InvalidGeneratorError("subgroup generator set A must be nonempty");
  }
}

int SubgroupDescriptor::size() const { return std::popcount(mask_); }

std::vector<int> SubgroupDescriptor::generators() const {
  std::vector<int> out;
  for (int j = 1; j <= k_ + 1; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

int coset(const GroupWord& x, const SubgroupDescriptor& subgroup) {
  int parity = 0;
  for (auto letter : x.letters()) {
    if (subgroup.contains(letter)) parity ^= 1;
  }
  return parity;
}

std::string to_string(const GroupWord& x) {
  if (x.is_identity()) return "e";
  std::string out;
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(x.letters()[i]);
  }
  return out;
}

GroupWord parse_word(std::string_view text, int k) {
  if (text == "e") return GroupWord::identity();
  if (text.empty()) throw ParseError("empty word");
  std::vector<int> letters;
  std::size_t pos = 0;
  while (true) {
    const auto dot = text.find('.', pos);
    const auto token = text.substr(pos, dot == std::string_view::npos
                                            ? std::string_view::npos
                                            : dot - pos);
    int value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        end != token.data() + token.size() || token.front() == '0') {
      throw ParseError("malformed word '" + std::string(text) + "'");
    }
    if (value < 1 || value > k + 1) {
      throw ParseError("generator " + std::string(token) + " out of range in '" +
                       std::string(text) + "'");
    }
    if (!letters.empty() && letters.back() == value) {
      throw ParseError("word '" + std::string(text) + "' is not reduced");
    }
    letters.push_back(value);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return reduce(letters, k);
}

std::ostream& operator<<(std::ostream& os, const GroupWord& x) {
  return os << to_string(x);
}

}  // namespace lambda_gs
