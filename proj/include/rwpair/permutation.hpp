#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rwpair {

/// A bijection of {0, ..., n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// Parses canonical cycle notation with 1-based points, e.g. "(143)(25)".
  /// Points not mentioned are fixed; `n` is the degree.
  static Permutation from_cycles(std::string_view cycles, int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  /// +1 or -1.
  int sign() const;
  Permutation inverse() const;
  /// (*this * other)(i) = (*this)(other(i)).
  Permutation operator*(const Permutation& other) const;
  bool operator==(const Permutation&) const = default;

  std::string to_cycles() const;

 private:
  std::vector<int> image_;
};

/// Sorts `seq` in place and returns the sign of the sorting permutation, or 0
/// when `seq` has a repeated entry.
int sort_sign(std::vector<int>& seq);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace rwpair
