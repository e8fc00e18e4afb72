#include "rwpair/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rwpair {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::string_view cycles, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  while (i < cycles.size()) {
    if (cycles[i] == ' ') {
      ++i;
      continue;
    }
    if (cycles[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    while (i < cycles.size() && cycles[i] != ')') {
      // Single digits, or comma-separated numbers for degree >= 10.
      if (cycles[i] == ',' || cycles[i] == ' ') {
        ++i;
        continue;
      }
      int v = 0;
      if (n < 10) {
        v = cycles[i++] - '0';
      } else {
        while (i < cycles.size() && cycles[i] >= '0' && cycles[i] <= '9')
          v = 10 * v + (cycles[i++] - '0');
      }
      if (v < 1 || v > n || used[v - 1]) throw std::invalid_argument("bad cycle point");
      used[v - 1] = true;
      cyc.push_back(v - 1);
    }
    if (i == cycles.size()) throw std::invalid_argument("unterminated cycle");
    ++i;
    for (std::size_t j = 0; j < cyc.size(); ++j) img[cyc[j]] = cyc[(j + 1) % cyc.size()];
  }
  return Permutation(std::move(img));
}

int Permutation::sign() const {
  std::vector<bool> seen(image_.size(), false);
  int s = 1;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(image_.size());
  for (int i = 0; i < size(); ++i) img[i] = image_[other.image_[i]];
  return Permutation(std::move(img));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  const bool wide = size() >= 10;
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      if (wide && !first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

int sort_sign(std::vector<int>& seq) {
  int s = 1;
  // Insertion sort; sequences here are short.
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
      std::swap(seq[j - 1], seq[j]);
      s = -s;
    }
  }
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i - 1] == seq[i]) return 0;
  return s;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace rwpair
