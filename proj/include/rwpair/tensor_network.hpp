#pragma once

#include "rwpair/sparse_tensor.hpp"

#include <string>
#include <vector>

namespace rwpair {

/// A closed or open network of sparse tensors. Each tensor axis carries an
/// integer label; a label occurring on two axes is summed over. Labels that
/// occur once are open and appear in the result in increasing label order.
class TensorNetwork {
 public:
  /// Returns the node id.
  int add(SparseTensor tensor, std::vector<int> labels);

  int size() const { return static_cast<int>(nodes_.size()); }

  /// Contracts greedily: at every step the pair of nodes whose contraction
  /// yields the smallest dense intermediate is merged first.
  SparseTensor contract() const;

  /// Largest dense intermediate size seen by the last contract() call.
  std::size_t last_peak() const { return peak_; }

 private:
  struct Node {
    SparseTensor tensor;
    std::vector<int> labels;
  };
  std::vector<Node> nodes_;
  mutable std::size_t peak_ = 0;
};

}  // namespace rwpair
