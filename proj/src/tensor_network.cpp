#include "rwpair/tensor_network.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rwpair {

int TensorNetwork::add(SparseTensor tensor, std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != tensor.rank())
    throw std::invalid_argument("tensor network: one label per axis required");
  nodes_.push_back({std::move(tensor), std::move(labels)});
  return static_cast<int>(nodes_.size()) - 1;
}

namespace {

struct Work {
  SparseTensor tensor;
  std::vector<int> labels;
};

// Traces away labels repeated within one tensor.
void self_trace(Work& w) {
  std::vector<int> first, second;
  for (std::size_t a = 0; a < w.labels.size(); ++a)
    for (std::size_t b = a + 1; b < w.labels.size(); ++b)
      if (w.labels[a] == w.labels[b]) {
        first.push_back(static_cast<int>(a));
        second.push_back(static_cast<int>(b));
      }
  if (first.empty()) return;
  w.tensor = trace_axes(w.tensor, first, second);
  std::vector<int> rest;
  for (std::size_t a = 0; a < w.labels.size(); ++a)
    if (std::find(first.begin(), first.end(), static_cast<int>(a)) == first.end() &&
        std::find(second.begin(), second.end(), static_cast<int>(a)) == second.end())
      rest.push_back(w.labels[a]);
  w.labels = std::move(rest);
}

std::size_t merged_size(const Work& a, const Work& b, bool& shares) {
  std::size_t size = 1;
  shares = false;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    if (std::find(b.labels.begin(), b.labels.end(), a.labels[i]) != b.labels.end())
      shares = true;
    else
      size *= static_cast<std::size_t>(a.tensor.shape()[i]);
  }
  for (std::size_t j = 0; j < b.labels.size(); ++j)
    if (std::find(a.labels.begin(), a.labels.end(), b.labels[j]) == a.labels.end())
      size *= static_cast<std::size_t>(b.tensor.shape()[j]);
  return size;
}

Work merge(const Work& a, const Work& b) {
  std::vector<int> axes_a, axes_b;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
    if (it != b.labels.end()) {
      axes_a.push_back(static_cast<int>(i));
      axes_b.push_back(static_cast<int>(it - b.labels.begin()));
    }
  }
  Work out;
  out.tensor = contract(a.tensor, axes_a, b.tensor, axes_b);
  for (std::size_t i = 0; i < a.labels.size(); ++i)
    if (std::find(axes_a.begin(), axes_a.end(), static_cast<int>(i)) == axes_a.end())
      out.labels.push_back(a.labels[i]);
  for (std::size_t j = 0; j < b.labels.size(); ++j)
    if (std::find(axes_b.begin(), axes_b.end(), static_cast<int>(j)) == axes_b.end())
      out.labels.push_back(b.labels[j]);
  return out;
}

}  // namespace

SparseTensor TensorNetwork::contract() const {
  std::map<int, int> count;
  for (const auto& n : nodes_)
    for (int l : n.labels) ++count[l];
  for (const auto& [l, c] : count)
    if (c > 2) throw std::invalid_argument("tensor network: label used more than twice");

  peak_ = 0;
  if (nodes_.empty()) return SparseTensor::scalar(1);
  std::vector<Work> work;
  for (const auto& n : nodes_) {
    work.push_back({n.tensor, n.labels});
    self_trace(work.back());
    peak_ = std::max(peak_, work.back().tensor.dense_size());
  }

  while (work.size() > 1) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    bool best_shares = false;
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = i + 1; j < work.size(); ++j) {
        bool shares = false;
        const std::size_t s = merged_size(work[i], work[j], shares);
        // Prefer pairs joined by an edge; fall back to outer products.
        if ((shares && !best_shares) || (shares == best_shares && s < best)) {
          best = s;
          best_shares = shares;
          bi = i;
          bj = j;
        }
      }
    Work merged = merge(work[bi], work[bj]);
    peak_ = std::max(peak_, merged.tensor.dense_size());
    work.erase(work.begin() + static_cast<long>(bj));
    work[bi] = std::move(merged);
    if (work[bi].tensor.is_zero()) {
      // The whole network vanishes; keep the open shape.
      std::vector<int> open;
      for (const auto& [l, c] : count)
        if (c == 1) open.push_back(l);
      std::vector<int> shape;
      for (int l : open)
        for (const auto& n : nodes_)
          for (std::size_t a = 0; a < n.labels.size(); ++a)
            if (n.labels[a] == l) shape.push_back(n.tensor.shape()[a]);
      return SparseTensor(shape);
    }
  }

  Work& last = work.front();
  std::vector<int> order(last.labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return last.labels[a] < last.labels[b]; });
  return permute_axes(Permutation(order), last.tensor);
}

}  // namespace rwpair
