#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rwpair {

/// A mathematical precondition failed on well-formed input (a form is not
/// closed, a connection does not extend the action, ...). Carries the basis
/// indices that exhibit the failure when one exists.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace rwpair
