#pragma once

#include <cstddef>
#include <vector>

#include "sparselin/sparse_core.hpp"

namespace sparselin {

struct Example {
  SparseVec x;
  double y;
};

/// Labeled sparse examples sharing one dimension. Labels are stored as reals;
/// classification losses validate them with validate_labels().
class Dataset {
 public:
  explicit Dataset(std::size_t dim = 0) : dim_(dim) {}

  /// Throws DimensionError unless x.dim() == dim().
  void add(SparseVec x, double y);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return examples_.size(); }
  bool empty() const noexcept { return examples_.empty(); }
  const Example& operator[](std::size_t i) const noexcept { return examples_[i]; }
  auto begin() const noexcept { return examples_.begin(); }
  auto end() const noexcept { return examples_.end(); }

  std::size_t max_nnz() const noexcept;

 private:
  std::vector<Example> examples_;
  std::size_t dim_;
};

}  // namespace sparselin
