#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "sparselin/errors.hpp"

namespace sparselin {

class Dataset;

/// Tallies the work done by vector kernels so the O(n + Tk) cost model can be
/// asserted in tests.
///
/// A dense touch is one iteration of a loop over the full index range [0, n).
/// Zero-filling, scaling or combining vectors in a single fused pass costs n
/// regardless of how many arrays the pass reads or writes. A sparse touch is
/// one visited nonzero of a sparse vector.
///
/// Dense work is charged to loop_dense_touches while a LoopScope is open and to
/// outside_dense_touches otherwise. Solvers open a LoopScope around their step
/// loop, so any dense pass that sneaks into the loop shows up immediately.
struct TouchCounter {
  std::uint64_t loop_dense_touches = 0;
  std::uint64_t outside_dense_touches = 0;
  std::uint64_t sparse_touches = 0;

  void charge_dense(std::uint64_t n) noexcept {
    if (loop_depth_ > 0) {
      loop_dense_touches += n;
    } else {
      outside_dense_touches += n;
    }
  }
  void charge_sparse(std::uint64_t k) noexcept { sparse_touches += k; }
  bool in_loop() const noexcept { return loop_depth_ > 0; }

  class LoopScope {
   public:
    explicit LoopScope(TouchCounter* counter) noexcept : counter_(counter) {
      if (counter_ != nullptr) ++counter_->loop_depth_;
    }
    ~LoopScope() {
      if (counter_ != nullptr) --counter_->loop_depth_;
    }
    LoopScope(const LoopScope&) = delete;
    LoopScope& operator=(const LoopScope&) = delete;

   private:
    TouchCounter* counter_;
  };

 private:
  int loop_depth_ = 0;
};

/// Length-n random-access vector of doubles.
class DenseVec {
 public:
  DenseVec() = default;
  /// Zero vector of length n. Charges one dense pass to `counter`.
  explicit DenseVec(std::size_t n, TouchCounter* counter = nullptr);
  explicit DenseVec(std::vector<double> values);
  DenseVec(std::initializer_list<double> values);

  DenseVec(const DenseVec& other);
  DenseVec& operator=(const DenseVec& other);
  DenseVec(DenseVec&&) noexcept = default;
  DenseVec& operator=(DenseVec&&) noexcept = default;

  /// Allocates storage without initializing it; the caller must fill every slot.
  static DenseVec uninitialized(std::size_t n);

  std::size_t size() const noexcept { return size_; }
  double& operator[](std::size_t i) noexcept { return data_[i]; }
  double operator[](std::size_t i) const noexcept { return data_[i]; }
  double* data() noexcept { return data_.get(); }
  const double* data() const noexcept { return data_.get(); }
  std::span<double> values() noexcept { return {data_.get(), size_}; }
  std::span<const double> values() const noexcept { return {data_.get(), size_}; }
  double* begin() noexcept { return data_.get(); }
  double* end() noexcept { return data_.get() + size_; }
  const double* begin() const noexcept { return data_.get(); }
  const double* end() const noexcept { return data_.get() + size_; }

  std::vector<double> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const DenseVec& lhs, const DenseVec& rhs);

 private:
  std::unique_ptr<double[]> data_;
  std::size_t size_ = 0;
};

/// Allocates several zero vectors of length n, zeroed together in one pass.
std::vector<DenseVec> zero_accumulators(std::size_t n, std::size_t count,
                                        TouchCounter* counter = nullptr);

struct SparseEntry {
  std::size_t index;
  double value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted index/value list with a declared dimension. Indices are strictly
/// increasing and below dim(); explicit zero values are allowed.
class SparseVec {
 public:
  SparseVec() = default;
  explicit SparseVec(std::size_t dim) : dim_(dim) {}
  /// Throws IndexOrderError on unsorted or duplicate indices and DimensionError
  /// on an index >= dim.
  SparseVec(std::size_t dim, std::vector<SparseEntry> entries);
  SparseVec(std::size_t dim, std::initializer_list<SparseEntry> entries)
      : SparseVec(dim, std::vector<SparseEntry>(entries)) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const SparseEntry> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// Same entries under a larger (or equal) dimension.
  SparseVec with_dim(std::size_t dim) const;

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<SparseEntry> entries_;
  std::size_t dim_ = 0;
};

DenseVec densify(const SparseVec& x);
/// Keeps exactly the nonzero components of v.
SparseVec sparsify(const DenseVec& v);

/// v . x in O(k).
double dot(const DenseVec& v, const SparseVec& x, TouchCounter* counter = nullptr);

/// v += alpha * x in O(k).
void axpy(DenseVec& v, double alpha, const SparseVec& x, TouchCounter* counter = nullptr);

/// Mean feature vector of a nonempty dataset: one zero-filled allocation plus
/// O(mk) sparse accumulation.
DenseVec mean_vector(const Dataset& data, TouchCounter* counter = nullptr);

/// Adds the mean feature vector into `out` (length dim, normally zero) with
/// O(mk) sparse work only.
void accumulate_mean(const Dataset& data, DenseVec& out, TouchCounter* counter = nullptr);

/// Sum of squares, one dense pass.
double squared_norm(const DenseVec& v, TouchCounter* counter = nullptr);

struct ScaledVec {
  double coeff;
  const DenseVec& vec;
};

/// Returns sum_j coeff_j * vec_j in one dense pass. All vectors must share a
/// length and the list must be nonempty.
DenseVec finalize_combine(std::span<const ScaledVec> terms, TouchCounter* counter = nullptr);
DenseVec finalize_combine(std::initializer_list<ScaledVec> terms,
                          TouchCounter* counter = nullptr);

/// Same pass written into `target`, which may be one of the term vectors
/// (each element is read from every term before it is written). Bit-identical
/// to finalize_combine().
void finalize_combine_into(DenseVec& target, std::span<const ScaledVec> terms,
                           TouchCounter* counter = nullptr);

}  // namespace sparselin
