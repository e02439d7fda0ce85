#include "sparselin/sparse_core.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "sparselin/dataset.hpp"

namespace sparselin {

namespace {

void check_dims(std::size_t dense, std::size_t sparse) {
  if (dense != sparse) {
    throw DimensionError("dense length " + std::to_string(dense) +
                         " does not match sparse dimension " + std::to_string(sparse));
  }
}

// The fused passes walk [0, n) once in fixed-size blocks and handle every
// vector's slice of a block before moving on. Per-vector inner loops over a
// block vectorize cleanly, where an element-at-a-time loop across several
// streams does not; the arity is a template parameter so they unroll.
constexpr std::size_t kBlock = 512;

template <std::size_t K>
void fused_zero(double* const* ptrs, std::size_t n) {
  for (std::size_t lo = 0; lo < n; lo += kBlock) {
    const std::size_t len = std::min(kBlock, n - lo);
    for (std::size_t j = 0; j < K; ++j) std::fill_n(ptrs[j] + lo, len, 0.0);
  }
}

// Accumulates each block in a local buffer, adding the terms in order to an
// initial 0.0 exactly as the scalar definition does, then stores it. `out`
// may alias a term vector: a block is fully read before it is written.
template <std::size_t K>
void fused_combine(std::span<const ScaledVec> terms, double* out, std::size_t n) {
  std::array<double, kBlock> acc;
  for (std::size_t lo = 0; lo < n; lo += kBlock) {
    const std::size_t len = std::min(kBlock, n - lo);
    std::fill_n(acc.begin(), len, 0.0);
    for (std::size_t j = 0; j < K; ++j) {
      const double c = terms[j].coeff;
      const double* src = terms[j].vec.data() + lo;
      for (std::size_t i = 0; i < len; ++i) acc[i] += c * src[i];
    }
    std::copy_n(acc.begin(), len, out + lo);
  }
}

}  // namespace

DenseVec::DenseVec(std::size_t n, TouchCounter* counter)
    : data_(std::make_unique_for_overwrite<double[]>(n)), size_(n) {
  std::fill_n(data_.get(), n, 0.0);
  if (counter != nullptr) counter->charge_dense(n);
}

DenseVec::DenseVec(std::vector<double> values) : DenseVec(uninitialized(values.size())) {
  std::copy(values.begin(), values.end(), data_.get());
}

DenseVec::DenseVec(std::initializer_list<double> values)
    : DenseVec(std::vector<double>(values)) {}

DenseVec::DenseVec(const DenseVec& other) : DenseVec(uninitialized(other.size_)) {
  std::copy(other.begin(), other.end(), data_.get());
}

DenseVec& DenseVec::operator=(const DenseVec& other) {
  if (this != &other) {
    DenseVec copy(other);
    *this = std::move(copy);
  }
  return *this;
}

DenseVec DenseVec::uninitialized(std::size_t n) {
  DenseVec v;
  v.data_ = std::make_unique_for_overwrite<double[]>(n);
  v.size_ = n;
  return v;
}

bool operator==(const DenseVec& lhs, const DenseVec& rhs) {
  return std::equal(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

std::vector<DenseVec> zero_accumulators(std::size_t n, std::size_t count,
                                        TouchCounter* counter) {
  std::vector<DenseVec> out;
  out.reserve(count);
  std::vector<double*> ptrs;
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(DenseVec::uninitialized(n));
    ptrs.push_back(out.back().data());
  }
  switch (count) {
    case 1:
      fused_zero<1>(ptrs.data(), n);
      break;
    case 2:
      fused_zero<2>(ptrs.data(), n);
      break;
    case 3:
      fused_zero<3>(ptrs.data(), n);
      break;
    default:
      for (std::size_t i = 0; i < n; ++i) {
        for (double* p : ptrs) p[i] = 0.0;
      }
  }
  if (counter != nullptr) counter->charge_dense(n);
  return out;
}

SparseVec::SparseVec(std::size_t dim, std::vector<SparseEntry> entries)
    : entries_(std::move(entries)), dim_(dim) {
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j > 0 && entries_[j].index <= entries_[j - 1].index) {
      throw IndexOrderError("sparse indices must be strictly increasing (index " +
                            std::to_string(entries_[j].index) + " follows " +
                            std::to_string(entries_[j - 1].index) + ")");
    }
    if (entries_[j].index >= dim_) {
      throw DimensionError("sparse index " + std::to_string(entries_[j].index) +
                           " out of range for dimension " + std::to_string(dim_));
    }
  }
}

SparseVec SparseVec::with_dim(std::size_t dim) const {
  if (!entries_.empty() && entries_.back().index >= dim) {
    throw DimensionError("cannot shrink sparse vector below its largest index");
  }
  SparseVec out = *this;
  out.dim_ = dim;
  return out;
}

DenseVec densify(const SparseVec& x) {
  DenseVec out(x.dim());
  for (const auto& e : x) out[e.index] = e.value;
  return out;
}

SparseVec sparsify(const DenseVec& v) {
  std::vector<SparseEntry> entries;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0.0) entries.push_back({i, v[i]});
  }
  return SparseVec(v.size(), std::move(entries));
}

double dot(const DenseVec& v, const SparseVec& x, TouchCounter* counter) {
  check_dims(v.size(), x.dim());
  double sum = 0.0;
  for (const auto& e : x) sum += v[e.index] * e.value;
  if (counter != nullptr) counter->charge_sparse(x.nnz());
  return sum;
}

void axpy(DenseVec& v, double alpha, const SparseVec& x, TouchCounter* counter) {
  check_dims(v.size(), x.dim());
  for (const auto& e : x) v[e.index] += alpha * e.value;
  if (counter != nullptr) counter->charge_sparse(x.nnz());
}

void accumulate_mean(const Dataset& data, DenseVec& out, TouchCounter* counter) {
  if (data.empty()) throw EmptyDatasetError("mean of an empty dataset");
  if (out.size() != data.dim()) {
    throw DimensionError("mean target length " + std::to_string(out.size()) +
                         " does not match dataset dimension " + std::to_string(data.dim()));
  }
  const auto m = static_cast<double>(data.size());
  for (const auto& ex : data) {
    for (const auto& e : ex.x) out[e.index] += e.value / m;
    if (counter != nullptr) counter->charge_sparse(ex.x.nnz());
  }
}

DenseVec mean_vector(const Dataset& data, TouchCounter* counter) {
  if (data.empty()) throw EmptyDatasetError("mean of an empty dataset");
  DenseVec mean(data.dim(), counter);
  accumulate_mean(data, mean, counter);
  return mean;
}

double squared_norm(const DenseVec& v, TouchCounter* counter) {
  double sum = 0.0;
  for (double value : v) sum += value * value;
  if (counter != nullptr) counter->charge_dense(v.size());
  return sum;
}

void finalize_combine_into(DenseVec& target, std::span<const ScaledVec> terms,
                           TouchCounter* counter) {
  if (terms.empty()) throw DimensionError("finalize_combine needs at least one term");
  const std::size_t n = target.size();
  for (const auto& term : terms) {
    if (term.vec.size() != n) {
      throw DimensionError("finalize_combine length mismatch: " + std::to_string(n) + " vs " +
                           std::to_string(term.vec.size()));
    }
  }
  double* out = target.data();
  switch (terms.size()) {
    case 1:
      fused_combine<1>(terms, out, n);
      break;
    case 2:
      fused_combine<2>(terms, out, n);
      break;
    case 3:
      fused_combine<3>(terms, out, n);
      break;
    default:
      for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (const auto& term : terms) sum += term.coeff * term.vec[i];
        out[i] = sum;
      }
  }
  if (counter != nullptr) counter->charge_dense(n);
}

DenseVec finalize_combine(std::span<const ScaledVec> terms, TouchCounter* counter) {
  if (terms.empty()) throw DimensionError("finalize_combine needs at least one term");
  DenseVec out = DenseVec::uninitialized(terms.front().vec.size());
  finalize_combine_into(out, terms, counter);
  return out;
}

DenseVec finalize_combine(std::initializer_list<ScaledVec> terms, TouchCounter* counter) {
  return finalize_combine(std::span<const ScaledVec>(terms.begin(), terms.size()), counter);
}

void Dataset::add(SparseVec x, double y) {
  if (x.dim() != dim_) {
    throw DimensionError("example dimension " + std::to_string(x.dim()) +
                         " does not match dataset dimension " + std::to_string(dim_));
  }
  examples_.push_back({std::move(x), y});
}

std::size_t Dataset::max_nnz() const noexcept {
  std::size_t k = 0;
  for (const auto& ex : examples_) k = std::max(k, ex.x.nnz());
  return k;
}

}  // namespace sparselin
