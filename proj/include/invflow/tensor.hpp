#ifndef INVFLOW_TENSOR_HPP_
#define INVFLOW_TENSOR_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace invflow {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense row-major array. Almost everything in this project is 2-D
// [batch, features]; 1-D tensors are used for biases and per-sample sums.
template <typename T>
class BasicTensor {
 public:
  BasicTensor() = default;
  explicit BasicTensor(std::vector<std::size_t> shape, T fill = T{})
      : shape_(std::move(shape)), data_(count(shape_), fill) {}
  BasicTensor(std::vector<std::size_t> shape, std::vector<T> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != count(shape_)) throw ShapeError("tensor data does not match its shape");
  }

  static BasicTensor matrix(std::size_t rows, std::size_t cols, T fill = T{}) {
    return BasicTensor({rows, cols}, fill);
  }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t rows() const { return shape_.empty() ? 0 : shape_[0]; }
  std::size_t cols() const { return shape_.size() < 2 ? 1 : shape_[1]; }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }
  std::vector<T>& storage() { return data_; }
  const std::vector<T>& storage() const { return data_; }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }
  T& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
  const T& at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

  std::span<T> row(std::size_t r) { return std::span<T>(data_).subspan(r * cols(), cols()); }
  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(data_).subspan(r * cols(), cols());
  }

  void fill(T value) { std::fill(data_.begin(), data_.end(), value); }

  bool operator==(const BasicTensor&) const = default;

  static std::size_t count(const std::vector<std::size_t>& shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>{});
  }

 private:
  std::vector<std::size_t> shape_;
  std::vector<T> data_;
};

using Tensor = BasicTensor<double>;
using IntTensor = BasicTensor<std::int64_t>;

std::string shape_string(const std::vector<std::size_t>& shape);

inline void require_shape(const std::vector<std::size_t>& got, const std::vector<std::size_t>& want,
                          const char* what) {
  if (got != want) {
    throw ShapeError(std::string(what) + ": expected shape " + shape_string(want) + ", got " +
                     shape_string(got));
  }
}

Tensor to_real(const IntTensor& x);
// Values must already be integral.
IntTensor to_integer(const Tensor& x);

// Column block [begin, begin + count) of a matrix.
template <typename T>
BasicTensor<T> slice_cols(const BasicTensor<T>& x, std::size_t begin, std::size_t count) {
  if (x.rank() != 2 || begin + count > x.cols()) throw ShapeError("column slice out of range");
  BasicTensor<T> out = BasicTensor<T>::matrix(x.rows(), count);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    auto src = x.row(r).subspan(begin, count);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

template <typename T>
BasicTensor<T> concat_cols(std::span<const BasicTensor<T>> parts) {
  if (parts.empty()) throw ShapeError("nothing to concatenate");
  const std::size_t rows = parts[0].rows();
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rank() != 2 || p.rows() != rows) throw ShapeError("concatenated parts differ in rows");
    cols += p.cols();
  }
  BasicTensor<T> out = BasicTensor<T>::matrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto dst = out.row(r).begin();
    for (const auto& p : parts) dst = std::copy(p.row(r).begin(), p.row(r).end(), dst);
  }
  return out;
}

// Reverses the column order of every row.
template <typename T>
BasicTensor<T> flip_cols(const BasicTensor<T>& x) {
  BasicTensor<T> out = x;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    auto row = out.row(r);
    std::reverse(row.begin(), row.end());
  }
  return out;
}

double max_abs_diff(const Tensor& a, const Tensor& b);

namespace kernels {

// out = x * w + b, with x [m,k], w [k,n], b [n]. Each output element is
// accumulated over k in ascending order, independent of m.
void linear(const Tensor& x, const Tensor& w, const Tensor& b, Tensor& out);

// c[m,n] += a[m,k] * b[k,n]
void gemm_accumulate(std::span<const double> a, std::span<const double> b, std::span<double> c,
                     std::size_t m, std::size_t k, std::size_t n);

// c[k,n] += a[m,k]^T * b[m,n]
void gemm_tn_accumulate(std::span<const double> a, std::span<const double> b, std::span<double> c,
                        std::size_t m, std::size_t k, std::size_t n);

Tensor transpose(const Tensor& x);

// Round half away from zero.
double round_half_away(double v);

}  // namespace kernels
}  // namespace invflow

#endif  // INVFLOW_TENSOR_HPP_
