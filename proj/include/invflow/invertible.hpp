// General invertible transformation over a partitioned space.
//
// Given a vector split into blocks x_1..x_D, two invertible binary operators
// (combine/uncombine and scale/unscale) and arbitrary block functions, the
// forward map is
//
//   y_d = (g_d(y_{1:d-1}) |> x_d) o f_d(y_{1:d-1}, x_{d+1:D})
//
// evaluated for d = 1..D, with g_1 fixed to the identity of |>. The inverse
// walks d = D..1:
//
//   x_d = g_d(y_{1:d-1}) <| (y_d * f_d(y_{1:d-1}, x_{d+1:D}))
//
// Both directions only ever see already-known blocks, so the map is a
// bijection regardless of what g_d and f_d compute.

#ifndef INVFLOW_INVERTIBLE_HPP_
#define INVFLOW_INVERTIBLE_HPP_

#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace invflow {

class InvalidSpecError : public std::invalid_argument {
 public:
  InvalidSpecError(std::size_t block, const std::string& what)
      : std::invalid_argument("block " + std::to_string(block) + ": " + what),
        block_(block) {}

  // 1-based index of the offending block.
  std::size_t block() const { return block_; }

 private:
  std::size_t block_;
};

template <typename T>
using Block = std::vector<T>;

// An operator together with the inverse that undoes it.
//
// For the combine pair: inverse(forward(a, b), b) == a.
// For the scale pair:   inverse(g, forward(g, x)) == x, and `valid` tells
// whether g may be used as a scale at all (e.g. no zeros for products).
template <typename T>
struct BinaryOpPair {
  std::function<Block<T>(const Block<T>&, const Block<T>&)> forward;
  std::function<Block<T>(const Block<T>&, const Block<T>&)> inverse;
  std::function<bool(const Block<T>&)> valid;
};

template <typename T>
class PartitionedVector {
 public:
  PartitionedVector() = default;
  explicit PartitionedVector(std::vector<Block<T>> blocks) : blocks_(std::move(blocks)) {}

  // Contiguous slices of `flat` with the given sizes.
  static PartitionedVector split(std::span<const T> flat, std::span<const std::size_t> sizes) {
    const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    if (total != flat.size()) {
      throw std::invalid_argument("block sizes do not cover the vector");
    }
    std::vector<Block<T>> blocks;
    std::size_t offset = 0;
    for (std::size_t size : sizes) {
      if (size == 0) throw std::invalid_argument("empty block");
      blocks.emplace_back(flat.begin() + offset, flat.begin() + offset + size);
      offset += size;
    }
    return PartitionedVector(std::move(blocks));
  }

  // Equal contiguous slices.
  static PartitionedVector split_equal(std::span<const T> flat, std::size_t num_blocks) {
    if (num_blocks == 0 || flat.size() % num_blocks != 0) {
      throw std::invalid_argument("vector length not divisible into equal blocks");
    }
    std::vector<std::size_t> sizes(num_blocks, flat.size() / num_blocks);
    return split(flat, sizes);
  }

  std::vector<T> flatten() const {
    std::vector<T> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  std::size_t num_blocks() const { return blocks_.size(); }
  std::vector<std::size_t> block_sizes() const {
    std::vector<std::size_t> sizes;
    for (const auto& b : blocks_) sizes.push_back(b.size());
    return sizes;
  }

  const Block<T>& operator[](std::size_t i) const { return blocks_[i]; }
  Block<T>& operator[](std::size_t i) { return blocks_[i]; }
  const std::vector<Block<T>>& blocks() const { return blocks_; }

  bool operator==(const PartitionedVector&) const = default;

 private:
  std::vector<Block<T>> blocks_;
};

// g_d sees y_{1:d-1}.
template <typename T>
using ScaleFn = std::function<Block<T>(std::span<const Block<T>> y_prev)>;

// f_d sees y_{1:d-1} and x_{d+1:D}; either span may be empty.
template <typename T>
using ShiftFn =
    std::function<Block<T>(std::span<const Block<T>> y_prev, std::span<const Block<T>> x_next)>;

template <typename T>
class GeneralTransformSpec {
 public:
  // `scales` holds g_2..g_D (D-1 entries); `shifts` holds f_1..f_D.
  GeneralTransformSpec(BinaryOpPair<T> combine, BinaryOpPair<T> scale, std::vector<ScaleFn<T>> scales,
                       std::vector<ShiftFn<T>> shifts)
      : combine_(std::move(combine)),
        scale_(std::move(scale)),
        scales_(std::move(scales)),
        shifts_(std::move(shifts)) {
    if (shifts_.empty()) throw std::invalid_argument("transform needs at least one block");
    if (scales_.size() + 1 != shifts_.size()) {
      throw std::invalid_argument("expected " + std::to_string(shifts_.size() - 1) +
                                  " scale functions, got " + std::to_string(scales_.size()));
    }
    if (!combine_.forward || !combine_.inverse) throw std::invalid_argument("combine pair incomplete");
    if (scales_.size() > 0 && (!scale_.forward || !scale_.inverse)) {
      throw std::invalid_argument("scale pair incomplete");
    }
  }

  std::size_t num_blocks() const { return shifts_.size(); }

  PartitionedVector<T> forward(const PartitionedVector<T>& x) const {
    check_blocks(x);
    std::vector<Block<T>> y;
    y.reserve(x.num_blocks());
    const auto& xs = x.blocks();
    for (std::size_t d = 0; d < num_blocks(); ++d) {
      std::span<const Block<T>> y_prev(y.data(), d);
      std::span<const Block<T>> x_next(xs.data() + d + 1, xs.size() - d - 1);
      Block<T> scaled = d == 0 ? xs[0] : scale_.forward(scale_for(d, y_prev, xs[d].size()), xs[d]);
      y.push_back(combine_.forward(scaled, shift_for(d, y_prev, x_next, xs[d].size())));
    }
    return PartitionedVector<T>(std::move(y));
  }

  PartitionedVector<T> inverse(const PartitionedVector<T>& y) const {
    check_blocks(y);
    const auto& ys = y.blocks();
    std::vector<Block<T>> x(ys.size());
    for (std::size_t d = num_blocks(); d-- > 0;) {
      std::span<const Block<T>> y_prev(ys.data(), d);
      std::span<const Block<T>> x_next(x.data() + d + 1, x.size() - d - 1);
      Block<T> unshifted = combine_.inverse(ys[d], shift_for(d, y_prev, x_next, ys[d].size()));
      x[d] = d == 0 ? std::move(unshifted)
                    : scale_.inverse(scale_for(d, y_prev, ys[d].size()), unshifted);
    }
    return PartitionedVector<T>(std::move(x));
  }

 private:
  void check_blocks(const PartitionedVector<T>& v) const {
    if (v.num_blocks() != num_blocks()) {
      throw std::invalid_argument("expected " + std::to_string(num_blocks()) + " blocks, got " +
                                  std::to_string(v.num_blocks()));
    }
  }

  Block<T> scale_for(std::size_t d, std::span<const Block<T>> y_prev, std::size_t size) const {
    Block<T> g = scales_[d - 1](y_prev);
    if (g.size() != size) throw InvalidSpecError(d + 1, "scale output has wrong size");
    if (scale_.valid && !scale_.valid(g)) throw InvalidSpecError(d + 1, "scale output is not invertible");
    return g;
  }

  Block<T> shift_for(std::size_t d, std::span<const Block<T>> y_prev, std::span<const Block<T>> x_next,
                     std::size_t size) const {
    Block<T> f = shifts_[d](y_prev, x_next);
    if (f.size() != size) throw InvalidSpecError(d + 1, "shift output has wrong size");
    return f;
  }

  BinaryOpPair<T> combine_;
  BinaryOpPair<T> scale_;
  std::vector<ScaleFn<T>> scales_;
  std::vector<ShiftFn<T>> shifts_;
};

template <typename T>
PartitionedVector<T> general_forward(const GeneralTransformSpec<T>& spec, const PartitionedVector<T>& x) {
  return spec.forward(x);
}

template <typename T>
PartitionedVector<T> general_inverse(const GeneralTransformSpec<T>& spec, const PartitionedVector<T>& y) {
  return spec.inverse(y);
}

namespace ops {

namespace detail {
template <typename T, typename F>
Block<T> zip(const Block<T>& a, const Block<T>& b, F f) {
  if (a.size() != b.size()) throw std::invalid_argument("operand blocks differ in size");
  Block<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i], b[i]);
  return out;
}
}  // namespace detail

// a + b, undone by subtraction.
template <typename T>
BinaryOpPair<T> add() {
  return {[](const Block<T>& a, const Block<T>& b) { return detail::zip(a, b, std::plus<T>{}); },
          [](const Block<T>& a, const Block<T>& b) { return detail::zip(a, b, std::minus<T>{}); },
          {}};
}

// g * x, undone by x = v / g. Zero factors are rejected.
template <typename T>
BinaryOpPair<T> multiply() {
  return {[](const Block<T>& g, const Block<T>& x) { return detail::zip(g, x, std::multiplies<T>{}); },
          [](const Block<T>& g, const Block<T>& v) {
            return detail::zip(g, v, [](T gi, T vi) { return vi / gi; });
          },
          [](const Block<T>& g) {
            for (const T& gi : g) {
              if (gi == T{0}) return false;
            }
            return true;
          }};
}

// Bitwise exclusive or; its own inverse.
template <typename T>
BinaryOpPair<T> exclusive_or() {
  auto x = [](const Block<T>& a, const Block<T>& b) {
    return detail::zip(a, b, [](T ai, T bi) { return static_cast<T>(ai ^ bi); });
  };
  return {x, x, {}};
}

}  // namespace ops

// Helpers for the common constant block functions.
template <typename T>
ScaleFn<T> constant_scale(Block<T> value) {
  return [value = std::move(value)](std::span<const Block<T>>) { return value; };
}

template <typename T>
ShiftFn<T> constant_shift(Block<T> value) {
  return [value = std::move(value)](std::span<const Block<T>>, std::span<const Block<T>>) { return value; };
}

}  // namespace invflow

#endif  // INVFLOW_INVERTIBLE_HPP_
