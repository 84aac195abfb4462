// The 8x8 handwritten digits: 1797 images of 64 pixels in [0, 16].
//
// File format: plain CSV, no header, one image per line, 64 pixel columns
// followed by the label column, integers only.

#ifndef INVFLOW_DIGITS_HPP_
#define INVFLOW_DIGITS_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "invflow/rng.hpp"
#include "invflow/tensor.hpp"

namespace invflow {

inline constexpr std::size_t kDigitsRows = 1797;
inline constexpr std::size_t kDigitsPixels = 64;
inline constexpr std::int64_t kDigitsMaxPixel = 16;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct DigitsDataset {
  IntTensor images;                 // [n, 64]
  std::vector<std::int64_t> labels;  // [n]

  std::size_t size() const { return labels.size(); }
  DigitsDataset subset(const std::vector<std::size_t>& rows) const;
};

// Parses the CSV text; `expected_rows` of 0 accepts any positive count.
DigitsDataset parse_digits(const std::string& text, std::size_t expected_rows = kDigitsRows);
DigitsDataset load_digits(const std::filesystem::path& path, std::size_t expected_rows = kDigitsRows);
std::string format_digits(const DigitsDataset& data);

struct SplitSpec {
  std::size_t train = 1000;
  std::size_t val = 350;
  std::size_t test = 447;
  std::uint64_t shuffle_seed = 0;
};

struct DigitsSplit {
  DigitsDataset train;
  DigitsDataset val;
  DigitsDataset test;
  // Source row of every member, in split order.
  std::vector<std::size_t> train_rows, val_rows, test_rows;
};

// Seeded shuffle, then contiguous train / val / test slices.
DigitsSplit split(const DigitsDataset& data, const SplitSpec& spec);

// One epoch of minibatches over a fresh permutation drawn from rng; the last
// batch is short when the size does not divide evenly.
std::vector<std::vector<std::size_t>> batches(std::size_t count, std::size_t batch_size, Rng& rng);

}  // namespace invflow

#endif  // INVFLOW_DIGITS_HPP_
