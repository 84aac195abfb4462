#ifndef INVFLOW_EXPERIMENT_HPP_
#define INVFLOW_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invflow/checkpoint.hpp"
#include "invflow/digits.hpp"
#include "invflow/flow_model.hpp"

#include "json.hpp"

namespace invflow {

struct TrainConfig {
  ModelKind model_kind = ModelKind::kIdf;
  std::uint64_t seed = 0;
  double lr = 1e-3;
  std::size_t batch = 64;
  std::size_t patience = 20;
  std::size_t max_epochs = 2000;
  std::uint64_t split_seed = 0;
  std::filesystem::path data_path;
  std::filesystem::path output_dir;
  // Width and flow count default to the full-size models.
  ModelShape shape;

  void validate() const;
};

// Reads a JSON object; keys absent from the file keep the values in `base`.
TrainConfig load_config(const nlohmann::json& j, TrainConfig base = {});
TrainConfig load_config_file(const std::filesystem::path& path, TrainConfig base = {});

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EpochRecord {
  std::size_t epoch = 0;
  double train_nll = 0.0;
  double val_nll = 0.0;
};

struct RunResult {
  std::string model;
  std::uint64_t seed = 0;
  std::uint64_t split_seed = 0;
  std::size_t parameter_count = 0;
  std::vector<EpochRecord> trace;
  double best_val_nll = 0.0;
  std::size_t best_epoch = 0;
  double test_nll = 0.0;
  bool stopped_early = false;
  double wall_clock_seconds = 0.0;

  nlohmann::json to_json(bool include_timing = true) const;
  static RunResult from_json(const nlohmann::json& j);
};

// Dequantization noise for evaluating RealNVP comes from this fixed seed, so
// evaluation is a pure function of model and data.
inline constexpr std::uint64_t kEvalNoiseSeed = 0x6576616cULL;

// Mean per-image -ln p in nats.
double evaluate_nll(const FlowModel& model, const IntTensor& images);

struct TrainOutcome {
  RunResult result;
  FlowModel best_model;
};

// Adam on minibatches with early stopping on validation nll; the test split
// is scored once, with the best-validation parameters. Writes
// checkpoint.bin, result.json and train.log.jsonl under output_dir when it
// is set. `on_epoch` may be used for progress output.
TrainOutcome train(const TrainConfig& config, const DigitsSplit& data,
                   const std::function<void(const EpochRecord&)>& on_epoch = {});

// Clamps to [0, 16] and scales to 0..255.
std::vector<std::uint8_t> to_gray_pixels(std::span<const double> values);
std::string encode_pgm(std::size_t width, std::size_t height, std::span<const std::uint8_t> pixels);

// Draws n samples and writes sample_NNN.pgm files plus montage.pgm into
// out_dir. Returns the sample values (pre-clamp) row by row.
Tensor write_samples(const FlowModel& model, std::size_t n, std::uint64_t seed, const std::filesystem::path& out_dir);

}  // namespace invflow

#endif  // INVFLOW_EXPERIMENT_HPP_
