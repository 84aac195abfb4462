// Checkpoint container, little-endian throughout:
//
//   "INVFLOWC"                  8-byte magic
//   u32 version                 currently 1
//   u64 manifest length         followed by that many bytes of JSON
//   f64 data                    every tensor of the manifest, in order
//
// The manifest records kind, dim, hidden width, flow count, seeds, RNG state
// and the name and shape of each tensor.

#ifndef INVFLOW_CHECKPOINT_HPP_
#define INVFLOW_CHECKPOINT_HPP_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "invflow/flow_model.hpp"

namespace invflow {

inline constexpr std::uint32_t kCheckpointVersion = 1;

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckpointInfo {
  std::uint64_t seed = 0;
  std::uint64_t split_seed = 0;
  std::size_t epoch = 0;
  std::string rng_state;
};

void save_checkpoint(const std::filesystem::path& path, const FlowModel& model, const CheckpointInfo& info);

struct LoadedCheckpoint {
  FlowModel model;
  CheckpointInfo info;
};

// Fails when the file is malformed, has another version, or (if given)
// holds a different model kind.
LoadedCheckpoint load_checkpoint(const std::filesystem::path& path,
                                 std::optional<ModelKind> expected_kind = std::nullopt);

// Writes to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

}  // namespace invflow

#endif  // INVFLOW_CHECKPOINT_HPP_
