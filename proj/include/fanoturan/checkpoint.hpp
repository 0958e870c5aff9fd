#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <vector>

namespace fanoturan {

/// Binary progress log for long transversal scans.
///
/// Layout (little-endian): version byte, u32 universe, u32 size, u64 pattern digest; then frames
/// of u64 frontier, u64 visited, u64 nodes, u32 survivor count, u64 survivors[count].
/// Frames are cumulative; the last complete frame wins and a torn tail is ignored.
inline constexpr std::uint8_t kCheckpointVersion = 1;

struct CheckpointHeader {
  std::uint32_t universe = 0;
  std::uint32_t size = 0;
  std::uint64_t digest = 0;
  friend bool operator==(const CheckpointHeader&, const CheckpointHeader&) = default;
};

struct CheckpointFrame {
  std::uint64_t frontier = 0;  // tasks [0, frontier) are complete
  std::uint64_t visited = 0;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> survivors;
  friend bool operator==(const CheckpointFrame&, const CheckpointFrame&) = default;
};

/// FNV-1a over the little-endian bytes of the patterns.
std::uint64_t pattern_digest(std::span<const std::uint64_t> patterns);

/// Last complete frame, or nullopt when the file is absent or holds no frame.
/// Throws ParameterError if the file belongs to a different scan or format version.
std::optional<CheckpointFrame> load_checkpoint(const std::filesystem::path& path, const CheckpointHeader& header);

class CheckpointWriter {
 public:
  /// Keeps an existing compatible file (dropping a torn tail), otherwise starts a new one.
  CheckpointWriter(const std::filesystem::path& path, const CheckpointHeader& header);
  void append(const CheckpointFrame& frame);

 private:
  std::ofstream out_;
};

}  // namespace fanoturan
