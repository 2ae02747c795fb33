#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "subcubic/verify.hpp"

namespace subcubic::cli {

inline constexpr int kCheckpointVersion = 1;

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Progress of a multi-unit scan: the job it belongs to and the partial
/// report of every finished unit, keyed by unit id.
struct Checkpoint {
  int version = kCheckpointVersion;
  nlohmann::json job;
  std::map<std::string, ScanReport> completed;
};

/// Writes to a sibling temporary file and renames it over `path`.
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& state);

/// nullopt for a missing or empty file. Throws CheckpointError for a
/// version mismatch or unreadable contents.
std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path);

/// Loads `path` for `job`, refusing a checkpoint written for another job.
Checkpoint resume(const std::filesystem::path& path, const nlohmann::json& job);

}  // namespace subcubic::cli
