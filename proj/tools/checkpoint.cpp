#include "checkpoint.hpp"

#include <fstream>
#include <sstream>

namespace subcubic::cli {

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& state) {
  nlohmann::json completed = nlohmann::json::object();
  for (const auto& [id, report] : state.completed) completed[id] = report.to_json();
  const nlohmann::json doc{{"format", "subcubic-checkpoint"},
                           {"version", state.version},
                           {"job", state.job},
                           {"completed", completed}};
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("cannot write " + tmp.string());
    out << doc.dump() << '\n';
    out.flush();
    if (!out) throw CheckpointError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return std::nullopt;

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CheckpointError("corrupt checkpoint " + path.string() + ": " + e.what());
  }
  try {
    if (doc.at("format") != "subcubic-checkpoint") throw CheckpointError(path.string() + " is not a checkpoint");
    Checkpoint state;
    state.version = doc.at("version").get<int>();
    if (state.version != kCheckpointVersion)
      throw CheckpointError("checkpoint version " + std::to_string(state.version) + " is not supported (expected " +
                            std::to_string(kCheckpointVersion) + ")");
    state.job = doc.at("job");
    for (const auto& [id, report] : doc.at("completed").items()) state.completed[id] = ScanReport::from_json(report);
    return state;
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError("corrupt checkpoint " + path.string() + ": " + e.what());
  }
}

Checkpoint resume(const std::filesystem::path& path, const nlohmann::json& job) {
  auto state = read_checkpoint(path);
  if (!state) return Checkpoint{kCheckpointVersion, job, {}};
  if (state->job != job)
    throw CheckpointError("checkpoint " + path.string() + " belongs to a different job: " + state->job.dump());
  return *state;
}

}  // namespace subcubic::cli
