#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dbases/engine.hpp"
#include "dbases/project.hpp"

namespace dbases {

using json = nlohmann::json;

/// Malformed JSON text. The single finding names line and column.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse text into JSON, mapping parse failures to ParseError.
json parse_json_text(std::string_view text);

// --- project documents -------------------------------------------------------

/// Strict decode: unknown fields are rejected, defaults (traits, capability
/// registry, score tables) applied, semantic validation run. Every failure is
/// reported with its JSON pointer.
Project project_from_json(const json& doc);
json project_to_json(const Project& project);

Project load_project(const std::filesystem::path& path);
Project load_project_text(std::string_view text);

/// Sorted keys, 2-space indent, trailing newline.
std::string canonical_dump(const json& doc);
std::string canonical_project_text(const Project& project);
void save_project(const Project& project, const std::filesystem::path& path);

// --- other documents ---------------------------------------------------------

json score_config_to_json(const ScoreConfig& cfg);
json pattern_to_json(const PatternDef& pattern);
json catalog_to_json();

CriteriaAnswers answers_from_json(const json& doc);

Overrides overrides_from_json(const json& doc);
json overrides_to_json(const Overrides& overrides);

/// Candidate list without scores (enumeration output).
json candidates_to_json(const std::vector<Candidate>& candidates,
                        const std::vector<std::string>& slot_ids);
/// Scores at full precision plus 2-decimal display strings (B_text, D_text).
json analysis_to_json(const AnalysisResult& analysis);

// --- disk store --------------------------------------------------------------

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RevisionConflict : public std::runtime_error {
 public:
  RevisionConflict(std::uint64_t current, std::uint64_t expected);
  std::uint64_t current() const { return current_; }

 private:
  std::uint64_t current_;
};

class InvalidProjectId : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One canonical JSON file per project under a data directory. Writes go to
/// a temporary file that is renamed into place, so readers only ever see
/// committed versions.
class ProjectStore {
 public:
  struct Entry {
    std::string id;
    std::uint64_t revision = 0;
    Project project;
  };
  struct Summary {
    std::string id;
    std::string name;
    std::uint64_t revision = 0;
  };

  explicit ProjectStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  std::vector<Summary> list() const;
  Entry get(const std::string& id) const;
  /// Stores a new revision. With `expected_revision` set the write succeeds
  /// only if it equals the current revision (0 for a project that does not
  /// exist yet). Returns the new revision.
  std::uint64_t put(const std::string& id, const Project& project,
                    std::optional<std::uint64_t> expected_revision = std::nullopt);
  void remove(const std::string& id);

  static bool valid_id(std::string_view id);

  /// Test hook run after the temporary file is synced and before the rename.
  /// Throwing from it aborts the write with the committed file untouched.
  void set_before_commit(std::function<void(const std::filesystem::path&)> hook) {
    before_commit_ = std::move(hook);
  }

 private:
  std::filesystem::path file_for(const std::string& id) const;
  std::mutex& lock_for(const std::string& id);

  std::filesystem::path root_;
  std::function<void(const std::filesystem::path&)> before_commit_;
  std::mutex locks_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> locks_;
};

}  // namespace dbases
