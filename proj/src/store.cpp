#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>

#include "dbases/project_io.hpp"

namespace dbases {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kSuffix = ".dbases.json";

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_synced(const fs::path& path, const std::string& text) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) throw IoError("cannot create " + path.string());
  std::size_t done = 0;
  while (done < text.size()) {
    const auto n = ::write(fd, text.data() + done, text.size() - done);
    if (n < 0) {
      ::close(fd);
      throw IoError("write failed for " + path.string());
    }
    done += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0 || ::close(fd) != 0) throw IoError("sync failed for " + path.string());
}

void sync_dir(const fs::path& dir) {
  const int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
  if (fd < 0) return;
  ::fsync(fd);
  ::close(fd);
}

std::atomic<std::uint64_t> temp_counter{0};

}  // namespace

RevisionConflict::RevisionConflict(std::uint64_t current, std::uint64_t expected)
    : std::runtime_error("revision conflict: expected " + std::to_string(expected) + ", current is " +
                         std::to_string(current)),
      current_(current) {}

ProjectStore::ProjectStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw IoError("cannot create data directory " + root_.string() + ": " + ec.message());
}

bool ProjectStore::valid_id(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                    c == '-';
    if (!ok) return false;
  }
  return true;
}

fs::path ProjectStore::file_for(const std::string& id) const {
  if (!valid_id(id)) throw InvalidProjectId("invalid project id '" + id + "'");
  return root_ / (id + std::string(kSuffix));
}

std::mutex& ProjectStore::lock_for(const std::string& id) {
  std::lock_guard guard(locks_mutex_);
  auto& slot = locks_[id];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

std::vector<ProjectStore::Summary> ProjectStore::list() const {
  std::vector<Summary> out;
  for (const auto& entry : fs::directory_iterator(root_)) {
    if (!entry.is_regular_file()) continue;
    const auto name = entry.path().filename().string();
    if (name.size() <= kSuffix.size() || !name.ends_with(kSuffix)) continue;
    const auto id = name.substr(0, name.size() - kSuffix.size());
    if (!valid_id(id)) continue;
    try {
      const auto e = get(id);
      out.push_back({e.id, e.project.meta.name, e.revision});
    } catch (const std::exception&) {
      // Unreadable files are skipped from the listing.
    }
  }
  std::sort(out.begin(), out.end(), [](const Summary& a, const Summary& b) { return a.id < b.id; });
  return out;
}

ProjectStore::Entry ProjectStore::get(const std::string& id) const {
  const auto path = file_for(id);
  if (!fs::exists(path)) throw NotFound("unknown project '" + id + "'");
  const auto doc = parse_json_text(read_file(path));
  if (!doc.is_object() || !doc.contains("revision") || !doc.contains("project")) {
    throw IoError("malformed store file " + path.string());
  }
  Entry e;
  e.id = id;
  e.revision = doc.at("revision").get<std::uint64_t>();
  e.project = project_from_json(doc.at("project"));
  return e;
}

std::uint64_t ProjectStore::put(const std::string& id, const Project& project,
                                std::optional<std::uint64_t> expected_revision) {
  const auto path = file_for(id);
  {
    auto report = validate_project(project);
    if (!report.ok()) throw ValidationError(std::move(report));
  }
  std::lock_guard guard(lock_for(id));

  std::uint64_t current = 0;
  if (fs::exists(path)) current = get(id).revision;
  if (expected_revision && *expected_revision != current) throw RevisionConflict(current, *expected_revision);

  const std::uint64_t next = current + 1;
  const json envelope{{"id", id}, {"revision", next}, {"project", project_to_json(project)}};
  const fs::path temp = path.string() + ".tmp-" + std::to_string(++temp_counter);
  try {
    write_synced(temp, canonical_dump(envelope));
    if (before_commit_) before_commit_(temp);
    fs::rename(temp, path);
  } catch (...) {
    std::error_code ec;
    fs::remove(temp, ec);
    throw;
  }
  sync_dir(root_);
  return next;
}

void ProjectStore::remove(const std::string& id) {
  const auto path = file_for(id);
  std::lock_guard guard(lock_for(id));
  if (!fs::remove(path)) throw NotFound("unknown project '" + id + "'");
}

}  // namespace dbases
