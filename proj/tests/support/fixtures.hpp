#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "dbases/project.hpp"
#include "dbases/project_io.hpp"

namespace fixtures {

inline std::filesystem::path dir() { return DBASES_FIXTURES_DIR; }
inline std::filesystem::path golden_dir() { return DBASES_GOLDEN_DIR; }
inline std::filesystem::path path(const std::string& name) { return dir() / (name + ".dbases.json"); }
inline dbases::Project load(const std::string& name) { return dbases::load_project(path(name)); }

inline std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("dbases-" + tag + "-" + std::to_string(rng() % 1000000000ULL));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Random valid project on the fully self-aware pattern with one
/// all-capability representation per trait cell.
inline dbases::Project random_project(std::mt19937_64& rng, int max_slots, bool with_constraints) {
  using namespace dbases;
  Project p;
  p.meta.name = "random";
  p.pattern = *find_pattern("fully_self_aware");
  const char* ids[] = {"st", "sn", "nt", "nn"};
  for (std::size_t i = 0; i < 4; ++i) {
    ExpertiseRepresentation r;
    r.id = ids[i];
    r.name = ids[i];
    r.category = Category::other(std::string("kind-") + ids[i]);
    r.traits = kTraitCells[i];
    r.compatible_capabilities = {Capability::stimulus, Capability::interaction, Capability::time,
                                 Capability::goal};
    p.representations.push_back(r);
  }
  std::uniform_int_distribution<int> nslots(1, max_slots);
  std::uniform_int_distribution<int> rep(0, 3);
  std::uniform_int_distribution<int> cap(0, 3);
  std::uniform_int_distribution<int> mask(1, 15);
  std::uniform_int_distribution<int> fmask(1, 3);
  std::uniform_real_distribution<double> prof(1.0, 2.0);
  const int n = nslots(rng);
  for (int k = 0; k < n; ++k) {
    SynergySlot s;
    s.id = "s" + std::to_string(k);
    s.representation = ids[rep(rng)];
    s.capability = kAllCapabilities[static_cast<std::size_t>(cap(rng))];
    const int m = mask(rng);
    for (int l = 0; l < 4; ++l) {
      if (m & (1 << l)) s.allowed_levels.insert(kAllLevels[static_cast<std::size_t>(l)]);
    }
    const int f = fmask(rng);
    if (f & 1) s.allowed_forms.insert(SynergyForm::specific);
    if (f & 2) s.allowed_forms.insert(SynergyForm::general);
    s.proficiency = prof(rng);
    p.slots.push_back(s);
  }
  if (with_constraints && n >= 2) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    SynergyConstraint c;
    c.if_slot = p.slots[static_cast<std::size_t>(pick(rng))].id;
    c.then_slot = p.slots[static_cast<std::size_t>(pick(rng))].id;
    c.if_level_in = {SynergyLevel::L2, SynergyLevel::L3};
    c.then_level_in = {SynergyLevel::L0, SynergyLevel::L1};
    p.constraints.push_back(c);
  }
  return p;
}

}  // namespace fixtures
