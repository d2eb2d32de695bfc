#pragma once

#include <set>
#include <string>
#include <vector>

#include "dbases/core_model.hpp"

namespace dbases {

/// One (representation, capability) pair and the choices allowed for it.
struct SynergySlot {
  std::string id;
  std::string representation;
  Capability capability = Capability::stimulus;
  std::set<SynergyLevel> allowed_levels;
  std::set<SynergyForm> allowed_forms;
  double proficiency = 1.0;

  bool operator==(const SynergySlot&) const = default;
};

/// If `if_slot` takes a level in `if_level_in`, `then_slot` must take a level
/// in `then_level_in`.
struct SynergyConstraint {
  std::string if_slot;
  std::set<SynergyLevel> if_level_in;
  std::string then_slot;
  std::set<SynergyLevel> then_level_in;

  bool operator==(const SynergyConstraint&) const = default;
};

struct ProjectMeta {
  std::string name;
  std::string description;

  bool operator==(const ProjectMeta&) const = default;
};

inline constexpr int kSchemaVersion = 1;

struct Project {
  int schema_version = kSchemaVersion;
  ProjectMeta meta;
  /// Resolved pattern. When `pattern_inline` is false it is a catalog entry
  /// and serializes as its id.
  PatternDef pattern;
  bool pattern_inline = false;
  std::vector<ExpertiseRepresentation> representations;
  std::vector<SynergySlot> slots;
  std::vector<SynergyConstraint> constraints;
  ScoreConfig score_config;
  std::vector<std::string> shortlist;

  const ExpertiseRepresentation* find_representation(const std::string& id) const;
  /// Index of a slot by id, or -1.
  int slot_index(const std::string& id) const;

  bool operator==(const Project&) const = default;
};

/// Semantic checks; findings carry JSON pointers relative to the project
/// document root.
ValidationReport validate_project(const Project& project);

}  // namespace dbases
