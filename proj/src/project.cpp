#include "dbases/project.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "text_util.hpp"

namespace dbases {

const ExpertiseRepresentation* Project::find_representation(const std::string& id) const {
  for (const auto& r : representations) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

int Project::slot_index(const std::string& id) const {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

ValidationReport validate_project(const Project& project) {
  ValidationReport report;

  if (project.schema_version != kSchemaVersion) {
    report.add("/schema_version", "unsupported schema version " + std::to_string(project.schema_version));
  }

  report.merge(validate_pattern(project.pattern), "/pattern");

  std::unordered_set<std::string> rep_ids;
  for (std::size_t i = 0; i < project.representations.size(); ++i) {
    const auto& rep = project.representations[i];
    const std::string base = "/representations/" + std::to_string(i);
    if (!rep_ids.insert(rep.id).second) report.add(base + "/id", "duplicate representation id " + rep.id);
    report.merge(validate_representation(rep), base);
  }

  if (project.slots.empty()) {
    report.add("/slots", "at least one synergy slot is required");
  }
  std::unordered_set<std::string> slot_ids;
  for (std::size_t i = 0; i < project.slots.size(); ++i) {
    const auto& slot = project.slots[i];
    const std::string base = "/slots/" + std::to_string(i);
    if (slot.id.empty()) report.add(base + "/id", "slot id must be nonempty");
    if (!slot_ids.insert(slot.id).second) report.add(base + "/id", "duplicate slot id " + slot.id);

    if (slot.allowed_levels.empty()) report.add(base + "/allowed_levels", "at least one level is required");
    const bool synergy_possible =
        std::any_of(slot.allowed_levels.begin(), slot.allowed_levels.end(),
                    [](SynergyLevel l) { return l != SynergyLevel::L0; });
    if (synergy_possible && slot.allowed_forms.empty()) {
      report.add(base + "/allowed_forms", "at least one form is required");
    }

    if (!(slot.proficiency >= 1.0 && slot.proficiency <= 2.0)) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%g", slot.proficiency);
      report.add(base + "/proficiency", std::string(buf) + " outside [1,2]");
    }

    if (!project.pattern.capabilities.count(slot.capability) &&
        !(slot.capability == Capability::meta_self && project.pattern.meta_self_optional)) {
      report.add(base + "/capability", "capability " + std::string(to_string(slot.capability)) +
                                           " is not part of pattern " + project.pattern.id);
    }

    const auto* rep = project.find_representation(slot.representation);
    if (!rep) {
      report.add(base + "/representation", "unknown representation " + slot.representation);
    } else if (synergy_possible && !rep->compatible_capabilities.count(slot.capability)) {
      report.add(base + "/capability", "representation " + rep->id + " is not compatible with " +
                                           std::string(to_string(slot.capability)));
    }
  }

  for (std::size_t i = 0; i < project.constraints.size(); ++i) {
    const auto& c = project.constraints[i];
    const std::string base = "/constraints/" + std::to_string(i);
    if (project.slot_index(c.if_slot) < 0) report.add(base + "/if_slot", "unknown slot " + c.if_slot);
    if (project.slot_index(c.then_slot) < 0) report.add(base + "/then_slot", "unknown slot " + c.then_slot);
    if (c.if_level_in.empty()) report.add(base + "/if_level_in", "level set must be nonempty");
    if (c.then_level_in.empty()) report.add(base + "/then_level_in", "level set must be nonempty");
  }

  report.merge(validate_score_config(project.score_config), "/score_config");
  return report;
}

}  // namespace dbases
