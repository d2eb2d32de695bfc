#include <cmath>
#include <stdexcept>

#include "dbases/core_model.hpp"
#include "text_util.hpp"

namespace dbases {

namespace {

constexpr double kLabelTolerance = 1e-6;

bool in_unit_range(double v) { return v >= 1.0 && v <= 2.0; }

std::string level_key(int row) { return "L" + std::to_string(row + 1); }

}  // namespace

double ScoreConfig::rung(SynergyLevel l, const TraitPair& t) const {
  if (l == SynergyLevel::L0) return d0;
  return d[static_cast<std::size_t>(level_index(l) - 1)][trait_cell(t)];
}

std::string ScoreConfig::label_for(double rung_value) const {
  for (const auto& r : rung_labels) {
    if (std::fabs(r.value - rung_value) <= kLabelTolerance) return r.label;
  }
  return detail::fixed_half_up(rung_value, 2);
}

Rung difficulty_rung(SynergyLevel level, const TraitPair& traits, const ScoreConfig& cfg) {
  if (level == SynergyLevel::L0) {
    throw std::invalid_argument("difficulty_rung: level 0 has no rung");
  }
  const double v = cfg.rung(level, traits);
  return {v, cfg.label_for(v)};
}

ValidationReport validate_score_config(const ScoreConfig& cfg) {
  ValidationReport report;

  for (SynergyForm f : kAllForms) {
    if (!in_unit_range(cfg.weight(f))) {
      report.add("/w/" + std::string(to_string(f)), "weight outside [1,2]");
    }
  }
  if (cfg.weight(SynergyForm::general) < cfg.weight(SynergyForm::specific)) {
    report.add("/w", "general weight below specific weight");
  }

  for (SynergyLevel l : kAllLevels) {
    if (!in_unit_range(cfg.benefit(l))) {
      report.add("/b/" + std::string(to_string(l)), "benefit outside [1,2]");
    }
  }
  for (std::size_t i = 1; i < cfg.b.size(); ++i) {
    if (!(cfg.b[i - 1] < cfg.b[i])) {
      report.add("/b/L" + std::to_string(i), "benefit not increasing");
    }
  }

  if (cfg.d0 != 1.0) report.add("/d0", "level-0 difficulty must be 1");

  for (int row = 0; row < 3; ++row) {
    for (std::size_t cell = 0; cell < 4; ++cell) {
      const double v = cfg.d[row][cell];
      const std::string path = "/d/" + level_key(row) + "/" + std::string(trait_code(kTraitCells[cell]));
      if (!in_unit_range(v)) report.add(path, "difficulty outside [1,2]");
      if (v < cfg.d0) report.add(path, "difficulty below level-0 difficulty");
      if (row > 0 && v < cfg.d[row - 1][cell]) {
        report.add(path, "difficulty decreases with level");
      }
    }
  }

  // Cell order within a row: S+T, S+N, N+T, N+N.
  const auto& l1 = cfg.d[0];
  if (!(l1[0] == l1[1] && l1[1] == l1[2] && l1[2] == l1[3])) {
    report.add("/d/L1", "L1 cells must be equal");
  }
  const auto& l2 = cfg.d[1];
  if (l2[2] < l2[0] || l2[3] < l2[1]) {
    report.add("/d/L2", "L2 non-structural cells must not be easier than structural ones");
  }
  if (l2[0] != l2[1] || l2[2] != l2[3]) {
    report.add("/d/L2", "L2 must not depend on tangibility");
  }
  const auto& l3 = cfg.d[2];
  if (!(l3[3] >= l3[2] && l3[2] >= l3[1] && l3[1] >= l3[0])) {
    report.add("/d/L3", "L3 ordinal order broken");
  }

  for (std::size_t i = 0; i < cfg.rung_labels.size(); ++i) {
    if (cfg.rung_labels[i].label.empty()) {
      report.add("/rung_labels/" + std::to_string(i) + "/label", "label must be nonempty");
    }
  }
  return report;
}

}  // namespace dbases
