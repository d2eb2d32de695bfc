#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dbases/project.hpp"

namespace dbases {

/// One choice for a slot. `form` is absent exactly when level is L0.
struct SlotOption {
  SynergyLevel level = SynergyLevel::L0;
  std::optional<SynergyForm> form;

  bool operator==(const SlotOption&) const = default;
};

/// Options in canonical order: levels ascending, specific before general.
std::vector<SlotOption> slot_options(const SynergySlot& slot);

struct Scores {
  double benefit = 0.0;
  double difficulty = 0.0;

  bool operator==(const Scores&) const = default;
};

struct Candidate {
  std::string id;
  /// Positional: assignment[i] belongs to project.slots[i].
  std::vector<SlotOption> assignment;
  std::optional<Scores> scores;
  std::optional<bool> pareto;
  bool shortlisted = false;

  bool operator==(const Candidate&) const = default;
};

struct EnumerationLimits {
  std::uint64_t max_candidates = 1'000'000;
};

/// Raised when the option space exceeds EnumerationLimits::max_candidates.
class OptionSpaceTooLarge : public std::runtime_error {
 public:
  OptionSpaceTooLarge(std::uint64_t count, std::uint64_t cap);
  std::uint64_t count() const { return count_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

/// Deterministic candidate id for a 0-based position: 0 -> "C0001".
std::string candidate_id(std::size_t position);

/// Product of slot option counts, saturating at UINT64_MAX.
std::uint64_t option_space_size(const Project& project);

bool satisfies_constraints(const Project& project, std::span<const SlotOption> assignment);

/// Cartesian product of slot options (first slot most significant), filtered
/// by the constraints. Throws ValidationError for an invalid project and
/// OptionSpaceTooLarge above the cap.
std::vector<Candidate> enumerate(const Project& project, EnumerationLimits limits = {});

/// Same count as enumerate(); closed form when there are no constraints.
std::uint64_t count_candidates(const Project& project, EnumerationLimits limits = {});

/// What-if overrides. Values must lie in [1,2]; slot keys must exist.
struct Overrides {
  std::map<SynergyForm, double> w;
  std::map<std::string, double> p;

  bool empty() const { return w.empty() && p.empty(); }
  bool operator==(const Overrides&) const = default;
};

ValidationReport validate_overrides(const Project& project, const Overrides& overrides);

/// Per-slot inputs to the scoring formulas, with overrides applied.
struct ScoringContext {
  ScoreConfig config;
  std::vector<TraitPair> traits;
  std::vector<double> proficiency;

  static ScoringContext from(const Project& project, const Overrides& overrides = {});
};

/// Sum over synergies of d_i / p_i, where d_i is 1 at L0 and
/// w(form) * rung(level, traits) otherwise.
double candidate_difficulty(const Candidate& candidate, const ScoringContext& ctx);
double candidate_difficulty(const Candidate& candidate, const Project& project);

/// Sum over synergies of p_i * b(L0) at L0 and w(form) * p_i * b(level)
/// otherwise. The L0 branch applies per synergy.
double candidate_benefit(const Candidate& candidate, const ScoringContext& ctx);
double candidate_benefit(const Candidate& candidate, const Project& project);

/// Non-dominated flags for (minimize difficulty, maximize benefit). Exact
/// duplicates are both non-dominated.
std::vector<bool> pareto_flags(std::span<const Scores> points);

/// Sets `pareto` on every candidate. All candidates must carry scores.
void pareto(std::vector<Candidate>& candidates);

struct AnalysisResult {
  std::string project_name;
  std::vector<std::string> slot_ids;
  std::vector<Candidate> candidates;
  Overrides overrides;

  const Candidate* find(const std::string& id) const;
  bool operator==(const AnalysisResult&) const = default;
};

/// Enumerate, score and flag the Pareto front; shortlist flags come from the
/// project. Overrides must already be valid.
AnalysisResult analyze(const Project& project, const Overrides& overrides = {},
                       EnumerationLimits limits = {});

/// Validates overrides (ValidationError naming the field) and rescoring
/// without touching the project.
AnalysisResult whatif(const Project& project, const Overrides& overrides,
                      EnumerationLimits limits = {});

}  // namespace dbases
