#include "dbases/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>

#include "text_util.hpp"

namespace dbases {

OptionSpaceTooLarge::OptionSpaceTooLarge(std::uint64_t count, std::uint64_t cap)
    : std::runtime_error("option space of " + std::to_string(count) +
                         " candidates exceeds the cap of " + std::to_string(cap)),
      count_(count),
      cap_(cap) {}

std::string candidate_id(std::size_t position) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "C%04zu", position + 1);
  return buf;
}

std::vector<SlotOption> slot_options(const SynergySlot& slot) {
  std::vector<SlotOption> out;
  for (SynergyLevel level : slot.allowed_levels) {  // std::set is ascending
    if (level == SynergyLevel::L0) {
      out.push_back({level, std::nullopt});
      continue;
    }
    for (SynergyForm form : kAllForms) {
      if (slot.allowed_forms.count(form)) out.push_back({level, form});
    }
  }
  return out;
}

std::uint64_t option_space_size(const Project& project) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const auto& slot : project.slots) {
    const std::uint64_t n = slot_options(slot).size();
    if (n == 0) return 0;
    if (total > kMax / n) return kMax;
    total *= n;
  }
  return total;
}

bool satisfies_constraints(const Project& project, std::span<const SlotOption> assignment) {
  for (const auto& c : project.constraints) {
    const int i = project.slot_index(c.if_slot);
    const int j = project.slot_index(c.then_slot);
    if (i < 0 || j < 0) return false;
    if (c.if_level_in.count(assignment[static_cast<std::size_t>(i)].level) &&
        !c.then_level_in.count(assignment[static_cast<std::size_t>(j)].level)) {
      return false;
    }
  }
  return true;
}

namespace {

void require_valid(const Project& project) {
  auto report = validate_project(project);
  if (!report.ok()) throw ValidationError(std::move(report));
}

// Visits every tuple of the option space in lexicographic order, last slot
// varying fastest.
template <typename Visit>
void for_each_tuple(const std::vector<std::vector<SlotOption>>& options, Visit&& visit) {
  const std::size_t n = options.size();
  std::vector<std::size_t> digit(n, 0);
  std::vector<SlotOption> tuple(n);
  for (std::size_t i = 0; i < n; ++i) tuple[i] = options[i][0];
  while (true) {
    visit(std::span<const SlotOption>(tuple));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++digit[k] < options[k].size()) {
        tuple[k] = options[k][digit[k]];
        break;
      }
      digit[k] = 0;
      tuple[k] = options[k][0];
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<std::vector<SlotOption>> all_options(const Project& project) {
  std::vector<std::vector<SlotOption>> options;
  options.reserve(project.slots.size());
  for (const auto& slot : project.slots) options.push_back(slot_options(slot));
  return options;
}

void check_cap(const Project& project, const EnumerationLimits& limits) {
  const auto size = option_space_size(project);
  if (size > limits.max_candidates) throw OptionSpaceTooLarge(size, limits.max_candidates);
}

}  // namespace

std::vector<Candidate> enumerate(const Project& project, EnumerationLimits limits) {
  require_valid(project);
  check_cap(project, limits);
  std::vector<Candidate> out;
  for_each_tuple(all_options(project), [&](std::span<const SlotOption> tuple) {
    if (!satisfies_constraints(project, tuple)) return;
    Candidate c;
    c.id = candidate_id(out.size());
    c.assignment.assign(tuple.begin(), tuple.end());
    out.push_back(std::move(c));
  });
  return out;
}

std::uint64_t count_candidates(const Project& project, EnumerationLimits limits) {
  require_valid(project);
  if (project.constraints.empty()) return option_space_size(project);
  check_cap(project, limits);
  std::uint64_t count = 0;
  for_each_tuple(all_options(project), [&](std::span<const SlotOption> tuple) {
    if (satisfies_constraints(project, tuple)) ++count;
  });
  return count;
}

// --- scoring -----------------------------------------------------------------

ValidationReport validate_overrides(const Project& project, const Overrides& overrides) {
  ValidationReport report;
  for (const auto& [form, value] : overrides.w) {
    if (!(value >= 1.0 && value <= 2.0)) {
      report.add("/w/" + std::string(to_string(form)), "override outside [1,2]");
    }
  }
  for (const auto& [slot, value] : overrides.p) {
    const std::string path = "/p/" + detail::pointer_token(slot);
    if (project.slot_index(slot) < 0) {
      report.add(path, "unknown slot " + slot);
    } else if (!(value >= 1.0 && value <= 2.0)) {
      report.add(path, "override outside [1,2]");
    }
  }
  return report;
}

ScoringContext ScoringContext::from(const Project& project, const Overrides& overrides) {
  ScoringContext ctx;
  ctx.config = project.score_config;
  for (const auto& [form, value] : overrides.w) ctx.config.w[static_cast<std::size_t>(form)] = value;
  ctx.traits.reserve(project.slots.size());
  ctx.proficiency.reserve(project.slots.size());
  for (const auto& slot : project.slots) {
    const auto* rep = project.find_representation(slot.representation);
    ctx.traits.push_back(rep ? rep->traits : TraitPair{});
    auto it = overrides.p.find(slot.id);
    ctx.proficiency.push_back(it != overrides.p.end() ? it->second : slot.proficiency);
  }
  return ctx;
}

double candidate_difficulty(const Candidate& candidate, const ScoringContext& ctx) {
  double total = 0.0;
  for (std::size_t i = 0; i < candidate.assignment.size(); ++i) {
    const auto& opt = candidate.assignment[i];
    double d = ctx.config.d0;
    if (opt.level != SynergyLevel::L0) {
      d = ctx.config.weight(opt.form.value_or(SynergyForm::specific)) *
          ctx.config.rung(opt.level, ctx.traits[i]);
    }
    total += d / ctx.proficiency[i];
  }
  return total;
}

double candidate_benefit(const Candidate& candidate, const ScoringContext& ctx) {
  double total = 0.0;
  for (std::size_t i = 0; i < candidate.assignment.size(); ++i) {
    const auto& opt = candidate.assignment[i];
    const double p = ctx.proficiency[i];
    if (opt.level == SynergyLevel::L0) {
      total += p * ctx.config.benefit(SynergyLevel::L0);
    } else {
      total += ctx.config.weight(opt.form.value_or(SynergyForm::specific)) * p *
               ctx.config.benefit(opt.level);
    }
  }
  return total;
}

double candidate_difficulty(const Candidate& candidate, const Project& project) {
  return candidate_difficulty(candidate, ScoringContext::from(project));
}

double candidate_benefit(const Candidate& candidate, const Project& project) {
  return candidate_benefit(candidate, ScoringContext::from(project));
}

// --- Pareto ------------------------------------------------------------------

std::vector<bool> pareto_flags(std::span<const Scores> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].difficulty != points[b].difficulty) return points[a].difficulty < points[b].difficulty;
    return points[a].benefit > points[b].benefit;
  });

  std::vector<bool> flags(points.size(), false);
  double best_before = -std::numeric_limits<double>::infinity();  // max B at strictly smaller D
  std::size_t g = 0;
  while (g < order.size()) {
    std::size_t end = g;
    const double d = points[order[g]].difficulty;
    while (end < order.size() && points[order[end]].difficulty == d) ++end;
    const double group_best = points[order[g]].benefit;  // sorted B descending within group
    for (std::size_t k = g; k < end; ++k) {
      const double b = points[order[k]].benefit;
      flags[order[k]] = !(best_before >= b) && !(group_best > b);
    }
    best_before = std::max(best_before, group_best);
    g = end;
  }
  return flags;
}

void pareto(std::vector<Candidate>& candidates) {
  std::vector<Scores> points;
  points.reserve(candidates.size());
  for (const auto& c : candidates) {
    if (!c.scores) throw std::invalid_argument("pareto: candidate " + c.id + " is not scored");
    points.push_back(*c.scores);
  }
  const auto flags = pareto_flags(points);
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i].pareto = flags[i];
}

// --- analysis ----------------------------------------------------------------

const Candidate* AnalysisResult::find(const std::string& id) const {
  for (const auto& c : candidates) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

AnalysisResult analyze(const Project& project, const Overrides& overrides, EnumerationLimits limits) {
  AnalysisResult result;
  result.project_name = project.meta.name;
  result.overrides = overrides;
  for (const auto& slot : project.slots) result.slot_ids.push_back(slot.id);
  result.candidates = enumerate(project, limits);

  const auto ctx = ScoringContext::from(project, overrides);
  for (auto& c : result.candidates) {
    c.scores = Scores{candidate_benefit(c, ctx), candidate_difficulty(c, ctx)};
    c.shortlisted = std::find(project.shortlist.begin(), project.shortlist.end(), c.id) !=
                    project.shortlist.end();
  }
  pareto(result.candidates);
  return result;
}

AnalysisResult whatif(const Project& project, const Overrides& overrides, EnumerationLimits limits) {
  auto report = validate_overrides(project, overrides);
  if (!report.ok()) throw ValidationError(std::move(report));
  return analyze(project, overrides, limits);
}

}  // namespace dbases
