#pragma once

// Randomized property checks. Each returns an empty string when the property
// holds, otherwise a description of the first counterexample. Seeds are
// fixed so failures reproduce.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dbases/engine.hpp"
#include "dbases/project_io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace props {

using namespace dbases;

// Coarse grid values so exact ties in B and D actually occur.
inline std::string pareto_matches_oracle(int instances = 100, int max_n = 200, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < instances; ++k) {
    const int n = std::uniform_int_distribution<int>(0, max_n)(rng);
    const bool coarse = k % 2 == 0;
    std::vector<Scores> pts;
    for (int i = 0; i < n; ++i) {
      if (coarse) {
        pts.push_back({static_cast<double>(std::uniform_int_distribution<int>(0, 9)(rng)),
                       static_cast<double>(std::uniform_int_distribution<int>(0, 9)(rng))});
      } else {
        pts.push_back({std::uniform_real_distribution<double>(0, 20)(rng),
                       std::uniform_real_distribution<double>(0, 10)(rng)});
      }
    }
    const auto got = pareto_flags(pts);
    const auto want = oracle::pareto(pts);
    if (got != want) return "instance " + std::to_string(k) + " (n=" + std::to_string(n) + ") differs";
  }
  return {};
}

inline std::string count_law(int instances = 100, std::uint64_t seed = 11) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < instances; ++k) {
    const auto p = fixtures::random_project(rng, 8, false);
    const auto want = oracle::product_count(p);
    if (want > 100000) continue;
    const auto closed = count_candidates(p);
    const auto listed = enumerate(p).size();
    if (closed != want || listed != want) {
      return "instance " + std::to_string(k) + ": product " + std::to_string(want) + ", count " +
             std::to_string(closed) + ", enumerated " + std::to_string(listed);
    }
  }
  return {};
}

inline std::string constraint_soundness(int instances = 100, std::uint64_t seed = 13) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < instances; ++k) {
    const auto p = fixtures::random_project(rng, 6, true);
    const auto cands = enumerate(p);
    if (cands.size() != count_candidates(p)) return "count mismatch on instance " + std::to_string(k);
    std::uint64_t expected = 0;
    // Brute force over the unconstrained product, filtered by a direct
    // reading of each constraint.
    auto free = p;
    free.constraints.clear();
    for (const auto& c : enumerate(free)) {
      bool ok = true;
      for (const auto& con : p.constraints) {
        const auto i = static_cast<std::size_t>(p.slot_index(con.if_slot));
        const auto j = static_cast<std::size_t>(p.slot_index(con.then_slot));
        if (con.if_level_in.count(c.assignment[i].level) && !con.then_level_in.count(c.assignment[j].level)) ok = false;
      }
      expected += ok;
    }
    if (expected != cands.size()) return "instance " + std::to_string(k) + " filtered count differs";
    for (const auto& c : cands) {
      for (const auto& con : p.constraints) {
        const auto i = static_cast<std::size_t>(p.slot_index(con.if_slot));
        const auto j = static_cast<std::size_t>(p.slot_index(con.then_slot));
        if (con.if_level_in.count(c.assignment[i].level) && !con.then_level_in.count(c.assignment[j].level)) {
          return "candidate " + c.id + " violates a constraint";
        }
      }
    }
  }
  return {};
}

// Level and proficiency monotonicity plus uniform-p Pareto invariance over
// 1,000 randomized candidates drawn from random projects.
inline std::string monotonicity_and_invariance(int candidates = 1000, std::uint64_t seed = 17) {
  std::mt19937_64 rng(seed);
  int seen = 0;
  while (seen < candidates) {
    auto p = fixtures::random_project(rng, 5, false);
    const auto ctx = ScoringContext::from(p);
    auto cands = enumerate(p);
    std::shuffle(cands.begin(), cands.end(), rng);
    cands.resize(std::min<std::size_t>(cands.size(), 20));
    for (const auto& c : cands) {
      ++seen;
      const double b = candidate_benefit(c, ctx);
      const double d = candidate_difficulty(c, ctx);
      for (std::size_t i = 0; i < c.assignment.size(); ++i) {
        // Upgrade one level, keeping the form (general if coming from L0).
        const auto& opt = c.assignment[i];
        if (opt.level != SynergyLevel::L3) {
          auto up = c;
          up.assignment[i].level = kAllLevels[static_cast<std::size_t>(level_index(opt.level) + 1)];
          if (!up.assignment[i].form) up.assignment[i].form = SynergyForm::general;
          const double b2 = candidate_benefit(up, ctx);
          const double d2 = candidate_difficulty(up, ctx);
          if (!(b2 > b)) return "level upgrade did not raise B for " + c.id;
          if (d2 < d - 1e-12) return "level upgrade lowered D for " + c.id;
        }
        // Raise one proficiency.
        auto ctx2 = ctx;
        const double room = 2.0 - ctx2.proficiency[i];
        if (room > 1e-6) {
          ctx2.proficiency[i] += room / 2;
          if (!(candidate_benefit(c, ctx2) > b)) return "raising p did not raise B for " + c.id;
          if (!(candidate_difficulty(c, ctx2) < d)) return "raising p did not lower D for " + c.id;
        }
      }
    }
    // Uniform scaling of every p within bounds keeps the Pareto set.
    auto all = enumerate(p);
    std::vector<Scores> base, scaled;
    double pmax = 0;
    for (double v : ctx.proficiency) pmax = std::max(pmax, v);
    const double kappa = 1.0 + std::uniform_real_distribution<double>(0.0, 1.0)(rng) * (2.0 / pmax - 1.0);
    auto ctx_k = ctx;
    for (auto& v : ctx_k.proficiency) v *= kappa;
    for (const auto& c : all) {
      base.push_back({candidate_benefit(c, ctx), candidate_difficulty(c, ctx)});
      scaled.push_back({candidate_benefit(c, ctx_k), candidate_difficulty(c, ctx_k)});
    }
    const auto f1 = pareto_flags(base);
    const auto f2 = pareto_flags(scaled);
    if (f1 != f2) {
      // Equal sums computed from different terms can land one ulp apart
      // after scaling. A flip is accepted only when point i ties another
      // point in one coordinate to within 1e-12 relative.
      auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); };
      for (std::size_t i = 0; i < f1.size(); ++i) {
        if (f1[i] == f2[i]) continue;
        bool near_tie = false;
        for (std::size_t j = 0; j < base.size(); ++j) {
          if (j != i && (close(base[j].benefit, base[i].benefit) || close(base[j].difficulty, base[i].difficulty))) {
            near_tie = true;
          }
        }
        if (!near_tie) return "uniform p scaling changed Pareto membership";
      }
    }
  }
  return {};
}

inline std::string shipped_data_valid() {
  for (const auto& p : pattern_catalog()) {
    auto r = validate_pattern(p);
    if (!r.ok()) return "pattern " + p.id + ": " + r.to_string();
  }
  auto r = validate_score_config(ScoreConfig{});
  if (!r.ok()) return "default score config: " + r.to_string();
  return {};
}

inline std::string load_save_identity() {
  fixtures::TempDir tmp("identity");
  for (const char* name : {"case1", "case2", "case3"}) {
    const auto p = fixtures::load(name);
    const auto out = tmp.path() / (std::string(name) + ".json");
    save_project(p, out);
    if (!(load_project(out) == p)) return std::string(name) + ": load(save(p)) != p";
    const auto text = fixtures::read(out);
    save_project(load_project(out), out);
    if (fixtures::read(out) != text) return std::string(name) + ": save is not byte-stable";
  }
  return {};
}

}  // namespace props
