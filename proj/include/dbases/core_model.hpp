#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dbases {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// One finding of a validator. `path` is a JSON pointer into the document
/// that produced the value (empty when the value did not come from JSON).
struct Finding {
  std::string path;
  std::string message;

  bool operator==(const Finding&) const = default;
};

/// Collected findings; an empty report means the value is valid.
struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  void add(std::string path, std::string message) {
    findings.push_back({std::move(path), std::move(message)});
  }
  void merge(const ValidationReport& other, std::string_view prefix = {});
  bool mentions(std::string_view needle) const;
  std::string to_string() const;
};

/// Thrown when a value fails validation. Carries every finding.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// ---------------------------------------------------------------------------
// Vocabulary
// ---------------------------------------------------------------------------

enum class Capability { stimulus, interaction, time, goal, meta_self };
inline constexpr std::array<Capability, 5> kAllCapabilities = {
    Capability::stimulus, Capability::interaction, Capability::time,
    Capability::goal, Capability::meta_self};

using CapabilitySet = std::set<Capability>;

enum class CategoryKind { methodology, concept_, model, documentation, program, assumption, other };
inline constexpr std::array<CategoryKind, 6> kBuiltinCategories = {
    CategoryKind::methodology, CategoryKind::concept_,  CategoryKind::model,
    CategoryKind::documentation, CategoryKind::program, CategoryKind::assumption};

/// A representation category. `other` always carries a nonempty name.
class Category {
 public:
  Category(CategoryKind kind);  // NOLINT(google-explicit-constructor)
  static Category other(std::string name);

  CategoryKind kind() const { return kind_; }
  /// Name for `other`; canonical token for built-ins.
  std::string name() const;
  bool is_other() const { return kind_ == CategoryKind::other; }

  bool operator==(const Category&) const = default;
  auto operator<=>(const Category&) const = default;

 private:
  Category(CategoryKind kind, std::string name) : kind_(kind), other_name_(std::move(name)) {}
  CategoryKind kind_;
  std::string other_name_;
};

enum class Structurability { structural, non_structural };
enum class Tangibility { tangible, non_tangible };

struct TraitPair {
  Structurability structurability = Structurability::structural;
  Tangibility tangibility = Tangibility::tangible;

  bool operator==(const TraitPair&) const = default;
};

/// Traits before validation; either half may still be unknown.
struct PartialTraits {
  std::optional<Structurability> structurability;
  std::optional<Tangibility> tangibility;

  bool complete() const { return structurability && tangibility; }
  bool operator==(const PartialTraits&) const = default;
};

enum class SynergyLevel { L0 = 0, L1 = 1, L2 = 2, L3 = 3 };
inline constexpr std::array<SynergyLevel, 4> kAllLevels = {
    SynergyLevel::L0, SynergyLevel::L1, SynergyLevel::L2, SynergyLevel::L3};
inline constexpr int level_index(SynergyLevel l) { return static_cast<int>(l); }

enum class SynergyForm { specific, general };
inline constexpr std::array<SynergyForm, 2> kAllForms = {SynergyForm::specific,
                                                         SynergyForm::general};

// Token conversions. `parse_*` return nullopt on an unknown token.
std::string_view to_string(Capability c);
std::string_view to_string(CategoryKind c);
std::string_view to_string(Structurability s);
std::string_view to_string(Tangibility t);
std::string_view to_string(SynergyLevel l);
std::string_view to_string(SynergyForm f);
std::optional<Capability> parse_capability(std::string_view s);
std::optional<CategoryKind> parse_category_kind(std::string_view s);
std::optional<Structurability> parse_structurability(std::string_view s);
std::optional<Tangibility> parse_tangibility(std::string_view s);
std::optional<SynergyLevel> parse_level(std::string_view s);
std::optional<SynergyForm> parse_form(std::string_view s);

/// Short "S+T" / "N+N" notation used in score tables.
std::string_view trait_code(const TraitPair& t);
std::optional<TraitPair> parse_trait_code(std::string_view s);

/// Criterion metadata for a synergy level (empty for L0, which has none).
const std::vector<std::string>& level_criteria(SynergyLevel level);

// ---------------------------------------------------------------------------
// Representations and classification
// ---------------------------------------------------------------------------

struct ExpertiseRepresentation {
  std::string id;
  std::string name;
  Category category = CategoryKind::model;
  TraitPair traits;
  CapabilitySet compatible_capabilities;

  bool operator==(const ExpertiseRepresentation&) const = default;
};

ValidationReport validate_representation(const ExpertiseRepresentation& rep);

/// Answers to the shipped checklists. Each list is positional against
/// `category_criteria(kind)` / `structurability_criteria()` /
/// `tangibility_criteria()`.
struct CriteriaAnswers {
  std::map<CategoryKind, std::vector<bool>> categories;
  std::vector<bool> structurability;
  std::vector<bool> tangibility;
};

const std::vector<std::string>& category_criteria(CategoryKind kind);
const std::vector<std::string>& structurability_criteria();
const std::vector<std::string>& tangibility_criteria();

/// Built-in categories whose criteria are all met. Multiple matches are
/// returned as-is; an empty result means the caller assigns `other`.
/// Throws ValidationError if any list length is wrong.
std::set<CategoryKind> classify(const CriteriaAnswers& answers);

/// Traits implied by the trait checklists (all three structurability
/// criteria -> structural; both tangibility criteria -> tangible).
/// Lists left empty yield an unset half.
PartialTraits assess_traits(const CriteriaAnswers& answers);

/// The trait cell a category implies; halves the category leaves open are unset.
PartialTraits default_traits(const Category& category);

struct CompatLookup {
  CapabilitySet capabilities;
  std::optional<std::string> notice;  // set when no default exists
};

/// Registry lookup: exact (case-insensitive) example name first, then the
/// union over a category's examples.
CompatLookup compat_defaults(std::string_view name_or_category);

struct CompatEntry {
  CategoryKind category;
  std::string name;
  CapabilitySet capabilities;
};
const std::vector<CompatEntry>& compat_registry();

// ---------------------------------------------------------------------------
// Patterns
// ---------------------------------------------------------------------------

enum class NodeRole { capability, sensor, actuator, external_node, environment };
enum class ConnectorKind { physical_inter_capability, physical_same_capability, logical };
enum class Multiplicity { one, plus, star };

std::string_view to_string(NodeRole r);
std::string_view to_string(ConnectorKind k);
std::string_view to_string(Multiplicity m);
/// "1", "+" or "*".
std::string_view multiplicity_symbol(Multiplicity m);
std::optional<NodeRole> parse_node_role(std::string_view s);
std::optional<ConnectorKind> parse_connector_kind(std::string_view s);
std::optional<Multiplicity> parse_multiplicity(std::string_view s);

struct Endpoint {
  NodeRole role = NodeRole::capability;
  std::optional<Capability> capability;  // only for role == capability
  bool external = false;                 // only for sensor / actuator

  /// Stable node identifier, e.g. "goal", "internal_sensor", "external_node".
  std::string node_id() const;
  bool operator==(const Endpoint&) const = default;
};

struct Connector {
  Endpoint a;
  Endpoint b;
  ConnectorKind kind = ConnectorKind::physical_inter_capability;
  Multiplicity multiplicity_a = Multiplicity::one;
  Multiplicity multiplicity_b = Multiplicity::one;

  bool operator==(const Connector&) const = default;
};

struct PatternDef {
  std::string id;
  std::string name;
  CapabilitySet capabilities;
  bool meta_self_optional = true;
  bool external_decision_links = false;
  std::vector<Connector> connectors;
  std::string characteristics;

  bool operator==(const PatternDef&) const = default;
};

/// The eight shipped patterns, in catalog order.
const std::vector<PatternDef>& pattern_catalog();

/// Matches id or name, case-insensitive, with an optional " Pattern" suffix.
const PatternDef* find_pattern(std::string_view id_or_name);

ValidationReport validate_pattern(const PatternDef& def);

// ---------------------------------------------------------------------------
// Score configuration
// ---------------------------------------------------------------------------

/// Index of a trait cell inside a difficulty row: S+T, S+N, N+T, N+N.
std::size_t trait_cell(const TraitPair& t);
inline constexpr std::array<TraitPair, 4> kTraitCells = {
    TraitPair{Structurability::structural, Tangibility::tangible},
    TraitPair{Structurability::structural, Tangibility::non_tangible},
    TraitPair{Structurability::non_structural, Tangibility::tangible},
    TraitPair{Structurability::non_structural, Tangibility::non_tangible}};

struct RungLabel {
  double value = 1.0;
  std::string label;

  bool operator==(const RungLabel&) const = default;
};

struct ScoreConfig {
  /// Form weights indexed by SynergyForm.
  std::array<double, 2> w{1.2, 1.4};
  /// Benefit per level L0..L3.
  std::array<double, 4> b{1.25, 1.5, 1.75, 2.0};
  /// Difficulty rungs for L1..L3 (row 0 is L1), cells per trait_cell().
  std::array<std::array<double, 4>, 3> d{{
      {1.0, 1.0, 1.0, 1.0},
      {1.2, 1.2, 1.4, 1.4},
      {1.4, 1.6, 1.8, 2.0},
  }};
  double d0 = 1.0;
  std::vector<RungLabel> rung_labels{{1.0, "very easy"}, {1.2, "easy"},
                                     {1.4, "moderate"},  {1.6, "hard"},
                                     {1.8, "very hard"}, {2.0, "challenging"}};

  double weight(SynergyForm f) const { return w[static_cast<std::size_t>(f)]; }
  double benefit(SynergyLevel l) const { return b[static_cast<std::size_t>(level_index(l))]; }
  /// Rung for a non-L0 level.
  double rung(SynergyLevel l, const TraitPair& t) const;
  /// Label for a rung value; falls back to the value printed with 2 decimals.
  std::string label_for(double rung_value) const;

  bool operator==(const ScoreConfig&) const = default;
};

ValidationReport validate_score_config(const ScoreConfig& cfg);

struct Rung {
  double value;
  std::string label;
};

/// Difficulty rung and its ladder label. Level must not be L0.
Rung difficulty_rung(SynergyLevel level, const TraitPair& traits, const ScoreConfig& cfg);

}  // namespace dbases
