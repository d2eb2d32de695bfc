#include "dbases/core_model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "text_util.hpp"

namespace dbases {

// --- ValidationReport --------------------------------------------------------

void ValidationReport::merge(const ValidationReport& other, std::string_view prefix) {
  for (const auto& f : other.findings) {
    findings.push_back({std::string(prefix) + f.path, f.message});
  }
}

bool ValidationReport::mentions(std::string_view needle) const {
  return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) {
    return f.message.find(needle) != std::string::npos || f.path.find(needle) != std::string::npos;
  });
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& f : findings) {
    if (!f.path.empty()) out << f.path << ": ";
    out << f.message << '\n';
  }
  return out.str();
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(report.findings.empty() ? std::string("validation failed")
                                                 : report.findings.front().path.empty()
                                                       ? report.findings.front().message
                                                       : report.findings.front().path + ": " +
                                                             report.findings.front().message),
      report_(std::move(report)) {}

// --- tokens ------------------------------------------------------------------

namespace {

template <typename E, std::size_t N>
std::optional<E> lookup(std::string_view s, const std::array<std::pair<E, std::string_view>, N>& table) {
  for (const auto& [value, token] : table) {
    if (token == s) return value;
  }
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view name_of(E e, const std::array<std::pair<E, std::string_view>, N>& table) {
  for (const auto& [value, token] : table) {
    if (value == e) return token;
  }
  return "?";
}

constexpr std::array<std::pair<Capability, std::string_view>, 5> kCapabilityTokens{{
    {Capability::stimulus, "stimulus"},
    {Capability::interaction, "interaction"},
    {Capability::time, "time"},
    {Capability::goal, "goal"},
    {Capability::meta_self, "meta_self"},
}};

constexpr std::array<std::pair<CategoryKind, std::string_view>, 7> kCategoryTokens{{
    {CategoryKind::methodology, "methodology"},
    {CategoryKind::concept_, "concept"},
    {CategoryKind::model, "model"},
    {CategoryKind::documentation, "documentation"},
    {CategoryKind::program, "program"},
    {CategoryKind::assumption, "assumption"},
    {CategoryKind::other, "other"},
}};

constexpr std::array<std::pair<Structurability, std::string_view>, 2> kStructTokens{{
    {Structurability::structural, "structural"},
    {Structurability::non_structural, "non_structural"},
}};

constexpr std::array<std::pair<Tangibility, std::string_view>, 2> kTangTokens{{
    {Tangibility::tangible, "tangible"},
    {Tangibility::non_tangible, "non_tangible"},
}};

constexpr std::array<std::pair<SynergyLevel, std::string_view>, 4> kLevelTokens{{
    {SynergyLevel::L0, "L0"},
    {SynergyLevel::L1, "L1"},
    {SynergyLevel::L2, "L2"},
    {SynergyLevel::L3, "L3"},
}};

constexpr std::array<std::pair<SynergyForm, std::string_view>, 2> kFormTokens{{
    {SynergyForm::specific, "specific"},
    {SynergyForm::general, "general"},
}};

constexpr std::array<std::pair<NodeRole, std::string_view>, 5> kRoleTokens{{
    {NodeRole::capability, "capability"},
    {NodeRole::sensor, "sensor"},
    {NodeRole::actuator, "actuator"},
    {NodeRole::external_node, "external_node"},
    {NodeRole::environment, "environment"},
}};

constexpr std::array<std::pair<ConnectorKind, std::string_view>, 3> kKindTokens{{
    {ConnectorKind::physical_inter_capability, "physical_inter_capability"},
    {ConnectorKind::physical_same_capability, "physical_same_capability"},
    {ConnectorKind::logical, "logical"},
}};

constexpr std::array<std::pair<Multiplicity, std::string_view>, 3> kMultTokens{{
    {Multiplicity::one, "one"},
    {Multiplicity::plus, "plus"},
    {Multiplicity::star, "star"},
}};

constexpr std::array<std::pair<TraitPair, std::string_view>, 4> kTraitCodes{{
    {kTraitCells[0], "S+T"},
    {kTraitCells[1], "S+N"},
    {kTraitCells[2], "N+T"},
    {kTraitCells[3], "N+N"},
}};

}  // namespace

std::string_view to_string(Capability c) { return name_of(c, kCapabilityTokens); }
std::string_view to_string(CategoryKind c) { return name_of(c, kCategoryTokens); }
std::string_view to_string(Structurability s) { return name_of(s, kStructTokens); }
std::string_view to_string(Tangibility t) { return name_of(t, kTangTokens); }
std::string_view to_string(SynergyLevel l) { return name_of(l, kLevelTokens); }
std::string_view to_string(SynergyForm f) { return name_of(f, kFormTokens); }
std::string_view to_string(NodeRole r) { return name_of(r, kRoleTokens); }
std::string_view to_string(ConnectorKind k) { return name_of(k, kKindTokens); }
std::string_view to_string(Multiplicity m) { return name_of(m, kMultTokens); }

std::optional<Capability> parse_capability(std::string_view s) { return lookup(s, kCapabilityTokens); }
std::optional<CategoryKind> parse_category_kind(std::string_view s) { return lookup(s, kCategoryTokens); }
std::optional<Structurability> parse_structurability(std::string_view s) { return lookup(s, kStructTokens); }
std::optional<Tangibility> parse_tangibility(std::string_view s) { return lookup(s, kTangTokens); }
std::optional<SynergyLevel> parse_level(std::string_view s) { return lookup(s, kLevelTokens); }
std::optional<SynergyForm> parse_form(std::string_view s) { return lookup(s, kFormTokens); }
std::optional<NodeRole> parse_node_role(std::string_view s) { return lookup(s, kRoleTokens); }
std::optional<ConnectorKind> parse_connector_kind(std::string_view s) { return lookup(s, kKindTokens); }
std::optional<Multiplicity> parse_multiplicity(std::string_view s) { return lookup(s, kMultTokens); }

std::string_view multiplicity_symbol(Multiplicity m) {
  switch (m) {
    case Multiplicity::one: return "1";
    case Multiplicity::plus: return "+";
    case Multiplicity::star: return "*";
  }
  return "?";
}

std::string_view trait_code(const TraitPair& t) { return name_of(t, kTraitCodes); }
std::optional<TraitPair> parse_trait_code(std::string_view s) { return lookup(s, kTraitCodes); }

std::size_t trait_cell(const TraitPair& t) {
  return (t.structurability == Structurability::non_structural ? 2u : 0u) +
         (t.tangibility == Tangibility::non_tangible ? 1u : 0u);
}

// --- Category ----------------------------------------------------------------

Category::Category(CategoryKind kind) : kind_(kind) {
  if (kind == CategoryKind::other) {
    throw std::invalid_argument("other category needs a name; use Category::other()");
  }
}

Category Category::other(std::string name) {
  if (detail::trim(name).empty()) {
    throw std::invalid_argument("other category needs a nonempty name");
  }
  return Category(CategoryKind::other, std::move(name));
}

std::string Category::name() const {
  return kind_ == CategoryKind::other ? other_name_ : std::string(to_string(kind_));
}

// --- Endpoint ----------------------------------------------------------------

std::string Endpoint::node_id() const {
  switch (role) {
    case NodeRole::capability:
      return capability ? std::string(to_string(*capability)) : std::string("capability");
    case NodeRole::sensor:
      return external ? "external_sensor" : "internal_sensor";
    case NodeRole::actuator:
      return external ? "external_actuator" : "internal_actuator";
    case NodeRole::external_node:
      return "external_node";
    case NodeRole::environment:
      return "environment";
  }
  return "?";
}

// --- representations ---------------------------------------------------------

PartialTraits default_traits(const Category& category) {
  using S = Structurability;
  using T = Tangibility;
  switch (category.kind()) {
    case CategoryKind::model:
    case CategoryKind::program:
      return {S::structural, T::tangible};
    case CategoryKind::assumption:
    case CategoryKind::concept_:
      return {S::non_structural, T::non_tangible};
    case CategoryKind::documentation:
      return {std::nullopt, T::tangible};
    case CategoryKind::methodology:
      return {std::nullopt, T::non_tangible};
    case CategoryKind::other:
      return {};
  }
  return {};
}

ValidationReport validate_representation(const ExpertiseRepresentation& rep) {
  ValidationReport report;
  if (rep.id.empty()) report.add("/id", "id must be nonempty");
  if (rep.compatible_capabilities.empty()) {
    report.add("/compatible_capabilities",
               "a representation must be compatible with at least one capability");
  }
  const PartialTraits implied = default_traits(rep.category);
  if (implied.structurability && *implied.structurability != rep.traits.structurability) {
    report.add("/traits/structurability",
               "category " + rep.category.name() + " requires " +
                   std::string(to_string(*implied.structurability)));
  }
  if (implied.tangibility && *implied.tangibility != rep.traits.tangibility) {
    report.add("/traits/tangibility", "category " + rep.category.name() + " requires " +
                                          std::string(to_string(*implied.tangibility)));
  }
  return report;
}

std::set<CategoryKind> classify(const CriteriaAnswers& answers) {
  ValidationReport report;
  for (const auto& [kind, list] : answers.categories) {
    if (kind == CategoryKind::other) {
      report.add("/other", "the other category has no criteria");
      continue;
    }
    const auto expected = category_criteria(kind).size();
    if (list.size() != expected) {
      report.add("/" + std::string(to_string(kind)),
                 std::string(to_string(kind)) + " expects " + std::to_string(expected) +
                     " answers, got " + std::to_string(list.size()));
    }
  }
  for (CategoryKind kind : kBuiltinCategories) {
    if (!answers.categories.count(kind)) {
      report.add("/" + std::string(to_string(kind)),
                 std::string(to_string(kind)) + " answers are missing");
    }
  }
  if (!answers.structurability.empty() &&
      answers.structurability.size() != structurability_criteria().size()) {
    report.add("/structurability", "structurability expects " +
                                       std::to_string(structurability_criteria().size()) +
                                       " answers");
  }
  if (!answers.tangibility.empty() && answers.tangibility.size() != tangibility_criteria().size()) {
    report.add("/tangibility",
               "tangibility expects " + std::to_string(tangibility_criteria().size()) + " answers");
  }
  if (!report.ok()) throw ValidationError(std::move(report));

  std::set<CategoryKind> matched;
  for (const auto& [kind, list] : answers.categories) {
    if (std::all_of(list.begin(), list.end(), [](bool b) { return b; })) matched.insert(kind);
  }
  return matched;
}

PartialTraits assess_traits(const CriteriaAnswers& answers) {
  auto all = [](const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
  };
  PartialTraits out;
  if (!answers.structurability.empty()) {
    if (answers.structurability.size() != structurability_criteria().size()) {
      ValidationReport r;
      r.add("/structurability", "wrong number of structurability answers");
      throw ValidationError(std::move(r));
    }
    out.structurability =
        all(answers.structurability) ? Structurability::structural : Structurability::non_structural;
  }
  if (!answers.tangibility.empty()) {
    if (answers.tangibility.size() != tangibility_criteria().size()) {
      ValidationReport r;
      r.add("/tangibility", "wrong number of tangibility answers");
      throw ValidationError(std::move(r));
    }
    out.tangibility = all(answers.tangibility) ? Tangibility::tangible : Tangibility::non_tangible;
  }
  return out;
}

CompatLookup compat_defaults(std::string_view name_or_category) {
  const std::string key = detail::lower(detail::trim(name_or_category));
  for (const auto& entry : compat_registry()) {
    if (detail::lower(entry.name) == key) return {entry.capabilities, std::nullopt};
  }
  if (auto kind = parse_category_kind(key); kind && *kind != CategoryKind::other) {
    CapabilitySet merged;
    for (const auto& entry : compat_registry()) {
      if (entry.category == *kind) merged.insert(entry.capabilities.begin(), entry.capabilities.end());
    }
    return {merged, std::nullopt};
  }
  return {{}, "no default compatibility for '" + std::string(name_or_category) + "'"};
}

// --- patterns ----------------------------------------------------------------

const PatternDef* find_pattern(std::string_view id_or_name) {
  std::string key = detail::lower(detail::trim(id_or_name));
  constexpr std::string_view suffix = " pattern";
  if (key.size() > suffix.size() && key.ends_with(suffix)) key.resize(key.size() - suffix.size());
  for (const auto& p : pattern_catalog()) {
    if (detail::lower(p.id) == key || detail::lower(p.name) == key) return &p;
  }
  return nullptr;
}

ValidationReport validate_pattern(const PatternDef& def) {
  ValidationReport report;
  if (!def.capabilities.count(Capability::stimulus)) {
    report.add("/capabilities", "stimulus missing");
  }
  if (def.capabilities == CapabilitySet{Capability::stimulus, Capability::goal}) {
    report.add("/capabilities", "goal cannot pair with stimulus alone");
  }
  auto check_endpoint = [&](const Endpoint& e, const std::string& path) {
    if (e.role == NodeRole::capability) {
      if (!e.capability) {
        report.add(path, "capability endpoint without a capability");
      } else if (!def.capabilities.count(*e.capability) &&
                 !(*e.capability == Capability::meta_self && def.meta_self_optional)) {
        report.add(path, "connector references capability " + std::string(to_string(*e.capability)) +
                             " absent from the pattern");
      }
    }
  };
  for (std::size_t i = 0; i < def.connectors.size(); ++i) {
    const auto& c = def.connectors[i];
    const std::string base = "/connectors/" + std::to_string(i);
    check_endpoint(c.a, base + "/a");
    check_endpoint(c.b, base + "/b");
    const bool same_node = c.a.node_id() == c.b.node_id();
    if (c.kind == ConnectorKind::physical_same_capability &&
        (c.a.role != NodeRole::capability || !same_node)) {
      report.add(base, "same-capability connector must join one capability across nodes");
    }
    if (c.kind == ConnectorKind::physical_inter_capability && same_node) {
      report.add(base, "inter-capability connector must join distinct roles");
    }
  }
  return report;
}

}  // namespace dbases
