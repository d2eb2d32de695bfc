// Shipped reference data: classification checklists, level criteria, the
// representation/capability registry and the pattern catalog.

#include "dbases/core_model.hpp"

namespace dbases {

namespace {

using C = Capability;

const CapabilitySet kAll{C::stimulus, C::interaction, C::time, C::goal, C::meta_self};
const CapabilitySet kNoMeta{C::stimulus, C::interaction, C::time, C::goal};
const CapabilitySet kStimTimeGoal{C::stimulus, C::time, C::goal};

}  // namespace

const std::vector<std::string>& category_criteria(CategoryKind kind) {
  static const std::vector<std::string> methodology{
      "spans all or nearly all engineering phases",
      "prescribes methods, rules, procedures or processes for managing a project",
      "describes stakeholder roles in the engineering process",
  };
  static const std::vector<std::string> concept_list{
      "is an abstract notion capturing a justifiable phenomenon shared by many instances",
      "is phrased plainly, close to general human understanding",
      "is a widely recognized practice or truth in engineering",
  };
  static const std::vector<std::string> model{
      "has a formal notation or language for capturing system knowledge",
      "represents aspects of the system and their relationships",
      "formalizes one or more concepts",
      "is usually drawn graphically",
  };
  static const std::vector<std::string> documentation{
      "carries metadata on a digital or analog medium",
      "illustrates data or records an agreement between parties",
      "is entirely or mostly plain natural-language text",
  };
  static const std::vector<std::string> program{
      "relates to source code that makes the system execute",
  };
  static const std::vector<std::string> assumption{
      "is a general belief about the system derived from specific instances",
      "expresses an expectation that is not guaranteed to hold",
  };
  static const std::vector<std::string> none;
  switch (kind) {
    case CategoryKind::methodology: return methodology;
    case CategoryKind::concept_: return concept_list;
    case CategoryKind::model: return model;
    case CategoryKind::documentation: return documentation;
    case CategoryKind::program: return program;
    case CategoryKind::assumption: return assumption;
    case CategoryKind::other: return none;
  }
  return none;
}

const std::vector<std::string>& structurability_criteria() {
  static const std::vector<std::string> items{
      "internal elements and relations form repeatable patterns",
      "can be specialized into case-dependent variants derived from one core",
      "explains explicitly, step by step, how it is assembled",
  };
  return items;
}

const std::vector<std::string>& tangibility_criteria() {
  static const std::vector<std::string> items{
      "can be seen or touched directly to understand its information",
      "comes with a digital or analog medium",
  };
  return items;
}

const std::vector<std::string>& level_criteria(SynergyLevel level) {
  static const std::vector<std::string> l0;
  static const std::vector<std::string> l1{
      "the representation is specialized by in-depth human reasoning for the target system",
  };
  static const std::vector<std::string> l2{
      l1[0],
      "a non-trivial automatic process extracts information from the representation",
  };
  static const std::vector<std::string> l3{
      l1[0],
      l2[1],
      "internal components of the algorithm are tailored to exploit the extracted information",
  };
  switch (level) {
    case SynergyLevel::L0: return l0;
    case SynergyLevel::L1: return l1;
    case SynergyLevel::L2: return l2;
    case SynergyLevel::L3: return l3;
  }
  return l0;
}

const std::vector<CompatEntry>& compat_registry() {
  static const std::vector<CompatEntry> registry{
      {CategoryKind::methodology, "SSADM", kAll},
      {CategoryKind::methodology, "SCRUM", kAll},
      {CategoryKind::concept_, "technical debt", {C::time, C::goal}},
      {CategoryKind::concept_, "code smell", kStimTimeGoal},
      {CategoryKind::concept_, "software entropy", {C::time, C::goal}},
      {CategoryKind::concept_, "feature creep", kStimTimeGoal},
      {CategoryKind::model, "feature model", kStimTimeGoal},
      {CategoryKind::model, "goal model", kStimTimeGoal},
      {CategoryKind::model, "UML", kAll},
      {CategoryKind::model, "Petri net", kNoMeta},
      {CategoryKind::model, "Markov model", kNoMeta},
      {CategoryKind::model, "queuing model", kStimTimeGoal},
      {CategoryKind::model, "design pattern", {C::stimulus, C::goal}},
      {CategoryKind::documentation, "SLA", kStimTimeGoal},
      {CategoryKind::documentation, "requirement documents", kAll},
      {CategoryKind::documentation, "API", {C::stimulus, C::goal}},
      {CategoryKind::program, "source code", kNoMeta},
      {CategoryKind::program, "library invocation and dependency", kStimTimeGoal},
      {CategoryKind::assumption, "past problem instances and experiences", kAll},
      {CategoryKind::assumption, "insights from peer and users discussions", kAll},
  };
  return registry;
}

namespace {

Endpoint cap(Capability c) { return {NodeRole::capability, c, false}; }
Endpoint sensor(bool external) { return {NodeRole::sensor, std::nullopt, external}; }
Endpoint actuator(bool external) { return {NodeRole::actuator, std::nullopt, external}; }
Endpoint environment() { return {NodeRole::environment, std::nullopt, false}; }
Endpoint external_node() { return {NodeRole::external_node, std::nullopt, false}; }

using K = ConnectorKind;
using M = Multiplicity;

struct PatternShape {
  bool share_time = false;  // time knowledge exchanged with peers
  bool share_goal = false;  // goal knowledge exchanged with peers
  bool coordinated = false;
};

// Connectors for one node of a pattern. Sensing and acting are always
// present; peer links appear only when interaction-awareness is.
std::vector<Connector> build_connectors(const CapabilitySet& caps, const PatternShape& shape) {
  std::vector<Connector> out;
  out.push_back({environment(), sensor(false), K::physical_inter_capability, M::one, M::plus});
  out.push_back({sensor(false), cap(C::stimulus), K::physical_inter_capability, M::plus, M::one});
  out.push_back({cap(C::stimulus), actuator(false), K::physical_inter_capability, M::one, M::plus});
  out.push_back({actuator(false), environment(), K::physical_inter_capability, M::plus, M::one});

  const bool time = caps.count(C::time) > 0;
  const bool goal = caps.count(C::goal) > 0;
  const bool interaction = caps.count(C::interaction) > 0;

  if (time) out.push_back({cap(C::stimulus), cap(C::time), K::physical_inter_capability, M::one, M::one});
  if (goal) out.push_back({cap(C::stimulus), cap(C::goal), K::physical_inter_capability, M::one, M::one});
  if (time && goal) out.push_back({cap(C::time), cap(C::goal), K::physical_inter_capability, M::one, M::one});

  if (interaction) {
    out.push_back({cap(C::stimulus), cap(C::interaction), K::physical_inter_capability, M::one, M::one});
    if (time) out.push_back({cap(C::interaction), cap(C::time), K::physical_inter_capability, M::one, M::one});
    if (goal) out.push_back({cap(C::interaction), cap(C::goal), K::physical_inter_capability, M::one, M::one});
    out.push_back({sensor(true), cap(C::interaction), K::physical_inter_capability, M::plus, M::one});
    out.push_back({cap(C::interaction), actuator(true), K::physical_inter_capability, M::one, M::plus});
    out.push_back({cap(C::interaction), cap(C::interaction), K::physical_same_capability, M::one, M::star});
    if (shape.share_time) out.push_back({cap(C::time), cap(C::time), K::logical, M::one, M::plus});
    if (shape.share_goal) out.push_back({cap(C::goal), cap(C::goal), K::logical, M::one, M::plus});
    if (shape.coordinated) {
      out.push_back({cap(C::interaction), external_node(), K::logical, M::one, M::plus});
      out.push_back({actuator(true), external_node(), K::physical_inter_capability, M::plus, M::plus});
    }
  }
  return out;
}

PatternDef make(std::string id, std::string name, CapabilitySet caps, PatternShape shape,
                std::string characteristics) {
  PatternDef p;
  p.id = std::move(id);
  p.name = std::move(name);
  p.capabilities = std::move(caps);
  p.meta_self_optional = true;
  p.external_decision_links = shape.coordinated;
  p.connectors = build_connectors(p.capabilities, shape);
  p.characteristics = std::move(characteristics);
  return p;
}

}  // namespace

const std::vector<PatternDef>& pattern_catalog() {
  static const std::vector<PatternDef> catalog{
      make("basic", "Basic", {C::stimulus}, {},
           "Triggers actions in response to emergent events and stimuli."),
      make("basic_information_sharing", "Basic Information Sharing", {C::stimulus, C::interaction}, {},
           "Several nodes loosely share data to meet scalability needs."),
      make("coordinated_decision_making", "Coordinated Decision-making", {C::stimulus, C::interaction},
           {.coordinated = true},
           "Cooperative nodes need consistent global decisions; adds links to external nodes."),
      make("temporal_knowledge_sharing", "Temporal Knowledge Sharing",
           {C::stimulus, C::interaction, C::time}, {.share_time = true},
           "Action timing and history affect the integrity of shared information."),
      make("temporal_knowledge_aware", "Temporal Knowledge Aware", {C::stimulus, C::time}, {},
           "Action timing and history matter only locally."),
      make("goal_sharing", "Goal Sharing", {C::stimulus, C::interaction, C::goal}, {.share_goal = true},
           "Goal reasoning and optimization under strong consensus."),
      make("temporal_goal_aware", "Temporal Goal Aware", {C::stimulus, C::time, C::goal}, {},
           "Timing and history feed local goal reasoning and optimization."),
      make("fully_self_aware", "Fully Self-Aware", {C::stimulus, C::interaction, C::time, C::goal},
           {.share_time = true, .share_goal = true},
           "Timing and history feed goal reasoning under strong consensus."),
  };
  return catalog;
}

}  // namespace dbases
