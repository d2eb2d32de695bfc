#include <set>
#include <sstream>

#include "dbases/report.hpp"

namespace dbases {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string dot_node(const Endpoint& e) {
  if (e.role == NodeRole::capability) return quoted("cap:" + e.node_id());
  return quoted(e.node_id());
}

std::string cap_node(Capability c) { return quoted("cap:" + std::string(to_string(c))); }

std::string display(std::string_view token) {
  std::string out(token);
  for (auto& c : out) {
    if (c == '_') c = ' ';
  }
  return out;
}

// Non-capability nodes in a fixed emission order.
struct PlainNode {
  const char* id;
  const char* label;
  const char* shape;
  const char* cls;
};
constexpr PlainNode kPlainNodes[] = {
    {"internal_sensor", "internal sensor", "invtriangle", "sensor internal"},
    {"internal_actuator", "internal actuator", "triangle", "actuator internal"},
    {"external_sensor", "external sensor", "invtriangle", "sensor external"},
    {"external_actuator", "external actuator", "triangle", "actuator external"},
    {"external_node", "external node", "box3d", "external-node"},
    {"environment", "environment", "box", "environment"},
};

}  // namespace

std::string synergy_label(const Project& project, std::size_t slot, const SlotOption& option) {
  if (option.level == SynergyLevel::L0) return "L0";
  const auto* rep = project.find_representation(project.slots.at(slot).representation);
  if (!rep) throw ReportError("slot " + project.slots[slot].id + " references an unknown representation");
  const auto rung = difficulty_rung(option.level, rep->traits, project.score_config);
  return std::string(to_string(option.level)) + "; " +
         std::string(to_string(option.form.value_or(SynergyForm::specific))) + "; " + rung.label;
}

std::string diagram_dot(const Project& project, const Candidate* candidate) {
  if (candidate && candidate->assignment.size() != project.slots.size()) {
    throw ReportError("candidate " + candidate->id + " assigns " + std::to_string(candidate->assignment.size()) +
                      " slots but the project has " + std::to_string(project.slots.size()));
  }
  const auto& pattern = project.pattern;

  std::set<Capability> caps = pattern.capabilities;
  std::set<std::string> plain;
  for (const auto& c : pattern.connectors) {
    for (const Endpoint* e : {&c.a, &c.b}) {
      if (e->role == NodeRole::capability) {
        if (e->capability) caps.insert(*e->capability);
      } else {
        plain.insert(e->node_id());
      }
    }
  }
  if (candidate) {
    for (const auto& slot : project.slots) caps.insert(slot.capability);
  }

  std::ostringstream o;
  o << "digraph " << quoted(pattern.id) << " {\n";
  o << "  graph [label=" << quoted(pattern.name + (candidate ? " (" + candidate->id + ")" : std::string()))
    << ", labelloc=t, rankdir=LR];\n";
  o << "  node [fontname=\"Helvetica\"];\n";
  o << "  edge [fontname=\"Helvetica\", fontsize=10];\n";

  for (Capability c : caps) {
    o << "  " << cap_node(c) << " [label=" << quoted(display(to_string(c))) << ", shape=ellipse, class="
      << quoted("capability") << "];\n";
  }
  for (const auto& n : kPlainNodes) {
    if (!plain.count(n.id)) continue;
    o << "  " << quoted(n.id) << " [label=" << quoted(n.label) << ", shape=" << n.shape
      << ", class=" << quoted(n.cls) << "];\n";
  }
  for (const auto& rep : project.representations) {
    o << "  " << quoted("rep:" + rep.id) << " [label=" << quoted(rep.name + "\n" + rep.category.name() + ", " +
                                                                   std::string(trait_code(rep.traits)))
      << ", shape=note, class=" << quoted("representation") << "];\n";
  }

  for (const auto& c : pattern.connectors) {
    o << "  " << dot_node(c.a) << " -> " << dot_node(c.b) << " [taillabel=" << quoted(multiplicity_symbol(c.multiplicity_a))
      << ", headlabel=" << quoted(multiplicity_symbol(c.multiplicity_b)) << ", class=" << quoted(to_string(c.kind));
    if (c.kind == ConnectorKind::logical) o << ", style=dashed";
    o << "];\n";
  }

  if (candidate) {
    for (std::size_t i = 0; i < project.slots.size(); ++i) {
      const auto& slot = project.slots[i];
      const auto& opt = candidate->assignment[i];
      o << "  " << quoted("rep:" + slot.representation) << " -> " << cap_node(slot.capability)
        << " [label=" << quoted(synergy_label(project, i, opt)) << ", class="
        << quoted("synergy " + std::string(to_string(opt.level))) << ", style=bold];\n";
    }
  }
  o << "}\n";
  return o.str();
}

}  // namespace dbases
