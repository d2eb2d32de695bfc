#include "dbases/project_io.hpp"

#include <fstream>
#include <sstream>

#include "json_reader.hpp"
#include "text_util.hpp"

namespace dbases {

using detail::Reader;

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& detail)
    : ValidationError([&] {
        ValidationReport r;
        r.add("", "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                      ": " + detail);
        return r;
      }()),
      line_(line),
      column_(column) {}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points at the offending character.
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(line, column, what);
  }
}

// --- decoding ----------------------------------------------------------------

namespace {

std::optional<Category> decode_category(const Reader& r) {
  auto token = r.string("category");
  if (!token) return std::nullopt;
  auto kind = parse_category_kind(*token);
  if (!kind) {
    r.fail_at(r.child_path("category"), "unknown category '" + *token + "'");
    return std::nullopt;
  }
  if (*kind == CategoryKind::other) {
    auto name = r.string("category_name");
    if (!name) return std::nullopt;
    if (detail::trim(*name).empty()) {
      r.fail_at(r.child_path("category_name"), "other category needs a nonempty name");
      return std::nullopt;
    }
    return Category::other(*name);
  }
  if (r.has("category_name")) {
    r.fail_at(r.child_path("category_name"), "only allowed for category other");
  }
  return Category(*kind);
}

std::optional<ExpertiseRepresentation> decode_representation(const Reader& r) {
  if (!r.expect_object()) return std::nullopt;
  r.only({"id", "name", "category", "category_name", "traits", "compatible_capabilities"});
  ExpertiseRepresentation rep;
  auto id = r.string("id");
  auto name = r.string("name");
  auto category = decode_category(r);
  if (!id || !name || !category) return std::nullopt;
  rep.id = *id;
  rep.name = *name;
  rep.category = *category;

  PartialTraits traits = default_traits(rep.category);
  if (auto t = r.object("traits", false)) {
    t->only({"structurability", "tangibility"});
    if (auto s = t->string("structurability", false)) {
      if (auto v = parse_structurability(*s)) traits.structurability = *v;
      else t->fail_at(t->child_path("structurability"), "unknown structurability '" + *s + "'");
    }
    if (auto s = t->string("tangibility", false)) {
      if (auto v = parse_tangibility(*s)) traits.tangibility = *v;
      else t->fail_at(t->child_path("tangibility"), "unknown tangibility '" + *s + "'");
    }
  }
  bool complete = true;
  if (!traits.structurability) {
    r.fail_at(r.child_path("traits") + "/structurability",
              "structurability is not implied by category " + rep.category.name() + " and must be given");
    complete = false;
  }
  if (!traits.tangibility) {
    r.fail_at(r.child_path("traits") + "/tangibility",
              "tangibility is not implied by category " + rep.category.name() + " and must be given");
    complete = false;
  }
  if (complete) rep.traits = {*traits.structurability, *traits.tangibility};

  if (r.has("compatible_capabilities")) {
    auto caps = r.token_set<Capability>("compatible_capabilities", parse_capability, "capability");
    if (!caps) return std::nullopt;
    rep.compatible_capabilities = *caps;
  } else {
    auto found = compat_defaults(rep.name);
    if (found.notice && !rep.category.is_other()) found = compat_defaults(rep.category.name());
    if (found.notice) {
      r.fail_at(r.child_path("compatible_capabilities"), *found.notice);
      return std::nullopt;
    }
    rep.compatible_capabilities = found.capabilities;
  }
  if (!complete) return std::nullopt;
  return rep;
}

std::optional<Endpoint> decode_endpoint(const Reader& r) {
  if (!r.expect_object()) return std::nullopt;
  r.only({"role", "capability", "external"});
  auto role_token = r.string("role");
  if (!role_token) return std::nullopt;
  auto role = parse_node_role(*role_token);
  if (!role) {
    r.fail_at(r.child_path("role"), "unknown role '" + *role_token + "'");
    return std::nullopt;
  }
  Endpoint e;
  e.role = *role;
  if (*role == NodeRole::capability) {
    auto c = r.string("capability");
    if (!c) return std::nullopt;
    e.capability = parse_capability(*c);
    if (!e.capability) {
      r.fail_at(r.child_path("capability"), "unknown capability '" + *c + "'");
      return std::nullopt;
    }
  } else if (r.has("capability")) {
    r.fail_at(r.child_path("capability"), "only allowed for role capability");
  }
  if (auto ext = r.boolean("external", false)) {
    if (*role != NodeRole::sensor && *role != NodeRole::actuator) {
      r.fail_at(r.child_path("external"), "only allowed for sensors and actuators");
    }
    e.external = *ext;
  }
  return e;
}

template <typename T, typename Parse>
std::optional<T> decode_token(const Reader& r, std::string_view key, Parse parse, std::string_view what) {
  auto token = r.string(key);
  if (!token) return std::nullopt;
  auto v = parse(*token);
  if (!v) r.fail_at(r.child_path(key), "unknown " + std::string(what) + " '" + *token + "'");
  return v;
}

std::optional<PatternDef> decode_pattern(const Reader& r) {
  if (r.value().is_string()) {
    const auto token = r.value().get<std::string>();
    if (const auto* p = find_pattern(token)) return *p;
    r.fail("unknown pattern '" + token + "'");
    return std::nullopt;
  }
  if (!r.expect_object()) return std::nullopt;
  r.only({"id", "name", "capabilities", "meta_self_optional", "external_decision_links", "connectors",
          "characteristics"});
  PatternDef p;
  auto id = r.string("id");
  auto name = r.string("name");
  auto caps = r.token_set<Capability>("capabilities", parse_capability, "capability");
  if (id) p.id = *id;
  if (name) p.name = *name;
  if (caps) p.capabilities = *caps;
  p.meta_self_optional = r.boolean("meta_self_optional", false).value_or(true);
  p.external_decision_links = r.boolean("external_decision_links", false).value_or(false);
  p.characteristics = r.string("characteristics", false).value_or("");
  bool ok = id && name && caps;
  if (auto arr = r.array("connectors", false)) {
    for (std::size_t i = 0; i < arr->value().size(); ++i) {
      Reader c = arr->at(i);
      if (!c.expect_object()) {
        ok = false;
        continue;
      }
      c.only({"a", "b", "kind", "multiplicity_a", "multiplicity_b"});
      std::optional<Endpoint> a, b;
      if (auto ra = c.object("a")) a = decode_endpoint(*ra);
      if (auto rb = c.object("b")) b = decode_endpoint(*rb);
      auto kind = decode_token<ConnectorKind>(c, "kind", parse_connector_kind, "connector kind");
      auto ma = decode_token<Multiplicity>(c, "multiplicity_a", parse_multiplicity, "multiplicity");
      auto mb = decode_token<Multiplicity>(c, "multiplicity_b", parse_multiplicity, "multiplicity");
      if (a && b && kind && ma && mb) {
        p.connectors.push_back({*a, *b, *kind, *ma, *mb});
      } else {
        ok = false;
      }
    }
  }
  if (!ok) return std::nullopt;
  return p;
}

std::optional<SynergySlot> decode_slot(const Reader& r) {
  if (!r.expect_object()) return std::nullopt;
  r.only({"id", "representation", "capability", "allowed_levels", "allowed_forms", "proficiency"});
  SynergySlot s;
  auto id = r.string("id");
  auto rep = r.string("representation");
  auto cap = decode_token<Capability>(r, "capability", parse_capability, "capability");
  auto levels = r.token_set<SynergyLevel>("allowed_levels", parse_level, "level");
  std::optional<std::set<SynergyForm>> forms = std::set<SynergyForm>{};
  if (r.has("allowed_forms")) forms = r.token_set<SynergyForm>("allowed_forms", parse_form, "form");
  auto p = r.number("proficiency");
  if (!(id && rep && cap && levels && forms && p)) return std::nullopt;
  s.id = *id;
  s.representation = *rep;
  s.capability = *cap;
  s.allowed_levels = *levels;
  s.allowed_forms = *forms;
  s.proficiency = *p;
  return s;
}

std::optional<SynergyConstraint> decode_constraint(const Reader& r) {
  if (!r.expect_object()) return std::nullopt;
  r.only({"if_slot", "if_level_in", "then_slot", "then_level_in"});
  auto if_slot = r.string("if_slot");
  auto if_levels = r.token_set<SynergyLevel>("if_level_in", parse_level, "level");
  auto then_slot = r.string("then_slot");
  auto then_levels = r.token_set<SynergyLevel>("then_level_in", parse_level, "level");
  if (!(if_slot && if_levels && then_slot && then_levels)) return std::nullopt;
  return SynergyConstraint{*if_slot, *if_levels, *then_slot, *then_levels};
}

// Partial score configuration on top of the defaults.
ScoreConfig decode_score_config(const Reader& r) {
  ScoreConfig cfg;
  if (!r.expect_object()) return cfg;
  r.only({"w", "b", "d", "d0", "rung_labels"});
  if (auto w = r.object("w", false)) {
    w->only({"specific", "general"});
    for (SynergyForm f : kAllForms) {
      if (auto v = w->number(to_string(f), false)) cfg.w[static_cast<std::size_t>(f)] = *v;
    }
  }
  if (auto b = r.object("b", false)) {
    b->only({"L0", "L1", "L2", "L3"});
    for (SynergyLevel l : kAllLevels) {
      if (auto v = b->number(to_string(l), false)) cfg.b[static_cast<std::size_t>(level_index(l))] = *v;
    }
  }
  if (auto d = r.object("d", false)) {
    d->only({"L1", "L2", "L3"});
    for (int row = 0; row < 3; ++row) {
      const std::string key = "L" + std::to_string(row + 1);
      auto cells = d->object(key, false);
      if (!cells) continue;
      cells->only({"S+T", "S+N", "N+T", "N+N"});
      for (std::size_t cell = 0; cell < 4; ++cell) {
        if (auto v = cells->number(trait_code(kTraitCells[cell]), false)) cfg.d[row][cell] = *v;
      }
    }
  }
  if (auto d0 = r.number("d0", false)) cfg.d0 = *d0;
  if (auto labels = r.array("rung_labels", false)) {
    cfg.rung_labels.clear();
    for (std::size_t i = 0; i < labels->value().size(); ++i) {
      Reader item = labels->at(i);
      if (!item.expect_object()) continue;
      item.only({"value", "label"});
      auto v = item.number("value");
      auto l = item.string("label");
      if (v && l) cfg.rung_labels.push_back({*v, *l});
    }
  }
  return cfg;
}

json level_set_json(const std::set<SynergyLevel>& levels) {
  json out = json::array();
  for (auto l : levels) out.push_back(to_string(l));
  return out;
}

json capability_set_json(const CapabilitySet& caps) {
  json out = json::array();
  for (auto c : caps) out.push_back(to_string(c));
  return out;
}

json endpoint_json(const Endpoint& e) {
  json out{{"role", to_string(e.role)}};
  if (e.capability) out["capability"] = to_string(*e.capability);
  if (e.role == NodeRole::sensor || e.role == NodeRole::actuator) out["external"] = e.external;
  return out;
}

json option_json(const SlotOption& opt) {
  json out{{"level", to_string(opt.level)}};
  if (opt.form) out["form"] = to_string(*opt.form);
  return out;
}

json assignment_json(const Candidate& c, const std::vector<std::string>& slot_ids) {
  json out = json::object();
  for (std::size_t i = 0; i < c.assignment.size() && i < slot_ids.size(); ++i) {
    out[slot_ids[i]] = option_json(c.assignment[i]);
  }
  return out;
}

}  // namespace

Project project_from_json(const json& doc) {
  ValidationReport report;
  Reader root(doc, "", report);
  Project project;
  if (!root.expect_object()) throw ValidationError(std::move(report));
  root.only({"schema_version", "meta", "pattern", "representations", "slots", "constraints", "score_config",
             "shortlist"});

  if (auto v = root.number("schema_version")) {
    if (*v != static_cast<double>(static_cast<int>(*v))) {
      root.fail_at("/schema_version", "expected an integer");
    } else {
      project.schema_version = static_cast<int>(*v);
    }
  }
  if (auto meta = root.object("meta")) {
    meta->only({"name", "description"});
    project.meta.name = meta->string("name").value_or("");
    project.meta.description = meta->string("description", false).value_or("");
  }
  if (root.has("pattern")) {
    if (auto p = decode_pattern(root.at("pattern"))) {
      project.pattern = *p;
      project.pattern_inline = !doc.at("pattern").is_string();
    }
  } else {
    root.fail_at("/pattern", "required field missing");
  }
  if (auto reps = root.array("representations")) {
    for (std::size_t i = 0; i < reps->value().size(); ++i) {
      if (auto rep = decode_representation(reps->at(i))) project.representations.push_back(*rep);
    }
  }
  if (auto slots = root.array("slots")) {
    for (std::size_t i = 0; i < slots->value().size(); ++i) {
      if (auto slot = decode_slot(slots->at(i))) project.slots.push_back(*slot);
    }
  }
  if (auto cons = root.array("constraints", false)) {
    for (std::size_t i = 0; i < cons->value().size(); ++i) {
      if (auto c = decode_constraint(cons->at(i))) project.constraints.push_back(*c);
    }
  }
  if (root.has("score_config")) project.score_config = decode_score_config(root.at("score_config"));
  if (auto list = root.array("shortlist", false)) {
    for (std::size_t i = 0; i < list->value().size(); ++i) {
      const auto& v = list->value()[i];
      if (!v.is_string()) {
        root.fail_at(list->child_path(i), "expected a string");
        continue;
      }
      project.shortlist.push_back(v.get<std::string>());
    }
  }

  // Semantic checks only make sense on a structurally complete decode;
  // otherwise index-based paths would point at the wrong elements.
  if (report.ok()) report.merge(validate_project(project));
  if (!report.ok()) throw ValidationError(std::move(report));
  return project;
}

json score_config_to_json(const ScoreConfig& cfg) {
  json w = json::object();
  for (SynergyForm f : kAllForms) w[std::string(to_string(f))] = cfg.weight(f);
  json b = json::object();
  for (SynergyLevel l : kAllLevels) b[std::string(to_string(l))] = cfg.benefit(l);
  json d = json::object();
  for (int row = 0; row < 3; ++row) {
    json cells = json::object();
    for (std::size_t cell = 0; cell < 4; ++cell) {
      cells[std::string(trait_code(kTraitCells[cell]))] = cfg.d[row][cell];
    }
    d["L" + std::to_string(row + 1)] = cells;
  }
  json labels = json::array();
  for (const auto& r : cfg.rung_labels) labels.push_back({{"value", r.value}, {"label", r.label}});
  return {{"w", w}, {"b", b}, {"d", d}, {"d0", cfg.d0}, {"rung_labels", labels}};
}

json pattern_to_json(const PatternDef& p) {
  json connectors = json::array();
  for (const auto& c : p.connectors) {
    connectors.push_back({{"a", endpoint_json(c.a)},
                          {"b", endpoint_json(c.b)},
                          {"kind", to_string(c.kind)},
                          {"multiplicity_a", to_string(c.multiplicity_a)},
                          {"multiplicity_b", to_string(c.multiplicity_b)}});
  }
  return {{"id", p.id},
          {"name", p.name},
          {"capabilities", capability_set_json(p.capabilities)},
          {"meta_self_optional", p.meta_self_optional},
          {"external_decision_links", p.external_decision_links},
          {"connectors", connectors},
          {"characteristics", p.characteristics}};
}

json project_to_json(const Project& project) {
  json reps = json::array();
  for (const auto& r : project.representations) {
    json item{{"id", r.id},
              {"name", r.name},
              {"category", to_string(r.category.kind())},
              {"traits",
               {{"structurability", to_string(r.traits.structurability)},
                {"tangibility", to_string(r.traits.tangibility)}}},
              {"compatible_capabilities", capability_set_json(r.compatible_capabilities)}};
    if (r.category.is_other()) item["category_name"] = r.category.name();
    reps.push_back(std::move(item));
  }
  json slots = json::array();
  for (const auto& s : project.slots) {
    json forms = json::array();
    for (auto f : s.allowed_forms) forms.push_back(to_string(f));
    slots.push_back({{"id", s.id},
                     {"representation", s.representation},
                     {"capability", to_string(s.capability)},
                     {"allowed_levels", level_set_json(s.allowed_levels)},
                     {"allowed_forms", forms},
                     {"proficiency", s.proficiency}});
  }
  json constraints = json::array();
  for (const auto& c : project.constraints) {
    constraints.push_back({{"if_slot", c.if_slot},
                           {"if_level_in", level_set_json(c.if_level_in)},
                           {"then_slot", c.then_slot},
                           {"then_level_in", level_set_json(c.then_level_in)}});
  }
  return {{"schema_version", project.schema_version},
          {"meta", {{"name", project.meta.name}, {"description", project.meta.description}}},
          {"pattern", project.pattern_inline ? pattern_to_json(project.pattern) : json(project.pattern.id)},
          {"representations", reps},
          {"slots", slots},
          {"constraints", constraints},
          {"score_config", score_config_to_json(project.score_config)},
          {"shortlist", project.shortlist}};
}

Project load_project_text(std::string_view text) { return project_from_json(parse_json_text(text)); }

Project load_project(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_project_text(buf.str());
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string canonical_project_text(const Project& project) {
  return canonical_dump(project_to_json(project));
}

void save_project(const Project& project, const std::filesystem::path& path) {
  const auto text = canonical_project_text(project);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

// --- other documents ---------------------------------------------------------

json catalog_to_json() {
  json patterns = json::array();
  for (const auto& p : pattern_catalog()) patterns.push_back(pattern_to_json(p));

  json categories = json::object();
  for (CategoryKind k : kBuiltinCategories) categories[std::string(to_string(k))] = category_criteria(k);
  json levels = json::object();
  for (SynergyLevel l : kAllLevels) levels[std::string(to_string(l))] = level_criteria(l);

  json registry = json::array();
  for (const auto& e : compat_registry()) {
    registry.push_back({{"category", to_string(e.category)},
                        {"name", e.name},
                        {"capabilities", capability_set_json(e.capabilities)}});
  }
  return {{"patterns", patterns},
          {"criteria",
           {{"categories", categories},
            {"structurability", structurability_criteria()},
            {"tangibility", tangibility_criteria()},
            {"levels", levels}}},
          {"compat_registry", registry},
          {"score_config_defaults", score_config_to_json(ScoreConfig{})}};
}

CriteriaAnswers answers_from_json(const json& doc) {
  ValidationReport report;
  Reader root(doc, "", report);
  CriteriaAnswers answers;
  if (!root.expect_object()) throw ValidationError(std::move(report));
  root.only({"methodology", "concept", "model", "documentation", "program", "assumption", "structurability",
             "tangibility"});
  auto bools = [&](std::string_view key, bool required) -> std::optional<std::vector<bool>> {
    auto arr = root.array(key, required);
    if (!arr) return std::nullopt;
    std::vector<bool> out;
    for (std::size_t i = 0; i < arr->value().size(); ++i) {
      const auto& v = arr->value()[i];
      if (!v.is_boolean()) {
        root.fail_at(arr->child_path(i), "expected a boolean");
        continue;
      }
      out.push_back(v.get<bool>());
    }
    return out;
  };
  for (CategoryKind k : kBuiltinCategories) {
    if (auto list = bools(to_string(k), true)) answers.categories[k] = *list;
  }
  if (auto s = bools("structurability", false)) answers.structurability = *s;
  if (auto t = bools("tangibility", false)) answers.tangibility = *t;
  if (!report.ok()) throw ValidationError(std::move(report));
  return answers;
}

Overrides overrides_from_json(const json& doc) {
  ValidationReport report;
  Reader root(doc, "", report);
  Overrides out;
  if (doc.is_null()) return out;
  if (!root.expect_object()) throw ValidationError(std::move(report));
  root.only({"w", "p"});
  if (auto w = root.object("w", false)) {
    w->only({"specific", "general"});
    for (SynergyForm f : kAllForms) {
      if (auto v = w->number(to_string(f), false)) out.w[f] = *v;
    }
  }
  if (auto p = root.object("p", false)) {
    for (const auto& [slot, value] : p->value().items()) {
      if (!value.is_number()) {
        report.add(p->child_path(slot), "expected a number");
        continue;
      }
      out.p[slot] = value.get<double>();
    }
  }
  if (!report.ok()) throw ValidationError(std::move(report));
  return out;
}

json overrides_to_json(const Overrides& overrides) {
  json w = json::object();
  for (const auto& [form, value] : overrides.w) w[std::string(to_string(form))] = value;
  json p = json::object();
  for (const auto& [slot, value] : overrides.p) p[slot] = value;
  return {{"w", w}, {"p", p}};
}

json candidates_to_json(const std::vector<Candidate>& candidates, const std::vector<std::string>& slot_ids) {
  json out = json::array();
  for (const auto& c : candidates) {
    out.push_back({{"id", c.id}, {"assignment", assignment_json(c, slot_ids)}});
  }
  return out;
}

json analysis_to_json(const AnalysisResult& analysis) {
  json candidates = json::array();
  for (const auto& c : analysis.candidates) {
    json item{{"id", c.id},
              {"assignment", assignment_json(c, analysis.slot_ids)},
              {"pareto", c.pareto.value_or(false)},
              {"shortlisted", c.shortlisted}};
    if (c.scores) {
      item["B"] = c.scores->benefit;
      item["D"] = c.scores->difficulty;
      item["B_text"] = detail::fixed_half_up(c.scores->benefit, 2);
      item["D_text"] = detail::fixed_half_up(c.scores->difficulty, 2);
    }
    candidates.push_back(std::move(item));
  }
  return {{"project", analysis.project_name},
          {"slots", analysis.slot_ids},
          {"overrides", overrides_to_json(analysis.overrides)},
          {"count", analysis.candidates.size()},
          {"candidates", candidates}};
}

}  // namespace dbases
