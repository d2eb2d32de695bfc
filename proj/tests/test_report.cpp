#include <doctest.h>

#include <sstream>

#include "dbases/report.hpp"
#include "support/fixtures.hpp"
#include "support/markup_check.hpp"

using namespace dbases;

namespace {

AnalysisResult two_points(Scores a, Scores b) {
  AnalysisResult r;
  r.project_name = "pair";
  r.slot_ids = {"s"};
  for (auto [id, sc] : {std::pair{"C0001", a}, std::pair{"C0002", b}}) {
    Candidate c;
    c.id = id;
    c.assignment = {{SynergyLevel::L1, SynergyForm::general}};
    c.scores = sc;
    r.candidates.push_back(c);
  }
  pareto(r.candidates);
  return r;
}

std::vector<std::string> polyline_points(const markup::XmlElement& root) {
  std::vector<const markup::XmlElement*> lines;
  markup::collect(root, "polyline", lines);
  std::vector<std::string> out;
  if (lines.empty()) return out;
  std::istringstream in(lines[0]->attrs.at("points"));
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Minimal RFC 4180 reader for round-trip checks.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows(1);
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      rows.back().push_back(field);
      field.clear();
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      rows.back().push_back(field);
      field.clear();
      rows.emplace_back();
      ++i;
    } else {
      field += c;
    }
  }
  if (rows.back().empty()) rows.pop_back();
  return rows;
}

std::vector<std::vector<std::string>> parse_markdown(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (n++ == 1) continue;  // separator row
    std::vector<std::string> row;
    std::string cell;
    for (std::size_t i = 1; i < line.size(); ++i) {
      if (line[i] == '\\' && i + 1 < line.size()) {
        cell += line[++i];
      } else if (line[i] == '|') {
        row.push_back(cell.substr(1, cell.size() - 2));
        cell.clear();
      } else {
        cell += line[i];
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("scatter plot structure on case 1") {
  auto a = analyze(fixtures::load("case1"));
  const auto svg = scatter_svg(a);
  markup::XmlElement root;
  REQUIRE(markup::check_xml(svg, &root) == "");
  CHECK(root.name == "svg");
  CHECK(root.attrs.at("width") == "800");
  CHECK(root.attrs.at("height") == "600");

  std::vector<const markup::XmlElement*> circles;
  markup::collect(root, "circle", circles);
  CHECK(circles.size() == a.candidates.size());

  std::size_t front = 0;
  for (const auto& c : a.candidates) front += c.pareto.value_or(false);
  CHECK(polyline_points(root).size() == front);

  std::size_t pareto_class = 0, ringed = 0;
  for (const auto* c : circles) {
    const auto& cls = c->attrs.at("class");
    pareto_class += cls.find("pareto") != std::string::npos;
    ringed += cls.find("shortlisted") != std::string::npos;
  }
  CHECK(pareto_class == front);
  CHECK(ringed == 3);

  std::vector<const markup::XmlElement*> styles, scripts;
  markup::collect(root, "style", styles);
  markup::collect(root, "script", scripts);
  CHECK(styles.size() == 1);
  CHECK(scripts.empty());
  CHECK(svg.find("href") == std::string::npos);
}

TEST_CASE("scatter plot is deterministic") {
  auto a = analyze(fixtures::load("case3"));
  CHECK(scatter_svg(a) == scatter_svg(analyze(fixtures::load("case3"))));
}

TEST_CASE("scatter plot edge cases") {
  SUBCASE("empty analysis") {
    AnalysisResult empty;
    CHECK_THROWS_WITH_AS(scatter_svg(empty), "nothing to plot", ReportError);
  }
  SUBCASE("single candidate") {
    AnalysisResult one = two_points({2.0, 1.0}, {2.0, 1.0});
    one.candidates.pop_back();
    pareto(one.candidates);
    const auto svg = scatter_svg(one);
    markup::XmlElement root;
    REQUIRE(markup::check_xml(svg, &root) == "");
    std::vector<const markup::XmlElement*> circles;
    markup::collect(root, "circle", circles);
    CHECK(circles.size() == 1);
    CHECK(polyline_points(root).size() == 1);  // one vertex, no segment
    // Degenerate range expands by 0.5 either side, so the point is centred.
    CHECK(circles[0]->attrs.at("cx") == "425.000");
    CHECK(circles[0]->attrs.at("cy") == "280.000");
  }
  SUBCASE("dominated pair") {
    const auto svg = scatter_svg(two_points({5.0, 1.0}, {4.0, 2.0}));
    markup::XmlElement root;
    REQUIRE(markup::check_xml(svg, &root) == "");
    CHECK(polyline_points(root).size() == 1);
  }
  SUBCASE("front can be disabled") {
    PlotSpec spec;
    spec.pareto_front = false;
    const auto svg = scatter_svg(two_points({5.0, 1.0}, {6.0, 2.0}), spec);
    CHECK(svg.find("polyline") == std::string::npos);
  }
  SUBCASE("bad spec") {
    PlotSpec spec;
    spec.width = 0;
    CHECK_THROWS_AS(scatter_svg(two_points({5.0, 1.0}, {6.0, 2.0}), spec), ReportError);
  }
  SUBCASE("unscored candidate") {
    auto a = two_points({5.0, 1.0}, {6.0, 2.0});
    a.candidates[0].scores.reset();
    CHECK_THROWS_AS(scatter_svg(a), ReportError);
  }
  SUBCASE("labels escaped") {
    auto a = two_points({5.0, 1.0}, {6.0, 2.0});
    a.project_name = "R&D <alpha>";
    PlotSpec spec;
    spec.x_label = "D \"raw\"";
    CHECK(markup::check_xml(scatter_svg(a, spec)) == "");
  }
}

TEST_CASE("front polyline follows difficulty order") {
  auto a = analyze(fixtures::load("case2"));
  const auto svg = scatter_svg(a);
  markup::XmlElement root;
  REQUIRE(markup::check_xml(svg, &root) == "");
  auto pts = polyline_points(root);
  double prev = -1;
  for (const auto& p : pts) {
    const double x = std::stod(p.substr(0, p.find(',')));
    CHECK(x >= prev);
    prev = x;
  }
}

TEST_CASE("tables") {
  auto a = analyze(fixtures::load("case1"));
  const auto csv = table(a, TableFormat::csv);
  const auto rows = parse_csv(csv);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == std::vector<std::string>{"id", "fm_stimulus", "fm_time", "fm_goal", "B", "D", "pareto",
                                            "shortlisted"});
  CHECK(rows[8][0] == "C0008");
  CHECK(rows[8][3] == "L3;general");
  CHECK(rows[8][4] == "13.23");
  CHECK(rows[8][5] == "2.80");
  CHECK(rows[6][4] == "12.60");
  CHECK(rows[6][5] == "2.64");
  CHECK(csv.find("\r\n") != std::string::npos);

  const auto md = table(a, TableFormat::markdown);
  CHECK(parse_markdown(md) == rows);

  SUBCASE("empty analysis gives header only") {
    AnalysisResult empty;
    empty.slot_ids = {"a"};
    CHECK(table(empty, TableFormat::csv) == "id,a,B,D,pareto,shortlisted\r\n");
    CHECK(parse_markdown(table(empty, TableFormat::markdown)).size() == 1);
  }
  SUBCASE("RFC 4180 quoting and markdown escaping") {
    AnalysisResult odd;
    odd.slot_ids = {"a,b", "say \"hi\"", "x|y"};
    const auto c = table(odd, TableFormat::csv);
    CHECK(c.find("\"a,b\"") != std::string::npos);
    CHECK(c.find("\"say \"\"hi\"\"\"") != std::string::npos);
    CHECK(parse_csv(c)[0][1] == "a,b");
    CHECK(parse_markdown(table(odd, TableFormat::markdown))[0] == parse_csv(c)[0]);
  }
  SUBCASE("L0 cells") {
    auto a2 = analyze(fixtures::load("case2"));
    CHECK(parse_csv(table(a2, TableFormat::csv))[1][2] == "L0");
  }
}

TEST_CASE("diagram for case 1 C1") {
  auto p = fixtures::load("case1");
  auto a = analyze(p);
  const auto* c1 = a.find("C0008");
  REQUIRE(c1);
  const auto dot = diagram_dot(p, c1);
  markup::DotGraph g;
  REQUIRE(markup::check_dot(dot, &g) == "");
  CHECK(g.directed);

  std::map<std::string, std::string> synergy;
  for (const auto& e : g.edges) {
    if (e.attrs.count("class") && e.attrs.at("class").rfind("synergy", 0) == 0) synergy[e.to] = e.attrs.at("label");
  }
  CHECK(synergy.at("cap:goal") == "L3; general; moderate");
  CHECK(synergy.at("cap:time") == "L2; general; easy");
  CHECK(synergy.at("cap:stimulus") == "L1; general; very easy");

  CHECK(g.nodes.count("cap:stimulus"));
  CHECK(g.nodes.count("internal_sensor"));
  CHECK(g.nodes.count("internal_actuator"));
  CHECK(g.nodes.at("rep:fm").at("shape") == "note");

  bool saw_logical = false;
  for (const auto& e : g.edges) {
    if (e.attrs.count("taillabel")) {
      const auto& t = e.attrs.at("taillabel");
      CHECK((t == "1" || t == "+" || t == "*"));
    }
    if (e.attrs.count("class") && e.attrs.at("class") == "logical") {
      saw_logical = true;
      CHECK(e.attrs.at("style") == "dashed");
    }
  }
  (void)saw_logical;
}

TEST_CASE("diagram without candidate has no synergy edges") {
  auto p = fixtures::load("case2");
  const auto dot = diagram_dot(p);
  markup::DotGraph g;
  REQUIRE(markup::check_dot(dot, &g) == "");
  for (const auto& e : g.edges) CHECK(e.from.rfind("rep:", 0) != 0);
  CHECK(dot.find("synergy") == std::string::npos);
}

TEST_CASE("diagram L0 synergies are labelled L0 only") {
  auto p = fixtures::load("case2");
  auto a = analyze(p);
  const auto dot = diagram_dot(p, a.find("C0001"));
  markup::DotGraph g;
  REQUIRE(markup::check_dot(dot, &g) == "");
  int l0 = 0;
  for (const auto& e : g.edges) {
    if (e.attrs.count("label") && e.attrs.at("label") == "L0") ++l0;
  }
  CHECK(l0 == 2);
}

TEST_CASE("Petri net at L2 on interaction is easy") {
  Project p;
  p.meta.name = "petri";
  p.pattern = *find_pattern("basic_information_sharing");
  p.representations.push_back({"pn", "Petri net", Category(CategoryKind::model),
                               {Structurability::structural, Tangibility::tangible},
                               compat_defaults("Petri net").capabilities});
  p.slots.push_back({"pn_int", "pn", Capability::interaction, {SynergyLevel::L2}, {SynergyForm::specific}, 1.5});
  auto a = analyze(p);
  const auto dot = diagram_dot(p, &a.candidates[0]);
  CHECK(dot.find("\"L2; specific; easy\"") != std::string::npos);
  CHECK(markup::check_dot(dot) == "");
}

TEST_CASE("every catalog pattern renders a parseable diagram") {
  for (const auto& pattern : pattern_catalog()) {
    CAPTURE(pattern.id);
    Project p;
    p.pattern = pattern;
    markup::DotGraph g;
    REQUIRE(markup::check_dot(diagram_dot(p), &g) == "");
    for (auto c : pattern.capabilities) CHECK(g.nodes.count("cap:" + std::string(to_string(c))));
    CHECK(g.edges.size() == pattern.connectors.size());
  }
}

TEST_CASE("diagram rejects a mismatched candidate") {
  auto p = fixtures::load("case1");
  Candidate c;
  c.id = "X";
  c.assignment = {{SynergyLevel::L1, SynergyForm::general}};
  CHECK_THROWS_AS(diagram_dot(p, &c), ReportError);
}

TEST_CASE("checkers reject malformed input") {
  CHECK(markup::check_xml("<a><b></a>") != "");
  CHECK(markup::check_xml("<a x=1/>") != "");
  CHECK(markup::check_xml("<a>&bogus;</a>") != "");
  CHECK(markup::check_xml("<a/>") == "");
  CHECK(markup::check_dot("digraph { a -> }") != "");
  CHECK(markup::check_dot("digraph { a -- b }") != "");
  CHECK(markup::check_dot("digraph g { \"a\" -> \"b\" [label=\"x\"]; }") == "");
}
