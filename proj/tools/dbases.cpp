// dbases: command-line front end for the toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dbases/engine.hpp"
#include "dbases/project_io.hpp"
#include "dbases/report.hpp"
#include "dbases/service.hpp"

namespace {

using namespace dbases;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

void write_output(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + out);
  f << text;
  if (!f.flush()) throw IoError("write failed for " + out);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void print_report(const ValidationReport& report, const std::string& source) {
  for (const auto& f : report.findings) {
    std::cerr << source << ": " << (f.path.empty() ? "/" : f.path) << ": " << f.message << '\n';
  }
}

std::string catalog_text() {
  std::ostringstream o;
  o << "Patterns:\n";
  for (const auto& p : pattern_catalog()) {
    o << "  " << p.id << " (" << p.name << "):";
    for (auto c : p.capabilities) o << ' ' << to_string(c);
    o << '\n';
  }
  o << "Expertise categories:\n";
  for (auto k : kBuiltinCategories) {
    o << "  " << to_string(k) << '\n';
    for (const auto& c : category_criteria(k)) o << "    - " << c << '\n';
  }
  o << "Compatibility registry:\n";
  for (const auto& e : compat_registry()) {
    o << "  " << e.name << " [" << to_string(e.category) << "]:";
    for (auto c : e.capabilities) o << ' ' << to_string(c);
    o << '\n';
  }
  return o.str();
}

int serve(const std::string& host, int port, const std::string& data_dir) {
  ProjectStore store(data_dir);
  Service service(store);
  HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    std::cerr << "cannot bind " << host << ':' << port << '\n';
    return kInvalid;
  }
  std::cerr << "dbases serving " << data_dir << " on http://" << host << ':' << bound << '\n';
  return server.listen() ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision support for expertise and self-awareness synergies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dbases 1.0.0");

  std::string project_path;
  std::string out;
  std::string answers_path;
  std::string svg_path;
  std::string dot_path;
  std::string candidate_id;
  std::string format = "markdown";
  bool catalog_json = false;
  bool no_front = false;
  int port = 7343;
  std::string host = "127.0.0.1";
  std::string data_dir;
  if (const char* env = std::getenv("DBASES_DATA_DIR")) data_dir = env;
  if (data_dir.empty()) data_dir = "dbases-data";

  auto* validate = app.add_subcommand("validate", "Validate a project file");
  validate->add_option("project", project_path, "Project file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify a representation from criteria answers");
  classify_cmd->add_option("--answers", answers_path, "Answers JSON file")->required();

  auto* catalog = app.add_subcommand("catalog", "Show the shipped catalog");
  catalog->add_flag("--json", catalog_json, "Emit JSON");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List candidate synergy combinations");
  enumerate_cmd->add_option("project", project_path, "Project file")->required();
  enumerate_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* score = app.add_subcommand("score", "Enumerate, score and flag the Pareto front");
  score->add_option("project", project_path, "Project file")->required();
  score->add_option("--out", out, "Output file (default stdout)");

  auto* pareto_cmd = app.add_subcommand("pareto", "Print the Pareto-optimal candidates");
  pareto_cmd->add_option("project", project_path, "Project file")->required();

  auto* plot = app.add_subcommand("plot", "Write the benefit/difficulty scatter plot");
  plot->add_option("project", project_path, "Project file")->required();
  plot->add_option("--svg", svg_path, "SVG output file")->required();
  plot->add_flag("--no-front", no_front, "Omit the Pareto front polyline");

  auto* diagram = app.add_subcommand("diagram", "Write the pattern diagram");
  diagram->add_option("project", project_path, "Project file")->required();
  diagram->add_option("--candidate", candidate_id, "Annotate with this candidate's synergies");
  diagram->add_option("--dot", dot_path, "DOT output file")->required();

  auto* table_cmd = app.add_subcommand("table", "Print the scored candidate table");
  table_cmd->add_option("project", project_path, "Project file")->required();
  table_cmd->add_option("--format", format, "csv or markdown")->check(CLI::IsMember({"csv", "markdown"}));

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--data-dir", data_dir, "Project store directory (env DBASES_DATA_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string source = project_path.empty() ? answers_path : project_path;
  try {
    if (*validate) {
      const auto project = load_project(project_path);
      std::cout << "ok: " << project.meta.name << " (" << project.slots.size() << " slots, "
                << count_candidates(project) << " candidates)\n";
    } else if (*classify_cmd) {
      const auto answers = answers_from_json(read_json_file(answers_path));
      const auto kinds = classify(answers);
      const auto traits = assess_traits(answers);
      json cats = json::array();
      for (auto k : kinds) cats.push_back(to_string(k));
      json t = json::object();
      if (traits.structurability) t["structurability"] = to_string(*traits.structurability);
      if (traits.tangibility) t["tangibility"] = to_string(*traits.tangibility);
      json result{{"categories", cats}, {"traits", t}};
      if (kinds.empty()) result["note"] = "no built-in category matched; assign category other";
      std::cout << canonical_dump(result);
    } else if (*catalog) {
      std::cout << (catalog_json ? canonical_dump(catalog_to_json()) : catalog_text());
    } else if (*enumerate_cmd) {
      const auto project = load_project(project_path);
      std::vector<std::string> slots;
      for (const auto& s : project.slots) slots.push_back(s.id);
      write_output(canonical_dump(candidates_to_json(enumerate(project), slots)), out);
    } else if (*score) {
      write_output(canonical_dump(analysis_to_json(analyze(load_project(project_path)))), out);
    } else if (*pareto_cmd) {
      auto analysis = analyze(load_project(project_path));
      std::erase_if(analysis.candidates, [](const Candidate& c) { return !c.pareto.value_or(false); });
      std::cout << table(analysis, TableFormat::markdown);
    } else if (*plot) {
      PlotSpec spec;
      spec.pareto_front = !no_front;
      write_output(scatter_svg(analyze(load_project(project_path)), spec), svg_path);
    } else if (*diagram) {
      const auto project = load_project(project_path);
      if (candidate_id.empty()) {
        write_output(diagram_dot(project), dot_path);
      } else {
        const auto analysis = analyze(project);
        const auto* c = analysis.find(candidate_id);
        if (!c) {
          std::cerr << "unknown candidate " << candidate_id << '\n';
          return kInvalid;
        }
        write_output(diagram_dot(project, c), dot_path);
      }
    } else if (*table_cmd) {
      const auto f = format == "csv" ? TableFormat::csv : TableFormat::markdown;
      std::cout << table(analyze(load_project(project_path)), f);
    } else if (*serve_cmd) {
      return serve(host, port, data_dir);
    }
  } catch (const ValidationError& e) {
    print_report(e.report(), source);
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
