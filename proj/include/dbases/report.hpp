#pragma once

#include <stdexcept>
#include <string>

#include "dbases/engine.hpp"
#include "dbases/project.hpp"

namespace dbases {

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LabelMode { ids, none };

struct PlotSpec {
  int width = 800;
  int height = 600;
  int margin_left = 70;
  int margin_right = 20;
  int margin_top = 20;
  int margin_bottom = 60;
  std::string x_label = "Difficulty (D)";
  std::string y_label = "Benefit (B)";
  bool pareto_front = true;
  bool shortlist = true;
  LabelMode label_mode = LabelMode::ids;
};

/// Benefit over difficulty scatter plot as a self-contained SVG 1.1 document.
/// Throws ReportError on an empty or unscored analysis or a bad PlotSpec.
std::string scatter_svg(const AnalysisResult& analysis, const PlotSpec& spec = {});

enum class TableFormat { csv, markdown };

std::string table(const AnalysisResult& analysis, TableFormat format);

/// Pattern diagram in the DOT language. With a candidate, every slot adds a
/// representation to capability edge annotated with its synergy.
std::string diagram_dot(const Project& project, const Candidate* candidate = nullptr);

/// "L2;general" or "L0".
std::string assignment_cell(const SlotOption& option);
/// "L3; general; moderate" or "L0".
std::string synergy_label(const Project& project, std::size_t slot, const SlotOption& option);

}  // namespace dbases
