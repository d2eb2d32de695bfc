#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dbases/report.hpp"
#include "text_util.hpp"

namespace dbases {

namespace {

std::string num(double v) {
  // Avoid "-0.000" so identical geometry always prints identically.
  if (std::fabs(v) < 0.0005) v = 0.0;
  return detail::fixed_half_up(v, 3);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi) {
  if (hi - lo <= 0.0) return {lo - 0.5, hi + 0.5};
  const double pad = (hi - lo) * 0.05;
  return {lo - pad, hi + pad};
}

// Five evenly spaced ticks across the padded range.
constexpr int kTicks = 5;

constexpr const char* kStyle =
    ".axis{stroke:#333;stroke-width:1}"
    ".grid{stroke:#ddd;stroke-width:1}"
    ".tick{font-family:sans-serif;font-size:11px;fill:#333}"
    ".axis-label{font-family:sans-serif;font-size:13px;fill:#111}"
    ".candidate{stroke:#222;stroke-width:1}"
    ".candidate.dominated{fill:#9aa5b1}"
    ".candidate.pareto{fill:#d9480f}"
    ".candidate.shortlisted{stroke:#1c7ed6;stroke-width:3}"
    ".pareto-front{fill:none;stroke:#d9480f;stroke-width:1.5}"
    ".point-label{font-family:sans-serif;font-size:10px;fill:#333}";

}  // namespace

std::string scatter_svg(const AnalysisResult& analysis, const PlotSpec& spec) {
  if (analysis.candidates.empty()) throw ReportError("nothing to plot");
  if (spec.width <= 0 || spec.height <= 0) throw ReportError("plot width and height must be positive");
  const double plot_w = spec.width - spec.margin_left - spec.margin_right;
  const double plot_h = spec.height - spec.margin_top - spec.margin_bottom;
  if (plot_w <= 0 || plot_h <= 0) throw ReportError("margins leave no room for the plot");
  for (const auto& c : analysis.candidates) {
    if (!c.scores) throw ReportError("candidate " + c.id + " is not scored");
  }

  double dmin = analysis.candidates.front().scores->difficulty, dmax = dmin;
  double bmin = analysis.candidates.front().scores->benefit, bmax = bmin;
  for (const auto& c : analysis.candidates) {
    dmin = std::min(dmin, c.scores->difficulty);
    dmax = std::max(dmax, c.scores->difficulty);
    bmin = std::min(bmin, c.scores->benefit);
    bmax = std::max(bmax, c.scores->benefit);
  }
  const Range xr = padded(dmin, dmax);
  const Range yr = padded(bmin, bmax);
  const double x0 = spec.margin_left;
  const double y0 = spec.margin_top + plot_h;
  auto sx = [&](double d) { return x0 + (d - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto sy = [&](double b) { return y0 - (b - yr.lo) / (yr.hi - yr.lo) * plot_h; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
    << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
  o << "<title>" << xml_escape(analysis.project_name) << "</title>\n";
  o << "<style>" << kStyle << "</style>\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height
    << "\" fill=\"#ffffff\"/>\n";

  o << "<g class=\"grid-lines\">\n";
  for (int i = 0; i < kTicks; ++i) {
    const double t = static_cast<double>(i) / (kTicks - 1);
    const double dx = xr.lo + t * (xr.hi - xr.lo);
    const double by = yr.lo + t * (yr.hi - yr.lo);
    o << "<line class=\"grid\" x1=\"" << num(sx(dx)) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(sx(dx))
      << "\" y2=\"" << num(spec.margin_top) << "\"/>\n";
    o << "<line class=\"grid\" x1=\"" << num(x0) << "\" y1=\"" << num(sy(by)) << "\" x2=\""
      << num(x0 + plot_w) << "\" y2=\"" << num(sy(by)) << "\"/>\n";
    o << "<text class=\"tick\" x=\"" << num(sx(dx)) << "\" y=\"" << num(y0 + 16)
      << "\" text-anchor=\"middle\">" << detail::fixed_half_up(dx, 2) << "</text>\n";
    o << "<text class=\"tick\" x=\"" << num(x0 - 6) << "\" y=\"" << num(sy(by) + 4)
      << "\" text-anchor=\"end\">" << detail::fixed_half_up(by, 2) << "</text>\n";
  }
  o << "</g>\n";

  o << "<line class=\"axis\" x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0 + plot_w)
    << "\" y2=\"" << num(y0) << "\"/>\n";
  o << "<line class=\"axis\" x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0)
    << "\" y2=\"" << num(spec.margin_top) << "\"/>\n";
  o << "<text class=\"axis-label\" x=\"" << num(x0 + plot_w / 2) << "\" y=\"" << num(spec.height - 16.0)
    << "\" text-anchor=\"middle\">" << xml_escape(spec.x_label) << "</text>\n";
  const double ly = spec.margin_top + plot_h / 2;
  o << "<text class=\"axis-label\" x=\"18\" y=\"" << num(ly) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
    << num(ly) << ")\">" << xml_escape(spec.y_label) << "</text>\n";

  if (spec.pareto_front) {
    std::vector<const Candidate*> front;
    for (const auto& c : analysis.candidates) {
      if (c.pareto.value_or(false)) front.push_back(&c);
    }
    std::stable_sort(front.begin(), front.end(), [](const Candidate* a, const Candidate* b) {
      if (a->scores->difficulty != b->scores->difficulty) return a->scores->difficulty < b->scores->difficulty;
      return a->scores->benefit < b->scores->benefit;
    });
    o << "<polyline class=\"pareto-front\" points=\"";
    for (std::size_t i = 0; i < front.size(); ++i) {
      if (i) o << ' ';
      o << num(sx(front[i]->scores->difficulty)) << ',' << num(sy(front[i]->scores->benefit));
    }
    o << "\"/>\n";
  }

  o << "<g class=\"candidates\">\n";
  for (const auto& c : analysis.candidates) {
    std::string cls = c.pareto.value_or(false) ? "candidate pareto" : "candidate dominated";
    if (spec.shortlist && c.shortlisted) cls += " shortlisted";
    const double cx = sx(c.scores->difficulty);
    const double cy = sy(c.scores->benefit);
    o << "<circle id=\"" << xml_escape(c.id) << "\" class=\"" << cls << "\" cx=\"" << num(cx) << "\" cy=\""
      << num(cy) << "\" r=\"5\"><title>" << xml_escape(c.id) << ": B=" << detail::fixed_half_up(c.scores->benefit, 2)
      << ", D=" << detail::fixed_half_up(c.scores->difficulty, 2) << "</title></circle>\n";
  }
  o << "</g>\n";

  if (spec.label_mode == LabelMode::ids) {
    o << "<g class=\"labels\">\n";
    for (const auto& c : analysis.candidates) {
      o << "<text class=\"point-label\" x=\"" << num(sx(c.scores->difficulty) + 7) << "\" y=\""
        << num(sy(c.scores->benefit) - 7) << "\">" << xml_escape(c.id) << "</text>\n";
    }
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace dbases
