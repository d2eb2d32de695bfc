#include <sstream>
#include <vector>

#include "dbases/report.hpp"
#include "text_util.hpp"

namespace dbases {

std::string assignment_cell(const SlotOption& option) {
  std::string out(to_string(option.level));
  if (option.level != SynergyLevel::L0 && option.form) out += ";" + std::string(to_string(*option.form));
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|' || c == '\\') out += '\\';
    if (c == '\n' || c == '\r') {
      out += ' ';
      continue;
    }
    out += c;
  }
  return out;
}

std::vector<std::vector<std::string>> rows_of(const AnalysisResult& analysis) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"id"};
  for (const auto& s : analysis.slot_ids) header.push_back(s);
  for (const char* h : {"B", "D", "pareto", "shortlisted"}) header.emplace_back(h);
  rows.push_back(std::move(header));
  for (const auto& c : analysis.candidates) {
    std::vector<std::string> row{c.id};
    for (const auto& opt : c.assignment) row.push_back(assignment_cell(opt));
    row.push_back(c.scores ? detail::fixed_half_up(c.scores->benefit, 2) : "");
    row.push_back(c.scores ? detail::fixed_half_up(c.scores->difficulty, 2) : "");
    row.push_back(c.pareto.value_or(false) ? "true" : "false");
    row.push_back(c.shortlisted ? "true" : "false");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string table(const AnalysisResult& analysis, TableFormat format) {
  const auto rows = rows_of(analysis);
  std::ostringstream o;
  if (format == TableFormat::csv) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) o << ',';
        o << csv_field(row[i]);
      }
      o << "\r\n";
    }
    return o.str();
  }
  auto line = [&](const std::vector<std::string>& row) {
    o << '|';
    for (const auto& cell : row) o << ' ' << md_field(cell) << " |";
    o << '\n';
  };
  line(rows.front());
  o << '|';
  for (std::size_t i = 0; i < rows.front().size(); ++i) o << " --- |";
  o << '\n';
  for (std::size_t r = 1; r < rows.size(); ++r) line(rows[r]);
  return o.str();
}

}  // namespace dbases
