#include "dbases/service.hpp"

#include <charconv>
#include <set>
#include <vector>

#include "dbases/report.hpp"
#include "text_util.hpp"

namespace dbases {

namespace {

struct ApiFailure {
  ApiError error;
};

[[noreturn]] void fail(int status, std::string code, std::string message,
                       std::optional<std::string> path = std::nullopt) {
  throw ApiFailure{ApiError{status, std::move(code), std::move(message), std::move(path)}};
}

HttpResponse json_response(int status, const json& body) {
  HttpResponse r;
  r.status = status;
  r.body = body.dump() + "\n";
  return r;
}

HttpResponse error_response(const ApiError& e, const json& extra = json::object()) {
  json body = e.to_json();
  for (const auto& [k, v] : extra.items()) body[k] = v;
  return json_response(e.status, body);
}

HttpResponse validation_response(const ValidationReport& report, int status = 422,
                                 std::string code = "validation_failed") {
  ApiError e{status, std::move(code), "validation failed", std::nullopt};
  if (!report.findings.empty()) {
    e.message = report.findings.front().message;
    e.path = report.findings.front().path;
  }
  json findings = json::array();
  for (const auto& f : report.findings) findings.push_back({{"path", f.path}, {"message", f.message}});
  return error_response(e, {{"findings", findings}});
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < path.size()) {
    if (path[i] == '/') {
      ++i;
      continue;
    }
    const auto j = path.find('/', i);
    out.push_back(path.substr(i, j == std::string::npos ? std::string::npos : j - i));
    if (j == std::string::npos) break;
    i = j;
  }
  return out;
}

// If-Match takes an entity tag ("3" or W/"3"); X-Revision a bare number.
std::optional<std::uint64_t> expected_revision(const HttpRequest& req) {
  auto raw = req.header("if-match");
  if (!raw) raw = req.header("x-revision");
  if (!raw) return std::nullopt;
  std::string v = detail::trim(*raw);
  if (v.rfind("W/", 0) == 0) v = v.substr(2);
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    fail(400, "bad_revision_header", "revision header must be a non-negative integer");
  }
  return out;
}

json parse_body(const HttpRequest& req) {
  try {
    return parse_json_text(req.body);
  } catch (const ParseError& e) {
    fail(400, "malformed_json", e.report().findings.front().message);
  }
}

void set_revision_headers(HttpResponse& r, std::uint64_t revision) {
  r.headers["X-Revision"] = std::to_string(revision);
  r.headers["ETag"] = "\"" + std::to_string(revision) + "\"";
}

bool query_flag(const HttpRequest& req, const std::string& key, bool fallback) {
  auto it = req.query.find(key);
  if (it == req.query.end()) return fallback;
  const auto v = detail::lower(it->second);
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  fail(400, "bad_query", "query parameter " + key + " must be a boolean", key);
}

json analysis_body(const AnalysisResult& result, std::uint64_t revision) {
  json body = analysis_to_json(result);
  body["revision"] = revision;
  return body;
}

}  // namespace

std::optional<std::string> HttpRequest::header(const std::string& lower_name) const {
  auto it = headers.find(lower_name);
  if (it == headers.end()) return std::nullopt;
  return it->second;
}

json ApiError::to_json() const {
  json out{{"status", status}, {"code", code}, {"message", message}};
  if (path) out["path"] = *path;
  return out;
}

Service::Service(ProjectStore& store, ServiceOptions options) : store_(store), options_(std::move(options)) {}

HttpResponse Service::handle(const HttpRequest& request) {
  HttpResponse r;
  try {
    r = dispatch(request);
  } catch (const ApiFailure& f) {
    r = error_response(f.error);
  } catch (const ParseError& e) {
    r = error_response({400, "malformed_json", e.report().findings.front().message, std::nullopt});
  } catch (const ValidationError& e) {
    r = validation_response(e.report());
  } catch (const NotFound& e) {
    r = error_response({404, "not_found", e.what(), std::nullopt});
  } catch (const InvalidProjectId& e) {
    r = error_response({400, "invalid_project_id", e.what(), std::nullopt});
  } catch (const RevisionConflict& e) {
    r = error_response({409, "stale_revision", e.what(), std::nullopt}, {{"current_revision", e.current()}});
  } catch (const OptionSpaceTooLarge& e) {
    r = error_response({413, "option_space_too_large", e.what(), std::nullopt});
  } catch (const ReportError& e) {
    r = error_response({422, "report_failed", e.what(), std::nullopt});
  } catch (const std::exception& e) {
    r = error_response({500, "internal_error", e.what(), std::nullopt});
  }
  r.headers["Access-Control-Allow-Origin"] = options_.cors_origin;
  r.headers["Access-Control-Expose-Headers"] = "ETag, X-Revision";
  if (options_.cors_origin != "*") r.headers["Vary"] = "Origin";
  return r;
}

HttpResponse Service::dispatch(const HttpRequest& req) {
  const auto parts = split_path(req.path);
  if (parts.size() < 2 || parts[0] != "api" || parts[1] != "projects") {
    fail(404, "not_found", "no route for " + req.path);
  }
  if (req.method == "OPTIONS") {
    HttpResponse r;
    r.status = 204;
    r.content_type.clear();
    r.headers["Access-Control-Allow-Methods"] = "GET, PUT, POST, OPTIONS";
    r.headers["Access-Control-Allow-Headers"] = "Content-Type, If-Match, X-Revision";
    r.headers["Access-Control-Max-Age"] = "600";
    return r;
  }
  auto allow = [&](std::initializer_list<const char*> methods) {
    for (const char* m : methods) {
      if (req.method == m) return;
    }
    fail(405, "method_not_allowed", req.method + " is not supported on " + req.path);
  };

  if (parts.size() == 2) {
    allow({"GET"});
    return list_projects();
  }
  const std::string& id = parts[2];
  if (!ProjectStore::valid_id(id)) fail(400, "invalid_project_id", "invalid project id '" + id + "'");
  if (parts.size() == 3) {
    allow({"GET", "PUT"});
    return req.method == "GET" ? get_project(id) : put_project(id, req);
  }
  if (parts.size() == 4) {
    const auto& leaf = parts[3];
    if (leaf == "analysis") {
      allow({"POST", "GET"});
      return analysis(id);
    }
    if (leaf == "whatif") {
      allow({"POST"});
      return whatif(id, req);
    }
    if (leaf == "shortlist") {
      allow({"PUT"});
      return put_shortlist(id, req);
    }
    if (leaf == "plot.svg") {
      allow({"GET"});
      return plot(id, req);
    }
    if (leaf == "diagram.dot") {
      allow({"GET"});
      return diagram(id, req);
    }
  }
  fail(404, "not_found", "no route for " + req.path);
}

HttpResponse Service::list_projects() {
  json out = json::array();
  for (const auto& s : store_.list()) out.push_back({{"id", s.id}, {"name", s.name}, {"revision", s.revision}});
  return json_response(200, out);
}

HttpResponse Service::get_project(const std::string& id) {
  const auto entry = store_.get(id);
  auto r = json_response(200, project_to_json(entry.project));
  set_revision_headers(r, entry.revision);
  return r;
}

HttpResponse Service::put_project(const std::string& id, const HttpRequest& req) {
  const auto expected = expected_revision(req);
  const auto project = project_from_json(parse_body(req));
  const auto revision = store_.put(id, project, expected);
  invalidate(id);
  auto r = json_response(200, {{"id", id}, {"revision", revision}, {"project", project_to_json(project)}});
  set_revision_headers(r, revision);
  return r;
}

Service::Cached Service::cached_analysis(const ProjectStore::Entry& entry) {
  {
    std::lock_guard guard(cache_mutex_);
    auto it = cache_.find(entry.id);
    if (it != cache_.end() && it->second.revision == entry.revision) return it->second;
  }
  // Computed outside the lock; concurrent misses produce identical results.
  auto result = std::make_shared<const AnalysisResult>(analyze(entry.project, {}, options_.limits));
  auto body = std::make_shared<const std::string>(analysis_body(*result, entry.revision).dump() + "\n");
  Cached fresh{entry.revision, result, body};
  std::lock_guard guard(cache_mutex_);
  auto& slot = cache_[entry.id];
  if (slot.revision <= entry.revision) slot = fresh;
  return fresh;
}

void Service::invalidate(const std::string& id) {
  std::lock_guard guard(cache_mutex_);
  cache_.erase(id);
}

HttpResponse Service::analysis(const std::string& id) {
  const auto entry = store_.get(id);
  const auto cached = cached_analysis(entry);
  HttpResponse r;
  r.body = *cached.body;
  set_revision_headers(r, entry.revision);
  return r;
}

HttpResponse Service::whatif(const std::string& id, const HttpRequest& req) {
  const auto entry = store_.get(id);
  Overrides overrides;
  if (!detail::trim(req.body).empty()) overrides = overrides_from_json(parse_body(req));
  const auto result = dbases::whatif(entry.project, overrides, options_.limits);
  auto r = json_response(200, analysis_body(result, entry.revision));
  set_revision_headers(r, entry.revision);
  return r;
}

HttpResponse Service::put_shortlist(const std::string& id, const HttpRequest& req) {
  const auto expected = expected_revision(req);
  auto entry = store_.get(id);
  const auto doc = parse_body(req);
  if (!doc.is_array()) fail(422, "validation_failed", "expected an array of candidate ids", "");

  const auto cached = cached_analysis(entry);
  ValidationReport report;
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string path = "/" + std::to_string(i);
    if (!doc[i].is_string()) {
      report.add(path, "expected a string");
      continue;
    }
    const auto cid = doc[i].get<std::string>();
    if (!cached.analysis->find(cid)) {
      report.add(path, "unknown candidate id " + cid);
    } else if (!seen.insert(cid).second) {
      report.add(path, "duplicate candidate id " + cid);
    } else {
      ids.push_back(cid);
    }
  }
  if (!report.ok()) return validation_response(report);

  entry.project.shortlist = ids;
  const auto revision = store_.put(id, entry.project, expected.value_or(entry.revision));
  invalidate(id);
  auto r = json_response(200, {{"id", id}, {"revision", revision}, {"shortlist", ids}});
  set_revision_headers(r, revision);
  return r;
}

HttpResponse Service::plot(const std::string& id, const HttpRequest& req) {
  const auto entry = store_.get(id);
  const auto cached = cached_analysis(entry);
  PlotSpec spec;
  spec.pareto_front = query_flag(req, "front", true);
  spec.shortlist = query_flag(req, "shortlist", true);
  spec.label_mode = query_flag(req, "labels", true) ? LabelMode::ids : LabelMode::none;
  HttpResponse r;
  r.content_type = "image/svg+xml";
  r.body = scatter_svg(*cached.analysis, spec);
  set_revision_headers(r, entry.revision);
  return r;
}

HttpResponse Service::diagram(const std::string& id, const HttpRequest& req) {
  const auto entry = store_.get(id);
  const Candidate* candidate = nullptr;
  Cached cached;
  if (auto it = req.query.find("candidate"); it != req.query.end() && !it->second.empty()) {
    cached = cached_analysis(entry);
    candidate = cached.analysis->find(it->second);
    if (!candidate) fail(422, "unknown_candidate", "unknown candidate id " + it->second, "candidate");
  }
  HttpResponse r;
  r.content_type = "text/vnd.graphviz";
  r.body = diagram_dot(entry.project, candidate);
  set_revision_headers(r, entry.revision);
  return r;
}

}  // namespace dbases
