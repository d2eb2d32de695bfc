#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "dbases/engine.hpp"
#include "dbases/project_io.hpp"

namespace dbases {

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;  // keys lower-case
  std::string body;

  std::optional<std::string> header(const std::string& lower_name) const;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;
};

/// Non-2xx responses carry this as their JSON body.
struct ApiError {
  int status = 500;
  std::string code;
  std::string message;
  std::optional<std::string> path;

  json to_json() const;
};

struct ServiceOptions {
  EnumerationLimits limits;
  std::string cors_origin = "*";
};

/// Request handler behind the HTTP API. It owns no sockets, so it can be
/// driven directly from tests; see HttpServer for the transport.
class Service {
 public:
  explicit Service(ProjectStore& store, ServiceOptions options = {});

  HttpResponse handle(const HttpRequest& request);

 private:
  struct Cached {
    std::uint64_t revision = 0;
    std::shared_ptr<const AnalysisResult> analysis;
    std::shared_ptr<const std::string> body;
  };

  HttpResponse dispatch(const HttpRequest& request);
  HttpResponse list_projects();
  HttpResponse get_project(const std::string& id);
  HttpResponse put_project(const std::string& id, const HttpRequest& request);
  HttpResponse analysis(const std::string& id);
  HttpResponse whatif(const std::string& id, const HttpRequest& request);
  HttpResponse put_shortlist(const std::string& id, const HttpRequest& request);
  HttpResponse plot(const std::string& id, const HttpRequest& request);
  HttpResponse diagram(const std::string& id, const HttpRequest& request);

  Cached cached_analysis(const ProjectStore::Entry& entry);
  void invalidate(const std::string& id);

  ProjectStore& store_;
  ServiceOptions options_;
  std::mutex cache_mutex_;
  std::map<std::string, Cached> cache_;
};

/// Minimal HTTP/1.1 transport for a Service.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to host:port (port 0 picks a free one) and returns the bound port.
  int bind(const std::string& host, int port);
  /// Serves until stop(). Call after bind().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dbases
