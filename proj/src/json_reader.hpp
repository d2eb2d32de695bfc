#pragma once

// Strict, pointer-tracking accessors used by the document decoders. Every
// problem is appended to a shared report instead of throwing, so a single
// load surfaces all findings at once.

#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dbases/core_model.hpp"
#include "text_util.hpp"

namespace dbases::detail {

using json = nlohmann::json;

class Reader {
 public:
  Reader(const json& value, std::string path, ValidationReport& report)
      : value_(value), path_(std::move(path)), report_(report) {}

  const json& value() const { return value_; }
  const std::string& path() const { return path_; }
  ValidationReport& report() const { return report_; }

  std::string child_path(std::string_view key) const { return path_ + "/" + pointer_token(key); }
  std::string child_path(std::size_t index) const { return path_ + "/" + std::to_string(index); }

  void fail(std::string message) const { report_.add(path_.empty() ? "" : path_, std::move(message)); }
  void fail_at(const std::string& path, std::string message) const { report_.add(path, std::move(message)); }

  bool expect_object() const {
    if (value_.is_object()) return true;
    fail("expected an object");
    return false;
  }
  bool expect_array() const {
    if (value_.is_array()) return true;
    fail("expected an array");
    return false;
  }

  /// Flags every key not in `allowed`.
  void only(std::initializer_list<std::string_view> allowed) const {
    if (!value_.is_object()) return;
    for (const auto& [key, _] : value_.items()) {
      bool known = false;
      for (auto a : allowed) known = known || a == key;
      if (!known) fail_at(child_path(key), "unknown field");
    }
  }

  bool has(std::string_view key) const { return value_.is_object() && value_.contains(std::string(key)); }

  Reader at(std::string_view key) const {
    return Reader(value_.at(std::string(key)), child_path(key), report_);
  }
  Reader at(std::size_t index) const { return Reader(value_.at(index), child_path(index), report_); }

  /// Present-and-typed lookups. `required` missing keys are reported.
  std::optional<std::string> string(std::string_view key, bool required = true) const {
    if (!has(key)) {
      if (required) fail_at(child_path(key), "required field missing");
      return std::nullopt;
    }
    const auto& v = value_.at(std::string(key));
    if (!v.is_string()) {
      fail_at(child_path(key), "expected a string");
      return std::nullopt;
    }
    return v.get<std::string>();
  }

  std::optional<double> number(std::string_view key, bool required = true) const {
    if (!has(key)) {
      if (required) fail_at(child_path(key), "required field missing");
      return std::nullopt;
    }
    const auto& v = value_.at(std::string(key));
    if (!v.is_number()) {
      fail_at(child_path(key), "expected a number");
      return std::nullopt;
    }
    return v.get<double>();
  }

  std::optional<bool> boolean(std::string_view key, bool required = true) const {
    if (!has(key)) {
      if (required) fail_at(child_path(key), "required field missing");
      return std::nullopt;
    }
    const auto& v = value_.at(std::string(key));
    if (!v.is_boolean()) {
      fail_at(child_path(key), "expected a boolean");
      return std::nullopt;
    }
    return v.get<bool>();
  }

  std::optional<Reader> array(std::string_view key, bool required = true) const {
    if (!has(key)) {
      if (required) fail_at(child_path(key), "required field missing");
      return std::nullopt;
    }
    Reader r = at(key);
    if (!r.expect_array()) return std::nullopt;
    return r;
  }

  std::optional<Reader> object(std::string_view key, bool required = true) const {
    if (!has(key)) {
      if (required) fail_at(child_path(key), "required field missing");
      return std::nullopt;
    }
    Reader r = at(key);
    if (!r.expect_object()) return std::nullopt;
    return r;
  }

  /// Array of tokens decoded by `parse`; duplicates and unknown tokens are
  /// reported.
  template <typename T, typename Parse>
  std::optional<std::set<T>> token_set(std::string_view key, Parse parse, std::string_view what,
                                       bool required = true) const {
    auto arr = array(key, required);
    if (!arr) return std::nullopt;
    std::set<T> out;
    bool ok = true;
    for (std::size_t i = 0; i < arr->value().size(); ++i) {
      const auto& v = arr->value()[i];
      const auto path = arr->child_path(i);
      if (!v.is_string()) {
        fail_at(path, "expected a string");
        ok = false;
        continue;
      }
      auto parsed = parse(v.template get<std::string>());
      if (!parsed) {
        fail_at(path, "unknown " + std::string(what) + " '" + v.template get<std::string>() + "'");
        ok = false;
        continue;
      }
      if (!out.insert(*parsed).second) {
        fail_at(path, "duplicate " + std::string(what));
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

 private:
  const json& value_;
  std::string path_;
  ValidationReport& report_;
};

}  // namespace dbases::detail
