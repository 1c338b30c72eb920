#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hg/rational.hpp"

namespace hg {

// Ordered key=value report. Reports written to disk contain only
// deterministic keys so that identical inputs give byte-identical files
// regardless of worker count; wall-clock summaries go to stdout only.
struct Report {
  std::vector<std::pair<std::string, std::string>> kv;

  void add(const std::string& key, const std::string& value) { kv.emplace_back(key, value); }
  void add(const std::string& key, const char* value) { kv.emplace_back(key, value); }
  void add(const std::string& key, long long value) { kv.emplace_back(key, std::to_string(value)); }
  void add(const std::string& key, int value) { kv.emplace_back(key, std::to_string(value)); }
  void add(const std::string& key, unsigned long long value) { kv.emplace_back(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { kv.emplace_back(key, value ? "true" : "false"); }
  void add(const std::string& key, const Rat& value) { kv.emplace_back(key, rat_str(value)); }

  void append(const Report& other) { kv.insert(kv.end(), other.kv.begin(), other.kv.end()); }

  std::string str() const;
  // Throws std::runtime_error on IO failure.
  void write_file(const std::string& path) const;
};

}  // namespace hg
