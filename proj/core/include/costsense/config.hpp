#pragma once

// Flat key-value documents with dotted section keys:
//
//   # comment
//   data.source = synthetic
//   train.l2_lambda = 1
//
// One `key = value` per line; blank lines and lines starting with '#' are
// ignored. Keys are unique. Serialization writes keys in sorted order, so a
// document has a single canonical text form.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace costsense {

class KeyValueDocument {
 public:
  static KeyValueDocument parse(std::istream& in);
  static KeyValueDocument parse(std::string_view text);
  static KeyValueDocument load(const std::filesystem::path& path);

  void set(std::string key, std::string value);
  [[nodiscard]] bool contains(std::string_view key) const;
  [[nodiscard]] std::optional<std::string> get(std::string_view key) const;
  [[nodiscard]] const std::map<std::string, std::string, std::less<>>& entries() const {
    return entries_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

}  // namespace costsense
