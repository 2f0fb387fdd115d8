#include "costsense/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "costsense/text.hpp"

namespace costsense {

KeyValueDocument KeyValueDocument::parse(std::istream& in) {
  KeyValueDocument doc;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = text::trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    }
    const auto key = text::trim(view.substr(0, eq));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
    }
    if (doc.contains(key)) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": duplicate key '" +
                                  std::string(key) + "'");
    }
    doc.set(std::string(key), std::string(text::trim(view.substr(eq + 1))));
  }
  return doc;
}

KeyValueDocument KeyValueDocument::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

KeyValueDocument KeyValueDocument::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path.string() + "'");
  return parse(in);
}

void KeyValueDocument::set(std::string key, std::string value) {
  entries_.insert_or_assign(std::move(key), std::move(value));
}

bool KeyValueDocument::contains(std::string_view key) const {
  return entries_.find(key) != entries_.end();
}

std::optional<std::string> KeyValueDocument::get(std::string_view key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string KeyValueDocument::to_string() const {
  std::string out;
  for (const auto& [key, value] : entries_) out += key + " = " + value + "\n";
  return out;
}

}  // namespace costsense
