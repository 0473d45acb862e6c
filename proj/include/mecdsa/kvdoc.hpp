#pragma once

// Line-oriented "key = value" documents with '#' comments. Shared by the
// curve config, key, signature and bench report formats.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mecdsa {

class KvDocument {
 public:
  /// Throws FormatError (offset = 1-based line number) on lines without
  /// '=', empty keys, or repeated keys.
  static KvDocument parse(std::string_view text);

  void set(std::string key, std::string value);

  bool contains(std::string_view key) const;
  std::optional<std::string> find(std::string_view key) const;
  /// FormatError naming the key when it is absent.
  const std::string& require(std::string_view key) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

  /// Keys in insertion order, one per line, with an optional leading
  /// comment block.
  std::string serialize(std::string_view header_comment = {}) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::vector<std::string> split_list(std::string_view value, char sep = ',');
std::string join_list(const std::vector<std::string>& items, char sep = ',');
std::string to_lower(std::string_view s);

}  // namespace mecdsa
